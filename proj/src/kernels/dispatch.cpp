/*
* Copyright 2026 The mincode Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#include <atomic>
#include <cstdlib>
#include <string>

#include "mincode/kernels.hpp"

namespace mincode::kernels {

#ifndef MINCODE_HAVE_AVX2
namespace avx2 {
const KernelSet* kernels() { return nullptr; }
}  // namespace avx2
#endif

namespace {

const KernelSet* resolve() {
  const KernelSet* fast = avx2_supported() ? avx2::kernels() : nullptr;
  if (const char* env = std::getenv("MINCODE_KERNELS")) {
    const std::string choice(env);
    if (choice == "scalar") return &scalar::kernels();
    if (choice == "avx2" && fast) return fast;
  }
  return fast ? fast : &scalar::kernels();
}

std::atomic<const KernelSet*>& slot() {
  static std::atomic<const KernelSet*> current{resolve()};
  return current;
}

}  // namespace

std::string_view to_string(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_supported() {
#if defined(MINCODE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported;
#else
  return false;
#endif
}

const KernelSet& active() { return *slot().load(std::memory_order_acquire); }

bool select(Backend b) {
  if (b == Backend::Scalar) {
    slot().store(&scalar::kernels(), std::memory_order_release);
    return true;
  }
  if (!avx2_supported() || avx2::kernels() == nullptr) return false;
  slot().store(avx2::kernels(), std::memory_order_release);
  return true;
}

}  // namespace mincode::kernels
