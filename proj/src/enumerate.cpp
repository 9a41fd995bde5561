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

// Exhaustive codeword walks: lexicographic odometer (any q), Gray-code walk
// over bit-packed rows (q = 2), and the projective-representative tables the
// minimality scan consumes.

#include <algorithm>
#include <bit>
#include <exception>
#include <thread>
#include <vector>

#include "internal.hpp"
#include "mincode/error.hpp"
#include "mincode/kernels.hpp"

namespace mincode {

namespace {

class SymbolAdder {
 public:
  explicit SymbolAdder(const Field& f) : field_(f), kernels_(kernels::active()) {
    if (f.characteristic() == 2)
      kind_ = Kind::Char2;
    else if (f.is_prime())
      kind_ = Kind::Prime;
    else
      kind_ = Kind::Table;
  }

  void operator()(Element* acc, const Element* src, std::size_t n) const {
    switch (kind_) {
      case Kind::Char2: kernels_.add_char2(acc, src, n); break;
      case Kind::Prime: kernels_.add_mod_prime(acc, src, n, static_cast<std::uint8_t>(field_.order())); break;
      case Kind::Table:
        for (std::size_t i = 0; i < n; ++i) acc[i] = field_.add(acc[i], src[i]);
        break;
    }
  }

 private:
  enum class Kind { Char2, Prime, Table };
  const Field& field_;
  const kernels::KernelSet& kernels_;
  Kind kind_;
};

// deltas(r, c) = (succ(c) - c) * G_r where succ steps to the next integer
// code, wrapping q-1 -> 0. Adding it moves message digit r from c to succ(c).
class DeltaTable {
 public:
  explicit DeltaTable(const Matrix& g) : n_(g.cols()), q_(g.field().order()), data_(g.rows() * q_ * n_) {
    const Field& f = g.field();
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (unsigned c = 0; c < q_; ++c) {
        const Element next = static_cast<Element>((c + 1) % q_);
        const Vector d = scale(f, f.sub(next, static_cast<Element>(c)), g.row(r));
        std::copy(d.begin(), d.end(), data_.begin() + static_cast<std::ptrdiff_t>((r * q_ + c) * n_));
      }
  }

  const Element* at(std::size_t row, Element c) const noexcept { return data_.data() + (row * q_ + c) * n_; }

 private:
  std::size_t n_;
  unsigned q_;
  std::vector<Element> data_;
};

// Walks messages in lexicographic order; digits of rows < low_row stay fixed.
class Odometer {
 public:
  Odometer(const Matrix& g, const DeltaTable& deltas, const SymbolAdder& add, std::size_t low_row, Vector message)
      : g_(g), deltas_(deltas), add_(add), low_row_(low_row), message_(std::move(message)),
        codeword_(combine(g, message_)) {}

  /// Steps to the next message; false once the free digits wrap to zero.
  bool advance() {
    const unsigned q = g_.field().order();
    for (std::size_t r = g_.rows(); r-- > low_row_;) {
      const Element c = message_[r];
      add_(codeword_.data(), deltas_.at(r, c), codeword_.size());
      message_[r] = static_cast<Element>((c + 1) % q);
      if (message_[r] != 0) return true;
    }
    return false;
  }

  const Vector& message() const noexcept { return message_; }
  const Vector& codeword() const noexcept { return codeword_; }

 private:
  const Matrix& g_;
  const DeltaTable& deltas_;
  const SymbolAdder& add_;
  std::size_t low_row_;
  Vector message_;
  Vector codeword_;
};

std::vector<std::uint64_t> pack_binary_rows(const Matrix& g, std::size_t words) {
  std::vector<std::uint64_t> rows(g.rows() * words, 0);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (g.at(r, c)) rows[r * words + (c >> 6)] |= std::uint64_t{1} << (c & 63);
  return rows;
}

WeightDistribution merge(std::vector<std::vector<std::uint64_t>>& partial, std::size_t n) {
  WeightDistribution d(n);
  for (const auto& counts : partial)
    for (std::size_t w = 0; w < counts.size(); ++w)
      if (counts[w]) d.add(w, counts[w]);
  return d;
}

WeightDistribution binary_distribution(const LinearCode& code, unsigned workers) {
  const Matrix& g = code.generator();
  const std::size_t n = g.cols();
  const std::size_t k = g.rows();
  const std::size_t words = words_for_bits(n);
  const auto rows = pack_binary_rows(g, words);
  const std::uint64_t total = std::uint64_t{1} << k;
  const kernels::KernelSet& kern = kernels::active();

  std::vector<std::vector<std::uint64_t>> partial(std::max(1u, workers));
  run_partitioned(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
    auto& counts = partial[worker];
    counts.assign(n + 1, 0);
    std::vector<std::uint64_t> cw(words, 0);
    // Gray code g(i) = i ^ (i >> 1); bit j of g(i) selects row j.
    std::uint64_t gray = begin ^ (begin >> 1);
    for (std::size_t j = 0; gray; ++j, gray >>= 1)
      if (gray & 1)
        for (std::size_t w = 0; w < words; ++w) cw[w] ^= rows[j * words + w];
    counts[kern.popcount(cw.data(), words)]++;
    for (std::uint64_t i = begin + 1; i < end; ++i) {
      const auto j = static_cast<std::size_t>(std::countr_zero(i));
      counts[kern.xor_popcount(cw.data(), rows.data() + j * words, words)]++;
    }
  });
  return merge(partial, n);
}

WeightDistribution general_distribution(const LinearCode& code, unsigned workers) {
  const Matrix& g = code.generator();
  const std::size_t n = g.cols();
  const std::uint64_t total = *code.codeword_count();
  const DeltaTable deltas(g);
  const SymbolAdder add(g.field());
  const kernels::KernelSet& kern = kernels::active();

  std::vector<std::vector<std::uint64_t>> partial(std::max(1u, workers));
  run_partitioned(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
    auto& counts = partial[worker];
    counts.assign(n + 1, 0);
    Odometer od(g, deltas, add, 0, message_at(code.q(), g.rows(), begin));
    for (std::uint64_t i = begin; i < end; ++i) {
      counts[kern.count_nonzero(od.codeword().data(), n)]++;
      if (i + 1 < end) od.advance();
    }
  });
  return merge(partial, n);
}

void require_representatives(const LinearCode& code, std::uint64_t cap) {
  auto reps = code.projective_count();
  if (!reps || *reps > cap)
    throw Error(ErrorKind::EnumerationTooLarge,
                "(q^k - 1)/(q - 1) = " + (reps ? std::to_string(*reps) : std::string("2^64+")) +
                    " representatives exceeds the enumeration cap " + std::to_string(cap));
}

}  // namespace

void walk_messages(const LinearCode& code, const std::function<bool(const Vector&, const Vector&)>& fn) {
  const Matrix& g = code.generator();
  const DeltaTable deltas(g);
  const SymbolAdder add(g.field());
  Odometer od(g, deltas, add, 0, Vector(g.rows(), 0));
  do {
    if (!fn(od.message(), od.codeword())) return;
  } while (od.advance());
}

// Blocks by leading position: k-1 first, then k-2, ..., 0. Within a block
// the free digits follow the odometer, so the overall order is lexicographic.
void walk_representatives(const LinearCode& code, const std::function<bool(const Vector&, const Vector&)>& fn) {
  const Matrix& g = code.generator();
  const std::size_t k = g.rows();
  const DeltaTable deltas(g);
  const SymbolAdder add(g.field());
  for (std::size_t lead = k; lead-- > 0;) {
    Vector message(k, 0);
    message[lead] = 1;
    Odometer od(g, deltas, add, lead + 1, std::move(message));
    do {
      if (!fn(od.message(), od.codeword())) return;
    } while (od.advance());
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void run_partitioned(std::uint64_t total, unsigned workers,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || total < 2 * std::uint64_t{workers}) {
    if (total) fn(0, total, 0);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::uint64_t step = total / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * step;
      const std::uint64_t end = w + 1 == workers ? total : begin + step;
      pool.emplace_back([&, begin, end, w] {
        try {
          fn(begin, end, w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Vector message_at(unsigned q, std::size_t k, std::uint64_t index) {
  Vector m(k, 0);
  for (std::size_t r = k; r-- > 0;) {
    m[r] = static_cast<Element>(index % q);
    index /= q;
  }
  return m;
}

void enumerate_codewords(const LinearCode& code, const CodewordVisitor& visit, std::uint64_t cap) {
  require_enumerable(code, cap);
  walk_messages(code, [&](const Vector& message, const Vector& codeword) {
    visit(message, codeword);
    return true;
  });
}

WeightDistribution weight_distribution_reference(const LinearCode& code, std::uint64_t cap) {
  WeightDistribution d(code.length());
  enumerate_codewords(
      code, [&](std::span<const Element>, std::span<const Element> cw) { d.add(hamming_weight(cw)); }, cap);
  return d;
}

const WeightDistribution& cached_distribution(const LinearCode& code, const EnumerationOptions& opts) {
  require_enumerable(code, opts.cap);
  std::lock_guard lock(code.cache_->mutex);
  if (!code.cache_->distribution) {
    const unsigned workers = resolve_threads(opts.threads);
    code.cache_->distribution =
        code.q() == 2 ? binary_distribution(code, workers) : general_distribution(code, workers);
  }
  return *code.cache_->distribution;
}

Vector representative_message(unsigned q, std::size_t k, std::uint64_t index) {
  std::uint64_t block = 1;
  for (std::size_t lead = k; lead-- > 0;) {
    if (index < block) {
      Vector m(k, 0);
      m[lead] = 1;
      for (std::size_t r = k; r-- > lead + 1;) {
        m[r] = static_cast<Element>(index % q);
        index /= q;
      }
      return m;
    }
    index -= block;
    block *= q;
  }
  throw Error(ErrorKind::DimensionMismatch, "representative index out of range");
}

std::vector<ProjectiveRep> projective_representatives(const LinearCode& code, const EnumerationOptions& opts) {
  require_representatives(code, opts.cap);
  std::vector<ProjectiveRep> reps;
  reps.reserve(*code.projective_count());
  walk_representatives(code, [&](const Vector& message, const Vector& codeword) {
    reps.push_back(ProjectiveRep{message, codeword, weight_and_support(codeword).mask});
    return true;
  });
  return reps;
}

RepresentativeMasks representative_masks(const LinearCode& code, const EnumerationOptions& opts) {
  require_representatives(code, opts.cap);
  RepresentativeMasks out;
  out.count = *code.projective_count();
  out.words = words_for_bits(code.length());
  out.masks.assign(out.count * out.words, 0);
  out.weights.assign(out.count, 0);
  const kernels::KernelSet& kern = kernels::active();
  const std::size_t n = code.length();
  std::size_t idx = 0;
  walk_representatives(code, [&](const Vector&, const Vector& codeword) {
    std::uint64_t* m = out.masks.data() + idx * out.words;
    kern.nonzero_mask(codeword.data(), n, m);
    out.weights[idx] = static_cast<std::uint32_t>(kern.popcount(m, out.words));
    ++idx;
    return true;
  });
  return out;
}

}  // namespace mincode
