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


// Expected values for every reproducible table row, kept as data. Each row
// names a recipe (build + steps), the expected parameters of every stage, and
// optionally the family formula it must also agree with.

#include "mincode/cli/fixtures.hpp"

#include <algorithm>

#include "mincode/error.hpp"

namespace mincode::cli {

namespace {

constexpr const char* kFixtures = R"json(
{"tables": [
 {"id": "2", "aliases": ["table-2", "solomon-stiffler"], "title": "Solomon-Stiffler codes and their extensions", "rows": [
  {"label": "[6,3,3]_2 -> [8,3,3]_2", "provenance": "table 2, row 1", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 3, "u": [1]}, "steps": ["extend"], "expect": [{"q": 2, "n": 6, "k": 3, "d": 3, "w_max": 4, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 8, "k": 3, "d": 3, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 3, "u": [1]}},
  {"label": "[11,4,5]_2 -> [13,4,5]_2", "provenance": "table 2, row 2", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 4, "u": [1, 2]}, "steps": ["extend"], "expect": [{"q": 2, "n": 11, "k": 4, "d": 5, "w_max": 8, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 13, "k": 4, "d": 5, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 4, "u": [1, 2]}},
  {"label": "[12,4,6]_2 -> [16,4,6]_2", "provenance": "table 2, row 3", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 4, "u": [2]}, "steps": ["extend"], "expect": [{"q": 2, "n": 12, "k": 4, "d": 6, "w_max": 8, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 16, "k": 4, "d": 6, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 4, "u": [2]}},
  {"label": "[14,4,7]_2 -> [20,4,7]_2", "provenance": "table 2, row 4", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 4, "u": [1]}, "steps": ["extend"], "expect": [{"q": 2, "n": 14, "k": 4, "d": 7, "w_max": 8, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 20, "k": 4, "d": 7, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 4, "u": [1]}},
  {"label": "[23,5,11]_2 -> [29,5,11]_2", "provenance": "table 2, row 5", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 5, "u": [1, 3]}, "steps": ["extend"], "expect": [{"q": 2, "n": 23, "k": 5, "d": 11, "w_max": 16, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 29, "k": 5, "d": 11, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 5, "u": [1, 3]}},
  {"label": "[24,5,12]_2 -> [32,5,12]_2", "provenance": "table 2, row 6", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 5, "u": [3]}, "steps": ["extend"], "expect": [{"q": 2, "n": 24, "k": 5, "d": 12, "w_max": 16, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 32, "k": 5, "d": 12, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 5, "u": [3]}},
  {"label": "[27,5,13]_2 -> [37,5,13]_2", "provenance": "table 2, row 7", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 5, "u": [1, 2]}, "steps": ["extend"], "expect": [{"q": 2, "n": 27, "k": 5, "d": 13, "w_max": 16, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 37, "k": 5, "d": 13, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 5, "u": [1, 2]}},
  {"label": "[47,6,23]_2 -> [61,6,23]_2", "provenance": "table 2, row 8", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 6, "u": [1, 4]}, "steps": ["extend"], "expect": [{"q": 2, "n": 47, "k": 6, "d": 23, "w_max": 32, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 61, "k": 6, "d": 23, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 6, "u": [1, 4]}},
  {"label": "[48,6,24]_2 -> [64,6,24]_2", "provenance": "table 2, row 9", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 6, "u": [4]}, "steps": ["extend"], "expect": [{"q": 2, "n": 48, "k": 6, "d": 24, "w_max": 32, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 64, "k": 6, "d": 24, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 6, "u": [4]}},
  {"label": "[55,6,27]_2 -> [77,6,27]_2", "provenance": "table 2, row 10", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 6, "u": [1, 3]}, "steps": ["extend"], "expect": [{"q": 2, "n": 55, "k": 6, "d": 27, "w_max": 32, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 77, "k": 6, "d": 27, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 6, "u": [1, 3]}},
  {"label": "[95,7,47]_2 -> [125,7,47]_2", "provenance": "table 2, row 11", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 7, "u": [1, 5]}, "steps": ["extend"], "expect": [{"q": 2, "n": 95, "k": 7, "d": 47, "w_max": 64, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 125, "k": 7, "d": 47, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 7, "u": [1, 5]}},
  {"label": "[96,7,48]_2 -> [128,7,48]_2", "provenance": "table 2, row 12", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 7, "u": [5]}, "steps": ["extend"], "expect": [{"q": 2, "n": 96, "k": 7, "d": 48, "w_max": 64, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 128, "k": 7, "d": 48, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 7, "u": [5]}},
  {"label": "[107,7,54]_2 -> [153,7,54]_2", "provenance": "table 2, row 13", "status": "constructible", "note": "listed base length 107 is inconsistent with d = 54; profile u = (2,4) gives [109,7,54]_2 and the listed [153,7,54]_2", "build": {"family": "solomon-stiffler", "k": 7, "u": [2, 4]}, "steps": ["extend"], "expect": [{"q": 2, "n": 109, "k": 7, "d": 54, "w_max": 64, "minimal": true, "ab_satisfied": true, "griesmer_defect": 0}, {"q": 2, "n": 153, "k": 7, "d": 54, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.1", "k": 7, "u": [2, 4]}},
  {"label": "[292,8,96]_2 -> [256,8,96]_2", "provenance": "table 2, row 14", "status": "typo", "note": "length decreases under extension and 292 > 2^8 - 1; u = (6) would give [192,8,96]_2 -> [256,8,96]_2"}
 ]},
 {"id": "3", "aliases": ["table-3", "even-weight"], "title": "Extensions of simplex complements of even-weight codes", "rows": [
  {"label": "[4,3,2]_2 -> [27,5,12]_2 -> [35,5,12]_2", "provenance": "table 3, row 1", "status": "constructible", "build": {"family": "even-weight", "n": 4}, "steps": [{"complement": 2}, "extend"], "expect": [{"q": 2, "n": 4, "k": 3, "d": 2, "w_max": 4, "minimal": false, "ab_satisfied": false}, {"q": 2, "n": 27, "k": 5, "d": 12, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 35, "k": 5, "d": 12, "w_max": 24, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.11", "n": 4, "h": 2}},
  {"label": "[5,4,2]_2 -> [26,5,12]_2 -> [34,5,12]_2", "provenance": "table 3, row 2", "status": "constructible", "build": {"family": "even-weight", "n": 5}, "steps": [{"complement": 1}, "extend"], "expect": [{"q": 2, "n": 5, "k": 4, "d": 2, "w_max": 4, "minimal": false, "ab_satisfied": false}, {"q": 2, "n": 26, "k": 5, "d": 12, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 34, "k": 5, "d": 12, "w_max": 24, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.11", "n": 5, "h": 1}},
  {"label": "[6,5,2]_2 -> [25,5,10]_2 -> [31,5,10]_2", "provenance": "table 3, row 3", "status": "constructible", "build": {"family": "even-weight", "n": 6}, "steps": [{"complement": 0}, "extend"], "expect": [{"q": 2, "n": 6, "k": 5, "d": 2, "w_max": 6, "minimal": false, "ab_satisfied": false}, {"q": 2, "n": 25, "k": 5, "d": 10, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 31, "k": 5, "d": 10, "w_max": 20, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.11", "n": 6, "h": 0}}
 ]},
 {"id": "tab:5-1", "aliases": ["5-1", "self-orthogonal"], "title": "Binary self-orthogonal minimal codes", "rows": [
  {"label": "[7,3,4]_2 -> [11,3,4]_2", "provenance": "tab:5-1, row 1", "status": "constructible", "build": {"family": "simplex", "q": 2, "m": 3}, "steps": ["self-orthogonal"], "expect": [{"q": 2, "n": 7, "k": 3, "d": 4, "minimal": true, "ab_satisfied": true, "self_orthogonal": true}, {"q": 2, "n": 11, "k": 3, "d": 4, "w_max": 8, "weights": [4, 8], "minimal": true, "ab_satisfied": false, "self_orthogonal": true, "doubly_even": true}], "formula": {"family": "P5.1", "m": 3}},
  {"label": "[16,4,8]_2 -> [23,4,8]_2", "provenance": "tab:5-1, row 2", "status": "constructible", "note": "listed base [16,4,8]_2 cannot yield the two-weight {8,16} code; built from the simplex [15,4,8]_2", "build": {"family": "simplex", "q": 2, "m": 4}, "steps": ["self-orthogonal"], "expect": [{"q": 2, "n": 15, "k": 4, "d": 8, "minimal": true, "ab_satisfied": true, "self_orthogonal": true}, {"q": 2, "n": 23, "k": 4, "d": 8, "w_max": 16, "weights": [8, 16], "minimal": true, "ab_satisfied": false, "self_orthogonal": true, "doubly_even": true}], "formula": {"family": "P5.1", "m": 4}},
  {"label": "[24,5,12]_2 -> [32,5,12]_2", "provenance": "tab:5-1, row 3", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 5, "u": [3]}, "steps": ["self-orthogonal"], "expect": [{"q": 2, "n": 24, "k": 5, "d": 12, "distribution": [[0, 1], [12, 28], [16, 3]], "minimal": true, "ab_satisfied": true, "self_orthogonal": true}, {"q": 2, "n": 32, "k": 5, "d": 12, "w_max": 24, "weights": [12, 16, 20, 24], "minimal": true, "ab_satisfied": false, "self_orthogonal": true, "doubly_even": true, "distribution": [[0, 1], [12, 14], [16, 1], [20, 14], [24, 2]]}], "formula": {"family": "P5.0", "k": 5, "u": [3]}},
  {"label": "[31,5,16]_2 -> [47,5,16]_2", "provenance": "tab:5-1, row 4", "status": "constructible", "build": {"family": "simplex", "q": 2, "m": 5}, "steps": ["self-orthogonal"], "expect": [{"q": 2, "n": 31, "k": 5, "d": 16, "minimal": true, "ab_satisfied": true, "self_orthogonal": true}, {"q": 2, "n": 47, "k": 5, "d": 16, "w_max": 32, "weights": [16, 32], "minimal": true, "ab_satisfied": false, "self_orthogonal": true, "doubly_even": true}], "formula": {"family": "P5.1", "m": 5}},
  {"label": "[35,6,16]_2 -> [47,6,16]_2", "provenance": "tab:5-1, row 5", "status": "external", "supply": "two-weight-35-6-16", "steps": ["self-orthogonal"], "expect": [{"q": 2, "n": 35, "k": 6, "d": 16, "minimal": true, "ab_satisfied": true, "self_orthogonal": true}, {"q": 2, "n": 47, "k": 6, "d": 16, "w_max": 32, "weights": [16, 20, 28, 32], "minimal": true, "ab_satisfied": false, "self_orthogonal": true, "doubly_even": true}], "formula": {"family": "P5.4", "m": 4}},
  {"label": "[48,6,24]_2 -> [64,6,24]_2", "provenance": "tab:5-1, row 6", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 6, "u": [4]}, "steps": ["self-orthogonal"], "expect": [{"q": 2, "n": 48, "k": 6, "d": 24, "minimal": true, "ab_satisfied": true, "self_orthogonal": true}, {"q": 2, "n": 64, "k": 6, "d": 24, "w_max": 48, "weights": [24, 32, 40, 48], "minimal": true, "ab_satisfied": false, "self_orthogonal": true, "doubly_even": true}], "formula": {"family": "P5.0", "k": 6, "u": [4]}}
 ]},
 {"id": "tab:6-1", "aliases": ["6-1", "simplex"], "title": "Extended simplex codes", "rows": [
  {"label": "[3,2,2]_2 -> [5,2,2]_2", "provenance": "tab:6-1 formulas, q = 2, m = 2", "status": "constructible", "build": {"family": "simplex", "q": 2, "m": 2}, "steps": ["extend"], "expect": [{"q": 2, "n": 3, "k": 2, "d": 2, "w_max": 2, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 5, "k": 2, "d": 2, "w_max": 4, "distribution": [[0, 1], [2, 1], [4, 2]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 2, "m": 2}},
  {"label": "[7,3,4]_2 -> [11,3,4]_2", "provenance": "tab:6-1 formulas, q = 2, m = 3", "status": "constructible", "build": {"family": "simplex", "q": 2, "m": 3}, "steps": ["extend"], "expect": [{"q": 2, "n": 7, "k": 3, "d": 4, "w_max": 4, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 11, "k": 3, "d": 4, "w_max": 8, "distribution": [[0, 1], [4, 3], [8, 4]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 2, "m": 3}},
  {"label": "[4,2,3]_3 -> [6,2,3]_3", "provenance": "tab:6-1 formulas, q = 3, m = 2", "status": "constructible", "build": {"family": "simplex", "q": 3, "m": 2}, "steps": ["extend"], "expect": [{"q": 3, "n": 4, "k": 2, "d": 3, "w_max": 3, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 6, "k": 2, "d": 3, "w_max": 5, "distribution": [[0, 1], [3, 2], [5, 6]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 3, "m": 2}},
  {"label": "[13,3,9]_3 -> [18,3,9]_3", "provenance": "tab:6-1 formulas, q = 3, m = 3", "status": "constructible", "build": {"family": "simplex", "q": 3, "m": 3}, "steps": ["extend"], "expect": [{"q": 3, "n": 13, "k": 3, "d": 9, "w_max": 9, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 18, "k": 3, "d": 9, "w_max": 14, "distribution": [[0, 1], [9, 8], [14, 18]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 3, "m": 3}},
  {"label": "[5,2,4]_4 -> [7,2,4]_4", "provenance": "tab:6-1 formulas, q = 4, m = 2", "status": "constructible", "build": {"family": "simplex", "q": 4, "m": 2}, "steps": ["extend"], "expect": [{"q": 4, "n": 5, "k": 2, "d": 4, "w_max": 4, "minimal": true, "ab_satisfied": true}, {"q": 4, "n": 7, "k": 2, "d": 4, "w_max": 6, "distribution": [[0, 1], [4, 3], [6, 12]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 4, "m": 2}},
  {"label": "[21,3,16]_4 -> [27,3,16]_4", "provenance": "tab:6-1 formulas, q = 4, m = 3", "status": "constructible", "build": {"family": "simplex", "q": 4, "m": 3}, "steps": ["extend"], "expect": [{"q": 4, "n": 21, "k": 3, "d": 16, "w_max": 16, "minimal": true, "ab_satisfied": true}, {"q": 4, "n": 27, "k": 3, "d": 16, "w_max": 22, "distribution": [[0, 1], [16, 15], [22, 48]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 4, "m": 3}},
  {"label": "[6,2,5]_5 -> [8,2,5]_5", "provenance": "tab:6-1 formulas, q = 5, m = 2", "status": "constructible", "build": {"family": "simplex", "q": 5, "m": 2}, "steps": ["extend"], "expect": [{"q": 5, "n": 6, "k": 2, "d": 5, "w_max": 5, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 8, "k": 2, "d": 5, "w_max": 7, "distribution": [[0, 1], [5, 4], [7, 20]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 5, "m": 2}},
  {"label": "[31,3,25]_5 -> [38,3,25]_5", "provenance": "tab:6-1 formulas, q = 5, m = 3", "status": "constructible", "build": {"family": "simplex", "q": 5, "m": 3}, "steps": ["extend"], "expect": [{"q": 5, "n": 31, "k": 3, "d": 25, "w_max": 25, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 38, "k": 3, "d": 25, "w_max": 32, "distribution": [[0, 1], [25, 24], [32, 100]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 5, "m": 3}},
  {"label": "[8,2,7]_7 -> [10,2,7]_7", "provenance": "tab:6-1 formulas, q = 7, m = 2", "status": "constructible", "build": {"family": "simplex", "q": 7, "m": 2}, "steps": ["extend"], "expect": [{"q": 7, "n": 8, "k": 2, "d": 7, "w_max": 7, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 10, "k": 2, "d": 7, "w_max": 9, "distribution": [[0, 1], [7, 6], [9, 42]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 7, "m": 2}},
  {"label": "[57,3,49]_7 -> [66,3,49]_7", "provenance": "tab:6-1 formulas, q = 7, m = 3", "status": "constructible", "build": {"family": "simplex", "q": 7, "m": 3}, "steps": ["extend"], "expect": [{"q": 7, "n": 57, "k": 3, "d": 49, "w_max": 49, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 66, "k": 3, "d": 49, "w_max": 58, "distribution": [[0, 1], [49, 48], [58, 294]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 7, "m": 3}},
  {"label": "[9,2,8]_8 -> [11,2,8]_8", "provenance": "tab:6-1 formulas, q = 8, m = 2", "status": "constructible", "build": {"family": "simplex", "q": 8, "m": 2}, "steps": ["extend"], "expect": [{"q": 8, "n": 9, "k": 2, "d": 8, "w_max": 8, "minimal": true, "ab_satisfied": true}, {"q": 8, "n": 11, "k": 2, "d": 8, "w_max": 10, "distribution": [[0, 1], [8, 7], [10, 56]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 8, "m": 2}},
  {"label": "[73,3,64]_8 -> [83,3,64]_8", "provenance": "tab:6-1 formulas, q = 8, m = 3", "status": "constructible", "build": {"family": "simplex", "q": 8, "m": 3}, "steps": ["extend"], "expect": [{"q": 8, "n": 73, "k": 3, "d": 64, "w_max": 64, "minimal": true, "ab_satisfied": true}, {"q": 8, "n": 83, "k": 3, "d": 64, "w_max": 74, "distribution": [[0, 1], [64, 63], [74, 448]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 8, "m": 3}},
  {"label": "[10,2,9]_9 -> [12,2,9]_9", "provenance": "tab:6-1 formulas, q = 9, m = 2", "status": "constructible", "build": {"family": "simplex", "q": 9, "m": 2}, "steps": ["extend"], "expect": [{"q": 9, "n": 10, "k": 2, "d": 9, "w_max": 9, "minimal": true, "ab_satisfied": true}, {"q": 9, "n": 12, "k": 2, "d": 9, "w_max": 11, "distribution": [[0, 1], [9, 8], [11, 72]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 9, "m": 2}},
  {"label": "[91,3,81]_9 -> [102,3,81]_9", "provenance": "tab:6-1 formulas, q = 9, m = 3", "status": "constructible", "build": {"family": "simplex", "q": 9, "m": 3}, "steps": ["extend"], "expect": [{"q": 9, "n": 91, "k": 3, "d": 81, "w_max": 81, "minimal": true, "ab_satisfied": true}, {"q": 9, "n": 102, "k": 3, "d": 81, "w_max": 92, "distribution": [[0, 1], [81, 80], [92, 648]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 9, "m": 3}},
  {"label": "[4,2,3]_3 -> [7,2,3]_3", "provenance": "tab:6-1 formulas, ternary self-orthogonal variant, m = 2", "status": "constructible", "build": {"family": "simplex", "q": 3, "m": 2}, "steps": ["self-orthogonal"], "expect": [{"q": 3, "n": 4, "k": 2, "d": 3, "w_max": 3, "minimal": true, "ab_satisfied": true, "self_orthogonal": true}, {"q": 3, "n": 7, "k": 2, "d": 3, "w_max": 6, "distribution": [[0, 1], [3, 2], [6, 6]], "minimal": true, "ab_satisfied": false, "self_orthogonal": true}], "formula": {"family": "C6.1", "m": 2}},
  {"label": "[13,3,9]_3 -> [19,3,9]_3", "provenance": "tab:6-1 formulas, ternary self-orthogonal variant, m = 3", "status": "constructible", "build": {"family": "simplex", "q": 3, "m": 3}, "steps": ["self-orthogonal"], "expect": [{"q": 3, "n": 13, "k": 3, "d": 9, "w_max": 9, "minimal": true, "ab_satisfied": true, "self_orthogonal": true}, {"q": 3, "n": 19, "k": 3, "d": 9, "w_max": 15, "distribution": [[0, 1], [9, 8], [15, 18]], "minimal": true, "ab_satisfied": false, "self_orthogonal": true}], "formula": {"family": "C6.1", "m": 3}}
 ]},
 {"id": "tab:6-2", "aliases": ["6-2", "dual-bch"], "title": "Extended dual BCH codes", "rows": [
  {"label": "[31,10,12]_2 -> [35,10,12]_2", "provenance": "tab:6-2 formulas, m = 5", "status": "constructible", "build": {"family": "dual-bch", "m": 5}, "steps": ["extend"], "expect": [{"q": 2, "n": 31, "k": 10, "d": 12, "w_max": 20, "distribution": [[0, 1], [12, 310], [16, 527], [20, 186]], "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 35, "k": 10, "d": 12, "w_max": 24, "distribution": [[0, 1], [12, 190], [16, 375], [20, 338], [24, 120]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.2", "m": 5}},
  {"label": "[127,14,56]_2 -> [167,14,56]_2", "provenance": "tab:6-2 formulas, m = 7", "status": "constructible", "build": {"family": "dual-bch", "m": 7}, "steps": ["extend"], "expect": [{"q": 2, "n": 127, "k": 14, "d": 56, "w_max": 72, "distribution": [[0, 1], [56, 4572], [64, 8255], [72, 3556]], "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 167, "k": 14, "d": 56, "w_max": 112, "distribution": [[0, 1], [56, 2556], [64, 4095], [72, 1540], [96, 2016], [104, 4160], [112, 2016]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.2", "m": 7}},
  {"label": "[511,18,240]_2 -> [719,18,240]_2", "provenance": "tab:6-2 formulas, m = 9", "status": "extended", "note": "2^18 representatives; the all-pairs minimality scan is outside the default budget", "build": {"family": "dual-bch", "m": 9}, "steps": ["extend"], "expect": [{"q": 2, "n": 511, "k": 18, "d": 240, "w_max": 272, "distribution": [[0, 1], [240, 69496], [256, 131327], [272, 61320]], "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 719, "k": 18, "d": 240, "w_max": 480, "distribution": [[0, 1], [240, 36856], [256, 65535], [272, 28680], [448, 32640], [464, 65792], [480, 32640]], "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.2", "m": 9}}
 ]},
 {"id": "appendix-A", "aliases": ["appendix", "app", "A"], "title": "Appendix tables", "rows": [
  {"label": "[3,2,2]_2 -> [5,2,2]_2", "provenance": "appendix table 1, row 1", "status": "constructible", "build": {"family": "simplex", "q": 2, "m": 2}, "steps": ["extend"], "expect": [{"q": 2, "n": 3, "k": 2, "d": 2, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 5, "k": 2, "d": 2, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 2, "m": 2}},
  {"label": "[7,3,4]_2 -> [11,3,4]_2", "provenance": "appendix table 1, row 2", "status": "constructible", "build": {"family": "simplex", "q": 2, "m": 3}, "steps": ["extend"], "expect": [{"q": 2, "n": 7, "k": 3, "d": 4, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 11, "k": 3, "d": 4, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 2, "m": 3}},
  {"label": "[9,4,4]_2 -> [11,4,4]_2", "provenance": "appendix table 1, row 3", "status": "external", "supply": "app-2-9-4-4", "steps": ["extend"], "expect": [{"q": 2, "n": 9, "k": 4, "d": 4, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 11, "k": 4, "d": 4, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P5.4", "m": 3}},
  {"label": "[11,4,5]_2 -> [13,4,5]_2", "provenance": "appendix table 1, row 4", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 4, "u": [1, 2]}, "steps": ["extend"], "expect": [{"q": 2, "n": 11, "k": 4, "d": 5, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 13, "k": 4, "d": 5, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.9", "m": 3, "t": 1, "n1": 4}},
  {"label": "[15,5,6]_2 -> [17,5,6]_2", "provenance": "appendix table 1, row 5", "status": "external", "supply": "app-2-15-5-6", "steps": ["extend"], "expect": [{"q": 2, "n": 15, "k": 5, "d": 6, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 17, "k": 5, "d": 6, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.4", "m": 5, "l": 1}},
  {"label": "[15,6,6]_2 -> [17,6,6]_2", "provenance": "appendix table 1, row 6", "status": "external", "supply": "app-2-15-6-6", "steps": ["extend"], "expect": [{"q": 2, "n": 15, "k": 6, "d": 6, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 17, "k": 6, "d": 6, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.2", "m": 2}},
  {"label": "[16,5,6]_2 -> [18,5,6]_2", "provenance": "appendix table 1, row 7", "status": "external", "supply": "app-2-16-5-6", "steps": ["extend"], "expect": [{"q": 2, "n": 16, "k": 5, "d": 6, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 18, "k": 5, "d": 6, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.8", "m": 5, "n1": 16}},
  {"label": "[15,4,8]_2 -> [23,4,8]_2", "provenance": "appendix table 1, row 8", "status": "constructible", "build": {"family": "simplex", "q": 2, "m": 4}, "steps": ["extend"], "expect": [{"q": 2, "n": 15, "k": 4, "d": 8, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 23, "k": 4, "d": 8, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 2, "m": 4}},
  {"label": "[19,5,8]_2 -> [23,5,8]_2", "provenance": "appendix table 1, row 9", "status": "external", "supply": "app-2-19-5-8", "steps": ["extend"], "expect": [{"q": 2, "n": 19, "k": 5, "d": 8, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 23, "k": 5, "d": 8, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P5.2", "m": 3}},
  {"label": "[22,5,10]_2 -> [26,5,10]_2", "provenance": "appendix table 1, row 10", "status": "external", "supply": "app-2-22-5-10", "steps": ["extend"], "expect": [{"q": 2, "n": 22, "k": 5, "d": 10, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 26, "k": 5, "d": 10, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.7", "m": 3, "h": 1}},
  {"label": "[23,5,10]_2 -> [27,5,10]_2", "provenance": "appendix table 1, row 11", "status": "external", "supply": "app-2-23-5-10", "steps": ["extend"], "expect": [{"q": 2, "n": 23, "k": 5, "d": 10, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 27, "k": 5, "d": 10, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.5", "m": 5, "h": 1}},
  {"label": "[20,5,8]_2 -> [24,5,8]_2", "provenance": "appendix table 1, row 12", "status": "external", "supply": "app-2-20-5-8", "steps": ["extend"], "expect": [{"q": 2, "n": 20, "k": 5, "d": 8, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 24, "k": 5, "d": 8, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.8", "m": 5, "n1": 20}},
  {"label": "[25,5,12]_2 -> [32,5,12]_2", "provenance": "appendix table 1, row 13", "status": "external", "note": "the extension formula gives length 33 from a base with maximum weight 16", "supply": "app-2-25-5-12", "steps": ["extend"], "expect": [{"q": 2, "n": 25, "k": 5, "d": 12, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 32, "k": 5, "d": 12, "minimal": true, "ab_satisfied": false}]},
  {"label": "[31,6,12]_2 -> [35,6,12]_2", "provenance": "appendix table 1, row 14", "status": "external", "supply": "app-2-31-6-12", "steps": ["extend"], "expect": [{"q": 2, "n": 31, "k": 6, "d": 12, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 35, "k": 6, "d": 12, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.4", "m": 6, "l": 2}},
  {"label": "[31,10,12]_2 -> [35,10,12]_2", "provenance": "appendix table 1, row 15", "status": "constructible", "build": {"family": "dual-bch", "m": 5}, "steps": ["extend"], "expect": [{"q": 2, "n": 31, "k": 10, "d": 12, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 35, "k": 10, "d": 12, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.2", "m": 5}},
  {"label": "[27,5,13]_2 -> [37,5,13]_2", "provenance": "appendix table 1, row 16", "status": "constructible", "build": {"family": "solomon-stiffler", "k": 5, "u": [1, 2]}, "steps": ["extend"], "expect": [{"q": 2, "n": 27, "k": 5, "d": 13, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 37, "k": 5, "d": 13, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.9", "m": 3, "t": 2, "n1": 4}},
  {"label": "[4,2,3]_3 -> [6,2,3]_3", "provenance": "appendix table 1, row 17", "status": "constructible", "build": {"family": "simplex", "q": 3, "m": 2}, "steps": ["extend"], "expect": [{"q": 3, "n": 4, "k": 2, "d": 3, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 6, "k": 2, "d": 3, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 3, "m": 2}},
  {"label": "[4,2,3]_3 -> [7,2,3]_3", "provenance": "appendix table 1, row 18", "status": "constructible", "build": {"family": "simplex", "q": 3, "m": 2}, "steps": ["self-orthogonal"], "expect": [{"q": 3, "n": 4, "k": 2, "d": 3, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 7, "k": 2, "d": 3, "minimal": true, "ab_satisfied": false}], "formula": {"family": "C6.1", "m": 2}},
  {"label": "[9,3,5]_3 -> [10,3,5]_3", "provenance": "appendix table 1, row 19", "status": "external", "supply": "app-3-9-3-5", "steps": ["extend"], "expect": [{"q": 3, "n": 9, "k": 3, "d": 5, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 10, "k": 3, "d": 5, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.10", "q": 3, "m": 3}},
  {"label": "[8,2,6]_3 -> [12,2,6]_3", "provenance": "appendix table 1, row 20", "status": "external", "note": "n' = 4 would need a maximum weight of 5, below d = 6", "supply": "app-3-8-2-6", "steps": ["extend"], "expect": [{"q": 3, "n": 8, "k": 2, "d": 6, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 12, "k": 2, "d": 6, "minimal": true, "ab_satisfied": false}]},
  {"label": "[13,3,9]_3 -> [18,3,9]_3", "provenance": "appendix table 1, row 21", "status": "constructible", "build": {"family": "simplex", "q": 3, "m": 3}, "steps": ["extend"], "expect": [{"q": 3, "n": 13, "k": 3, "d": 9, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 18, "k": 3, "d": 9, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 3, "m": 3}},
  {"label": "[13,3,9]_3 -> [19,3,9]_3", "provenance": "appendix table 1, row 22", "status": "constructible", "build": {"family": "simplex", "q": 3, "m": 3}, "steps": ["self-orthogonal"], "expect": [{"q": 3, "n": 13, "k": 3, "d": 9, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 19, "k": 3, "d": 9, "minimal": true, "ab_satisfied": false}], "formula": {"family": "C6.1", "m": 3}},
  {"label": "[26,6,15]_3 -> [29,6,15]_3", "provenance": "appendix table 1, row 23", "status": "external", "supply": "app-3-26-6-15", "steps": ["extend"], "expect": [{"q": 3, "n": 26, "k": 6, "d": 15, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 29, "k": 6, "d": 15, "minimal": true, "ab_satisfied": false}]},
  {"label": "[40,4,24]_3 -> [47,4,24]_3", "provenance": "appendix table 1, row 24", "status": "external", "supply": "app-3-40-4-24", "steps": ["extend"], "expect": [{"q": 3, "n": 40, "k": 4, "d": 24, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 47, "k": 4, "d": 24, "minimal": true, "ab_satisfied": false}]},
  {"label": "[52,6,30]_3 -> [56,6,30]_3", "provenance": "appendix table 1, row 25", "status": "external", "supply": "app-3-52-6-30", "steps": ["extend"], "expect": [{"q": 3, "n": 52, "k": 6, "d": 30, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 56, "k": 6, "d": 30, "minimal": true, "ab_satisfied": false}]},
  {"label": "[56,6,30]_3 -> [60,6,30]_3", "provenance": "appendix table 1, row 26", "status": "external", "supply": "app-3-56-6-30", "steps": ["extend"], "expect": [{"q": 3, "n": 56, "k": 6, "d": 30, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 60, "k": 6, "d": 30, "minimal": true, "ab_satisfied": false}]},
  {"label": "[104,8,60]_3 -> [111,8,60]_3", "provenance": "appendix table 1, row 27", "status": "external", "supply": "app-3-104-8-60", "steps": ["extend"], "expect": [{"q": 3, "n": 104, "k": 8, "d": 60, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 111, "k": 8, "d": 60, "minimal": true, "ab_satisfied": false}]},
  {"label": "[5,2,4]_4 -> [7,2,4]_4", "provenance": "appendix table 1, row 28", "status": "constructible", "build": {"family": "simplex", "q": 4, "m": 2}, "steps": ["extend"], "expect": [{"q": 4, "n": 5, "k": 2, "d": 4, "minimal": true, "ab_satisfied": true}, {"q": 4, "n": 7, "k": 2, "d": 4, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 4, "m": 2}},
  {"label": "[21,3,16]_4 -> [27,3,16]_4", "provenance": "appendix table 1, row 29", "status": "constructible", "build": {"family": "simplex", "q": 4, "m": 3}, "steps": ["extend"], "expect": [{"q": 4, "n": 21, "k": 3, "d": 16, "minimal": true, "ab_satisfied": true}, {"q": 4, "n": 27, "k": 3, "d": 16, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 4, "m": 3}},
  {"label": "[6,2,5]_5 -> [8,2,5]_5", "provenance": "appendix table 1, row 30", "status": "constructible", "build": {"family": "simplex", "q": 5, "m": 2}, "steps": ["extend"], "expect": [{"q": 5, "n": 6, "k": 2, "d": 5, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 8, "k": 2, "d": 5, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 5, "m": 2}},
  {"label": "[23,3,19]_5 -> [28,3,19]_5", "provenance": "appendix table 1, row 31", "status": "external", "note": "listed base length 23 is inconsistent with the construction, which starts from a length-25 code; supply a [25,3,19]_5 code", "supply": "app-5-23-3-19", "steps": ["extend"], "expect": [{"q": 5, "n": 23, "k": 3, "d": 19, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 28, "k": 3, "d": 19, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P4.10", "q": 5, "m": 3}},
  {"label": "[8,2,7]_7 -> [10,2,7]_7", "provenance": "appendix table 1, row 32", "status": "constructible", "build": {"family": "simplex", "q": 7, "m": 2}, "steps": ["extend"], "expect": [{"q": 7, "n": 8, "k": 2, "d": 7, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 10, "k": 2, "d": 7, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 7, "m": 2}},
  {"label": "[9,2,8]_8 -> [11,2,8]_8", "provenance": "appendix table 1, row 33", "status": "constructible", "build": {"family": "simplex", "q": 8, "m": 2}, "steps": ["extend"], "expect": [{"q": 8, "n": 9, "k": 2, "d": 8, "minimal": true, "ab_satisfied": true}, {"q": 8, "n": 11, "k": 2, "d": 8, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 8, "m": 2}},
  {"label": "[10,2,9]_9 -> [12,2,9]_9", "provenance": "appendix table 1, row 34", "status": "constructible", "build": {"family": "simplex", "q": 9, "m": 2}, "steps": ["extend"], "expect": [{"q": 9, "n": 10, "k": 2, "d": 9, "minimal": true, "ab_satisfied": true}, {"q": 9, "n": 12, "k": 2, "d": 9, "minimal": true, "ab_satisfied": false}], "formula": {"family": "P6.1", "q": 9, "m": 2}},
  {"label": "[32,7,14]_2 -> [38,7,14]_2", "provenance": "appendix table 2, row 1", "status": "external", "supply": "best-2-32-7-14", "steps": ["extend"], "expect": [{"q": 2, "n": 32, "k": 7, "d": 14, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 38, "k": 7, "d": 14, "minimal": true, "ab_satisfied": false}]},
  {"label": "[35,8,15]_2 -> [41,8,15]_2", "provenance": "appendix table 2, row 2", "status": "external", "supply": "best-2-35-8-15", "steps": ["extend"], "expect": [{"q": 2, "n": 35, "k": 8, "d": 15, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 41, "k": 8, "d": 15, "minimal": true, "ab_satisfied": false}]},
  {"label": "[38,9,16]_2 -> [42,9,16]_2", "provenance": "appendix table 2, row 3", "status": "external", "supply": "best-2-38-9-16", "steps": ["extend"], "expect": [{"q": 2, "n": 38, "k": 9, "d": 16, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 42, "k": 9, "d": 16, "minimal": true, "ab_satisfied": false}]},
  {"label": "[43,9,18]_2 -> [47,9,18]_2", "provenance": "appendix table 2, row 4", "status": "external", "supply": "best-2-43-9-18", "steps": ["extend"], "expect": [{"q": 2, "n": 43, "k": 9, "d": 18, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 47, "k": 9, "d": 18, "minimal": true, "ab_satisfied": false}]},
  {"label": "[45,9,19]_2 -> [51,9,19]_2", "provenance": "appendix table 2, row 5", "status": "external", "supply": "best-2-45-9-19", "steps": ["extend"], "expect": [{"q": 2, "n": 45, "k": 9, "d": 19, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 51, "k": 9, "d": 19, "minimal": true, "ab_satisfied": false}]},
  {"label": "[62,9,28]_2 -> [74,9,28]_2", "provenance": "appendix table 2, row 6", "status": "external", "supply": "best-2-62-9-28", "steps": ["extend"], "expect": [{"q": 2, "n": 62, "k": 9, "d": 28, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 74, "k": 9, "d": 28, "minimal": true, "ab_satisfied": false}]},
  {"label": "[112,15,45]_2 -> [125,15,45]_2", "provenance": "appendix table 2, row 7", "status": "external", "supply": "best-2-112-15-45", "steps": ["extend"], "expect": [{"q": 2, "n": 112, "k": 15, "d": 45, "minimal": true, "ab_satisfied": true}, {"q": 2, "n": 125, "k": 15, "d": 45, "minimal": true, "ab_satisfied": false}]},
  {"label": "[26,6,15]_3 -> [28,6,15]_3", "provenance": "appendix table 2, row 8", "status": "external", "supply": "best-3-26-6-15", "steps": ["extend"], "expect": [{"q": 3, "n": 26, "k": 6, "d": 15, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 28, "k": 6, "d": 15, "minimal": true, "ab_satisfied": false}]},
  {"label": "[66,8,38]_3 -> [69,8,38]_3", "provenance": "appendix table 2, row 9", "status": "external", "supply": "best-3-66-8-38", "steps": ["extend"], "expect": [{"q": 3, "n": 66, "k": 8, "d": 38, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 69, "k": 8, "d": 38, "minimal": true, "ab_satisfied": false}]},
  {"label": "[110,9,64]_3 -> [112,9,64]_3", "provenance": "appendix table 2, row 10", "status": "external", "supply": "best-3-110-9-64", "steps": ["extend"], "expect": [{"q": 3, "n": 110, "k": 9, "d": 64, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 112, "k": 9, "d": 64, "minimal": true, "ab_satisfied": false}]},
  {"label": "[182,15,99]_3 -> [184,15,99]_3", "provenance": "appendix table 2, row 11", "status": "extended", "note": "q^k exceeds the default enumeration cap", "supply": "best-3-182-15-99", "steps": ["extend"], "expect": [{"q": 3, "n": 182, "k": 15, "d": 99, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 184, "k": 15, "d": 99, "minimal": true, "ab_satisfied": false}]},
  {"label": "[208,14,117]_3 -> [216,14,117]_3", "provenance": "appendix table 2, row 12", "status": "extended", "note": "q^k exceeds the default enumeration cap", "supply": "best-3-208-14-117", "steps": ["extend"], "expect": [{"q": 3, "n": 208, "k": 14, "d": 117, "minimal": true, "ab_satisfied": true}, {"q": 3, "n": 216, "k": 14, "d": 117, "minimal": true, "ab_satisfied": false}]},
  {"label": "[10,2,8]_4 -> [13,2,8]_4", "provenance": "appendix table 2, row 13", "status": "external", "supply": "best-4-10-2-8", "steps": ["extend"], "expect": [{"q": 4, "n": 10, "k": 2, "d": 8, "minimal": true, "ab_satisfied": true}, {"q": 4, "n": 13, "k": 2, "d": 8, "minimal": true, "ab_satisfied": false}]},
  {"label": "[26,3,19]_4 -> [28,3,19]_4", "provenance": "appendix table 2, row 14", "status": "external", "supply": "best-4-26-3-19", "steps": ["extend"], "expect": [{"q": 4, "n": 26, "k": 3, "d": 19, "minimal": true, "ab_satisfied": true}, {"q": 4, "n": 28, "k": 3, "d": 19, "minimal": true, "ab_satisfied": false}]},
  {"label": "[57,6,38]_4 -> [58,6,38]_4", "provenance": "appendix table 2, row 15", "status": "external", "supply": "best-4-57-6-38", "steps": ["extend"], "expect": [{"q": 4, "n": 57, "k": 6, "d": 38, "minimal": true, "ab_satisfied": true}, {"q": 4, "n": 58, "k": 6, "d": 38, "minimal": true, "ab_satisfied": false}]},
  {"label": "[73,7,49]_4 -> [75,7,49]_4", "provenance": "appendix table 2, row 16", "status": "external", "supply": "best-4-73-7-49", "steps": ["extend"], "expect": [{"q": 4, "n": 73, "k": 7, "d": 49, "minimal": true, "ab_satisfied": true}, {"q": 4, "n": 75, "k": 7, "d": 49, "minimal": true, "ab_satisfied": false}]},
  {"label": "[27,3,21]_5 -> [29,3,21]_5", "provenance": "appendix table 2, row 17", "status": "external", "supply": "best-5-27-3-21", "steps": ["extend"], "expect": [{"q": 5, "n": 27, "k": 3, "d": 21, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 29, "k": 3, "d": 21, "minimal": true, "ab_satisfied": false}]},
  {"label": "[33,3,25]_5 -> [34,3,25]_5", "provenance": "appendix table 2, row 18", "status": "external", "supply": "best-5-33-3-25", "steps": ["extend"], "expect": [{"q": 5, "n": 33, "k": 3, "d": 25, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 34, "k": 3, "d": 25, "minimal": true, "ab_satisfied": false}]},
  {"label": "[38,3,30]_5 -> [41,3,30]_5", "provenance": "appendix table 2, row 19", "status": "external", "supply": "best-5-38-3-30", "steps": ["extend"], "expect": [{"q": 5, "n": 38, "k": 3, "d": 30, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 41, "k": 3, "d": 30, "minimal": true, "ab_satisfied": false}]},
  {"label": "[57,4,44]_5 -> [58,4,44]_5", "provenance": "appendix table 2, row 20", "status": "external", "supply": "best-5-57-4-44", "steps": ["extend"], "expect": [{"q": 5, "n": 57, "k": 4, "d": 44, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 58, "k": 4, "d": 44, "minimal": true, "ab_satisfied": false}]},
  {"label": "[62,6,45]_5 -> [64,6,45]_5", "provenance": "appendix table 2, row 21", "status": "external", "supply": "best-5-62-6-45", "steps": ["extend"], "expect": [{"q": 5, "n": 62, "k": 6, "d": 45, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 64, "k": 6, "d": 45, "minimal": true, "ab_satisfied": false}]},
  {"label": "[66,4,51]_5 -> [67,4,51]_5", "provenance": "appendix table 2, row 22", "status": "external", "supply": "best-5-66-4-51", "steps": ["extend"], "expect": [{"q": 5, "n": 66, "k": 4, "d": 51, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 67, "k": 4, "d": 51, "minimal": true, "ab_satisfied": false}]},
  {"label": "[70,4,55]_5 -> [74,4,55]_5", "provenance": "appendix table 2, row 23", "status": "external", "supply": "best-5-70-4-55", "steps": ["extend"], "expect": [{"q": 5, "n": 70, "k": 4, "d": 55, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 74, "k": 4, "d": 55, "minimal": true, "ab_satisfied": false}]},
  {"label": "[83,5,63]_5 -> [86,5,63]_5", "provenance": "appendix table 2, row 24", "status": "external", "supply": "best-5-83-5-63", "steps": ["extend"], "expect": [{"q": 5, "n": 83, "k": 5, "d": 63, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 86, "k": 5, "d": 63, "minimal": true, "ab_satisfied": false}]},
  {"label": "[90,5,69]_5 -> [93,5,69]_5", "provenance": "appendix table 2, row 25", "status": "external", "supply": "best-5-90-5-69", "steps": ["extend"], "expect": [{"q": 5, "n": 90, "k": 5, "d": 69, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 93, "k": 5, "d": 69, "minimal": true, "ab_satisfied": false}]},
  {"label": "[98,5,75]_5 -> [102,5,75]_5", "provenance": "appendix table 2, row 26", "status": "external", "supply": "best-5-98-5-75", "steps": ["extend"], "expect": [{"q": 5, "n": 98, "k": 5, "d": 75, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 102, "k": 5, "d": 75, "minimal": true, "ab_satisfied": false}]},
  {"label": "[115,5,88]_5 -> [117,5,88]_5", "provenance": "appendix table 2, row 27", "status": "external", "supply": "best-5-115-5-88", "steps": ["extend"], "expect": [{"q": 5, "n": 115, "k": 5, "d": 88, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 117, "k": 5, "d": 88, "minimal": true, "ab_satisfied": false}]},
  {"label": "[124,9,90]_5 -> [127,9,90]_5", "provenance": "appendix table 2, row 28", "status": "external", "supply": "best-5-124-9-90", "steps": ["extend"], "expect": [{"q": 5, "n": 124, "k": 9, "d": 90, "minimal": true, "ab_satisfied": true}, {"q": 5, "n": 127, "k": 9, "d": 90, "minimal": true, "ab_satisfied": false}]},
  {"label": "[16,2,14]_7 -> [19,2,14]_7", "provenance": "appendix table 2, row 29", "status": "external", "supply": "best-7-16-2-14", "steps": ["extend"], "expect": [{"q": 7, "n": 16, "k": 2, "d": 14, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 19, "k": 2, "d": 14, "minimal": true, "ab_satisfied": false}]},
  {"label": "[19,2,16]_7 -> [20,2,16]_7", "provenance": "appendix table 2, row 30", "status": "external", "supply": "best-7-19-2-16", "steps": ["extend"], "expect": [{"q": 7, "n": 19, "k": 2, "d": 16, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 20, "k": 2, "d": 16, "minimal": true, "ab_satisfied": false}]},
  {"label": "[21,2,18]_7 -> [23,2,18]_7", "provenance": "appendix table 2, row 31", "status": "external", "supply": "best-7-21-2-18", "steps": ["extend"], "expect": [{"q": 7, "n": 21, "k": 2, "d": 18, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 23, "k": 2, "d": 18, "minimal": true, "ab_satisfied": false}]},
  {"label": "[33,2,28]_7 -> [36,2,28]_7", "provenance": "appendix table 2, row 32", "status": "external", "supply": "best-7-33-2-28", "steps": ["extend"], "expect": [{"q": 7, "n": 33, "k": 2, "d": 28, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 36, "k": 2, "d": 28, "minimal": true, "ab_satisfied": false}]},
  {"label": "[42,2,36]_7 -> [46,2,36]_7", "provenance": "appendix table 2, row 33", "status": "external", "supply": "best-7-42-2-36", "steps": ["extend"], "expect": [{"q": 7, "n": 42, "k": 2, "d": 36, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 46, "k": 2, "d": 36, "minimal": true, "ab_satisfied": false}]},
  {"label": "[51,3,43]_7 -> [53,3,43]_7", "provenance": "appendix table 2, row 34", "status": "external", "supply": "best-7-51-3-43", "steps": ["extend"], "expect": [{"q": 7, "n": 51, "k": 3, "d": 43, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 53, "k": 3, "d": 43, "minimal": true, "ab_satisfied": false}]},
  {"label": "[67,3,56]_7 -> [68,3,56]_7", "provenance": "appendix table 2, row 35", "status": "external", "supply": "best-7-67-3-56", "steps": ["extend"], "expect": [{"q": 7, "n": 67, "k": 3, "d": 56, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 68, "k": 3, "d": 56, "minimal": true, "ab_satisfied": false}]},
  {"label": "[71,3,60]_7 -> [72,3,60]_7", "provenance": "appendix table 2, row 36", "status": "external", "supply": "best-7-71-3-60", "steps": ["extend"], "expect": [{"q": 7, "n": 71, "k": 3, "d": 60, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 72, "k": 3, "d": 60, "minimal": true, "ab_satisfied": false}]},
  {"label": "[76,3,64]_7 -> [77,3,64]_7", "provenance": "appendix table 2, row 37", "status": "external", "supply": "best-7-76-3-64", "steps": ["extend"], "expect": [{"q": 7, "n": 76, "k": 3, "d": 64, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 77, "k": 3, "d": 64, "minimal": true, "ab_satisfied": false}]},
  {"label": "[80,3,68]_7 -> [83,3,68]_7", "provenance": "appendix table 2, row 38", "status": "external", "supply": "best-7-80-3-68", "steps": ["extend"], "expect": [{"q": 7, "n": 80, "k": 3, "d": 68, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 83, "k": 3, "d": 68, "minimal": true, "ab_satisfied": false}]},
  {"label": "[90,3,77]_7 -> [96,3,77]_7", "provenance": "appendix table 2, row 39", "status": "external", "supply": "best-7-90-3-77", "steps": ["extend"], "expect": [{"q": 7, "n": 90, "k": 3, "d": 77, "minimal": true, "ab_satisfied": true}, {"q": 7, "n": 96, "k": 3, "d": 77, "minimal": true, "ab_satisfied": false}]},
  {"label": "[23,2,20]_8 -> [24,2,20]_8", "provenance": "appendix table 2, row 40", "status": "external", "supply": "best-8-23-2-20", "steps": ["extend"], "expect": [{"q": 8, "n": 23, "k": 2, "d": 20, "minimal": true, "ab_satisfied": true}, {"q": 8, "n": 24, "k": 2, "d": 20, "minimal": true, "ab_satisfied": false}]},
  {"label": "[29,2,25]_8 -> [31,2,25]_8", "provenance": "appendix table 2, row 41", "status": "external", "supply": "best-8-29-2-25", "steps": ["extend"], "expect": [{"q": 8, "n": 29, "k": 2, "d": 25, "minimal": true, "ab_satisfied": true}, {"q": 8, "n": 31, "k": 2, "d": 25, "minimal": true, "ab_satisfied": false}]},
  {"label": "[103,4,88]_8 -> [104,4,88]_8", "provenance": "appendix table 2, row 42", "status": "external", "supply": "best-8-103-4-88", "steps": ["extend"], "expect": [{"q": 8, "n": 103, "k": 4, "d": 88, "minimal": true, "ab_satisfied": true}, {"q": 8, "n": 104, "k": 4, "d": 88, "minimal": true, "ab_satisfied": false}]},
  {"label": "[28,2,25]_9 -> [31,2,25]_9", "provenance": "appendix table 2, row 43", "status": "external", "supply": "best-9-28-2-25", "steps": ["extend"], "expect": [{"q": 9, "n": 28, "k": 2, "d": 25, "minimal": true, "ab_satisfied": true}, {"q": 9, "n": 31, "k": 2, "d": 25, "minimal": true, "ab_satisfied": false}]},
  {"label": "[41,2,36]_9 -> [43,2,36]_9", "provenance": "appendix table 2, row 44", "status": "external", "supply": "best-9-41-2-36", "steps": ["extend"], "expect": [{"q": 9, "n": 41, "k": 2, "d": 36, "minimal": true, "ab_satisfied": true}, {"q": 9, "n": 43, "k": 2, "d": 36, "minimal": true, "ab_satisfied": false}]},
  {"label": "[56,3,48]_9 -> [57,3,48]_9", "provenance": "appendix table 2, row 45", "status": "external", "supply": "best-9-56-3-48", "steps": ["extend"], "expect": [{"q": 9, "n": 56, "k": 3, "d": 48, "minimal": true, "ab_satisfied": true}, {"q": 9, "n": 57, "k": 3, "d": 48, "minimal": true, "ab_satisfied": false}]},
  {"label": "[62,3,54]_9 -> [64,3,54]_9", "provenance": "appendix table 2, row 46", "status": "external", "supply": "best-9-62-3-54", "steps": ["extend"], "expect": [{"q": 9, "n": 62, "k": 3, "d": 54, "minimal": true, "ab_satisfied": true}, {"q": 9, "n": 64, "k": 3, "d": 54, "minimal": true, "ab_satisfied": false}]}
 ]}
]}
)json";

}  // namespace

const Json& fixture_document() {
  static const Json doc = Json::parse(kFixtures);
  return doc;
}

std::vector<std::string> table_ids() {
  std::vector<std::string> ids;
  for (const Json& t : fixture_document()["tables"]) ids.push_back(t["id"].get<std::string>());
  return ids;
}

const Json& fixture_table(std::string_view id) {
  for (const Json& t : fixture_document()["tables"]) {
    if (t["id"].get<std::string>() == id) return t;
    const auto& aliases = t["aliases"];
    if (std::any_of(aliases.begin(), aliases.end(), [&](const Json& a) { return a.get<std::string>() == id; }))
      return t;
  }
  std::string known;
  for (const std::string& s : table_ids()) known += (known.empty() ? "" : ", ") + s;
  throw Error(ErrorKind::UnknownTable, "unknown table '" + std::string(id) + "' (known: " + known + ")");
}

}  // namespace mincode::cli
