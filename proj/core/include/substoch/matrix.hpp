// Copyright 2026 The substoch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "substoch/rational.hpp"

namespace substoch {

/// Plain rational grid without invariants; used for intermediate
/// arithmetic (completions, I - A, perturbation directions).
using Grid = std::vector<std::vector<Rational>>;

/// Raised when input violates the doubly substochastic constraints; the
/// message carries the offending 1-based index.
class MatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable n-by-n matrix with nonnegative entries and every row and
/// column sum at most 1. Row and column sums are computed once at
/// construction and shared by all queries.
class SubstochMatrix {
 public:
  explicit SubstochMatrix(Grid entries);

  static SubstochMatrix zero(int n);
  static SubstochMatrix identity(int n);

  int order() const { return n_; }
  const Rational& at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
  const Rational& row_sum(int i) const { return row_sums_[i]; }
  const Rational& col_sum(int j) const { return col_sums_[j]; }
  const std::vector<Rational>& row_sums() const { return row_sums_; }
  const std::vector<Rational>& col_sums() const { return col_sums_; }

  Grid grid() const;
  SubstochMatrix transpose() const;

  /// result(i, j) = (*this)(row_perm[i], col_perm[j]).
  SubstochMatrix permuted(const std::vector<int>& row_perm,
                          const std::vector<int>& col_perm) const;

  friend bool operator==(const SubstochMatrix& a, const SubstochMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const SubstochMatrix& a, const SubstochMatrix& b) { return !(a == b); }

 private:
  int n_ = 0;
  std::vector<Rational> entries_;  // row-major
  std::vector<Rational> row_sums_;
  std::vector<Rational> col_sums_;
};

/// Lexicographic order (by order first, then row-major entries); the
/// ordering used for deterministic sets and decomposition output.
bool lex_less(const SubstochMatrix& a, const SubstochMatrix& b);

struct MatrixLess {
  bool operator()(const SubstochMatrix& a, const SubstochMatrix& b) const {
    return lex_less(a, b);
  }
};

/// Prescribed row and column sums; entries lie in [0, 1] and the two
/// totals agree.
struct RowColProfile {
  std::vector<Rational> rows;
  std::vector<Rational> cols;

  RowColProfile(std::vector<Rational> row_sums, std::vector<Rational> col_sums);
  int order() const { return static_cast<int>(rows.size()); }
  Rational total() const;
};

RowColProfile profile_of(const SubstochMatrix& a);

/// Sum of all entries.
Rational sigma(const SubstochMatrix& a);

/// Smallest k such that the matrix embeds in an (n+k)-square doubly
/// stochastic matrix; evaluates to ceil(n - sigma).
int sub_defect(const SubstochMatrix& a);

/// Membership labels of the three nested partitions: sub-defect class,
/// element-sum class and row/column-sum class.
struct PartitionLabel {
  int sub_defect;
  Rational element_sum;
  RowColProfile profile;
};

PartitionLabel classify(const SubstochMatrix& a);

/// Parses either the plain text form (one row per line or rows separated
/// by a standalone "/", whitespace-separated decimal or "p/q" entries)
/// or the JSON document form {"n": int, "entries": [[string]]}.
/// Violations are reported with their 1-based index.
SubstochMatrix parse_matrix(const std::string& text);

/// Plain text form with "p/q" entries; parse_matrix inverts it exactly.
std::string matrix_to_text(const SubstochMatrix& a);

/// Exact product; doubly substochastic matrices are closed under it.
SubstochMatrix multiply(const SubstochMatrix& a, const SubstochMatrix& b);

/// lambda * a + (1 - lambda) * b with 0 <= lambda <= 1.
SubstochMatrix convex_combination(const Rational& lambda, const SubstochMatrix& a,
                                  const SubstochMatrix& b);

/// True when perm is a permutation of {0, ..., n-1}.
bool is_permutation(const std::vector<int>& perm);

std::vector<int> identity_permutation(int n);
std::vector<int> inverse_permutation(const std::vector<int>& perm);

}  // namespace substoch
