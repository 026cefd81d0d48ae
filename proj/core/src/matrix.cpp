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

#include "substoch/matrix.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace substoch {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace

SubstochMatrix::SubstochMatrix(Grid entries) {
  n_ = static_cast<int>(entries.size());
  if (n_ == 0) throw MatrixError("matrix must have at least one row");
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(entries[i].size()) != n_) {
      throw MatrixError("non-square grid: row " + std::to_string(i + 1) + " has " +
                        std::to_string(entries[i].size()) + " entries, expected " +
                        std::to_string(n_));
    }
  }
  entries_.reserve(static_cast<size_t>(n_) * n_);
  for (auto& row : entries) {
    for (auto& value : row) {
      entries_.push_back(std::move(value));
    }
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (sgn(at(i, j)) < 0) {
        throw MatrixError("negative entry " + to_fraction_string(at(i, j)) + " at row " +
                          std::to_string(i + 1) + ", column " + std::to_string(j + 1));
      }
    }
  }
  row_sums_.assign(n_, Rational(0));
  col_sums_.assign(n_, Rational(0));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      row_sums_[i] += at(i, j);
      col_sums_[j] += at(i, j);
    }
  }
  for (int i = 0; i < n_; ++i) {
    if (row_sums_[i] > 1) {
      throw MatrixError("row " + std::to_string(i + 1) + " sum " +
                        to_fraction_string(row_sums_[i]) + " exceeds 1");
    }
  }
  for (int j = 0; j < n_; ++j) {
    if (col_sums_[j] > 1) {
      throw MatrixError("column " + std::to_string(j + 1) + " sum " +
                        to_fraction_string(col_sums_[j]) + " exceeds 1");
    }
  }
}

SubstochMatrix SubstochMatrix::zero(int n) {
  return SubstochMatrix(Grid(n, std::vector<Rational>(n, Rational(0))));
}

SubstochMatrix SubstochMatrix::identity(int n) {
  Grid g(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) g[i][i] = 1;
  return SubstochMatrix(std::move(g));
}

Grid SubstochMatrix::grid() const {
  Grid g(n_, std::vector<Rational>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) g[i][j] = at(i, j);
  }
  return g;
}

SubstochMatrix SubstochMatrix::transpose() const {
  Grid g(n_, std::vector<Rational>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) g[j][i] = at(i, j);
  }
  return SubstochMatrix(std::move(g));
}

SubstochMatrix SubstochMatrix::permuted(const std::vector<int>& row_perm,
                                        const std::vector<int>& col_perm) const {
  if (static_cast<int>(row_perm.size()) != n_ || !is_permutation(row_perm) ||
      static_cast<int>(col_perm.size()) != n_ || !is_permutation(col_perm)) {
    throw std::invalid_argument("permutation does not match matrix order");
  }
  Grid g(n_, std::vector<Rational>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) g[i][j] = at(row_perm[i], col_perm[j]);
  }
  return SubstochMatrix(std::move(g));
}

bool lex_less(const SubstochMatrix& a, const SubstochMatrix& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) {
      int c = cmp(a.at(i, j), b.at(i, j));
      if (c != 0) return c < 0;
    }
  }
  return false;
}

RowColProfile::RowColProfile(std::vector<Rational> row_sums, std::vector<Rational> col_sums)
    : rows(std::move(row_sums)), cols(std::move(col_sums)) {
  if (rows.empty() || rows.size() != cols.size()) {
    throw MatrixError("profile must carry the same positive number of row and column sums");
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    if (sgn(rows[i]) < 0 || rows[i] > 1) {
      throw MatrixError("row sum " + std::to_string(i + 1) + " is " +
                        to_fraction_string(rows[i]) + ", outside [0, 1]");
    }
  }
  for (size_t j = 0; j < cols.size(); ++j) {
    if (sgn(cols[j]) < 0 || cols[j] > 1) {
      throw MatrixError("column sum " + std::to_string(j + 1) + " is " +
                        to_fraction_string(cols[j]) + ", outside [0, 1]");
    }
  }
  Rational row_total(0), col_total(0);
  for (const auto& r : rows) row_total += r;
  for (const auto& c : cols) col_total += c;
  if (row_total != col_total) {
    throw MatrixError("incompatible profile: row total " + to_fraction_string(row_total) +
                      " differs from column total " + to_fraction_string(col_total));
  }
}

Rational RowColProfile::total() const {
  Rational t(0);
  for (const auto& r : rows) t += r;
  return t;
}

RowColProfile profile_of(const SubstochMatrix& a) {
  return RowColProfile(a.row_sums(), a.col_sums());
}

Rational sigma(const SubstochMatrix& a) {
  Rational total(0);
  for (int i = 0; i < a.order(); ++i) total += a.row_sum(i);
  return total;
}

int sub_defect(const SubstochMatrix& a) {
  return static_cast<int>(ceil_to_long(Rational(a.order()) - sigma(a)));
}

PartitionLabel classify(const SubstochMatrix& a) {
  return PartitionLabel{sub_defect(a), sigma(a), profile_of(a)};
}

SubstochMatrix parse_matrix(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw MatrixError("empty matrix document");

  std::vector<std::vector<std::string>> literals;
  if (text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw MatrixError(std::string("malformed matrix document: ") + e.what());
    }
    if (!doc.contains("n") || !doc.contains("entries") || !doc["n"].is_number_integer() ||
        !doc["entries"].is_array()) {
      throw MatrixError("matrix document requires integer field 'n' and array field 'entries'");
    }
    int n = doc["n"].get<int>();
    if (static_cast<int>(doc["entries"].size()) != n) {
      throw MatrixError("matrix document declares n=" + std::to_string(n) + " but has " +
                        std::to_string(doc["entries"].size()) + " rows");
    }
    for (const auto& row : doc["entries"]) {
      if (!row.is_array()) throw MatrixError("matrix document rows must be arrays of strings");
      std::vector<std::string> parsed_row;
      for (const auto& cell : row) {
        if (!cell.is_string()) throw MatrixError("matrix document entries must be strings");
        parsed_row.push_back(cell.get<std::string>());
      }
      literals.push_back(std::move(parsed_row));
    }
  } else {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> current;
    while (std::getline(in, line)) {
      for (auto& token : split_tokens(line)) {
        if (token == "/") {
          if (!current.empty()) literals.push_back(std::move(current));
          current.clear();
        } else {
          current.push_back(std::move(token));
        }
      }
      if (!current.empty()) {
        literals.push_back(std::move(current));
        current.clear();
      }
    }
    if (literals.empty()) throw MatrixError("empty matrix document");
  }

  Grid g;
  g.reserve(literals.size());
  for (size_t i = 0; i < literals.size(); ++i) {
    std::vector<Rational> row;
    row.reserve(literals[i].size());
    for (size_t j = 0; j < literals[i].size(); ++j) {
      try {
        row.push_back(parse_rational(literals[i][j]));
      } catch (const std::invalid_argument& e) {
        throw MatrixError("row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
                          ": " + e.what());
      }
    }
    g.push_back(std::move(row));
  }
  return SubstochMatrix(std::move(g));
}

std::string matrix_to_text(const SubstochMatrix& a) {
  std::string out;
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) {
      if (j > 0) out += ' ';
      out += to_fraction_string(a.at(i, j));
    }
    out += '\n';
  }
  return out;
}

SubstochMatrix multiply(const SubstochMatrix& a, const SubstochMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("matrix orders differ");
  int n = a.order();
  Grid g(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (sgn(a.at(i, k)) == 0) continue;
      for (int j = 0; j < n; ++j) g[i][j] += a.at(i, k) * b.at(k, j);
    }
  }
  return SubstochMatrix(std::move(g));
}

SubstochMatrix convex_combination(const Rational& lambda, const SubstochMatrix& a,
                                  const SubstochMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("matrix orders differ");
  if (sgn(lambda) < 0 || lambda > 1) {
    throw std::invalid_argument("lambda " + to_fraction_string(lambda) + " outside [0, 1]");
  }
  Rational mu = Rational(1) - lambda;
  int n = a.order();
  Grid g(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g[i][j] = lambda * a.at(i, j) + mu * b.at(i, j);
  }
  return SubstochMatrix(std::move(g));
}

bool is_permutation(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return perm;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace substoch
