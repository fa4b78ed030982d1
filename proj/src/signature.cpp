#include <utility>

#include "torusalt/algebra.hpp"

namespace torusalt {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw InvalidArgument("matrix is not square");
    r[i].reserve(m.size());
    for (const auto& x : m[i]) r[i].emplace_back(x);
  }
  return r;
}

void swap_symmetric(RatMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap(a[i], a[j]);
  for (auto& row : a) std::swap(row[i], row[j]);
}

// Congruence: row i += row j, then column i += column j.
void add_symmetric(RatMatrix& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
  for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
}

}  // namespace

int signature_symmetric(const IntMatrix& m) {
  RatMatrix a = to_rational(m);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (a[i][j] != a[j][i]) throw InvalidArgument("matrix is not symmetric");
    }
  }

  int signature = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n && pivot == n; ++i) {
      if (a[i][i] != 0) pivot = i;
    }
    if (pivot == n) {
      // All remaining diagonal entries vanish; a nonzero off-diagonal entry
      // a[i][j] turns a[i][i] into 2 a[i][j] after adding row/column j.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) break;  // remaining block is zero
      add_symmetric(a, pi, pj);
      pivot = pi;
    }
    swap_symmetric(a, k, pivot);

    const Rational p = a[k][k];
    signature += p > 0 ? 1 : -1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      const Rational f = a[r][k] / p;
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      for (std::size_t c = k; c < n; ++c) a[c][r] = a[r][c];
    }
  }
  return signature;
}

int matrix_rank(const IntMatrix& m) {
  RatMatrix a;
  for (const auto& row : m) {
    a.emplace_back();
    for (const auto& x : row) a.back().emplace_back(x);
  }
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a.front().size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace torusalt
