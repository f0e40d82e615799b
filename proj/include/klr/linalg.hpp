// Exact dense and sparse linear algebra over Q, plus generic elimination over
// any exact field type (used with RatFunc for matrices over Q(q)).

#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace klr {

using Vec = std::vector<mpq_class>;
using Mat = std::vector<Vec>;

inline Mat zero_mat(size_t r, size_t c) { return Mat(r, Vec(c, 0)); }

inline Mat identity_mat(size_t n) {
  Mat m = zero_mat(n, n);
  for (size_t k = 0; k < n; ++k) m[k][k] = 1;
  return m;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  if (a.empty()) return {};
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat r = zero_mat(n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j)
        if (b[t][j] != 0) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

inline Vec matvec(const Mat& a, const Vec& v) {
  Vec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
  return r;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<size_t> rref(Mat& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (size_t j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline size_t rank(Mat a) { return rref(a).size(); }

/// Basis of {x : a x = 0}.
inline std::vector<Vec> nullspace(Mat a, size_t cols) {
  if (a.empty()) {
    std::vector<Vec> out;
    for (size_t k = 0; k < cols; ++k) {
      Vec v(cols, 0);
      v[k] = 1;
      out.push_back(v);
    }
    return out;
  }
  auto piv = rref(a);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    out.push_back(v);
  }
  return out;
}

/// Some x with a x = b, if one exists.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Mat aug = a;
  for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Vec x(cols, 0);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

inline std::optional<Mat> invert(const Mat& a) {
  size_t n = a.size();
  Mat aug = a;
  for (size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, 0);
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv = zero_mat(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

/// Row space basis (rows of the reduced echelon form).
inline Mat row_basis(Mat a) {
  auto piv = rref(a);
  a.resize(piv.size());
  return a;
}

/// Incremental linear-independence tracker for sparse vectors keyed by integer coordinates.
class SparseEchelon {
 public:
  using SVec = std::map<long, mpq_class>;

  /// Reduces v against the stored rows; stores it and returns true if it is independent.
  bool insert(SVec v) {
    reduce(v);
    if (v.empty()) return false;
    auto lead = v.begin()->first;
    mpq_class inv = 1 / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    rows_.emplace(lead, std::move(v));
    return true;
  }
  bool contains(SVec v) const {
    reduce(v);
    return v.empty();
  }
  size_t rank() const { return rows_.size(); }

 private:
  void reduce(SVec& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      mpq_class f = it->second;
      long key = it->first;
      for (const auto& [k, c] : row->second) {
        auto& slot = v[k];
        slot -= f * c;
      }
      for (auto jt = v.begin(); jt != v.end();) jt = (jt->second == 0) ? v.erase(jt) : std::next(jt);
      it = v.upper_bound(key);
    }
  }

  std::map<long, SVec> rows_;
};

/// Rank of a matrix over an exact field type F (needs is_zero, -, *, /).
template <class F>
size_t rank_over(std::vector<std::vector<F>> a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      F f = a[i][c] / a[r][c];
      for (size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] = a[i][j] - f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Inverse of a square matrix over F; nullopt if singular.
template <class F>
std::optional<std::vector<std::vector<F>>> invert_over(std::vector<std::vector<F>> a, const F& zero, const F& one) {
  size_t n = a.size();
  std::vector<std::vector<F>> inv(n, std::vector<F>(n, zero));
  for (size_t k = 0; k < n; ++k) inv[k][k] = one;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    F piv_inv = one / a[c][c];
    for (size_t j = 0; j < n; ++j) {
      a[c][j] = a[c][j] * piv_inv;
      inv[c][j] = inv[c][j] * piv_inv;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      F f = a[i][c];
      for (size_t j = 0; j < n; ++j) {
        if (!a[c][j].is_zero()) a[i][j] = a[i][j] - f * a[c][j];
        if (!inv[c][j].is_zero()) inv[i][j] = inv[i][j] - f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace klr
