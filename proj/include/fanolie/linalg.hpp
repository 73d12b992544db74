#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fanolie/scalars.hpp"

namespace fanolie {

template <class S>
using Vec = std::vector<S>;

template <class S>
class Matrix {
 public:
  // `zero` is kept so products and images can be formed without a field object.
  Matrix(std::size_t rows, std::size_t cols, const S& zero) : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  template <ExactField F>
  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(n, n, field.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const S& zero() const { return zero_; }
  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!fanolie::is_zero(x)) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }
  Matrix& operator+=(const Matrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (fanolie::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!fanolie::is_zero(b(k, j))) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Vec<S> apply(const Vec<S>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    Vec<S> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!fanolie::is_zero((*this)(i, j)) && !fanolie::is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Vec<S> column(std::size_t c) const {
    Vec<S> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  // Entries in row-major order.
  const std::vector<S>& entries() const { return data_; }

 private:
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  S zero_;
  std::vector<S> data_;
};

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b - b * a;
}

template <class S>
bool is_zero_vec(const Vec<S>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<std::size_t> rref(std::vector<Vec<S>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const S one = rows[r][c] / rows[r][c];
    const S inv_pivot = one / rows[r][c];
    for (auto& x : rows[r]) x *= inv_pivot;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      const S f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (!is_zero(rows[r][j])) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

template <class S>
std::size_t rank(std::vector<Vec<S>> rows) {
  return rref(rows).size();
}

// Basis (rows in RREF) of the span of the given vectors.
template <class S>
std::vector<Vec<S>> span_basis(std::vector<Vec<S>> rows) {
  rref(rows);
  return rows;
}

template <class S>
bool in_span(const std::vector<Vec<S>>& basis, const Vec<S>& v) {
  if (basis.empty()) return is_zero_vec(v);
  std::vector<Vec<S>> rows = basis;
  const std::size_t before = rank(rows);
  rows.push_back(v);
  return rank(std::move(rows)) == before;
}

template <class S>
bool same_span(const std::vector<Vec<S>>& a, const std::vector<Vec<S>>& b) {
  std::vector<Vec<S>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = rank(both);
  return r == rank(a) && r == rank(b);
}

// Basis of {x : A x = 0} where A is given by its rows, each of length ncols.
template <ExactField F>
std::vector<Vec<typename F::value_type>> nullspace(const F& field, std::vector<Vec<typename F::value_type>> rows,
                                                   std::size_t ncols) {
  using S = typename F::value_type;
  const auto pivots = rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec<S>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec<S> v(ncols, field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coordinates of v in terms of independent vectors `basis`, if v lies in their span.
template <ExactField F>
std::optional<Vec<typename F::value_type>> coordinates(const F& field, const std::vector<Vec<typename F::value_type>>& basis,
                                                       const Vec<typename F::value_type>& v) {
  using S = typename F::value_type;
  const std::size_t n = v.size();
  const std::size_t k = basis.size();
  // Solve sum_j c_j basis[j] = v as an n x (k+1) augmented system.
  std::vector<Vec<S>> rows(n, Vec<S>(k + 1, field.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = basis[j][i];
    rows[i][k] = v[i];
  }
  const auto pivots = rref(rows);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() < k) throw std::invalid_argument("coordinates: basis is not independent");
  Vec<S> c(k, field.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = rows[i][k];
  return c;
}

template <ExactField F>
std::size_t intersection_dimension(const F&, const std::vector<Vec<typename F::value_type>>& a,
                                   const std::vector<Vec<typename F::value_type>>& b) {
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(a) + rank(b) - rank(both);
}

}  // namespace fanolie
