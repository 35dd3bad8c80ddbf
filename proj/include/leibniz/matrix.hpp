#pragma once

// Dense matrices over an exact field, reduced row echelon form and the
// linear solves built on it.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

template <ExactField K>
class Matrix {
 public:
  using value_type = typename K::value_type;

  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  /// Rows must share one length; prime-field entries must already be reduced.
  static Matrix from_rows(K field, std::size_t cols, const std::vector<Vec<K>>& rows) {
    Matrix m(std::move(field), 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
  }

  static Matrix identity(K field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  const K& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const value_type> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec<K> row_vector(std::size_t r) const { return Vec<K>(row(r).begin(), row(r).end()); }

  void append_row(std::span<const value_type> r) {
    if (r.size() != cols_) throw InputError("row length does not match matrix width");
    for (const auto& v : r)
      if (!field_.contains(v)) throw InputError("matrix entry outside the field");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }
  void append_row(const Vec<K>& r) { append_row(std::span<const value_type>(r)); }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void truncate_rows(std::size_t n) {
    rows_ = n;
    data_.resize(rows_ * cols_);
  }

  bool operator==(const Matrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
  }

 private:
  K field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <ExactField K>
void require_same_field(const K& a, const K& b) {
  if (!(a == b)) throw InputError("operands live over different fields");
}

template <ExactField K>
struct RrefResult {
  Matrix<K> matrix;  ///< canonical RREF with zero rows removed
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// In-place Gauss-Jordan elimination; zero rows are dropped. Returns pivot columns.
template <ExactField K>
std::vector<std::size_t> rref_in_place(Matrix<K>& m) {
  const K& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && f.is_zero(m(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(r, sel);
    if (!f.is_one(m(r, c))) {
      auto inv = f.inv(m(r, c));
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

template <ExactField K>
RrefResult<K> rref(Matrix<K> m) {
  auto pivots = rref_in_place(m);
  std::size_t rank = pivots.size();
  return {std::move(m), rank, std::move(pivots)};
}

template <ExactField K>
Matrix<K> multiply(const Matrix<K>& a, const Matrix<K>& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  const K& f = a.field();
  Matrix<K> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
    }
  return out;
}

/// Row vector times matrix.
template <ExactField K>
Vec<K> multiply(const Vec<K>& v, const Matrix<K>& m) {
  if (v.size() != m.rows()) throw InputError("vector-matrix shape mismatch");
  const K& f = m.field();
  Vec<K> out(m.cols(), f.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (f.is_zero(v[i])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m(i, j)));
  }
  return out;
}

/// Rows x with x * m = 0, as a basis in RREF.
template <ExactField K>
Matrix<K> left_kernel(const Matrix<K>& m) {
  const K& f = m.field();
  const std::size_t n = m.rows();
  Matrix<K> aug(f, n, m.cols() + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols() + i) = f.one();
  }
  rref_in_place(aug);
  Matrix<K> kernel(f, 0, n);
  for (std::size_t i = 0; i < aug.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < m.cols() && left_zero; ++j) left_zero = f.is_zero(aug(i, j));
    if (!left_zero) continue;
    auto r = aug.row(i);
    kernel.append_row(r.subspan(m.cols()));
  }
  rref_in_place(kernel);
  return kernel;
}

template <ExactField K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw InputError("only square matrices have inverses");
  const K& f = m.field();
  const std::size_t n = m.rows();
  Matrix<K> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<K> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <ExactField K>
struct LinearSolution {
  Vec<K> particular;
  Matrix<K> kernel;  ///< basis of {x : A x = 0}, RREF rows
};

/// Solves A x = b for column vector x. Free variables are set to zero in the
/// particular solution. Returns nullopt when the system is inconsistent.
template <ExactField K>
std::optional<LinearSolution<K>> solve_linear(const Matrix<K>& a, const Vec<K>& b) {
  if (b.size() != a.rows()) throw InputError("right-hand side length does not match row count");
  const K& f = a.field();
  const std::size_t n = a.cols();
  Matrix<K> aug(f, a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    if (!f.contains(b[i])) throw InputError("right-hand side entry outside the field");
    aug(i, n) = b[i];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;

  Vec<K> x(n, f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<K> kernel(f, 0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec<K> v(n, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(aug(r, free));
    kernel.append_row(v);
  }
  rref_in_place(kernel);
  return LinearSolution<K>{std::move(x), std::move(kernel)};
}

}  // namespace leibniz
