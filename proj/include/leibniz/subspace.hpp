#pragma once

// Subspaces of K^n held in canonical reduced row echelon form, so equality
// of subspaces is equality of matrices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>

#include "leibniz/matrix.hpp"

namespace leibniz {

/// Resource limits for exhaustive scans over finite fields.
struct Budget {
  std::uint64_t max_vectors = 1'000'000;   ///< bound on p^n for element scans
  std::uint64_t max_pairs = 1'000'000;     ///< bound on p^(2n) for pairwise element scans
  std::uint64_t max_subspaces = 2'000'000; ///< bound on the number of subspaces enumerated
  std::size_t max_nodes = 5'000;           ///< bound on subalgebra lattice size
};

/// p^n, saturating at uint64 max.
inline std::uint64_t power_saturating(std::uint64_t p, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

/// Gaussian binomial [n choose k]_p, exact.
inline BigInt gaussian_binomial(std::uint32_t p, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= BigInt(boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n - i))) - 1;
    den *= BigInt(boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(i + 1))) - 1;
  }
  return num / den;
}

inline BigInt subspace_count(std::uint32_t p, std::size_t n) {
  BigInt total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += gaussian_binomial(p, n, k);
  return total;
}

template <ExactField K>
class Subspace {
 public:
  using value_type = typename K::value_type;

  static Subspace zero(K field, std::size_t n) { return Subspace(Matrix<K>(std::move(field), 0, n), {}); }

  static Subspace full(K field, std::size_t n) {
    auto id = Matrix<K>::identity(field, n);
    std::vector<std::size_t> piv(n);
    std::iota(piv.begin(), piv.end(), 0);
    return Subspace(std::move(id), std::move(piv));
  }

  /// Span of the rows of `m`.
  static Subspace span(Matrix<K> m) {
    auto pivots = rref_in_place(m);
    return Subspace(std::move(m), std::move(pivots));
  }

  static Subspace from_vectors(K field, std::size_t n, const std::vector<Vec<K>>& vectors) {
    Matrix<K> m(std::move(field), 0, n);
    for (const auto& v : vectors) {
      if (v.size() != n) throw InputError("vector length does not match ambient dimension");
      m.append_row(v);
    }
    return span(std::move(m));
  }

  const K& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return basis_.rows() == 0; }
  bool is_full() const noexcept { return basis_.rows() == basis_.cols(); }
  const Matrix<K>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vec<K>> basis_vectors() const {
    std::vector<Vec<K>> out;
    for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
    return out;
  }

  /// Residue of `v` after clearing this subspace's pivot columns; zero iff v lies in the span.
  Vec<K> reduce(Vec<K> v) const {
    if (v.size() != ambient_dim()) throw InputError("vector length does not match ambient dimension");
    const K& f = field();
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      auto c = v[pivots_[r]];
      if (f.is_zero(c)) continue;
      for (std::size_t j = pivots_[r]; j < ambient_dim(); ++j) v[j] = f.sub(v[j], f.mul(c, basis_(r, j)));
    }
    return v;
  }

  bool contains(const Vec<K>& v) const {
    auto res = reduce(v);
    const K& f = field();
    return std::all_of(res.begin(), res.end(), [&](const auto& x) { return f.is_zero(x); });
  }

  /// Coordinates of a member vector in this subspace's RREF basis (read off pivot columns).
  Vec<K> coordinates(const Vec<K>& v) const {
    Vec<K> c(dim(), field().zero());
    for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

 private:
  Subspace(Matrix<K> basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

template <ExactField K>
void require_same_ambient(const Subspace<K>& u, const Subspace<K>& v) {
  require_same_field(u.field(), v.field());
  if (u.ambient_dim() != v.ambient_dim()) throw InputError("subspaces live in different ambient spaces");
}

/// Deterministic ordering key: dimension, then row-major RREF entries.
template <ExactField K>
bool key_less(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const auto& ma = a.basis();
  const auto& mb = b.basis();
  for (std::size_t r = 0; r < ma.rows(); ++r)
    for (std::size_t c = 0; c < ma.cols(); ++c)
      if (ma(r, c) != mb(r, c)) return ma(r, c) < mb(r, c);
  return false;
}

template <ExactField K>
struct SubspaceKeyLess {
  bool operator()(const Subspace<K>& a, const Subspace<K>& b) const { return key_less(a, b); }
};

template <ExactField K>
Subspace<K> subspace_sum(const Subspace<K>& u, const Subspace<K>& v) {
  require_same_ambient(u, v);
  if (v.is_zero()) return u;
  if (u.is_zero()) return v;
  Matrix<K> m = u.basis();
  for (std::size_t r = 0; r < v.dim(); ++r) m.append_row(v.basis().row(r));
  return Subspace<K>::span(std::move(m));
}

/// Span of `u` together with extra vectors.
template <ExactField K>
Subspace<K> subspace_extend(const Subspace<K>& u, const std::vector<Vec<K>>& extra) {
  Matrix<K> m = u.basis();
  for (const auto& v : extra) m.append_row(v);
  return Subspace<K>::span(std::move(m));
}

/// Zassenhaus: rows [u|u] and [v|0]; rows whose left half vanishes span u ∩ v.
template <ExactField K>
Subspace<K> subspace_intersection(const Subspace<K>& u, const Subspace<K>& v) {
  require_same_ambient(u, v);
  const std::size_t n = u.ambient_dim();
  const K& f = u.field();
  if (u.is_zero() || v.is_zero()) return Subspace<K>::zero(f, n);
  if (u.is_full()) return v;
  if (v.is_full()) return u;
  Matrix<K> m(f, u.dim() + v.dim(), 2 * n);
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = m(r, n + c) = u.basis()(r, c);
  for (std::size_t r = 0; r < v.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(u.dim() + r, c) = v.basis()(r, c);
  rref_in_place(m);
  Matrix<K> out(f, 0, n);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = f.is_zero(m(r, c));
    if (left_zero) out.append_row(m.row(r).subspan(n));
  }
  return Subspace<K>::span(std::move(out));
}

template <ExactField K>
bool subspace_leq(const Subspace<K>& u, const Subspace<K>& v) {
  require_same_ambient(u, v);
  if (u.dim() > v.dim()) return false;
  for (std::size_t r = 0; r < u.dim(); ++r)
    if (!v.contains(u.basis().row_vector(r))) return false;
  return true;
}

template <ExactField K>
bool subspace_contains(const Subspace<K>& v, const Vec<K>& x) {
  return v.contains(x);
}

/// Calls `visit` on every vector of F_p^n in lexicographic coordinate order.
inline void for_each_vector(const PrimeField& f, std::size_t n,
                            const std::function<void(const Vec<PrimeField>&)>& visit) {
  Vec<PrimeField> v(n, 0);
  const auto p = f.modulus();
  while (true) {
    visit(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++v[i] < p) break;
      v[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

/// Streams every subspace of F_p^n exactly once, ordered by dimension and then by
/// row-major RREF entries. Shapes are generated directly: choose pivot columns,
/// then fill the free positions.
inline void enumerate_subspaces(const PrimeField& f, std::size_t n,
                                const std::function<void(const Subspace<PrimeField>&)>& visit,
                                const Budget& budget = {}) {
  if (power_saturating(f.modulus(), n) > budget.max_vectors)
    throw BudgetError("p^n = " + std::to_string(f.modulus()) + "^" + std::to_string(n) +
                      " exceeds the vector budget of " + std::to_string(budget.max_vectors));
  if (subspace_count(f.modulus(), n) > budget.max_subspaces)
    throw BudgetError("F_" + std::to_string(f.modulus()) + "^" + std::to_string(n) + " has " +
                      subspace_count(f.modulus(), n).str() + " subspaces, above the budget of " +
                      std::to_string(budget.max_subspaces));
  const auto p = f.modulus();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Subspace<PrimeField>> level;
    std::vector<std::size_t> piv(k);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
      // free slots: (row r, column c) with c > piv[r] and c not a pivot
      std::vector<bool> is_pivot(n, false);
      for (auto c : piv) is_pivot[c] = true;
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (!is_pivot[c]) slots.emplace_back(r, c);
      std::vector<std::uint32_t> fill(slots.size(), 0);
      while (true) {
        Matrix<PrimeField> m(f, k, n);
        for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
        for (std::size_t s = 0; s < slots.size(); ++s) m(slots[s].first, slots[s].second) = fill[s];
        level.push_back(Subspace<PrimeField>::span(std::move(m)));
        std::size_t s = slots.size();
        bool done = true;
        while (s > 0) {
          --s;
          if (++fill[s] < p) {
            done = false;
            break;
          }
          fill[s] = 0;
        }
        if (done) break;
      }
      // next pivot combination in lexicographic order
      std::size_t i = k;
      bool advanced = false;
      while (i > 0) {
        --i;
        if (piv[i] < n - k + i) {
          ++piv[i];
          for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    std::sort(level.begin(), level.end(), SubspaceKeyLess<PrimeField>{});
    for (const auto& s : level) visit(s);
  }
}

inline std::vector<Subspace<PrimeField>> all_subspaces(const PrimeField& f, std::size_t n,
                                                       const Budget& budget = {}) {
  std::vector<Subspace<PrimeField>> out;
  enumerate_subspaces(f, n, [&](const Subspace<PrimeField>& s) { out.push_back(s); }, budget);
  return out;
}

}  // namespace leibniz
