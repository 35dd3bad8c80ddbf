#pragma once

// Finite-dimensional right Leibniz algebras given by structure constants,
// [e_i, e_j] = sum_k c[i][j][k] e_k, and the invariants computable from
// them by exact linear algebra.

#include <optional>
#include <string>
#include <utility>

#include "leibniz/subspace.hpp"

namespace leibniz {

template <ExactField K>
class StructureTensor {
 public:
  using value_type = typename K::value_type;

  StructureTensor(K field, std::size_t n) : field_(std::move(field)), n_(n), c_(n * n * n, field_.zero()) {}

  const K& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }

  const value_type& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, value_type v) {
    if (i >= n_ || j >= n_ || k >= n_) throw InputError("structure constant index out of range");
    if (!field_.contains(v)) throw InputError("structure constant outside the field");
    c_[(i * n_ + j) * n_ + k] = std::move(v);
  }

  /// [e_i, e_j] as a coordinate vector.
  Vec<K> product(std::size_t i, std::size_t j) const {
    auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_);
    return Vec<K>(first, first + static_cast<std::ptrdiff_t>(n_));
  }

  bool operator==(const StructureTensor& o) const { return field_ == o.field_ && n_ == o.n_ && c_ == o.c_; }

 private:
  K field_;
  std::size_t n_;
  std::vector<value_type> c_;
};

struct BasisTriple {
  std::size_t i, j, k;
};

namespace detail {

// Sign selects the identity: right  [x,[y,z]] = [[x,y],z] - [[x,z],y]
//                            left   [x,[y,z]] = [[x,y],z] + [y,[x,z]]
template <ExactField K>
std::optional<BasisTriple> first_identity_violation(const StructureTensor<K>& c, bool left) {
  const K& f = c.field();
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          auto lhs = f.zero();
          auto rhs = f.zero();
          for (std::size_t m = 0; m < n; ++m) {
            lhs = f.add(lhs, f.mul(c(j, k, m), c(i, m, l)));
            rhs = f.add(rhs, f.mul(c(i, j, m), c(m, k, l)));
            if (left)
              rhs = f.add(rhs, f.mul(c(i, k, m), c(j, m, l)));
            else
              rhs = f.sub(rhs, f.mul(c(i, k, m), c(m, j, l)));
          }
          if (lhs != rhs) return BasisTriple{i, j, k};
        }
  return std::nullopt;
}

}  // namespace detail

template <ExactField K>
std::optional<BasisTriple> find_right_leibniz_violation(const StructureTensor<K>& c) {
  return detail::first_identity_violation(c, false);
}

template <ExactField K>
bool check_right_leibniz(const StructureTensor<K>& c) {
  return !find_right_leibniz_violation(c).has_value();
}

template <ExactField K>
bool check_left_leibniz(const StructureTensor<K>& c) {
  return !detail::first_identity_violation(c, true).has_value();
}

/// A validated right Leibniz algebra. Construction fails on any tensor that
/// violates the identity, so every instance satisfies it.
template <ExactField K>
class LeibnizAlgebra {
 public:
  using value_type = typename K::value_type;
  using field_type = K;

  LeibnizAlgebra(std::string name, StructureTensor<K> tensor) : name_(std::move(name)), c_(std::move(tensor)) {
    if (auto bad = find_right_leibniz_violation(c_)) throw NotLeibnizError(bad->i, bad->j, bad->k);
  }

  const std::string& name() const noexcept { return name_; }
  const K& field() const noexcept { return c_.field(); }
  std::size_t dim() const noexcept { return c_.dim(); }
  const StructureTensor<K>& tensor() const noexcept { return c_; }
  const value_type& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

  LeibnizAlgebra renamed(std::string name) const {
    LeibnizAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  Vec<K> zero_vector() const { return Vec<K>(dim(), field().zero()); }
  Vec<K> basis_vector(std::size_t i) const {
    auto v = zero_vector();
    v[i] = field().one();
    return v;
  }
  Subspace<K> whole() const { return Subspace<K>::full(field(), dim()); }
  Subspace<K> none() const { return Subspace<K>::zero(field(), dim()); }

 private:
  std::string name_;
  StructureTensor<K> c_;
};

template <ExactField K>
void require_vector(const LeibnizAlgebra<K>& L, const Vec<K>& x) {
  if (x.size() != L.dim()) throw InputError("vector length does not match algebra dimension");
  for (const auto& v : x)
    if (!L.field().contains(v)) throw InputError("vector entry outside the algebra's field");
}

template <ExactField K>
void require_subspace(const LeibnizAlgebra<K>& L, const Subspace<K>& U) {
  require_same_field(L.field(), U.field());
  if (U.ambient_dim() != L.dim()) throw InputError("subspace does not live in the algebra");
}

/// Unchecked bilinear product; callers guarantee shapes.
template <ExactField K>
Vec<K> bracket_unchecked(const LeibnizAlgebra<K>& L, const Vec<K>& x, const Vec<K>& y) {
  const K& f = L.field();
  const std::size_t n = L.dim();
  Vec<K> out(n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (f.is_zero(y[j])) continue;
      auto w = f.mul(x[i], y[j]);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& c = L.constant(i, j, k);
        if (!f.is_zero(c)) out[k] = f.add(out[k], f.mul(w, c));
      }
    }
  }
  return out;
}

template <ExactField K>
Vec<K> bracket(const LeibnizAlgebra<K>& L, const Vec<K>& x, const Vec<K>& y) {
  require_vector(L, x);
  require_vector(L, y);
  return bracket_unchecked(L, x, y);
}

template <ExactField K>
bool is_zero_vector(const K& f, const Vec<K>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

template <ExactField K>
bool check_left_leibniz(const LeibnizAlgebra<K>& L) {
  return check_left_leibniz(L.tensor());
}

/// Right and left identities both hold. The right identity is a class invariant.
template <ExactField K>
bool is_symmetric(const LeibnizAlgebra<K>& L) {
  return check_left_leibniz(L.tensor());
}

/// x^2 = 0 for every x, by bilinear expansion on basis elements.
template <ExactField K>
bool is_lie(const LeibnizAlgebra<K>& L) {
  const K& f = L.field();
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto s = i == j ? L.constant(i, i, k) : f.add(L.constant(i, j, k), L.constant(j, i, k));
        if (!f.is_zero(s)) return false;
      }
  return true;
}

/// Matrix of y -> [y, x] acting on column vectors: entry (k, j) is the e_k
/// coefficient of [e_j, x].
template <ExactField K>
Matrix<K> right_mult_matrix(const LeibnizAlgebra<K>& L, const Vec<K>& x) {
  require_vector(L, x);
  const std::size_t n = L.dim();
  Matrix<K> m(L.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = bracket_unchecked(L, L.basis_vector(j), x);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

/// [U, V] = span of [u, v] over basis pairs.
template <ExactField K>
Subspace<K> product_space(const LeibnizAlgebra<K>& L, const Subspace<K>& U, const Subspace<K>& V) {
  require_subspace(L, U);
  require_subspace(L, V);
  Matrix<K> m(L.field(), 0, L.dim());
  const auto us = U.basis_vectors();
  const auto vs = V.basis_vectors();
  for (const auto& u : us)
    for (const auto& v : vs) {
      auto w = bracket_unchecked(L, u, v);
      if (!is_zero_vector(L.field(), w)) m.append_row(w);
    }
  return Subspace<K>::span(std::move(m));
}

template <ExactField K>
bool is_subalgebra(const LeibnizAlgebra<K>& L, const Subspace<K>& S) {
  require_subspace(L, S);
  const auto vs = S.basis_vectors();
  for (const auto& a : vs)
    for (const auto& b : vs)
      if (!S.contains(bracket_unchecked(L, a, b))) return false;
  return true;
}

/// Smallest subalgebra containing `start` and the given vectors.
template <ExactField K>
Subspace<K> subalgebra_closure(const LeibnizAlgebra<K>& L, const Subspace<K>& start,
                               const std::vector<Vec<K>>& extra = {}) {
  require_subspace(L, start);
  for (const auto& v : extra) require_vector(L, v);
  Subspace<K> S = extra.empty() ? start : subspace_extend(start, extra);
  while (true) {
    const auto vs = S.basis_vectors();
    std::vector<Vec<K>> fresh;
    Subspace<K> grown = S;
    for (const auto& a : vs)
      for (const auto& b : vs) {
        auto w = bracket_unchecked(L, a, b);
        if (!grown.contains(w)) {
          grown = subspace_extend(grown, {w});
        }
      }
    if (grown.dim() == S.dim()) return S;
    S = std::move(grown);
  }
}

template <ExactField K>
Subspace<K> subalgebra_closure(const LeibnizAlgebra<K>& L, const std::vector<Vec<K>>& generators) {
  return subalgebra_closure(L, L.none(), generators);
}

/// Subalgebra generated by two subspaces (the lattice join).
template <ExactField K>
Subspace<K> generated_join(const LeibnizAlgebra<K>& L, const Subspace<K>& U, const Subspace<K>& V) {
  return subalgebra_closure(L, subspace_sum(U, V));
}

/// L^1 = L, L^{k+1} = [L^k, L], listed until the series stabilizes.
template <ExactField K>
std::vector<Subspace<K>> lower_central_series(const LeibnizAlgebra<K>& L) {
  std::vector<Subspace<K>> series{L.whole()};
  const auto whole = L.whole();
  while (!series.back().is_zero()) {
    auto next = product_space(L, series.back(), whole);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

/// L^(0) = L, L^(k+1) = [L^(k), L^(k)], listed until the series stabilizes.
template <ExactField K>
std::vector<Subspace<K>> derived_series(const LeibnizAlgebra<K>& L) {
  std::vector<Subspace<K>> series{L.whole()};
  while (!series.back().is_zero()) {
    auto next = product_space(L, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

struct SeriesVerdict {
  bool holds = false;
  std::size_t index = 0;  ///< nilpotency class or derived length when `holds`
};

/// Nilpotent of class c means L^{c+1} = 0 and L^c != 0; the zero algebra has class 0.
template <ExactField K>
SeriesVerdict nilpotency(const LeibnizAlgebra<K>& L) {
  auto s = lower_central_series(L);
  if (!s.back().is_zero()) return {false, 0};
  return {true, s.size() - 1};
}

/// Solvable of derived length d means L^(d) = 0 and L^(d-1) != 0.
template <ExactField K>
SeriesVerdict solvability(const LeibnizAlgebra<K>& L) {
  auto s = derived_series(L);
  if (!s.back().is_zero()) return {false, 0};
  return {true, s.size() - 1};
}

template <ExactField K>
bool is_nilpotent(const LeibnizAlgebra<K>& L) {
  return nilpotency(L).holds;
}

template <ExactField K>
bool is_solvable(const LeibnizAlgebra<K>& L) {
  return solvability(L).holds;
}

/// I = span of squares: e_i^2 and [e_i,e_j] + [e_j,e_i].
template <ExactField K>
Subspace<K> leibniz_kernel(const LeibnizAlgebra<K>& L) {
  const K& f = L.field();
  const std::size_t n = L.dim();
  Matrix<K> m(f, 0, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec<K> v(n, f.zero());
      for (std::size_t k = 0; k < n; ++k)
        v[k] = i == j ? L.constant(i, i, k) : f.add(L.constant(i, j, k), L.constant(j, i, k));
      if (!is_zero_vector(f, v)) m.append_row(v);
    }
  return Subspace<K>::span(std::move(m));
}

/// Z(L) = {x : [x, e_i] = [e_i, x] = 0 for all i}.
template <ExactField K>
Subspace<K> center(const LeibnizAlgebra<K>& L) {
  const K& f = L.field();
  const std::size_t n = L.dim();
  Matrix<K> m(f, n, 2 * n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        m(j, (2 * i) * n + k) = L.constant(j, i, k);
        m(j, (2 * i + 1) * n + k) = L.constant(i, j, k);
      }
  return Subspace<K>::span(left_kernel(m));
}

/// [U, L] + [L, U] <= U.
template <ExactField K>
bool is_ideal(const LeibnizAlgebra<K>& L, const Subspace<K>& U) {
  require_subspace(L, U);
  for (const auto& u : U.basis_vectors())
    for (std::size_t i = 0; i < L.dim(); ++i) {
      auto e = L.basis_vector(i);
      if (!U.contains(bracket_unchecked(L, u, e)) || !U.contains(bracket_unchecked(L, e, u))) return false;
    }
  return true;
}

/// Largest ideal of L inside W via the descending fixpoint
/// W' = {x in W : [x, L] + [L, x] <= W}.
template <ExactField K>
Subspace<K> largest_ideal_in(const LeibnizAlgebra<K>& L, const Subspace<K>& W) {
  require_subspace(L, W);
  const K& f = L.field();
  const std::size_t n = L.dim();
  Subspace<K> cur = W;
  while (!cur.is_zero()) {
    const auto ws = cur.basis_vectors();
    Matrix<K> m(f, ws.size(), 2 * n * n);
    for (std::size_t r = 0; r < ws.size(); ++r)
      for (std::size_t i = 0; i < n; ++i) {
        auto e = L.basis_vector(i);
        auto a = cur.reduce(bracket_unchecked(L, ws[r], e));
        auto b = cur.reduce(bracket_unchecked(L, e, ws[r]));
        for (std::size_t k = 0; k < n; ++k) {
          m(r, (2 * i) * n + k) = a[k];
          m(r, (2 * i + 1) * n + k) = b[k];
        }
      }
    auto coeffs = left_kernel(m);
    Matrix<K> next(f, 0, n);
    for (std::size_t r = 0; r < coeffs.rows(); ++r) next.append_row(multiply(coeffs.row_vector(r), cur.basis()));
    auto shrunk = Subspace<K>::span(std::move(next));
    if (shrunk.dim() == cur.dim()) return cur;
    cur = std::move(shrunk);
  }
  return cur;
}

/// Quotient algebra L/K on the standard basis vectors outside K's pivot columns.
template <ExactField K>
struct Quotient {
  LeibnizAlgebra<K> algebra;
  Matrix<K> projection;                   ///< n x m; row vector x maps to x * projection
  std::vector<std::size_t> complement;    ///< basis e_c of L lifting the quotient basis

  Vec<K> project(const Subspace<K>& kernel, const Vec<K>& x) const {
    auto r = kernel.reduce(x);
    Vec<K> out;
    out.reserve(complement.size());
    for (auto c : complement) out.push_back(r[c]);
    return out;
  }
  Vec<K> lift(const Vec<K>& q) const {
    Vec<K> out(projection.rows(), algebra.field().zero());
    for (std::size_t a = 0; a < complement.size(); ++a) out[complement[a]] = q[a];
    return out;
  }
};

template <ExactField K>
Quotient<K> quotient(const LeibnizAlgebra<K>& L, const Subspace<K>& ideal, std::string name = {}) {
  require_subspace(L, ideal);
  if (!is_ideal(L, ideal)) throw InputError("quotient requires an ideal");
  const K& f = L.field();
  const std::size_t n = L.dim();
  std::vector<bool> pivot(n, false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) comp.push_back(c);
  const std::size_t m = comp.size();

  Matrix<K> proj(f, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = ideal.reduce(L.basis_vector(i));
    for (std::size_t a = 0; a < m; ++a) proj(i, a) = r[comp[a]];
  }
  StructureTensor<K> t(f, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto w = ideal.reduce(L.tensor().product(comp[a], comp[b]));
      for (std::size_t c = 0; c < m; ++c) t.set(a, b, c, w[comp[c]]);
    }
  if (name.empty()) name = L.name() + "/K";
  return Quotient<K>{LeibnizAlgebra<K>(std::move(name), std::move(t)), std::move(proj), std::move(comp)};
}

/// The algebra structure on a subalgebra, in coordinates of its RREF basis.
template <ExactField K>
LeibnizAlgebra<K> subalgebra_as_algebra(const LeibnizAlgebra<K>& L, const Subspace<K>& S, std::string name = {}) {
  require_subspace(L, S);
  if (!is_subalgebra(L, S)) throw InputError("subspace is not closed under the bracket");
  const auto vs = S.basis_vectors();
  StructureTensor<K> t(L.field(), vs.size());
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = 0; b < vs.size(); ++b) {
      auto coords = S.coordinates(bracket_unchecked(L, vs[a], vs[b]));
      for (std::size_t c = 0; c < vs.size(); ++c) t.set(a, b, c, coords[c]);
    }
  if (name.empty()) name = L.name() + "|S";
  return LeibnizAlgebra<K>(std::move(name), std::move(t));
}

/// New basis f_i = sum_j P[i][j] e_j; returns the structure constants in that basis.
template <ExactField K>
LeibnizAlgebra<K> change_of_basis(const LeibnizAlgebra<K>& L, const Matrix<K>& P, std::string name = {}) {
  require_same_field(L.field(), P.field());
  if (P.rows() != L.dim() || P.cols() != L.dim()) throw InputError("basis change matrix has the wrong shape");
  auto Pinv = inverse(P);
  if (!Pinv) throw InputError("basis change matrix is singular");
  const std::size_t n = L.dim();
  StructureTensor<K> t(L.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto w = bracket_unchecked(L, P.row_vector(i), P.row_vector(j));
      auto d = multiply(w, *Pinv);
      for (std::size_t k = 0; k < n; ++k) t.set(i, j, k, d[k]);
    }
  if (name.empty()) name = L.name();
  return LeibnizAlgebra<K>(std::move(name), std::move(t));
}

/// Vectors of the given subspace expressed in standard coordinates after a basis change:
/// maps a vector written in the old basis to coordinates in the new basis f = P e.
template <ExactField K>
Vec<K> to_new_basis(const Matrix<K>& Pinv, const Vec<K>& old_coords) {
  return multiply(old_coords, Pinv);
}

}  // namespace leibniz
