#pragma once

// Structural shape tags (abelian, almost abelian of either kind, extraspecial)
// and constructive detectors for the named algebra families.

#include <string_view>

#include "leibniz/scan.hpp"

namespace leibniz {

enum class ShapeTag { abelian, almost_abelian_lie, almost_abelian_nonlie, extraspecial, other };

inline std::string_view to_string(ShapeTag t) {
  switch (t) {
    case ShapeTag::abelian: return "abelian";
    case ShapeTag::almost_abelian_lie: return "almost_abelian_lie";
    case ShapeTag::almost_abelian_nonlie: return "almost_abelian_nonlie";
    case ShapeTag::extraspecial: return "extraspecial";
    case ShapeTag::other: return "other";
  }
  return "other";
}

inline bool is_abelian_or_almost_abelian(ShapeTag t) {
  return t == ShapeTag::abelian || t == ShapeTag::almost_abelian_lie || t == ShapeTag::almost_abelian_nonlie;
}

template <ExactField K>
struct ShapeResult {
  ShapeTag tag = ShapeTag::other;
  std::optional<Subspace<K>> A;  ///< abelian ideal of codimension one (almost abelian tags)
  std::optional<Vec<K>> y;       ///< normalized element with [a, y] = a and y^2 = 0
  /// The extraspecial tag rests on the working definition: nilpotent of class
  /// at most 2 with Z(L) = L^2 one-dimensional.
  bool extraspecial_by_assumption = false;
};

/// Shape detection. Almost abelian: A = L^2 is an abelian ideal of codimension 1,
/// R_v acts on A as c*id (c != 0) for v the first basis vector outside A, y = v/c,
/// and [y, a] is -a (Lie type) or 0 (non-Lie type) on A.
template <ExactField K>
ShapeResult<K> classify_shape(const LeibnizAlgebra<K>& L) {
  const K& f = L.field();
  const std::size_t n = L.dim();
  ShapeResult<K> out;
  const auto whole = L.whole();
  const auto A = product_space(L, whole, whole);
  if (A.is_zero()) {
    out.tag = ShapeTag::abelian;
    return out;
  }
  if (A.dim() + 1 == n && product_space(L, A, A).is_zero()) {
    std::size_t vi = 0;
    while (A.contains(L.basis_vector(vi))) ++vi;
    const auto v = L.basis_vector(vi);
    const auto as = A.basis_vectors();
    std::optional<typename K::value_type> c;
    bool scalar = true;
    for (const auto& a : as) {
      auto w = bracket_unchecked(L, a, v);
      // w must equal c * a; a is an RREF row, so its pivot entry is 1
      auto piv = std::find_if(a.begin(), a.end(), [&](const auto& x) { return !f.is_zero(x); });
      auto cand = w[static_cast<std::size_t>(piv - a.begin())];
      if (c && *c != cand) scalar = false;
      c = cand;
      for (std::size_t k = 0; k < n && scalar; ++k)
        if (w[k] != f.mul(cand, a[k])) scalar = false;
      if (!scalar) break;
    }
    if (scalar && c && !f.is_zero(*c)) {
      auto cinv = f.inv(*c);
      Vec<K> y(n);
      for (std::size_t k = 0; k < n; ++k) y[k] = f.mul(cinv, v[k]);
      bool lie = true, nonlie = true;
      for (const auto& a : as) {
        auto w = bracket_unchecked(L, y, a);
        for (std::size_t k = 0; k < n; ++k) {
          if (w[k] != f.neg(a[k])) lie = false;
          if (!f.is_zero(w[k])) nonlie = false;
        }
      }
      if (lie || nonlie) {
        // y^2 lies in A; y - y^2 squares to zero in the non-Lie case, and the
        // Lie case already forces y^2 = 0.
        auto y2 = bracket_unchecked(L, y, y);
        if (nonlie)
          for (std::size_t k = 0; k < n; ++k) y[k] = f.sub(y[k], y2[k]);
        out.tag = lie ? ShapeTag::almost_abelian_lie : ShapeTag::almost_abelian_nonlie;
        out.A = A;
        out.y = std::move(y);
        return out;
      }
    }
  }
  if (A.dim() == 1) {
    auto nil = nilpotency(L);
    if (nil.holds && nil.index <= 2 && center(L) == A) {
      out.tag = ShapeTag::extraspecial;
      out.extraspecial_by_assumption = true;
      return out;
    }
  }
  return out;
}

enum class CyclicForm { nilpotent, solvable, neither };

inline std::string_view to_string(CyclicForm c) {
  switch (c) {
    case CyclicForm::nilpotent: return "nilpotent";
    case CyclicForm::solvable: return "solvable";
    case CyclicForm::neither: return "neither";
  }
  return "neither";
}

/// Right powers x, x^2 = [x, x], x^{r+1} = [x^r, x] until they become dependent.
template <ExactField K>
std::vector<Vec<K>> right_powers(const LeibnizAlgebra<K>& L, const Vec<K>& x) {
  std::vector<Vec<K>> powers;
  auto span = L.none();
  Vec<K> cur = x;
  while (!span.contains(cur)) {
    span = subspace_extend(span, {cur});
    powers.push_back(cur);
    cur = bracket_unchecked(L, cur, x);
  }
  return powers;
}

/// Reads the multiplication table of L in the power basis of a generator x and
/// compares it with the two cyclic normal forms: [x^i, x] = x^{i+1} for i < n,
/// [x^n, x] = 0 (nilpotent) or c x^n with c != 0 (solvable, c = 1 after
/// rescaling x), and every other product zero.
template <ExactField K>
CyclicForm cyclic_form(const LeibnizAlgebra<K>& L, const Vec<K>& generator) {
  const K& f = L.field();
  auto powers = right_powers(L, generator);
  if (powers.size() != L.dim()) throw InputError("element does not generate the algebra");
  const std::size_t n = L.dim();
  Matrix<K> P(f, 0, n);
  for (const auto& b : powers) P.append_row(b);
  auto T = change_of_basis(L, P, L.name());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (!is_zero_vector(f, T.tensor().product(i, j))) return CyclicForm::neither;
  auto last = T.tensor().product(n - 1, 0);
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (!f.is_zero(last[k])) return CyclicForm::neither;
  return f.is_zero(last[n - 1]) ? CyclicForm::nilpotent : CyclicForm::solvable;
}

/// Witness for L = B + Fy + Fy^2 with B abelian ideal, [b,y] = b = -[y,b], Z(L) = Fy^2.
template <ExactField K>
struct SymmetricIvWitness {
  Subspace<K> B;
  Vec<K> y;
};

template <ExactField K>
std::optional<SymmetricIvWitness<K>> detect_symmetric_iv(const LeibnizAlgebra<K>& L) {
  const K& f = L.field();
  const std::size_t n = L.dim();
  if (n < 3) return std::nullopt;
  auto Z = center(L);
  if (Z.dim() != 1 || !(leibniz_kernel(L) == Z)) return std::nullopt;
  auto Q = quotient(L, Z);
  auto shape = classify_shape(Q.algebra);
  if (shape.tag != ShapeTag::almost_abelian_lie) return std::nullopt;
  auto y = Q.lift(*shape.y);
  auto y2 = bracket_unchecked(L, y, y);
  if (is_zero_vector(f, y2)) return std::nullopt;
  std::vector<Vec<K>> pre;
  for (const auto& a : shape.A->basis_vectors()) pre.push_back(Q.lift(a));
  auto preimage = subspace_extend(Z, pre);
  auto Fy = Subspace<K>::from_vectors(f, n, {y});
  auto B = product_space(L, preimage, Fy);
  if (B.dim() + 2 != n || !product_space(L, B, B).is_zero()) return std::nullopt;
  for (const auto& b : B.basis_vectors()) {
    auto r = bracket_unchecked(L, b, y);
    auto l = bracket_unchecked(L, y, b);
    for (std::size_t k = 0; k < n; ++k)
      if (r[k] != b[k] || l[k] != f.neg(b[k])) return std::nullopt;
  }
  if (!subspace_extend(B, {y, y2}).is_full()) return std::nullopt;
  return SymmetricIvWitness<K>{std::move(B), std::move(y)};
}

/// Witness for L = C + A with C = <x> cyclic and A an abelian complement acting as
/// described by the generator's right and left multiplications.
struct CyclicExtensionWitness {
  FpVec x;
  FpSubspace C;
  FpSubspace A;
};

/// L = C + A, C cyclic with basis x..x^k, x^{k+1} = x^k, k >= 2, A abelian,
/// [a, x] = a, all other products zero.
std::optional<CyclicExtensionWitness> detect_nonlie_ii(const FpAlgebra& L, const Budget& budget = {});

/// L = A + <x>, A != 0 abelian ideal, <x> nilpotent cyclic, [a,x] = a, [x,a] = -a,
/// [x^k, a] = [a, x^k] = 0 for k > 1.
std::optional<CyclicExtensionWitness> detect_sqrt_family(const FpAlgebra& L, const Budget& budget = {});

}  // namespace leibniz
