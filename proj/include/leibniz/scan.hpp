#pragma once

// Invariants that need exhaustive element or line scans, hence a finite field.

#include "leibniz/algebra.hpp"

namespace leibniz {

using FpAlgebra = LeibnizAlgebra<PrimeField>;
using FpSubspace = Subspace<PrimeField>;
using FpVec = Vec<PrimeField>;
using QAlgebra = LeibnizAlgebra<RationalField>;
using QSubspace = Subspace<RationalField>;

template <ExactField K>
struct SquareZeroResult {
  Subspace<K> J;
  /// True when the set {x : x^2 = 0} is itself a subspace (then it equals J).
  std::optional<bool> set_is_subspace;
  std::uint64_t square_zero_count = 0;
  /// Set when J was closed from caller-supplied witnesses only.
  bool lower_bound = false;
};

/// J = <x : x^2 = 0>, by scanning all p^n elements.
SquareZeroResult<PrimeField> square_zero_subalgebra(const FpAlgebra& L, const Budget& budget = {});

/// Over the rationals the square-zero set is a quadric, so J is not computed.
SquareZeroResult<RationalField> square_zero_subalgebra(const QAlgebra& L, const Budget& budget = {});

/// Closure of explicitly given square-zero witnesses; a lower bound for J.
template <ExactField K>
SquareZeroResult<K> square_zero_closure_of(const LeibnizAlgebra<K>& L, const std::vector<Vec<K>>& witnesses) {
  for (const auto& w : witnesses)
    if (!is_zero_vector(L.field(), bracket(L, w, w))) throw InputError("witness does not square to zero");
  return {subalgebra_closure(L, witnesses), std::nullopt, 0, true};
}

/// Every x with x^2 = 0, in lexicographic coordinate order.
std::vector<FpVec> square_zero_elements(const FpAlgebra& L, const Budget& budget = {});

/// Representatives of all one-dimensional subspaces of F_p^n (first nonzero coordinate 1).
std::vector<FpVec> projective_points(const PrimeField& f, std::size_t n, const Budget& budget = {});

/// A complete flag of ideals exists; decided greedily through one-dimensional ideals.
bool is_supersolvable(const FpAlgebra& L, const Budget& budget = {});
bool is_supersolvable(const QAlgebra& L, const Budget& budget = {});

/// Some element generates L.
std::optional<FpVec> find_generator(const FpAlgebra& L, const Budget& budget = {});

/// Random invertible matrix over F_p from a caller-owned generator.
template <class Rng>
Matrix<PrimeField> random_invertible(const PrimeField& f, std::size_t n, Rng& rng) {
  while (true) {
    Matrix<PrimeField> m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<std::uint32_t>(rng() % f.modulus());
    if (inverse(m)) return m;
  }
}

}  // namespace leibniz
