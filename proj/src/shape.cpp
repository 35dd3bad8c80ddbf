#include "leibniz/shape.hpp"

namespace leibniz {

namespace {

// Subspace of a with [a, x] = right_eig * a, [x, a] = left_eig * a and
// [a, p] = [p, a] = 0 for every listed higher power p.
FpSubspace eigen_complement(const FpAlgebra& L, const FpVec& x, std::uint32_t right_eig,
                            std::uint32_t left_eig, const std::vector<FpVec>& higher) {
  const auto& f = L.field();
  const std::size_t n = L.dim();
  const std::size_t blocks = 2 + 2 * higher.size();
  Matrix<PrimeField> m(f, n, blocks * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto e = L.basis_vector(i);
    auto r = bracket_unchecked(L, e, x);
    auto l = bracket_unchecked(L, x, e);
    r[i] = f.sub(r[i], right_eig);
    l[i] = f.sub(l[i], left_eig);
    std::size_t col = 0;
    auto put = [&](const FpVec& v) {
      for (std::size_t k = 0; k < n; ++k) m(i, col + k) = v[k];
      col += n;
    };
    put(r);
    put(l);
    for (const auto& p : higher) {
      put(bracket_unchecked(L, e, p));
      put(bracket_unchecked(L, p, e));
    }
  }
  return FpSubspace::span(left_kernel(m));
}

template <class Accept>
std::optional<CyclicExtensionWitness> scan_generators(const FpAlgebra& L, const Budget& budget, Accept accept) {
  if (power_saturating(L.field().modulus(), L.dim()) > budget.max_vectors)
    throw BudgetError("family detection scan exceeds the vector budget");
  std::optional<CyclicExtensionWitness> found;
  for_each_vector(L.field(), L.dim(), [&](const FpVec& x) {
    if (found || is_zero_vector(L.field(), x)) return;
    found = accept(x);
  });
  return found;
}

}  // namespace

std::optional<CyclicExtensionWitness> detect_nonlie_ii(const FpAlgebra& L, const Budget& budget) {
  const auto& f = L.field();
  const std::size_t n = L.dim();
  return scan_generators(L, budget, [&](const FpVec& x) -> std::optional<CyclicExtensionWitness> {
    auto powers = right_powers(L, x);
    const std::size_t k = powers.size();
    if (k < 2) return std::nullopt;
    if (bracket_unchecked(L, powers.back(), x) != powers.back()) return std::nullopt;
    std::vector<FpVec> higher(powers.begin() + 1, powers.end());
    auto A0 = eigen_complement(L, x, f.one(), f.zero(), higher);
    if (A0.dim() + k != n + 1 || !A0.contains(powers.back())) return std::nullopt;
    if (!product_space(L, A0, A0).is_zero()) return std::nullopt;
    auto C = FpSubspace::from_vectors(f, n, powers);
    if (!subspace_sum(C, A0).is_full()) return std::nullopt;
    return CyclicExtensionWitness{x, std::move(C), std::move(A0)};
  });
}

std::optional<CyclicExtensionWitness> detect_sqrt_family(const FpAlgebra& L, const Budget& budget) {
  const auto& f = L.field();
  const std::size_t n = L.dim();
  if (f.characteristic() == 2) return std::nullopt;
  return scan_generators(L, budget, [&](const FpVec& x) -> std::optional<CyclicExtensionWitness> {
    auto powers = right_powers(L, x);
    const std::size_t k = powers.size();
    if (!is_zero_vector(f, bracket_unchecked(L, powers.back(), x))) return std::nullopt;
    std::vector<FpVec> higher(powers.begin() + 1, powers.end());
    auto A0 = eigen_complement(L, x, f.one(), f.neg(f.one()), higher);
    if (A0.is_zero() || A0.dim() + k != n) return std::nullopt;
    if (!product_space(L, A0, A0).is_zero()) return std::nullopt;
    auto C = FpSubspace::from_vectors(f, n, powers);
    if (!subspace_sum(C, A0).is_full()) return std::nullopt;
    return CyclicExtensionWitness{x, std::move(C), std::move(A0)};
  });
}

}  // namespace leibniz
