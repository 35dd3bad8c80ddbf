#pragma once

// One-stop summary of the invariants of an algebra.

#include <optional>

#include "leibniz/lattice.hpp"
#include "leibniz/shape.hpp"

namespace leibniz {

template <ExactField K>
struct StructureReport {
  std::string name;
  std::string field;
  std::size_t dim = 0;
  bool is_lie = false;
  bool is_symmetric = false;
  SeriesVerdict nilpotent;
  SeriesVerdict solvable;
  std::optional<bool> supersolvable;  ///< prime fields only
  Subspace<K> I, Z, L2;
  std::optional<Subspace<K>> J;       ///< prime fields only
  std::optional<bool> square_zero_set_is_subspace;
  std::optional<Subspace<K>> phi;     ///< prime fields only
  ShapeResult<K> shape;
};

inline StructureReport<PrimeField> analyze(const FpAlgebra& L, const Budget& budget = {}) {
  auto whole = L.whole();
  StructureReport<PrimeField> r{L.name(),
                                L.field().name(),
                                L.dim(),
                                is_lie(L),
                                is_symmetric(L),
                                nilpotency(L),
                                solvability(L),
                                is_supersolvable(L, budget),
                                leibniz_kernel(L),
                                center(L),
                                product_space(L, whole, whole),
                                std::nullopt,
                                std::nullopt,
                                frattini_ideal(L, budget),
                                classify_shape(L)};
  auto sz = square_zero_subalgebra(L, budget);
  r.J = sz.J;
  r.square_zero_set_is_subspace = sz.set_is_subspace;
  return r;
}

inline StructureReport<RationalField> analyze(const QAlgebra& L, const Budget& = {}) {
  auto whole = L.whole();
  return StructureReport<RationalField>{L.name(),
                                        "Q",
                                        L.dim(),
                                        is_lie(L),
                                        is_symmetric(L),
                                        nilpotency(L),
                                        solvability(L),
                                        std::nullopt,
                                        leibniz_kernel(L),
                                        center(L),
                                        product_space(L, whole, whole),
                                        std::nullopt,
                                        std::nullopt,
                                        std::nullopt,
                                        classify_shape(L)};
}

}  // namespace leibniz
