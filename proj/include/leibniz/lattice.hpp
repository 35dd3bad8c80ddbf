#pragma once

// The lattice of subalgebras of an algebra over F_p, with joins (generated
// subalgebra), meets (intersection), the covering relation and the lattice
// conditions: modularity, upper and lower semi-modularity, weak quasi-ideals.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "leibniz/scan.hpp"

namespace leibniz {

class SubalgebraLattice {
 public:
  /// Enumerates every subalgebra by closing (S + x) over coset representatives,
  /// starting from 0. Nodes are sorted by the subspace ordering key.
  static SubalgebraLattice build(const FpAlgebra& L, const Budget& budget = {});

  const FpAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<FpSubspace>& nodes() const noexcept { return nodes_; }
  const FpSubspace& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return nodes_.size() - 1; }

  std::optional<std::size_t> index_of(const FpSubspace& s) const;
  /// Like index_of, but throws InputError for a subspace that is not a node.
  std::size_t require_node(const FpSubspace& s) const;

  bool leq(std::size_t i, std::size_t j) const { return test(up_[i], j); }
  /// i is covered by j: i < j with nothing strictly between.
  bool covers(std::size_t i, std::size_t j) const { return test(cover_up_[i], j); }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }

  FpSubspace join(const FpSubspace& u, const FpSubspace& v) const {
    return nodes_[join(require_node(u), require_node(v))];
  }
  FpSubspace meet(const FpSubspace& u, const FpSubspace& v) const {
    return nodes_[meet(require_node(u), require_node(v))];
  }

  std::vector<std::size_t> upper_covers(std::size_t i) const;
  std::vector<std::size_t> lower_covers(std::size_t i) const;
  std::size_t covering_edge_count() const;

 private:
  using Bits = std::vector<std::uint64_t>;
  static bool test(const Bits& b, std::size_t j) { return (b[j >> 6] >> (j & 63)) & 1U; }

  explicit SubalgebraLattice(FpAlgebra algebra) : algebra_(std::move(algebra)) {}
  void index(const Budget& budget);

  FpAlgebra algebra_;
  std::vector<FpSubspace> nodes_;
  std::vector<Bits> up_, down_, cover_up_;
  std::vector<std::uint16_t> join_, meet_;
};

inline SubalgebraLattice enumerate_subalgebras(const FpAlgebra& L, const Budget& budget = {}) {
  return SubalgebraLattice::build(L, budget);
}

/// Co-atoms: subalgebras covered by L.
std::vector<FpSubspace> maximal_subalgebras(const SubalgebraLattice& lat);
/// Largest ideal inside the intersection of all maximal subalgebras; 0 for dim 0.
FpSubspace frattini_ideal(const SubalgebraLattice& lat);
FpSubspace frattini_ideal(const FpAlgebra& L, const Budget& budget = {});

/// Node indices (U, V, W) with U <= W and <U,V> ∩ W != <U, V ∩ W>.
struct ModularVerdict {
  bool holds = true;
  std::optional<std::array<std::size_t, 3>> witness;
};

/// Node index pair witnessing a failed pairwise condition.
struct PairVerdict {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

ModularVerdict is_modular(const SubalgebraLattice& lat);
/// For every pair (U, B): if U ∩ B is maximal in B then U is maximal in <U, B>.
/// Witness is (U, B).
PairVerdict is_upper_semimodular(const SubalgebraLattice& lat);
/// Covering form: a ⋖ b implies a ∨ c = b ∨ c or a ∨ c ⋖ b ∨ c. Witness is (a, c)
/// where b is the first upper cover of a that breaks the condition.
PairVerdict is_upper_semimodular_covering(const SubalgebraLattice& lat);
/// Dual covering condition: if B ⋖ <U, B> then U ∩ B ⋖ U. Witness is (U, B).
PairVerdict is_lower_semimodular(const SubalgebraLattice& lat);

/// [U, V] + [V, U] <= U + V for every node V.
bool is_weak_quasi_ideal(const SubalgebraLattice& lat, std::size_t u);
bool is_weak_quasi_ideal(const SubalgebraLattice& lat, const FpSubspace& u);
/// Every subalgebra is a weak quasi-ideal; witness (U, V) is the first failing pair.
PairVerdict all_subalgebras_wqi(const SubalgebraLattice& lat);

struct ElementPairVerdict {
  bool holds = true;
  std::optional<std::pair<FpVec, FpVec>> witness;
};

/// [x, y] ∈ <x> + <y> for every pair of elements, scanned exhaustively.
/// Computed from single-element closures only, independently of the lattice.
ElementPairVerdict wqi_elementwise(const FpAlgebra& L, const Budget& budget = {});

struct LatticeStats {
  std::size_t nodes = 0;
  std::size_t height = 0;
  std::size_t atoms = 0;
  std::size_t coatoms = 0;
  std::size_t covering_edges = 0;
};

LatticeStats lattice_stats(const SubalgebraLattice& lat);

}  // namespace leibniz
