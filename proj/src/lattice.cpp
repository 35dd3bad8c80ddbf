#include "leibniz/lattice.hpp"

#include <bit>
#include <map>
#include <set>

namespace leibniz {

namespace {

// Projective representatives of F_p^n / S: zero on S's pivot columns, first
// nonzero coordinate equal to 1.
std::vector<FpVec> coset_directions(const FpSubspace& S) {
  const auto& f = S.field();
  const std::size_t n = S.ambient_dim();
  std::vector<bool> pivot(n, false);
  for (auto c : S.pivots()) pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) free_cols.push_back(c);
  std::vector<FpVec> out;
  for_each_vector(f, free_cols.size(), [&](const FpVec& v) {
    auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (lead == v.end() || *lead != 1) return;
    FpVec x(n, 0);
    for (std::size_t i = 0; i < free_cols.size(); ++i) x[free_cols[i]] = v[i];
    out.push_back(std::move(x));
  });
  return out;
}

}  // namespace

SubalgebraLattice SubalgebraLattice::build(const FpAlgebra& L, const Budget& budget) {
  if (power_saturating(L.field().modulus(), L.dim()) > budget.max_vectors)
    throw BudgetError("subalgebra enumeration of " + L.field().name() + "^" + std::to_string(L.dim()) +
                      " exceeds the vector budget");
  SubalgebraLattice lat(L);
  std::set<FpSubspace, SubspaceKeyLess<PrimeField>> seen;
  std::vector<FpSubspace> frontier{L.none()};
  seen.insert(L.none());
  while (!frontier.empty()) {
    FpSubspace S = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& x : coset_directions(S)) {
      auto T = subalgebra_closure(L, S, {x});
      if (seen.insert(T).second) {
        if (seen.size() > budget.max_nodes)
          throw BudgetError("subalgebra lattice of " + L.name() + " exceeds the node budget of " +
                            std::to_string(budget.max_nodes));
        frontier.push_back(std::move(T));
      }
    }
  }
  lat.nodes_.assign(seen.begin(), seen.end());
  lat.index(budget);
  return lat;
}

void SubalgebraLattice::index(const Budget&) {
  const std::size_t N = nodes_.size();
  const std::size_t words = (N + 63) / 64;
  up_.assign(N, Bits(words, 0));
  down_.assign(N, Bits(words, 0));
  cover_up_.assign(N, Bits(words, 0));
  auto set = [](Bits& b, std::size_t j) { b[j >> 6] |= std::uint64_t{1} << (j & 63); };

  for (std::size_t i = 0; i < N; ++i) {
    set(up_[i], i);
    set(down_[i], i);
    for (std::size_t j = i + 1; j < N; ++j) {
      if (nodes_[j].dim() <= nodes_[i].dim()) continue;
      if (subspace_leq(nodes_[i], nodes_[j])) {
        set(up_[i], j);
        set(down_[j], i);
      }
    }
  }

  join_.assign(N * N, 0);
  meet_.assign(N * N, 0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      std::size_t jn = N, mt = 0;
      for (std::size_t w = 0; w < words; ++w) {
        auto common = up_[i][w] & up_[j][w];
        if (common) {
          jn = w * 64 + static_cast<std::size_t>(std::countr_zero(common));
          break;
        }
      }
      for (std::size_t w = words; w-- > 0;) {
        auto common = down_[i][w] & down_[j][w];
        if (common) {
          mt = w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(common));
          break;
        }
      }
      join_[i * N + j] = join_[j * N + i] = static_cast<std::uint16_t>(jn);
      meet_[i * N + j] = meet_[j * N + i] = static_cast<std::uint16_t>(mt);
    }

  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      if (!test(up_[i], j)) continue;
      std::size_t between = 0;
      for (std::size_t w = 0; w < words; ++w) between += static_cast<std::size_t>(std::popcount(up_[i][w] & down_[j][w]));
      if (between == 2) set(cover_up_[i], j);
    }
}

std::optional<std::size_t> SubalgebraLattice::index_of(const FpSubspace& s) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), s, SubspaceKeyLess<PrimeField>{});
  if (it == nodes_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t SubalgebraLattice::require_node(const FpSubspace& s) const {
  if (s.ambient_dim() != algebra_.dim() || !(s.field() == algebra_.field()))
    throw InputError("subspace does not live in the lattice's algebra");
  auto i = index_of(s);
  if (!i) throw InputError("subspace is not a subalgebra (not a lattice node)");
  return *i;
}

std::vector<std::size_t> SubalgebraLattice::upper_covers(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = i + 1; j < size(); ++j)
    if (covers(i, j)) out.push_back(j);
  return out;
}

std::vector<std::size_t> SubalgebraLattice::lower_covers(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < i; ++j)
    if (covers(j, i)) out.push_back(j);
  return out;
}

std::size_t SubalgebraLattice::covering_edge_count() const {
  std::size_t total = 0;
  for (const auto& b : cover_up_)
    for (auto w : b) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<FpSubspace> maximal_subalgebras(const SubalgebraLattice& lat) {
  std::vector<FpSubspace> out;
  if (lat.size() < 2) return out;
  for (auto i : lat.lower_covers(lat.top())) out.push_back(lat.node(i));
  return out;
}

FpSubspace frattini_ideal(const SubalgebraLattice& lat) {
  const auto& L = lat.algebra();
  if (L.dim() == 0) return L.none();
  FpSubspace meet_all = L.whole();
  for (const auto& m : maximal_subalgebras(lat)) meet_all = subspace_intersection(meet_all, m);
  return largest_ideal_in(L, meet_all);
}

FpSubspace frattini_ideal(const FpAlgebra& L, const Budget& budget) {
  return frattini_ideal(SubalgebraLattice::build(L, budget));
}

ModularVerdict is_modular(const SubalgebraLattice& lat) {
  const std::size_t N = lat.size();
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t v = 0; v < N; ++v) {
      const std::size_t uv = lat.join(u, v);
      for (std::size_t w = u; w < N; ++w) {
        if (!lat.leq(u, w)) continue;
        if (lat.meet(uv, w) != lat.join(u, lat.meet(v, w))) return {false, std::array{u, v, w}};
      }
    }
  return {};
}

PairVerdict is_upper_semimodular(const SubalgebraLattice& lat) {
  const std::size_t N = lat.size();
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t b = 0; b < N; ++b)
      if (lat.covers(lat.meet(u, b), b) && !lat.covers(u, lat.join(u, b))) return {false, std::pair{u, b}};
  return {};
}

PairVerdict is_upper_semimodular_covering(const SubalgebraLattice& lat) {
  const std::size_t N = lat.size();
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t c = 0; c < N; ++c)
      for (auto b : lat.upper_covers(a)) {
        auto x = lat.join(a, c), y = lat.join(b, c);
        if (x != y && !lat.covers(x, y)) return {false, std::pair{a, c}};
      }
  return {};
}

PairVerdict is_lower_semimodular(const SubalgebraLattice& lat) {
  const std::size_t N = lat.size();
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t b = 0; b < N; ++b)
      if (lat.covers(b, lat.join(u, b)) && !lat.covers(lat.meet(u, b), u)) return {false, std::pair{u, b}};
  return {};
}

namespace {

bool wqi_pair(const SubalgebraLattice& lat, std::size_t u, std::size_t v) {
  if (lat.leq(u, v) || lat.leq(v, u)) return true;
  const auto& L = lat.algebra();
  const auto& U = lat.node(u);
  const auto& V = lat.node(v);
  const auto sum = subspace_sum(U, V);
  const auto us = U.basis_vectors();
  const auto vs = V.basis_vectors();
  for (const auto& a : us)
    for (const auto& b : vs)
      if (!sum.contains(bracket_unchecked(L, a, b)) || !sum.contains(bracket_unchecked(L, b, a))) return false;
  return true;
}

}  // namespace

bool is_weak_quasi_ideal(const SubalgebraLattice& lat, std::size_t u) {
  for (std::size_t v = 0; v < lat.size(); ++v)
    if (!wqi_pair(lat, u, v)) return false;
  return true;
}

bool is_weak_quasi_ideal(const SubalgebraLattice& lat, const FpSubspace& u) {
  return is_weak_quasi_ideal(lat, lat.require_node(u));
}

PairVerdict all_subalgebras_wqi(const SubalgebraLattice& lat) {
  // the pair condition is symmetric, so the first failing ordered pair has u < v
  for (std::size_t u = 0; u < lat.size(); ++u)
    for (std::size_t v = u + 1; v < lat.size(); ++v)
      if (!wqi_pair(lat, u, v)) return {false, std::pair{u, v}};
  return {};
}

ElementPairVerdict wqi_elementwise(const FpAlgebra& L, const Budget& budget) {
  const auto& f = L.field();
  const std::uint64_t count = power_saturating(f.modulus(), L.dim());
  if (count > budget.max_vectors || power_saturating(f.modulus(), 2 * L.dim()) > budget.max_pairs)
    throw BudgetError("pairwise element scan of " + L.name() + " exceeds the pair budget of " +
                      std::to_string(budget.max_pairs));
  std::vector<FpVec> elems;
  elems.reserve(count);
  for_each_vector(f, L.dim(), [&](const FpVec& x) { elems.push_back(x); });

  // <x> for every element, deduplicated
  std::map<FpSubspace, std::size_t, SubspaceKeyLess<PrimeField>> ids;
  std::vector<FpSubspace> generated;
  std::vector<std::size_t> gen_of(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto g = subalgebra_closure(L, std::vector<FpVec>{elems[i]});
    auto [it, fresh] = ids.emplace(g, generated.size());
    if (fresh) generated.push_back(std::move(g));
    gen_of[i] = it->second;
  }
  std::map<std::pair<std::size_t, std::size_t>, FpSubspace> sums;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      auto w = bracket_unchecked(L, elems[i], elems[j]);
      if (is_zero_vector(f, w)) continue;
      auto key = std::minmax(gen_of[i], gen_of[j]);
      auto it = sums.find(key);
      if (it == sums.end())
        it = sums.emplace(key, subspace_sum(generated[key.first], generated[key.second])).first;
      if (!it->second.contains(w)) return {false, std::pair{elems[i], elems[j]}};
    }
  return {};
}

LatticeStats lattice_stats(const SubalgebraLattice& lat) {
  LatticeStats s;
  s.nodes = lat.size();
  s.covering_edges = lat.covering_edge_count();
  if (lat.size() == 1) return s;
  s.atoms = lat.upper_covers(lat.bottom()).size();
  s.coatoms = lat.lower_covers(lat.top()).size();
  std::vector<std::size_t> depth(lat.size(), 0);
  for (std::size_t j = 0; j < lat.size(); ++j)
    for (auto i : lat.lower_covers(j)) depth[j] = std::max(depth[j], depth[i] + 1);
  s.height = depth[lat.top()];
  return s;
}

}  // namespace leibniz
