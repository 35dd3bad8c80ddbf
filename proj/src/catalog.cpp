#include "leibniz/catalog.hpp"

#include <charconv>
#include <random>

namespace leibniz {

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> table{
      {"abelian", {"n"}, true, "all products zero"},
      {"cyclic_nilpotent", {"n"}, false, "[a^i,a] = a^{i+1} (i < n), rest zero"},
      {"cyclic_solvable", {"n"}, false, "[a^i,a] = a^{i+1} (i < n), [a^n,a] = a^n, rest zero; n >= 2"},
      {"almost_abelian_lie", {"n"}, true, "A + Fy, [a,y] = a = -[y,a]"},
      {"almost_abelian_nonlie", {"n"}, false, "A + Fy, [a,y] = a, [y,a] = 0"},
      {"family_nonlie_ii", {"k", "m"}, false, "C + A, C = <x> with x^{k+1} = x^k (k >= 2), [a,x] = a"},
      {"family_sqrt", {"k", "m"}, false, "A + <x>, <x> nilpotent cyclic of dim k, [a,x] = a = -[x,a]; char != 2"},
      {"symmetric_iv", {"m"}, true, "B + Fy + Fy^2, [b,y] = b = -[y,b], y^2 central; char != 2"},
      {"extraspecial_plus_center", {"z_dim"}, true, "e^2 = z_E plus a central abelian summand"},
      {"heisenberg_lie", {}, true, "[x,y] = z = -[y,x]"},
  };
  return table;
}

std::vector<FpAlgebra> exhaustive_dim2() {
  const PrimeField f(2);
  std::vector<FpAlgebra> out;
  for (unsigned mask = 0; mask < 256; ++mask) {
    StructureTensor<PrimeField> t(f, 2);
    for (unsigned bit = 0; bit < 8; ++bit)
      if (mask >> bit & 1U) t.set(bit >> 2, (bit >> 1) & 1U, bit & 1U, 1);
    if (!check_right_leibniz(t)) continue;
    out.emplace_back("dim2/F_2#" + std::to_string(mask), std::move(t));
  }
  return out;
}

namespace {

struct Member {
  std::string family;
  std::vector<long long> params;
};

// Desk-scale parameters: every member has at most 3^4 elements over F_3 and
// stays at dimension <= 3 over F_5 apart from a few families kept for coverage.
std::vector<Member> members_for(std::uint32_t p) {
  std::vector<Member> m;
  auto add = [&](std::string fam, std::vector<long long> params) { m.push_back({std::move(fam), std::move(params)}); };
  if (p == 2) {
    for (long long n : {1, 2, 3, 4}) add("abelian", {n});
    for (long long n : {1, 2, 3, 4}) add("cyclic_nilpotent", {n});
    for (long long n : {2, 3, 4}) add("cyclic_solvable", {n});
    for (long long n : {2, 3, 4}) add("almost_abelian_lie", {n});
    for (long long n : {2, 3, 4}) add("almost_abelian_nonlie", {n});
    add("family_nonlie_ii", {2, 0});
    add("family_nonlie_ii", {2, 1});
    add("family_nonlie_ii", {2, 2});
    add("family_nonlie_ii", {3, 0});
    add("family_nonlie_ii", {3, 1});
    for (long long z : {0, 1, 2}) add("extraspecial_plus_center", {z});
    add("heisenberg_lie", {});
  } else if (p == 3) {
    for (long long n : {1, 2, 3}) add("abelian", {n});
    for (long long n : {1, 2, 3, 4}) add("cyclic_nilpotent", {n});
    for (long long n : {2, 3, 4}) add("cyclic_solvable", {n});
    for (long long n : {2, 3, 4}) add("almost_abelian_lie", {n});
    for (long long n : {2, 3, 4}) add("almost_abelian_nonlie", {n});
    add("family_nonlie_ii", {2, 0});
    add("family_nonlie_ii", {2, 1});
    add("family_nonlie_ii", {2, 2});
    add("family_nonlie_ii", {3, 1});
    add("family_sqrt", {1, 1});
    add("family_sqrt", {1, 2});
    add("family_sqrt", {2, 1});
    add("family_sqrt", {2, 2});
    add("family_sqrt", {3, 1});
    add("symmetric_iv", {1});
    add("symmetric_iv", {2});
    for (long long z : {0, 1, 2}) add("extraspecial_plus_center", {z});
    add("heisenberg_lie", {});
  } else {
    for (long long n : {1, 2}) add("abelian", {n});
    for (long long n : {2, 3}) add("cyclic_nilpotent", {n});
    for (long long n : {2, 3}) add("cyclic_solvable", {n});
    for (long long n : {2, 3}) add("almost_abelian_lie", {n});
    for (long long n : {2, 3}) add("almost_abelian_nonlie", {n});
    add("family_nonlie_ii", {2, 1});
    add("family_sqrt", {1, 1});
    add("family_sqrt", {2, 1});
    add("family_sqrt", {2, 2});
    add("symmetric_iv", {1});
    add("symmetric_iv", {2});
    add("extraspecial_plus_center", {0});
    add("extraspecial_plus_center", {1});
    add("heisenberg_lie", {});
  }
  return m;
}

}  // namespace

std::vector<CorpusEntry> corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const PrimeField f(p);
    for (const auto& member : members_for(p)) {
      auto L = build_family(member.family, member.params, f);
      for (int change = 1; change <= 3; ++change) {
        auto P = random_invertible(f, L.dim(), rng);
        auto M = change_of_basis(L, P, L.name() + " basis#" + std::to_string(change));
        out.push_back({std::move(M), member.family, member.params, seed, change});
      }
      out.insert(out.end() - 3, CorpusEntry{std::move(L), member.family, member.params, seed, 0});
    }
  }
  for (auto& L : exhaustive_dim2()) out.push_back({std::move(L), "exhaustive_dim2", {}, seed, 0});
  return out;
}

std::uint32_t parse_field_spec(std::string_view text) {
  if (text == "rational" || text == "Q") return 0;
  std::string_view digits = text;
  if (digits.starts_with("p=")) digits.remove_prefix(2);
  else if (digits.starts_with("F_")) digits.remove_prefix(2);
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw InputError("bad field '" + std::string(text) + "'; expected p=<prime> or rational");
  if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  return p;
}

}  // namespace leibniz
