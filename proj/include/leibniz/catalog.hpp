#pragma once

// Constructors for the named algebra families, the exhaustive sweep of
// two-dimensional algebras over F_2, and the seeded verification corpus.
//
// Basis conventions (0-based, as in the file format):
//   cyclic_nilpotent(n), cyclic_solvable(n): e_{i-1} = a^i, i = 1..n
//   almost_abelian_*(n):   e_0..e_{n-2} span A, e_{n-1} = y
//   family_nonlie_ii(k,m): e_0..e_{k-1} = x..x^k, then e_k..e_{k+m-1} span A
//   family_sqrt(k,m):      e_0..e_{m-1} span A, then e_m..e_{m+k-1} = x..x^k
//   symmetric_iv(m):       e_0..e_{m-1} span B, e_m = y, e_{m+1} = y^2
//   extraspecial_plus_center(z): e_0 = e, e_1 = e^2, e_2.. span the central summand
//   heisenberg_lie:        e_0 = x, e_1 = y, e_2 = z

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "leibniz/algebra.hpp"
#include "leibniz/scan.hpp"

namespace leibniz {

namespace detail {

template <ExactField K>
std::string family_name(std::string_view family, std::initializer_list<long long> params, const K& f) {
  std::string s(family);
  s += "(";
  bool first = true;
  for (auto p : params) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  s += ")/" + f.name();
  return s;
}

inline void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

}  // namespace detail

template <ExactField K>
LeibnizAlgebra<K> abelian(std::size_t n, const K& f) {
  return LeibnizAlgebra<K>(detail::family_name("abelian", {static_cast<long long>(n)}, f), StructureTensor<K>(f, n));
}

/// [a^i, a] = a^{i+1} for i < n, all other products zero.
template <ExactField K>
LeibnizAlgebra<K> cyclic_nilpotent(std::size_t n, const K& f) {
  detail::require(n >= 1, "cyclic_nilpotent needs n >= 1");
  StructureTensor<K> t(f, n);
  for (std::size_t i = 0; i + 1 < n; ++i) t.set(i, 0, i + 1, f.one());
  return LeibnizAlgebra<K>(detail::family_name("cyclic_nilpotent", {static_cast<long long>(n)}, f), std::move(t));
}

/// [a^i, a] = a^{i+1} for i < n, [a^n, a] = a^n, all other products zero.
/// For n = 1 this table is [a, a] = a, which is not Leibniz and is rejected.
template <ExactField K>
LeibnizAlgebra<K> cyclic_solvable(std::size_t n, const K& f) {
  detail::require(n >= 1, "cyclic_solvable needs n >= 1");
  StructureTensor<K> t(f, n);
  for (std::size_t i = 0; i + 1 < n; ++i) t.set(i, 0, i + 1, f.one());
  t.set(n - 1, 0, n - 1, f.one());
  return LeibnizAlgebra<K>(detail::family_name("cyclic_solvable", {static_cast<long long>(n)}, f), std::move(t));
}

/// L = A + Fy, [a, y] = a and [y, a] = -a.
template <ExactField K>
LeibnizAlgebra<K> almost_abelian_lie(std::size_t n, const K& f) {
  detail::require(n >= 2, "almost_abelian_lie needs n >= 2");
  StructureTensor<K> t(f, n);
  const std::size_t y = n - 1;
  for (std::size_t a = 0; a < y; ++a) {
    t.set(a, y, a, f.one());
    t.set(y, a, a, f.neg(f.one()));
  }
  return LeibnizAlgebra<K>(detail::family_name("almost_abelian_lie", {static_cast<long long>(n)}, f), std::move(t));
}

/// L = A + Fy, [a, y] = a and [y, a] = 0.
template <ExactField K>
LeibnizAlgebra<K> almost_abelian_nonlie(std::size_t n, const K& f) {
  detail::require(n >= 2, "almost_abelian_nonlie needs n >= 2");
  StructureTensor<K> t(f, n);
  const std::size_t y = n - 1;
  for (std::size_t a = 0; a < y; ++a) t.set(a, y, a, f.one());
  return LeibnizAlgebra<K>(detail::family_name("almost_abelian_nonlie", {static_cast<long long>(n)}, f),
                           std::move(t));
}

/// L = C + A: C cyclic with basis x..x^k and x^{k+1} = x^k (k >= 2), A abelian of
/// dimension m with [a, x] = a, all other products zero.
template <ExactField K>
LeibnizAlgebra<K> family_nonlie_ii(std::size_t k, std::size_t m, const K& f) {
  detail::require(k >= 2, "family_nonlie_ii needs k >= 2");
  StructureTensor<K> t(f, k + m);
  for (std::size_t i = 0; i + 1 < k; ++i) t.set(i, 0, i + 1, f.one());
  t.set(k - 1, 0, k - 1, f.one());
  for (std::size_t a = k; a < k + m; ++a) t.set(a, 0, a, f.one());
  return LeibnizAlgebra<K>(
      detail::family_name("family_nonlie_ii", {static_cast<long long>(k), static_cast<long long>(m)}, f), std::move(t));
}

/// L = A + <x>: A abelian ideal of dimension m >= 1, <x> nilpotent cyclic of
/// dimension k, [a, x] = a, [x, a] = -a, [x^j, a] = [a, x^j] = 0 for j > 1.
template <ExactField K>
LeibnizAlgebra<K> family_sqrt(std::size_t k, std::size_t m, const K& f) {
  detail::require(k >= 1 && m >= 1, "family_sqrt needs k >= 1 and m >= 1");
  detail::require(f.characteristic() != 2, "family_sqrt needs characteristic different from 2");
  StructureTensor<K> t(f, k + m);
  const std::size_t x = m;
  for (std::size_t i = 0; i + 1 < k; ++i) t.set(x + i, x, x + i + 1, f.one());
  for (std::size_t a = 0; a < m; ++a) {
    t.set(a, x, a, f.one());
    t.set(x, a, a, f.neg(f.one()));
  }
  return LeibnizAlgebra<K>(
      detail::family_name("family_sqrt", {static_cast<long long>(k), static_cast<long long>(m)}, f), std::move(t));
}

/// L = B + Fy + Fy^2: [b, y] = b, [y, b] = -b, [y, y] = y^2, y^2 central.
template <ExactField K>
LeibnizAlgebra<K> symmetric_iv(std::size_t m, const K& f) {
  detail::require(m >= 1, "symmetric_iv needs m >= 1");
  detail::require(f.characteristic() != 2, "symmetric_iv needs characteristic different from 2");
  StructureTensor<K> t(f, m + 2);
  const std::size_t y = m, y2 = m + 1;
  for (std::size_t b = 0; b < m; ++b) {
    t.set(b, y, b, f.one());
    t.set(y, b, b, f.neg(f.one()));
  }
  t.set(y, y, y2, f.one());
  return LeibnizAlgebra<K>(detail::family_name("symmetric_iv", {static_cast<long long>(m)}, f), std::move(t));
}

/// E + Z with E the two-dimensional algebra e^2 = z_E and Z central of dimension z_dim.
template <ExactField K>
LeibnizAlgebra<K> extraspecial_plus_center(std::size_t z_dim, const K& f) {
  StructureTensor<K> t(f, 2 + z_dim);
  t.set(0, 0, 1, f.one());
  return LeibnizAlgebra<K>(
      detail::family_name("extraspecial_plus_center", {static_cast<long long>(z_dim)}, f), std::move(t));
}

/// [x, y] = z = -[y, x].
template <ExactField K>
LeibnizAlgebra<K> heisenberg_lie(const K& f) {
  StructureTensor<K> t(f, 3);
  t.set(0, 1, 2, f.one());
  t.set(1, 0, 2, f.neg(f.one()));
  return LeibnizAlgebra<K>("heisenberg_lie/" + f.name(), std::move(t));
}

struct FamilyInfo {
  std::string id;
  std::vector<std::string> params;
  bool symmetric;  ///< every member satisfies the left identity as well
  std::string summary;
};

const std::vector<FamilyInfo>& families();

/// Builds a family member by id; parameter count and ranges are validated.
template <ExactField K>
LeibnizAlgebra<K> build_family(std::string_view id, std::span<const long long> params, const K& f) {
  const FamilyInfo* info = nullptr;
  for (const auto& fam : families())
    if (fam.id == id) info = &fam;
  if (!info) throw InputError("unknown family '" + std::string(id) + "'; try `catalog list`");
  if (params.size() != info->params.size())
    throw InputError("family '" + info->id + "' takes " + std::to_string(info->params.size()) + " parameter(s), got " +
                     std::to_string(params.size()));
  for (auto p : params)
    if (p < 0 || p > 64) throw InputError("family parameters must lie in 0..64");
  auto P = [&](std::size_t i) { return static_cast<std::size_t>(params[i]); };
  if (id == "abelian") return abelian(P(0), f);
  if (id == "cyclic_nilpotent") return cyclic_nilpotent(P(0), f);
  if (id == "cyclic_solvable") return cyclic_solvable(P(0), f);
  if (id == "almost_abelian_lie") return almost_abelian_lie(P(0), f);
  if (id == "almost_abelian_nonlie") return almost_abelian_nonlie(P(0), f);
  if (id == "family_nonlie_ii") return family_nonlie_ii(P(0), P(1), f);
  if (id == "family_sqrt") return family_sqrt(P(0), P(1), f);
  if (id == "symmetric_iv") return symmetric_iv(P(0), f);
  if (id == "extraspecial_plus_center") return extraspecial_plus_center(P(0), f);
  return heisenberg_lie(f);
}

/// Every right Leibniz algebra structure on F_2^2 (all 2^8 tensors, filtered).
std::vector<FpAlgebra> exhaustive_dim2();

struct CorpusEntry {
  FpAlgebra algebra;
  std::string family;             ///< family id, or "exhaustive_dim2"
  std::vector<long long> params;
  std::uint64_t seed = 0;
  int basis_change = 0;           ///< 0 for the constructor's own basis
};

/// Catalog families over F_2, F_3, F_5 at desk-scale parameters, each followed by
/// three random basis changes drawn from `seed`, then the exhaustive dim-2 sweep.
std::vector<CorpusEntry> corpus(std::uint64_t seed);

/// Parses "p=3", "3", "F_3", "rational" or "Q". Returns 0 for the rationals.
std::uint32_t parse_field_spec(std::string_view text);

}  // namespace leibniz
