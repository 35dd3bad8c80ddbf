#pragma once

// Algebra spec files, JSON reports and DOT export of Hasse diagrams.
//
// Spec file:
//   {"name": "...", "field": {"type": "prime", "p": 3} | {"type": "rational"},
//    "dim": n, "brackets": [[i, j, k, "value"], ...]}
// with 0-based indices and c[i][j][k] = value; omitted entries are zero.
// Values are decimal integers over F_p (reduced mod p) and "num/den" over Q.

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "leibniz/report.hpp"
#include "leibniz/verify.hpp"

namespace leibniz {

using AnyAlgebra = std::variant<FpAlgebra, QAlgebra>;

/// Largest dimension accepted from a spec file.
inline constexpr std::size_t kMaxSpecDim = 64;

/// Throws InputError naming the offending JSON pointer, or NotLeibnizError
/// naming the first basis triple that violates the right identity.
AnyAlgebra parse_spec(std::string_view text);
AnyAlgebra load_spec(const std::string& path);

/// Deterministic: keys in fixed order, bracket entries sorted by (i, j, k).
std::string emit_spec(const FpAlgebra& L);
std::string emit_spec(const QAlgebra& L);
std::string emit_spec(const AnyAlgebra& L);

nlohmann::json field_json(const PrimeField& f);
nlohmann::json field_json(const RationalField& f);

nlohmann::json to_json(const StructureReport<PrimeField>& r);
nlohmann::json to_json(const StructureReport<RationalField>& r);
std::string to_text(const StructureReport<PrimeField>& r);
std::string to_text(const StructureReport<RationalField>& r);

/// "dim:[(row),(row)]" as used for DOT node labels.
std::string node_label(const FpSubspace& s);

/// Lattice properties, computed once for export and printing.
struct LatticeSummary {
  LatticeStats stats;
  ModularVerdict modular;
  PairVerdict upper_semimodular;
  PairVerdict lower_semimodular;
  PairVerdict all_wqi;
  FpSubspace frattini;
};

LatticeSummary summarize(const SubalgebraLattice& lat);
nlohmann::json lattice_json(const SubalgebraLattice& lat, const LatticeSummary& summary);
std::string lattice_text(const SubalgebraLattice& lat, const LatticeSummary& summary);
/// Covering relation as a digraph, edges from lower to upper node.
std::string export_dot(const SubalgebraLattice& lat);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace leibniz
