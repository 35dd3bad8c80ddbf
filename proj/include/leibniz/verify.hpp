#pragma once

// Machine-checkable renderings of the structural results on Leibniz algebras:
// each check evaluates its hypotheses, and only when all of them hold, its
// conclusion. A failed conclusion on a proved result points at a defect in
// this library, and the report carries a witness that reproduces it.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "leibniz/catalog.hpp"
#include "leibniz/lattice.hpp"
#include "leibniz/shape.hpp"

namespace leibniz {

enum class CheckStatus { pass, fail, not_applicable, info };

std::string_view to_string(CheckStatus s);

struct Hypothesis {
  std::string name;
  bool holds = false;
};

struct TheoremReport {
  std::string algebra;
  std::string family;              ///< empty for algebras loaded from files
  std::vector<long long> params;
  std::optional<std::uint64_t> seed;
  int basis_change = 0;
  std::string check;
  CheckStatus status = CheckStatus::not_applicable;
  std::vector<Hypothesis> hypotheses;
  std::string failed_hypothesis;   ///< first hypothesis that does not hold
  std::string detail;              ///< conclusion in words
  nlohmann::json witness;          ///< null unless the status is fail or info
};

struct CheckInfo {
  std::string id;
  std::string statement;
  bool report_only;  ///< necessity directions: status is info, never fail
};

/// All check ids in table order.
const std::vector<CheckInfo>& check_table();
/// Splits "a,b,c" into ids and validates them; empty text selects every check.
std::vector<std::string> parse_check_list(std::string_view csv);

/// Lazily computed invariants shared by the checks for one algebra.
class AlgebraFacts {
 public:
  explicit AlgebraFacts(FpAlgebra L, Budget budget = {});

  const FpAlgebra& algebra() const noexcept { return L_; }
  const Budget& budget() const noexcept { return budget_; }

  const SubalgebraLattice& lattice();
  bool solvable();
  bool symmetric();
  const PairVerdict& usm();
  const ModularVerdict& modular();
  const PairVerdict& all_wqi();
  const ElementPairVerdict& wqi_elements();
  const SquareZeroResult<PrimeField>& square_zero();
  const FpSubspace& kernel();
  const FpSubspace& frattini();
  const Quotient<PrimeField>& mod_frattini();
  ShapeTag shape_mod_frattini();
  /// Distinct square-zero lines, as lattice node indices in node order.
  const std::vector<std::size_t>& square_zero_lines();
  const std::optional<FpVec>& generator();

 private:
  FpAlgebra L_;
  Budget budget_;
  std::optional<SubalgebraLattice> lattice_;
  std::optional<bool> solvable_, symmetric_;
  std::optional<PairVerdict> usm_, wqi_;
  std::optional<ModularVerdict> modular_;
  std::optional<ElementPairVerdict> wqi_elements_;
  std::optional<SquareZeroResult<PrimeField>> square_zero_;
  std::optional<FpSubspace> kernel_, frattini_;
  std::optional<Quotient<PrimeField>> mod_frattini_;
  std::optional<ShapeTag> shape_mod_frattini_;
  std::optional<std::vector<std::size_t>> lines_;
  std::optional<std::optional<FpVec>> generator_;
};

/// Provenance for reports: family id, parameters, seed and basis-change index.
struct AlgebraOrigin {
  std::string family;
  std::vector<long long> params;
  std::optional<std::uint64_t> seed;
  int basis_change = 0;
};

TheoremReport run_check(std::string_view id, AlgebraFacts& facts, const AlgebraOrigin& origin = {});
TheoremReport run_check(std::string_view id, const FpAlgebra& L, const Budget& budget = {});

struct CheckCounts {
  std::size_t pass = 0, fail = 0, not_applicable = 0, info = 0;
};

struct SuiteResult {
  std::optional<std::uint64_t> seed;
  std::vector<std::string> checks;
  std::vector<TheoremReport> reports;  ///< algebra-major, then check order
  std::map<std::string, CheckCounts> summary;
  std::size_t failures() const;
};

struct SuiteItem {
  FpAlgebra algebra;
  AlgebraOrigin origin;
};

SuiteResult run_suite(const std::vector<SuiteItem>& items, const std::vector<std::string>& checks,
                      std::optional<std::uint64_t> seed = std::nullopt, const Budget& budget = {});
/// The shipped corpus for `seed`.
SuiteResult run_corpus(std::uint64_t seed, const std::vector<std::string>& checks, const Budget& budget = {});

nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const SuiteResult& s);
/// Fixed-width table: one row per check with its pass/fail/n.a./info counts.
std::string summary_table(const SuiteResult& s);

nlohmann::json vector_json(const FpVec& v);
nlohmann::json subspace_json(const FpSubspace& s);

}  // namespace leibniz
