#include "leibniz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

namespace leibniz {

namespace {

const std::vector<CheckInfo> kChecks = {
    {"thm-abalab", "solvable and upper semi-modular => J abelian or almost abelian", false},
    {"prop-usm2", "solvable and upper semi-modular => L/I abelian or almost abelian", false},
    {"thm-alab", "solvable, upper semi-modular, J almost abelian => J = L", false},
    {"thm-ideal", "solvable, upper semi-modular, char != 2 => J is an ideal", false},
    {"cor-J-span", "solvable and upper semi-modular => J is spanned by {x : x^2 = 0}", false},
    {"lem-two", "solvable, upper semi-modular, generated by two square-zero lines => dim 2", false},
    {"lem-three", "solvable, upper semi-modular, non-abelian, generated by three square-zero lines => Z(L) = 0",
     false},
    {"lem-1dim", "solvable, every proper subalgebra of dim <= 1 => dim 2, Lie or cyclic", false},
    {"lem-kernel", "phi(L) <= I => I(L/phi(L)) = I/phi(L)", false},
    {"lem-qi", "every subalgebra a weak quasi-ideal <=> [x,y] in <x> + <y> for all x, y", false},
    {"lem-wqi-phi", "every subalgebra a weak quasi-ideal => L/phi(L) abelian or almost abelian", false},
    {"lem-cyclic", "cyclic L: every subalgebra a weak quasi-ideal <=> L has one of the two cyclic forms", false},
    {"lem-int", "every subalgebra a weak quasi-ideal and phi(L) != 0 => I meets phi(L)", false},
    {"thm-nonlie-suff", "C + A or non-Lie almost abelian => all weak quasi-ideals, L/phi(L) non-Lie almost abelian",
     false},
    {"thm-sqrt-suff", "A + <x> with [a,x] = a = -[x,a] => all weak quasi-ideals, L/phi(L) almost abelian Lie", false},
    {"rem-equiv", "solvable => modular <=> upper semi-modular <=> all weak quasi-ideals", false},
    {"thm-sym-suff", "symmetric, char != 2, one of the four modular shapes => modular", false},
    {"thm-nonlie-nec", "all weak quasi-ideals, L/phi(L) non-Lie almost abelian: report the matching form", true},
    {"thm-sqrt-nec", "all weak quasi-ideals, L/phi(L) almost abelian Lie: report the matching form", true},
    {"thm-sym-nec", "symmetric and modular, char != 2: report the matching shape", true},
};

bool known_check(std::string_view id) {
  return std::any_of(kChecks.begin(), kChecks.end(), [&](const CheckInfo& c) { return c.id == id; });
}

/// Non-abelian, L^2 one-dimensional and central, square-zero set an abelian ideal:
/// then L = E + Z with E extraspecial (take Z a complement of L^2 in Z(L)).
bool matches_extraspecial_plus_center(AlgebraFacts& facts) {
  const auto& L = facts.algebra();
  auto L2 = product_space(L, L.whole(), L.whole());
  if (L2.dim() != 1) return false;
  if (!subspace_leq(L2, center(L))) return false;
  const auto& sz = facts.square_zero();
  if (sz.set_is_subspace != true) return false;
  return is_ideal(L, sz.J) && product_space(L, sz.J, sz.J).is_zero();
}

struct SymmetricShape {
  std::string name;  ///< "abelian", "almost_abelian_lie", "extraspecial_plus_center", "symmetric_iv" or ""
};

SymmetricShape symmetric_shape(AlgebraFacts& facts) {
  const auto& L = facts.algebra();
  auto tag = classify_shape(L).tag;
  if (tag == ShapeTag::abelian) return {"abelian"};
  if (tag == ShapeTag::almost_abelian_lie) return {"almost_abelian_lie"};
  if (matches_extraspecial_plus_center(facts)) return {"extraspecial_plus_center"};
  if (detect_symmetric_iv(L)) return {"symmetric_iv"};
  return {""};
}

std::string nonlie_form(AlgebraFacts& facts) {
  const auto& L = facts.algebra();
  if (classify_shape(L).tag == ShapeTag::almost_abelian_nonlie) return "almost_abelian_nonlie";
  if (detect_nonlie_ii(L, facts.budget())) return "family_nonlie_ii";
  return "";
}

class Builder {
 public:
  Builder(std::string_view id, const AlgebraFacts& facts, const AlgebraOrigin& origin) {
    r_.algebra = facts.algebra().name();
    r_.family = origin.family;
    r_.params = origin.params;
    r_.seed = origin.seed;
    r_.basis_change = origin.basis_change;
    r_.check = std::string(id);
  }

  /// Records a hypothesis; returns false once any hypothesis has failed.
  bool hyp(std::string name, bool holds) {
    r_.hypotheses.push_back({name, holds});
    if (!holds && r_.failed_hypothesis.empty()) r_.failed_hypothesis = std::move(name);
    return holds;
  }

  TheoremReport not_applicable() {
    r_.status = CheckStatus::not_applicable;
    r_.detail = "hypothesis '" + r_.failed_hypothesis + "' does not hold";
    return std::move(r_);
  }

  TheoremReport conclude(bool ok, std::string detail, nlohmann::json witness) {
    r_.status = ok ? CheckStatus::pass : CheckStatus::fail;
    r_.detail = std::move(detail);
    if (!ok) r_.witness = std::move(witness);
    return std::move(r_);
  }

  TheoremReport info(std::string detail, nlohmann::json witness) {
    r_.status = CheckStatus::info;
    r_.detail = std::move(detail);
    r_.witness = std::move(witness);
    return std::move(r_);
  }

 private:
  TheoremReport r_;
};

nlohmann::json node_json(const SubalgebraLattice& lat, std::size_t i) { return subspace_json(lat.node(i)); }

bool odd_char(const FpAlgebra& L) { return L.field().modulus() != 2; }

FpSubspace image_in_quotient(const Quotient<PrimeField>& Q, const FpSubspace& ideal, const FpSubspace& S) {
  std::vector<FpVec> imgs;
  for (const auto& v : S.basis_vectors()) imgs.push_back(Q.project(ideal, v));
  return FpSubspace::from_vectors(Q.algebra.field(), Q.algebra.dim(), imgs);
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
    case CheckStatus::info: return "info";
  }
  return "fail";
}

const std::vector<CheckInfo>& check_table() { return kChecks; }

std::vector<std::string> parse_check_list(std::string_view csv) {
  std::vector<std::string> out;
  if (csv.empty()) {
    for (const auto& c : kChecks) out.push_back(c.id);
    return out;
  }
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string id(csv.substr(start, end - start));
    if (id.empty()) throw InputError("empty check id in list");
    if (!known_check(id)) throw InputError("unknown check id '" + id + "'");
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    start = end + 1;
  }
  return out;
}

// ---- facts ----

AlgebraFacts::AlgebraFacts(FpAlgebra L, Budget budget) : L_(std::move(L)), budget_(budget) {}

const SubalgebraLattice& AlgebraFacts::lattice() {
  if (!lattice_) lattice_ = SubalgebraLattice::build(L_, budget_);
  return *lattice_;
}
bool AlgebraFacts::solvable() {
  if (!solvable_) solvable_ = is_solvable(L_);
  return *solvable_;
}
bool AlgebraFacts::symmetric() {
  if (!symmetric_) symmetric_ = is_symmetric(L_);
  return *symmetric_;
}
const PairVerdict& AlgebraFacts::usm() {
  if (!usm_) usm_ = is_upper_semimodular(lattice());
  return *usm_;
}
const ModularVerdict& AlgebraFacts::modular() {
  if (!modular_) modular_ = is_modular(lattice());
  return *modular_;
}
const PairVerdict& AlgebraFacts::all_wqi() {
  if (!wqi_) wqi_ = all_subalgebras_wqi(lattice());
  return *wqi_;
}
const ElementPairVerdict& AlgebraFacts::wqi_elements() {
  if (!wqi_elements_) wqi_elements_ = wqi_elementwise(L_, budget_);
  return *wqi_elements_;
}
const SquareZeroResult<PrimeField>& AlgebraFacts::square_zero() {
  if (!square_zero_) square_zero_ = square_zero_subalgebra(L_, budget_);
  return *square_zero_;
}
const FpSubspace& AlgebraFacts::kernel() {
  if (!kernel_) kernel_ = leibniz_kernel(L_);
  return *kernel_;
}
const FpSubspace& AlgebraFacts::frattini() {
  if (!frattini_) frattini_ = frattini_ideal(lattice());
  return *frattini_;
}
const Quotient<PrimeField>& AlgebraFacts::mod_frattini() {
  if (!mod_frattini_) mod_frattini_ = quotient(L_, frattini(), L_.name() + "/phi");
  return *mod_frattini_;
}
ShapeTag AlgebraFacts::shape_mod_frattini() {
  if (!shape_mod_frattini_) shape_mod_frattini_ = classify_shape(mod_frattini().algebra).tag;
  return *shape_mod_frattini_;
}
const std::vector<std::size_t>& AlgebraFacts::square_zero_lines() {
  if (!lines_) {
    const auto& lat = lattice();
    std::vector<std::size_t> lines;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const auto& s = lat.node(i);
      if (s.dim() != 1) continue;
      auto x = s.basis_vectors().front();
      if (is_zero_vector(L_.field(), bracket_unchecked(L_, x, x))) lines.push_back(i);
    }
    lines_ = std::move(lines);
  }
  return *lines_;
}
const std::optional<FpVec>& AlgebraFacts::generator() {
  if (!generator_) generator_ = find_generator(L_, budget_);
  return *generator_;
}

// ---- checks ----

TheoremReport run_check(std::string_view id, AlgebraFacts& f, const AlgebraOrigin& origin) {
  if (!known_check(id)) throw InputError("unknown check id '" + std::string(id) + "'");
  const auto& L = f.algebra();
  Builder b(id, f, origin);
  using nlohmann::json;

  auto usm_hyps = [&] { return b.hyp("solvable", f.solvable()) && b.hyp("upper_semimodular", f.usm().holds); };

  if (id == "thm-abalab") {
    if (!usm_hyps()) return b.not_applicable();
    const auto& J = f.square_zero().J;
    auto tag = classify_shape(subalgebra_as_algebra(L, J)).tag;
    return b.conclude(is_abelian_or_almost_abelian(tag), "J has shape " + std::string(to_string(tag)),
                      json{{"J", subspace_json(J)}, {"shape", to_string(tag)}});
  }
  if (id == "prop-usm2") {
    if (!usm_hyps()) return b.not_applicable();
    auto tag = classify_shape(quotient(L, f.kernel()).algebra).tag;
    return b.conclude(is_abelian_or_almost_abelian(tag), "L/I has shape " + std::string(to_string(tag)),
                      json{{"I", subspace_json(f.kernel())}, {"shape", to_string(tag)}});
  }
  if (id == "thm-alab") {
    if (!usm_hyps()) return b.not_applicable();
    const auto& J = f.square_zero().J;
    auto tag = classify_shape(subalgebra_as_algebra(L, J)).tag;
    if (!b.hyp("J_almost_abelian", tag == ShapeTag::almost_abelian_lie || tag == ShapeTag::almost_abelian_nonlie))
      return b.not_applicable();
    return b.conclude(J.is_full(), "dim J = " + std::to_string(J.dim()) + ", dim L = " + std::to_string(L.dim()),
                      json{{"J", subspace_json(J)}});
  }
  if (id == "thm-ideal") {
    if (!usm_hyps() || !b.hyp("char_not_2", odd_char(L))) return b.not_applicable();
    const auto& J = f.square_zero().J;
    bool ok = is_ideal(L, J);
    json w = {{"J", subspace_json(J)}};
    if (!ok) {
      // first basis pair (x in L, j in J) whose product leaves J
      for (const auto& j : J.basis_vectors())
        for (std::size_t i = 0; i < L.dim() && !w.contains("x"); ++i) {
          auto x = L.basis_vector(i);
          auto l = bracket_unchecked(L, x, j), r = bracket_unchecked(L, j, x);
          if (!J.contains(l) || !J.contains(r)) w["x"] = vector_json(x), w["j"] = vector_json(j);
        }
    }
    return b.conclude(ok, ok ? "J is an ideal" : "J is not an ideal", w);
  }
  if (id == "cor-J-span") {
    if (!usm_hyps()) return b.not_applicable();
    // J is generated as a subalgebra; the claim is that the linear span already suffices
    const auto& sz = f.square_zero();
    auto span = FpSubspace::from_vectors(L.field(), L.dim(), square_zero_elements(L, f.budget()));
    bool ok = span == sz.J;
    return b.conclude(ok,
                      "dim span = " + std::to_string(span.dim()) + ", dim J = " + std::to_string(sz.J.dim()) +
                          ", set is a subspace = " + (sz.set_is_subspace == true ? "true" : "false"),
                      json{{"J", subspace_json(sz.J)}, {"span", subspace_json(span)}});
  }
  if (id == "lem-two") {
    if (!usm_hyps()) return b.not_applicable();
    const auto& lat = f.lattice();
    const auto& lines = f.square_zero_lines();
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t a = 0; a < lines.size() && !pair; ++a)
      for (std::size_t c = a + 1; c < lines.size() && !pair; ++c)
        if (lat.join(lines[a], lines[c]) == lat.top()) pair = {lines[a], lines[c]};
    if (!b.hyp("generated_by_two_square_zero_lines", pair.has_value())) return b.not_applicable();
    return b.conclude(L.dim() == 2, "dim L = " + std::to_string(L.dim()),
                      json{{"U", node_json(lat, pair->first)}, {"V", node_json(lat, pair->second)}});
  }
  if (id == "lem-three") {
    if (!usm_hyps()) return b.not_applicable();
    if (!b.hyp("non_abelian", !product_space(L, L.whole(), L.whole()).is_zero())) return b.not_applicable();
    const auto& lat = f.lattice();
    const auto& lines = f.square_zero_lines();
    std::optional<std::array<std::size_t, 3>> triple;
    for (std::size_t a = 0; a < lines.size() && !triple; ++a)
      for (std::size_t c = a + 1; c < lines.size() && !triple; ++c) {
        auto ac = lat.join(lines[a], lines[c]);
        for (std::size_t d = c + 1; d < lines.size() && !triple; ++d)
          if (lat.join(ac, lines[d]) == lat.top()) triple = {lines[a], lines[c], lines[d]};
      }
    if (!b.hyp("generated_by_three_square_zero_lines", triple.has_value())) return b.not_applicable();
    auto Z = center(L);
    return b.conclude(Z.is_zero(), "dim Z(L) = " + std::to_string(Z.dim()),
                      json{{"U", node_json(lat, (*triple)[0])},
                           {"V", node_json(lat, (*triple)[1])},
                           {"W", node_json(lat, (*triple)[2])},
                           {"Z", subspace_json(Z)}});
  }
  if (id == "lem-1dim") {
    if (!b.hyp("solvable", f.solvable()) || !b.hyp("dim_at_least_2", L.dim() >= 2)) return b.not_applicable();
    const auto& lat = f.lattice();
    bool small = true;
    for (std::size_t i = 0; i < lat.size() && small; ++i)
      if (i != lat.top() && lat.node(i).dim() > 1) small = false;
    if (!b.hyp("proper_subalgebras_at_most_1dim", small)) return b.not_applicable();
    bool lie = is_lie(L);
    bool cyclic = f.generator().has_value();
    return b.conclude(L.dim() == 2 && (lie || cyclic),
                      "dim L = " + std::to_string(L.dim()) + ", lie = " + (lie ? "true" : "false") +
                          ", cyclic = " + (cyclic ? "true" : "false"),
                      json{{"dim", L.dim()}, {"lie", lie}, {"cyclic", cyclic}});
  }
  if (id == "lem-kernel") {
    const auto& phi = f.frattini();
    if (!b.hyp("phi_in_I", subspace_leq(phi, f.kernel()))) return b.not_applicable();
    const auto& Q = f.mod_frattini();
    auto lhs = leibniz_kernel(Q.algebra);
    auto rhs = image_in_quotient(Q, phi, f.kernel());
    return b.conclude(lhs == rhs, "dim I(L/phi) = " + std::to_string(lhs.dim()) + ", dim I/phi = " +
                                      std::to_string(rhs.dim()),
                      json{{"phi", subspace_json(phi)}, {"kernel_of_quotient", subspace_json(lhs)},
                           {"image_of_kernel", subspace_json(rhs)}});
  }
  if (id == "lem-qi") {
    const auto& ew = f.wqi_elements();
    const auto& lw = f.all_wqi();
    json w = {{"elementwise", ew.holds}, {"subalgebras", lw.holds}};
    if (ew.witness) w["pair"] = {vector_json(ew.witness->first), vector_json(ew.witness->second)};
    if (lw.witness)
      w["subalgebra_pair"] = {node_json(f.lattice(), lw.witness->first), node_json(f.lattice(), lw.witness->second)};
    return b.conclude(ew.holds == lw.holds,
                      std::string("elementwise = ") + (ew.holds ? "true" : "false") +
                          ", subalgebras = " + (lw.holds ? "true" : "false"),
                      w);
  }
  if (id == "lem-wqi-phi") {
    if (!b.hyp("all_wqi", f.all_wqi().holds)) return b.not_applicable();
    auto tag = f.shape_mod_frattini();
    return b.conclude(is_abelian_or_almost_abelian(tag), "L/phi has shape " + std::string(to_string(tag)),
                      json{{"phi", subspace_json(f.frattini())}, {"shape", to_string(tag)}});
  }
  if (id == "lem-cyclic") {
    const auto& g = f.generator();
    if (!b.hyp("cyclic", g.has_value())) return b.not_applicable();
    auto form = cyclic_form(L, *g);
    bool wqi = f.all_wqi().holds;
    bool matches = form != CyclicForm::neither;
    return b.conclude(wqi == matches,
                      std::string("form = ") + std::string(to_string(form)) + ", all_wqi = " + (wqi ? "true" : "false"),
                      json{{"generator", vector_json(*g)}, {"form", to_string(form)}, {"all_wqi", wqi}});
  }
  if (id == "lem-int") {
    if (!b.hyp("all_wqi", f.all_wqi().holds) || !b.hyp("phi_nonzero", !f.frattini().is_zero()))
      return b.not_applicable();
    auto meet = subspace_intersection(f.kernel(), f.frattini());
    return b.conclude(!meet.is_zero(), "dim (I meet phi) = " + std::to_string(meet.dim()),
                      json{{"I", subspace_json(f.kernel())}, {"phi", subspace_json(f.frattini())}});
  }
  if (id == "thm-nonlie-suff") {
    bool tagged = origin.family == "family_nonlie_ii" || origin.family == "almost_abelian_nonlie";
    std::string form = tagged ? origin.family : nonlie_form(f);
    if (!b.hyp("form_i_or_ii", !form.empty())) return b.not_applicable();
    bool wqi = f.all_wqi().holds;
    auto tag = f.shape_mod_frattini();
    return b.conclude(wqi && tag == ShapeTag::almost_abelian_nonlie,
                      "all_wqi = " + std::string(wqi ? "true" : "false") + ", L/phi has shape " +
                          std::string(to_string(tag)),
                      json{{"all_wqi", wqi}, {"shape", to_string(tag)}, {"phi", subspace_json(f.frattini())}});
  }
  if (id == "thm-sqrt-suff") {
    if (!b.hyp("char_not_2", odd_char(L))) return b.not_applicable();
    bool form = origin.family == "family_sqrt" || detect_sqrt_family(L, f.budget()).has_value();
    if (!b.hyp("sqrt_family_form", form)) return b.not_applicable();
    bool wqi = f.all_wqi().holds;
    auto tag = f.shape_mod_frattini();
    return b.conclude(wqi && tag == ShapeTag::almost_abelian_lie,
                      "all_wqi = " + std::string(wqi ? "true" : "false") + ", L/phi has shape " +
                          std::string(to_string(tag)),
                      json{{"all_wqi", wqi}, {"shape", to_string(tag)}, {"phi", subspace_json(f.frattini())}});
  }
  if (id == "rem-equiv") {
    if (!b.hyp("solvable", f.solvable())) return b.not_applicable();
    bool m = f.modular().holds, u = f.usm().holds, w = f.all_wqi().holds;
    json wit = {{"modular", m}, {"upper_semimodular", u}, {"all_wqi", w}};
    const auto& lat = f.lattice();
    if (f.modular().witness) {
      auto [x, y, z] = *f.modular().witness;
      wit["modular_witness"] = {node_json(lat, x), node_json(lat, y), node_json(lat, z)};
    }
    if (f.usm().witness) wit["usm_witness"] = {node_json(lat, f.usm().witness->first), node_json(lat, f.usm().witness->second)};
    if (f.all_wqi().witness)
      wit["wqi_witness"] = {node_json(lat, f.all_wqi().witness->first), node_json(lat, f.all_wqi().witness->second)};
    auto s = [](bool v) { return v ? std::string("true") : std::string("false"); };
    return b.conclude(m == u && u == w, "modular = " + s(m) + ", usm = " + s(u) + ", all_wqi = " + s(w), wit);
  }
  if (id == "thm-sym-suff") {
    if (!b.hyp("symmetric", f.symmetric()) || !b.hyp("char_not_2", odd_char(L))) return b.not_applicable();
    auto shape = symmetric_shape(f);
    if (!b.hyp("modular_shape", !shape.name.empty())) return b.not_applicable();
    const auto& m = f.modular();
    json w = {{"shape", shape.name}};
    if (m.witness) {
      const auto& lat = f.lattice();
      auto [x, y, z] = *m.witness;
      w["triple"] = {node_json(lat, x), node_json(lat, y), node_json(lat, z)};
    }
    return b.conclude(m.holds, "shape " + shape.name + ", modular = " + (m.holds ? "true" : "false"), w);
  }
  if (id == "thm-nonlie-nec") {
    if (!b.hyp("all_wqi", f.all_wqi().holds) ||
        !b.hyp("quotient_non_lie_almost_abelian", f.shape_mod_frattini() == ShapeTag::almost_abelian_nonlie))
      return b.not_applicable();
    auto form = nonlie_form(f);
    return b.info(form.empty() ? "no matching form found" : "matches " + form,
                  json{{"matches", !form.empty()}, {"form", form}});
  }
  if (id == "thm-sqrt-nec") {
    if (!b.hyp("char_not_2", odd_char(L)) || !b.hyp("all_wqi", f.all_wqi().holds) ||
        !b.hyp("quotient_almost_abelian_lie", f.shape_mod_frattini() == ShapeTag::almost_abelian_lie))
      return b.not_applicable();
    bool form = detect_sqrt_family(L, f.budget()).has_value();
    return b.info(form ? "matches the A + <x> form" : "no matching form found", json{{"matches", form}});
  }
  // thm-sym-nec
  if (!b.hyp("symmetric", f.symmetric()) || !b.hyp("char_not_2", odd_char(L)) ||
      !b.hyp("modular", f.modular().holds))
    return b.not_applicable();
  auto shape = symmetric_shape(f);
  return b.info(shape.name.empty() ? "no matching shape found" : "matches " + shape.name,
                json{{"matches", !shape.name.empty()}, {"shape", shape.name}});
}

TheoremReport run_check(std::string_view id, const FpAlgebra& L, const Budget& budget) {
  AlgebraFacts facts(L, budget);
  return run_check(id, facts);
}

// ---- suites ----

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& [id, c] : summary) n += c.fail;
  return n;
}

SuiteResult run_suite(const std::vector<SuiteItem>& items, const std::vector<std::string>& checks,
                      std::optional<std::uint64_t> seed, const Budget& budget) {
  for (const auto& id : checks)
    if (!known_check(id)) throw InputError("unknown check id '" + id + "'");
  SuiteResult out;
  out.seed = seed;
  out.checks = checks;
  for (const auto& id : checks) out.summary[id];

  // one task per algebra; slots are filled independently and reduced in order
  std::vector<std::vector<TheoremReport>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        AlgebraFacts facts(items[i].algebra, budget);
        for (const auto& id : checks) slots[i].push_back(run_check(id, facts, items[i].origin));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  threads = std::min(threads, std::max<std::size_t>(items.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (auto& slot : slots)
    for (auto& r : slot) {
      auto& c = out.summary[r.check];
      switch (r.status) {
        case CheckStatus::pass: ++c.pass; break;
        case CheckStatus::fail: ++c.fail; break;
        case CheckStatus::not_applicable: ++c.not_applicable; break;
        case CheckStatus::info: ++c.info; break;
      }
      out.reports.push_back(std::move(r));
    }
  return out;
}

SuiteResult run_corpus(std::uint64_t seed, const std::vector<std::string>& checks, const Budget& budget) {
  std::vector<SuiteItem> items;
  for (auto& e : corpus(seed)) {
    AlgebraOrigin o{e.family, e.params, e.seed, e.basis_change};
    items.push_back({std::move(e.algebra), std::move(o)});
  }
  return run_suite(items, checks, seed, budget);
}

// ---- serialization ----

nlohmann::json vector_json(const FpVec& v) {
  auto a = nlohmann::json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

nlohmann::json subspace_json(const FpSubspace& s) {
  auto a = nlohmann::json::array();
  for (const auto& v : s.basis_vectors()) a.push_back(vector_json(v));
  return a;
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json j;
  j["algebra"] = r.algebra;
  j["family"] = r.family.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.family);
  j["params"] = r.params;
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  j["basis_change"] = r.basis_change;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  auto hyps = nlohmann::json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}});
  j["hypotheses"] = std::move(hyps);
  j["failed_hypothesis"] = r.failed_hypothesis.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.failed_hypothesis);
  j["detail"] = r.detail;
  j["witness"] = r.witness;
  return j;
}

nlohmann::json to_json(const SuiteResult& s) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["seed"] = s.seed ? nlohmann::json(*s.seed) : nlohmann::json(nullptr);
  j["checks"] = s.checks;
  auto summary = nlohmann::json::array();
  for (const auto& id : s.checks) {
    const auto& c = s.summary.at(id);
    summary.push_back({{"check", id},
                       {"pass", c.pass},
                       {"fail", c.fail},
                       {"not_applicable", c.not_applicable},
                       {"info", c.info}});
  }
  j["summary"] = std::move(summary);
  j["failures"] = s.failures();
  auto reports = nlohmann::json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  j["reports"] = std::move(reports);
  return j;
}

std::string summary_table(const SuiteResult& s) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "check" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
     << std::setw(8) << "n/a" << std::setw(8) << "info" << '\n';
  for (const auto& id : s.checks) {
    const auto& c = s.summary.at(id);
    os << std::left << std::setw(18) << id << std::right << std::setw(8) << c.pass << std::setw(8) << c.fail
       << std::setw(8) << c.not_applicable << std::setw(8) << c.info << '\n';
  }
  std::size_t algebras = s.checks.empty() ? 0 : s.reports.size() / s.checks.size();
  os << algebras << " algebra(s), " << s.failures() << " failure(s)\n";
  return os.str();
}

}  // namespace leibniz
