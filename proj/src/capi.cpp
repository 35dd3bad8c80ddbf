#include "leibniz/leibniz.h"

#include <array>
#include <cstdlib>
#include <cstring>
#include <new>
#include <span>
#include <sstream>

#include "leibniz/io.hpp"

using namespace leibniz;

struct lbz_algebra {
  AnyAlgebra algebra;
};

struct lbz_lattice {
  SubalgebraLattice lattice;
  LatticeSummary summary;
};

struct lbz_suite {
  SuiteResult result;
};

namespace {

thread_local std::string g_error;
thread_local std::array<std::size_t, 3> g_triple{0, 0, 0};
thread_local bool g_has_triple = false;

template <class Fn>
lbz_status guard(Fn&& fn) {
  g_error.clear();
  g_has_triple = false;
  try {
    fn();
    return LBZ_OK;
  } catch (const NotLeibnizError& e) {
    g_error = e.what();
    g_triple = e.triple();
    g_has_triple = true;
    return LBZ_ERR_NOT_LEIBNIZ;
  } catch (const InputError& e) {
    g_error = e.what();
    return LBZ_ERR_INPUT;
  } catch (const UnsupportedFieldError& e) {
    g_error = e.what();
    return LBZ_ERR_UNSUPPORTED_FIELD;
  } catch (const BudgetError& e) {
    g_error = std::string(e.what()) + "; raise the budget or pick a smaller algebra";
    return LBZ_ERR_BUDGET;
  } catch (const nlohmann::json::exception& e) {
    g_error = e.what();
    return LBZ_ERR_INPUT;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return LBZ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return LBZ_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown error";
    return LBZ_ERR_INTERNAL;
  }
}

lbz_status null_argument(const char* what) {
  g_error = std::string("null argument: ") + what;
  g_has_triple = false;
  return LBZ_ERR_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Budget to_budget(const lbz_budget* b) {
  Budget out;
  if (!b) return out;
  out.max_vectors = b->max_vectors;
  out.max_pairs = b->max_pairs;
  out.max_subspaces = b->max_subspaces;
  out.max_nodes = static_cast<std::size_t>(b->max_nodes);
  return out;
}

const FpAlgebra& require_prime(const lbz_algebra* a) {
  if (auto* fp = std::get_if<FpAlgebra>(&a->algebra)) return *fp;
  throw UnsupportedFieldError("this operation needs a finite prime field; the algebra is over Q");
}

}  // namespace

extern "C" {

const char* lbz_version(void) { return "0.1.0"; }

const char* lbz_last_error(void) { return g_error.c_str(); }

lbz_status lbz_last_violation(size_t triple[3]) {
  if (!triple) return null_argument("triple");
  if (!g_has_triple) return LBZ_ERR_INPUT;
  for (int i = 0; i < 3; ++i) triple[i] = g_triple[static_cast<std::size_t>(i)];
  return LBZ_OK;
}

void lbz_string_free(char* s) { std::free(s); }

void lbz_budget_default(lbz_budget* out) {
  if (!out) return;
  Budget b;
  *out = lbz_budget{b.max_vectors, b.max_pairs, b.max_subspaces, b.max_nodes};
}

lbz_status lbz_algebra_from_spec(const char* json, lbz_algebra** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guard([&] { *out = new lbz_algebra{parse_spec(json)}; });
}

lbz_status lbz_algebra_load(const char* path, lbz_algebra** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guard([&] { *out = new lbz_algebra{load_spec(path)}; });
}

lbz_status lbz_algebra_from_family(const char* family, const long long* params, size_t n_params, uint32_t p,
                                   lbz_algebra** out) {
  if (!family) return null_argument("family");
  if (!out) return null_argument("out");
  if (n_params > 0 && !params) return null_argument("params");
  return guard([&] {
    std::span<const long long> ps(params, n_params);
    if (p == 0)
      *out = new lbz_algebra{build_family(family, ps, RationalField{})};
    else
      *out = new lbz_algebra{build_family(family, ps, PrimeField(p))};
  });
}

void lbz_algebra_free(lbz_algebra* a) { delete a; }

lbz_status lbz_algebra_dim(const lbz_algebra* a, size_t* out) {
  if (!a) return null_argument("algebra");
  if (!out) return null_argument("out");
  return guard([&] { *out = std::visit([](const auto& L) { return L.dim(); }, a->algebra); });
}

lbz_status lbz_algebra_characteristic(const lbz_algebra* a, uint32_t* out) {
  if (!a) return null_argument("algebra");
  if (!out) return null_argument("out");
  return guard([&] { *out = std::visit([](const auto& L) { return L.field().characteristic(); }, a->algebra); });
}

lbz_status lbz_algebra_name(const lbz_algebra* a, char** out) {
  if (!a) return null_argument("algebra");
  if (!out) return null_argument("out");
  return guard([&] { *out = dup_string(std::visit([](const auto& L) { return L.name(); }, a->algebra)); });
}

lbz_status lbz_algebra_emit_spec(const lbz_algebra* a, char** out) {
  if (!a) return null_argument("algebra");
  if (!out) return null_argument("out");
  return guard([&] { *out = dup_string(emit_spec(a->algebra)); });
}

lbz_status lbz_algebra_identities(const lbz_algebra* a, lbz_identity_verdicts* out) {
  if (!a) return null_argument("algebra");
  if (!out) return null_argument("out");
  return guard([&] {
    std::visit(
        [&](const auto& L) {
          bool left = check_left_leibniz(L);
          *out = lbz_identity_verdicts{1, left ? 1 : 0, left ? 1 : 0, is_lie(L) ? 1 : 0};
        },
        a->algebra);
  });
}

lbz_status lbz_algebra_bracket(const lbz_algebra* a, const uint32_t* x, const uint32_t* y, uint32_t* out) {
  if (!a) return null_argument("algebra");
  if (!x || !y || !out) return null_argument("vector");
  return guard([&] {
    const auto& L = require_prime(a);
    FpVec vx(x, x + L.dim()), vy(y, y + L.dim());
    auto r = bracket(L, vx, vy);
    std::copy(r.begin(), r.end(), out);
  });
}

lbz_status lbz_algebra_analyze(const lbz_algebra* a, const lbz_budget* budget, int as_json, char** out) {
  if (!a) return null_argument("algebra");
  if (!out) return null_argument("out");
  return guard([&] {
    auto b = to_budget(budget);
    std::visit(
        [&](const auto& L) {
          auto r = analyze(L, b);
          *out = dup_string(as_json ? to_json(r).dump(2) + "\n" : to_text(r));
        },
        a->algebra);
  });
}

lbz_status lbz_lattice_build(const lbz_algebra* a, const lbz_budget* budget, lbz_lattice** out) {
  if (!a) return null_argument("algebra");
  if (!out) return null_argument("out");
  return guard([&] {
    auto lat = SubalgebraLattice::build(require_prime(a), to_budget(budget));
    auto summary = summarize(lat);
    *out = new lbz_lattice{std::move(lat), std::move(summary)};
  });
}

void lbz_lattice_free(lbz_lattice* l) { delete l; }

lbz_status lbz_lattice_size(const lbz_lattice* l, size_t* out) {
  if (!l) return null_argument("lattice");
  if (!out) return null_argument("out");
  *out = l->lattice.size();
  return LBZ_OK;
}

lbz_status lbz_lattice_edge_count(const lbz_lattice* l, size_t* out) {
  if (!l) return null_argument("lattice");
  if (!out) return null_argument("out");
  *out = l->summary.stats.covering_edges;
  return LBZ_OK;
}

lbz_status lbz_lattice_verdicts_get(const lbz_lattice* l, lbz_lattice_verdicts* out) {
  if (!l) return null_argument("lattice");
  if (!out) return null_argument("out");
  const auto& s = l->summary;
  *out = lbz_lattice_verdicts{s.modular.holds ? 1 : 0, s.upper_semimodular.holds ? 1 : 0,
                              s.lower_semimodular.holds ? 1 : 0, s.all_wqi.holds ? 1 : 0};
  return LBZ_OK;
}

lbz_status lbz_lattice_text(const lbz_lattice* l, char** out) {
  if (!l) return null_argument("lattice");
  if (!out) return null_argument("out");
  return guard([&] { *out = dup_string(lattice_text(l->lattice, l->summary)); });
}

lbz_status lbz_lattice_json(const lbz_lattice* l, char** out) {
  if (!l) return null_argument("lattice");
  if (!out) return null_argument("out");
  return guard([&] { *out = dup_string(lattice_json(l->lattice, l->summary).dump(2) + "\n"); });
}

lbz_status lbz_lattice_dot(const lbz_lattice* l, char** out) {
  if (!l) return null_argument("lattice");
  if (!out) return null_argument("out");
  return guard([&] { *out = dup_string(export_dot(l->lattice)); });
}

lbz_status lbz_check_ids(char** out_csv) {
  if (!out_csv) return null_argument("out");
  return guard([&] {
    std::string csv;
    for (const auto& c : check_table()) csv += (csv.empty() ? "" : ",") + c.id;
    *out_csv = dup_string(csv);
  });
}

lbz_status lbz_run_check(const lbz_algebra* a, const char* check_id, const lbz_budget* budget, char** out_json) {
  if (!a) return null_argument("algebra");
  if (!check_id) return null_argument("check_id");
  if (!out_json) return null_argument("out");
  return guard([&] {
    auto r = run_check(check_id, require_prime(a), to_budget(budget));
    *out_json = dup_string(to_json(r).dump(2) + "\n");
  });
}

lbz_status lbz_suite_run_algebra(const lbz_algebra* a, const char* checks_csv, const lbz_budget* budget,
                                 lbz_suite** out) {
  if (!a) return null_argument("algebra");
  if (!out) return null_argument("out");
  return guard([&] {
    const auto& L = require_prime(a);
    auto checks = parse_check_list(checks_csv ? checks_csv : "");
    std::vector<SuiteItem> items{{L, {}}};
    *out = new lbz_suite{run_suite(items, checks, std::nullopt, to_budget(budget))};
  });
}

lbz_status lbz_suite_run_corpus(uint64_t seed, const char* checks_csv, const lbz_budget* budget, lbz_suite** out) {
  if (!out) return null_argument("out");
  return guard([&] {
    auto checks = parse_check_list(checks_csv ? checks_csv : "");
    *out = new lbz_suite{run_corpus(seed, checks, to_budget(budget))};
  });
}

void lbz_suite_free(lbz_suite* s) { delete s; }

lbz_status lbz_suite_failures(const lbz_suite* s, size_t* out) {
  if (!s) return null_argument("suite");
  if (!out) return null_argument("out");
  *out = s->result.failures();
  return LBZ_OK;
}

lbz_status lbz_suite_table(const lbz_suite* s, char** out) {
  if (!s) return null_argument("suite");
  if (!out) return null_argument("out");
  return guard([&] { *out = dup_string(summary_table(s->result)); });
}

lbz_status lbz_suite_json(const lbz_suite* s, int indent, char** out) {
  if (!s) return null_argument("suite");
  if (!out) return null_argument("out");
  return guard([&] { *out = dup_string(to_json(s->result).dump(indent < 0 ? -1 : indent) + "\n"); });
}

lbz_status lbz_catalog_list(char** out_text) {
  if (!out_text) return null_argument("out");
  return guard([&] {
    std::ostringstream os;
    for (const auto& fam : families()) {
      std::string params;
      for (const auto& p : fam.params) params += " <" + p + ">";
      os << fam.id << params << (fam.symmetric ? "  [symmetric]" : "") << "\n    " << fam.summary << "\n";
    }
    *out_text = dup_string(os.str());
  });
}

lbz_status lbz_parse_field(const char* spec, uint32_t* out_p) {
  if (!spec) return null_argument("spec");
  if (!out_p) return null_argument("out");
  return guard([&] { *out_p = parse_field_spec(spec); });
}

}  // extern "C"
