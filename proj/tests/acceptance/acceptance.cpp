// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [--cli <path to leibniz executable>] [--work <scratch dir>]

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "leibniz/catalog.hpp"
#include "leibniz/lattice.hpp"
#include "leibniz/shape.hpp"
#include "leibniz/verify.hpp"
#include "oracles.hpp"

using namespace leibniz;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string note;
};

int failed_criteria = 0;

void report(int number, const std::string& title, const Outcome& o, double secs) {
  if (!o.ok) ++failed_criteria;
  std::printf("%s  criterion %2d  %-44s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", number, title.c_str(), secs,
              o.note.c_str());
  std::fflush(stdout);
}

void run(int number, const std::string& title, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  report(number, title, o, seconds_since(t0));
}

/// Runs body(i) for i in [0, n) on all hardware threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
}

std::uint64_t power(std::uint64_t p, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= p;
  return r;
}

std::uint32_t char_of(const FpAlgebra& L) { return L.field().modulus(); }

oracle::ElementSet intersect(const oracle::ElementSet& a, const oracle::ElementSet& b) {
  oracle::ElementSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.begin()));
  return r;
}

std::vector<FpVec> as_vec(const oracle::ElementSet& s) { return {s.begin(), s.end()}; }

// The lattice verdicts compared under basis changes.
struct Verdicts {
  bool modular, usm, usm_covering, lsm, wqi;
  bool operator==(const Verdicts&) const = default;
};

Verdicts verdicts(const FpAlgebra& L) {
  auto lat = SubalgebraLattice::build(L);
  return {is_modular(lat).holds, is_upper_semimodular(lat).holds, is_upper_semimodular_covering(lat).holds,
          is_lower_semimodular(lat).holds, all_subalgebras_wqi(lat).holds};
}

// ---------------------------------------------------------------------------

Outcome enumeration_matches_oracle(const std::vector<CorpusEntry>& corpus) {
  auto t0 = Clock::now();
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (power(char_of(corpus[i].algebra), corpus[i].algebra.dim()) <= 81) picked.push_back(i);
  std::vector<char> ok(picked.size(), 0);
  parallel_for(picked.size(), [&](std::size_t k) {
    const auto& L = corpus[picked[k]].algebra;
    auto lat = enumerate_subalgebras(L);
    std::set<oracle::ElementSet> got;
    for (const auto& n : lat.nodes()) got.insert(oracle::elements(n));
    ok[k] = got.size() == lat.size() && got == oracle::subalgebras(L);
  });
  std::size_t bad = 0;
  std::string first;
  for (std::size_t k = 0; k < picked.size(); ++k)
    if (!ok[k]) {
      if (!bad) first = corpus[picked[k]].algebra.name();
      ++bad;
    }
  const double secs = seconds_since(t0);
  Outcome o{bad == 0 && !picked.empty() && secs < 10.0, ""};
  o.note = std::to_string(picked.size()) + " algebras, " + std::to_string(bad) + " mismatches";
  if (bad) o.note += " (first " + first + ")";
  if (secs >= 10.0) o.note += ", over the 10 s limit";
  return o;
}

Outcome elementwise_wqi_equivalence(const std::vector<CorpusEntry>& corpus) {
  auto t0 = Clock::now();
  std::vector<std::size_t> picked;
  std::size_t dim2 = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto p = char_of(corpus[i].algebra);
    if (p != 2 && p != 3) continue;
    picked.push_back(i);
    if (corpus[i].family == "exhaustive_dim2") ++dim2;
  }
  std::vector<char> agree(picked.size(), 0);
  parallel_for(picked.size(), [&](std::size_t k) {
    const auto& L = corpus[picked[k]].algebra;
    agree[k] = wqi_elementwise(L).holds == all_subalgebras_wqi(enumerate_subalgebras(L)).holds;
  });
  std::size_t bad = 0;
  for (auto a : agree) bad += a ? 0 : 1;
  const auto sweep = exhaustive_dim2().size();
  const double secs = seconds_since(t0);
  Outcome o{bad == 0 && picked.size() >= 60 && dim2 == sweep && secs < 30.0, ""};
  o.note = std::to_string(picked.size()) + " algebras (" + std::to_string(dim2) + "/" + std::to_string(sweep) +
           " from the dim-2 sweep), " + std::to_string(bad) + " disagreements";
  return o;
}

Outcome cyclic_frattini_closed_forms() {
  std::size_t bad_nil = 0, bad_sol = 0, cases = 0;
  std::string first_sol;
  for (std::uint32_t p : {2U, 3U}) {
    PrimeField f(p);
    for (std::size_t n : {2U, 3U, 4U}) {
      ++cases;
      // nilpotent: phi = L^2 = span(a^2..a^n) = span(e_1..e_{n-1})
      auto N = cyclic_nilpotent(n, f);
      std::vector<FpVec> sq;
      for (std::size_t i = 1; i < n; ++i) sq.push_back(N.basis_vector(i));
      auto L2 = FpSubspace::from_vectors(f, n, sq);
      auto phi_n = FpSubspace::from_vectors(f, n, as_vec(oracle::frattini(N)));
      if (!(frattini_ideal(N) == L2) || !(phi_n == L2)) ++bad_nil;

      // solvable: the asserted closed form sum_{i=2..n} F(a^i - a^{i-1}), a^i = e_{i-1}
      auto S = cyclic_solvable(n, f);
      std::vector<FpVec> diffs;
      for (std::size_t i = 2; i <= n; ++i) {
        FpVec d(n, 0);
        d[i - 1] = 1;
        d[i - 2] = p - 1;
        diffs.push_back(d);
      }
      auto stated = FpSubspace::from_vectors(f, n, diffs);
      auto phi_s = frattini_ideal(S);
      auto oracle_phi = FpSubspace::from_vectors(f, n, as_vec(oracle::frattini(S)));
      if (!(phi_s == oracle_phi) || !(phi_s == stated)) {
        if (!bad_sol)
          first_sol = S.name() + ": phi has dim " + std::to_string(phi_s.dim()) + ", stated form has dim " +
                      std::to_string(stated.dim());
        ++bad_sol;
      }
    }
  }
  Outcome o{bad_nil == 0 && bad_sol == 0, ""};
  o.note = "nilpotent " + std::to_string(cases - bad_nil) + "/" + std::to_string(cases) + ", solvable " +
           std::to_string(cases - bad_sol) + "/" + std::to_string(cases);
  if (bad_sol) o.note += " (" + first_sol + ")";
  return o;
}

Outcome solvable_equivalence(const std::vector<CorpusEntry>& corpus) {
  auto t0 = Clock::now();
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (corpus[i].algebra.dim() <= 4 && is_solvable(corpus[i].algebra)) picked.push_back(i);
  std::vector<char> agree(picked.size(), 0);
  parallel_for(picked.size(), [&](std::size_t k) {
    auto v = verdicts(corpus[picked[k]].algebra);
    agree[k] = v.modular == v.usm && v.usm == v.wqi;
  });
  std::size_t bad = 0;
  for (auto a : agree) bad += a ? 0 : 1;
  const double secs = seconds_since(t0);
  Outcome o{bad == 0 && !picked.empty() && secs < 120.0, ""};
  o.note = std::to_string(picked.size()) + " solvable algebras, " + std::to_string(bad) + " violations";
  return o;
}

Outcome first_suite(std::uint64_t seed) {
  const std::vector<std::string> ids{"thm-abalab", "prop-usm2", "thm-alab", "thm-ideal",
                                     "cor-J-span", "lem-two",   "lem-three"};
  auto suite = run_corpus(seed, ids);
  std::size_t fails = 0;
  for (const auto& id : ids) fails += suite.summary.at(id).fail;
  const auto& ab = suite.summary.at("thm-abalab");
  const std::size_t applicable = ab.pass + ab.fail;
  Outcome o{fails == 0 && applicable >= 10, ""};
  o.note = std::to_string(fails) + " fails across " + std::to_string(ids.size()) + " checks, thm-abalab applicable to " +
           std::to_string(applicable);
  return o;
}

Outcome third_section_sufficiency() {
  std::size_t cases = 0, bad = 0;
  std::string first;
  auto expect = [&](const FpAlgebra& L, ShapeTag want) {
    ++cases;
    auto lat = enumerate_subalgebras(L);
    bool wqi = all_subalgebras_wqi(lat).holds;
    auto phi = frattini_ideal(lat);
    auto tag = classify_shape(quotient(L, phi).algebra).tag;
    if (!wqi || tag != want) {
      if (!bad) first = L.name() + " wqi=" + (wqi ? "true" : "false") + " L/phi=" + std::string(to_string(tag));
      ++bad;
    }
  };
  for (std::uint32_t p : {2U, 3U})
    for (std::size_t k = 2; k <= 3; ++k)
      for (std::size_t m = 0; m <= 2; ++m) expect(family_nonlie_ii(k, m, PrimeField(p)), ShapeTag::almost_abelian_nonlie);
  for (std::uint32_t p : {3U, 5U})
    for (std::size_t k = 1; k <= 2; ++k)
      for (std::size_t m = 1; m <= 2; ++m) expect(family_sqrt(k, m, PrimeField(p)), ShapeTag::almost_abelian_lie);
  Outcome o{bad == 0, std::to_string(cases) + " algebras, " + std::to_string(bad) + " failures"};
  if (bad) o.note += " (" + first + ")";
  return o;
}

Outcome fourth_section_sufficiency() {
  std::size_t cases = 0, bad = 0;
  std::string first;
  auto expect = [&](const FpAlgebra& L) {
    ++cases;
    bool sym = is_symmetric(L);
    bool mod = is_modular(enumerate_subalgebras(L)).holds;
    // the element-triple scan is cubic in p^n, so it only runs on small algebras
    bool sym_oracle = power(char_of(L), L.dim()) > 27 || oracle::left_leibniz_elementwise(L);
    if (!sym || !mod || !sym_oracle) {
      if (!bad) first = L.name();
      ++bad;
    }
  };
  for (std::uint32_t p : {3U, 5U}) {
    for (std::size_t m = 1; m <= 2; ++m) expect(symmetric_iv(m, PrimeField(p)));
    for (std::size_t z = 0; z <= 1; ++z) expect(extraspecial_plus_center(z, PrimeField(p)));
  }
  Outcome o{bad == 0, std::to_string(cases) + " algebras, " + std::to_string(bad) + " failures"};
  if (bad) o.note += " (" + first + ")";
  return o;
}

oracle::ElementSet join_elements(const FpAlgebra& L, const oracle::ElementSet& a, const oracle::ElementSet& b) {
  auto g = as_vec(a);
  for (const auto& x : b) g.push_back(x);
  return oracle::closure(L, g);
}

bool maximal_in(const std::set<oracle::ElementSet>& subs, const oracle::ElementSet& a, const oracle::ElementSet& b) {
  if (a == b || !std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
  for (const auto& s : subs)
    if (s != a && s != b && std::includes(b.begin(), b.end(), s.begin(), s.end()) &&
        std::includes(s.begin(), s.end(), a.begin(), a.end()))
      return false;
  return true;
}

Outcome heisenberg_negative_control() {
  std::string note;
  bool ok = true;
  for (std::uint32_t p : {2U, 3U}) {
    auto H = heisenberg_lie(PrimeField(p));
    auto lat = enumerate_subalgebras(H);
    auto again = enumerate_subalgebras(heisenberg_lie(PrimeField(p)));
    auto mod = is_modular(lat);
    auto usm = is_upper_semimodular(lat);
    auto wqi = all_subalgebras_wqi(lat);
    bool fails_all = !mod.holds && !usm.holds && !wqi.holds && mod.witness && usm.witness && wqi.witness;
    bool same = fails_all && is_modular(again).witness == mod.witness &&
                is_upper_semimodular(again).witness == usm.witness && all_subalgebras_wqi(again).witness == wqi.witness;
    bool genuine = false;
    if (fails_all) {
      auto subs = oracle::subalgebras(H);
      auto E = [&](std::size_t i) { return oracle::elements(lat.node(i)); };
      auto [u, v, w] = *mod.witness;
      auto U = E(u), V = E(v), W = E(w);
      bool mod_bad = std::includes(W.begin(), W.end(), U.begin(), U.end()) &&
                     intersect(join_elements(H, U, V), W) != join_elements(H, U, intersect(V, W));
      auto [a, b] = *usm.witness;
      auto A = E(a), B = E(b);
      bool usm_bad = maximal_in(subs, intersect(A, B), B) && !maximal_in(subs, A, join_elements(H, A, B));
      auto [x, y] = *wqi.witness;
      auto X = E(x), Y = E(y);
      auto sum = oracle::span(p, 3, [&] {
        auto g = as_vec(X);
        for (const auto& e : Y) g.push_back(e);
        return g;
      }());
      bool wqi_bad = false;
      for (const auto& s : X)
        for (const auto& t : Y)
          if (!sum.count(oracle::mul(H, s, t)) || !sum.count(oracle::mul(H, t, s))) wqi_bad = true;
      genuine = mod_bad && usm_bad && wqi_bad;
    }
    ok = ok && fails_all && same && genuine;
    if (!note.empty()) note += "; ";
    note += "F_" + std::to_string(p) + ": " + (fails_all ? "all three fail" : "some verdict holds") +
            (same ? ", witnesses repeat" : ", witnesses differ") + (genuine ? ", confirmed" : ", unconfirmed");
  }
  return {ok, note};
}

Outcome kernel_laws(const std::vector<CorpusEntry>& corpus) {
  constexpr int kChanges = 50;
  std::vector<std::string> problem(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t idx) {
    const auto& L = corpus[idx].algebra;
    const auto& f = L.field();
    const std::size_t n = L.dim();
    auto I = leibniz_kernel(L);
    if (!is_lie(quotient(L, I).algebra)) {
      problem[idx] = "L/I is not Lie";
      return;
    }
    if (!product_space(L, L.whole(), I).is_zero()) {
      problem[idx] = "[L, I] != 0";
      return;
    }
    const auto dims = std::array{I.dim(), square_zero_subalgebra(L).J.dim(), center(L).dim()};
    const auto base = verdicts(L);
    std::mt19937_64 rng(0x5eed0000ULL + idx);
    for (int c = 0; c < kChanges; ++c) {
      auto M = change_of_basis(L, random_invertible(f, n, rng));
      const auto d = std::array{leibniz_kernel(M).dim(), square_zero_subalgebra(M).J.dim(), center(M).dim()};
      if (d != dims || !(verdicts(M) == base)) {
        problem[idx] = "invariants change under basis change " + std::to_string(c);
        return;
      }
    }
  });
  std::size_t bad = 0;
  std::string first;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (!problem[i].empty()) {
      if (!bad) first = corpus[i].algebra.name() + ": " + problem[i];
      ++bad;
    }
  Outcome o{bad == 0, std::to_string(corpus.size()) + " algebras x " + std::to_string(kChanges) +
                          " basis changes, " + std::to_string(bad) + " violations"};
  if (bad) o.note += " (" + first + ")";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const std::string& cli, const std::filesystem::path& work) {
  auto a = to_json(run_corpus(7, {})).dump(2);
  auto b = to_json(run_corpus(7, {})).dump(2);
  if (a != b) return {false, "in-process reports differ"};
  if (cli.empty()) return {true, "in-process only, " + std::to_string(a.size()) + " bytes"};
  std::filesystem::create_directories(work);
  std::string outs[2];
  for (int r = 0; r < 2; ++r) {
    auto path = work / ("corpus_seed7_run" + std::to_string(r) + ".json");
    std::string cmd = "\"" + cli + "\" verify --corpus --seed 7 --json > \"" + path.string() + "\"";
    if (std::system(cmd.c_str()) != 0) return {false, "CLI run " + std::to_string(r) + " exited nonzero"};
    outs[r] = slurp(path);
  }
  if (outs[0] != outs[1]) return {false, "CLI reports differ"};
  if (outs[0].empty()) return {false, "CLI report is empty"};
  return {true, "two CLI runs byte-identical, " + std::to_string(outs[0].size()) + " bytes"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::filesystem::path work = std::filesystem::temp_directory_path() / "leibniz_acceptance";
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string key = argv[i];
    if (key == "--cli")
      cli = argv[i + 1];
    else if (key == "--work")
      work = argv[i + 1];
  }

  auto t0 = Clock::now();
  const auto corpus = leibniz::corpus(7);
  std::printf("corpus(seed 7): %zu algebras\n", corpus.size());

  run(1, "subalgebra enumeration equals oracle", [&] { return enumeration_matches_oracle(corpus); });
  run(2, "elementwise WQI equals subalgebra WQI", [&] { return elementwise_wqi_equivalence(corpus); });
  run(3, "Frattini ideal of cyclic algebras", [] { return cyclic_frattini_closed_forms(); });
  run(4, "modular, USM, all-WQI agree (solvable)", [&] { return solvable_equivalence(corpus); });
  run(5, "first suite: zero fails", [] { return first_suite(7); });
  run(6, "nonlie_ii and sqrt families: WQI, L/phi", [] { return third_section_sufficiency(); });
  run(7, "symmetric families are modular", [] { return fourth_section_sufficiency(); });
  run(8, "Heisenberg negative control", [] { return heisenberg_negative_control(); });
  run(9, "kernel laws and basis invariance", [&] { return kernel_laws(corpus); });
  run(10, "byte-identical corpus reports", [&] { return determinism(cli, work); });

  const double total = seconds_since(t0);
  std::printf("%d of 10 criteria failed, total %.1fs%s\n", failed_criteria, total,
              total < 300.0 ? "" : " (over the 5 minute target)");
  return failed_criteria == 0 ? 0 : 1;
}
