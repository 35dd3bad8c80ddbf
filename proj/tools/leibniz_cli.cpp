// Command-line front end over the C interface.
// Exit codes: 0 success, 1 a verified property failed, 2 bad input or usage.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "leibniz/leibniz.h"

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

struct Failure {
  int code;
};

void ensure(lbz_status s) {
  if (s == LBZ_OK) return;
  std::cerr << "error: " << lbz_last_error() << "\n";
  throw Failure{kInputError};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  lbz_string_free(s);
  return out;
}

using Algebra = std::unique_ptr<lbz_algebra, decltype(&lbz_algebra_free)>;
using Lattice = std::unique_ptr<lbz_lattice, decltype(&lbz_lattice_free)>;
using Suite = std::unique_ptr<lbz_suite, decltype(&lbz_suite_free)>;

Algebra load(const std::string& path) {
  lbz_algebra* a = nullptr;
  auto s = lbz_algebra_load(path.c_str(), &a);
  if (s == LBZ_ERR_NOT_LEIBNIZ) {
    std::size_t t[3];
    lbz_last_violation(t);
    std::cerr << "error: " << path << ": not a right Leibniz algebra; the identity fails on basis triple (" << t[0]
              << ", " << t[1] << ", " << t[2] << ")\n";
    throw Failure{kInputError};
  }
  ensure(s);
  return Algebra(a, lbz_algebra_free);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw Failure{kInputError};
  }
}

const char* yn(int v) { return v ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leibniz algebras over exact fields: invariants, subalgebra lattices, theorem checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lbz_version()));

  lbz_budget budget;
  lbz_budget_default(&budget);
  app.add_option("--max-nodes", budget.max_nodes, "Bound on the subalgebra lattice size")->capture_default_str();
  app.add_option("--max-vectors", budget.max_vectors, "Bound on p^n for element scans")->capture_default_str();
  app.add_option("--max-pairs", budget.max_pairs, "Bound on p^(2n) for pairwise element scans")
      ->capture_default_str();

  std::string file;

  auto* check = app.add_subcommand("check", "Validate a spec file and print identity verdicts");
  check->add_option("file", file, "Algebra spec (JSON)")->required();

  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Print the structure report");
  analyze->add_option("file", file, "Algebra spec (JSON)")->required();
  analyze->add_flag("--json", analyze_json, "Emit JSON instead of text");

  std::string dot_path, lattice_json_path;
  auto* lattice = app.add_subcommand("lattice", "Enumerate subalgebras; print stats and lattice verdicts");
  lattice->add_option("file", file, "Algebra spec (JSON)")->required();
  lattice->add_option("--dot", dot_path, "Write the Hasse diagram as DOT");
  lattice->add_option("--json", lattice_json_path, "Write nodes, covers and verdicts as JSON");

  bool use_corpus = false, verify_json = false;
  std::uint64_t seed = 0;
  std::string checks, report_path;
  auto* verify = app.add_subcommand("verify", "Run theorem checks on one algebra or on the corpus");
  auto* verify_file = verify->add_option("file", file, "Algebra spec (JSON)");
  auto* corpus_flag = verify->add_flag("--corpus", use_corpus, "Run over the built-in corpus");
  auto* seed_opt = verify->add_option("--seed", seed, "Seed for the corpus basis changes");
  verify->add_option("--checks", checks, "Comma-separated check ids (default: all)");
  verify->add_flag("--json", verify_json, "Print the JSON report instead of the table");
  verify->add_option("--report", report_path, "Also write the JSON report to this path");
  corpus_flag->excludes(verify_file);
  seed_opt->needs(corpus_flag);
  corpus_flag->needs(seed_opt);

  auto* catalog = app.add_subcommand("catalog", "List families or emit a member as a spec file");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List the families and their parameters");
  std::string family, field_spec = "p=3", out_path;
  std::vector<long long> params;
  auto* emit = catalog->add_subcommand("emit", "Write a family member as a spec file");
  emit->add_option("family", family, "Family id (see `catalog list`)")->required();
  emit->add_option("params", params, "Family parameters");
  emit->add_option("--field", field_spec, "p=<prime>, F_<prime> or rational")->capture_default_str();
  emit->add_option("-o,--output", out_path, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) {
      auto a = load(file);
      lbz_identity_verdicts v;
      ensure(lbz_algebra_identities(a.get(), &v));
      char* name = nullptr;
      ensure(lbz_algebra_name(a.get(), &name));
      std::cout << "algebra: " << take(name) << "\n"
                << "right_leibniz: " << yn(v.right_leibniz) << "\n"
                << "left_leibniz: " << yn(v.left_leibniz) << "\n"
                << "symmetric: " << yn(v.symmetric) << "\n"
                << "lie: " << yn(v.lie) << "\n";
      return kOk;
    }
    if (*analyze) {
      auto a = load(file);
      char* text = nullptr;
      ensure(lbz_algebra_analyze(a.get(), &budget, analyze_json ? 1 : 0, &text));
      std::cout << take(text);
      return kOk;
    }
    if (*lattice) {
      auto a = load(file);
      lbz_lattice* raw = nullptr;
      ensure(lbz_lattice_build(a.get(), &budget, &raw));
      Lattice lat(raw, lbz_lattice_free);
      char* text = nullptr;
      ensure(lbz_lattice_text(lat.get(), &text));
      std::cout << take(text);
      if (!dot_path.empty()) {
        char* dot = nullptr;
        ensure(lbz_lattice_dot(lat.get(), &dot));
        write_text(dot_path, take(dot));
      }
      if (!lattice_json_path.empty()) {
        char* js = nullptr;
        ensure(lbz_lattice_json(lat.get(), &js));
        write_text(lattice_json_path, take(js));
      }
      return kOk;
    }
    if (*verify) {
      if (!use_corpus && file.empty()) {
        std::cerr << "error: verify needs a spec file or --corpus --seed N\n";
        return kInputError;
      }
      lbz_suite* raw = nullptr;
      if (use_corpus) {
        ensure(lbz_suite_run_corpus(seed, checks.c_str(), &budget, &raw));
      } else {
        auto a = load(file);
        ensure(lbz_suite_run_algebra(a.get(), checks.c_str(), &budget, &raw));
      }
      Suite suite(raw, lbz_suite_free);
      char* js = nullptr;
      if (verify_json || !report_path.empty()) ensure(lbz_suite_json(suite.get(), 2, &js));
      std::string json = take(js);
      if (!report_path.empty()) write_text(report_path, json);
      if (verify_json) {
        std::cout << json;
      } else {
        char* table = nullptr;
        ensure(lbz_suite_table(suite.get(), &table));
        std::cout << take(table);
      }
      std::size_t failures = 0;
      ensure(lbz_suite_failures(suite.get(), &failures));
      return failures == 0 ? kOk : kPropertyFailure;
    }
    if (*catalog) {
      if (catalog->got_subcommand("list")) {
        char* text = nullptr;
        ensure(lbz_catalog_list(&text));
        std::cout << take(text);
        return kOk;
      }
      std::uint32_t p = 0;
      ensure(lbz_parse_field(field_spec.c_str(), &p));
      lbz_algebra* raw = nullptr;
      ensure(lbz_algebra_from_family(family.c_str(), params.data(), params.size(), p, &raw));
      Algebra a(raw, lbz_algebra_free);
      char* spec = nullptr;
      ensure(lbz_algebra_emit_spec(a.get(), &spec));
      if (out_path.empty())
        std::cout << take(spec);
      else
        write_text(out_path, take(spec));
      return kOk;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kInputError;
}
