// pdl command line front end.  Only the public C API (pdl/pdl.h) is used;
// everything here is argument plumbing and output formatting.
//
// Exit codes: 0 true/valid/equivalent/ok/none-found, 1 the negative
// verdict, 2 usage errors, 3 guard/fragment/semantic errors.

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdl/pdl.h"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct FormulaDeleter {
  void operator()(pdl_formula* f) const { pdl_formula_free(f); }
};
struct ModelDeleter {
  void operator()(pdl_model* m) const { pdl_model_free(m); }
};
struct DerivationDeleter {
  void operator()(pdl_derivation* d) const { pdl_derivation_free(d); }
};
using FormulaPtr = std::unique_ptr<pdl_formula, FormulaDeleter>;
using ModelPtr = std::unique_ptr<pdl_model, ModelDeleter>;
using DerivationPtr = std::unique_ptr<pdl_derivation, DerivationDeleter>;

struct CliError {
  int code;
  std::string message;
};

void check(pdl_status st) {
  if (st != PDL_OK) throw CliError{kExitError, pdl_last_error()};
}

std::string take_string(char* s) {
  std::string out = s == nullptr ? "" : s;
  pdl_string_free(s);
  return out;
}

pdl_fragment fragment_of(const std::string& name) {
  if (name == "pl" || name == "pl-nnf") return PDL_FRAG_PL_NNF;
  if (name == "d") return PDL_FRAG_TEAM_D;
  if (name == "i") return PDL_FRAG_TEAM_I;
  if (name == "lc") return PDL_FRAG_LC;
  if (name == "ld") return PDL_FRAG_LD;
  if (name == "ld-rel") return PDL_FRAG_LD_REL;
  if (name == "li") return PDL_FRAG_LI;
  if (name == "lu") return PDL_FRAG_LU;
  throw CliError{kExitUsage, "unknown fragment: " + name};
}

bool team_fragment(const std::string& name) { return name == "d" || name == "i"; }

FormulaPtr parse_formula(const std::string& text, const std::string& frag) {
  pdl_formula* f = nullptr;
  check(pdl_parse(text.c_str(), fragment_of(frag), &f));
  return FormulaPtr(f);
}

ModelPtr read_model(const std::string& path) {
  pdl_model* m = nullptr;
  check(pdl_model_read(path.c_str(), &m));
  return ModelPtr(m);
}

std::string model_text(const pdl_model* m) {
  char* s = nullptr;
  check(pdl_model_write(m, &s));
  return take_string(s);
}

std::string formula_text(const pdl_formula* f) {
  char* s = nullptr;
  check(pdl_print(f, &s));
  return take_string(s);
}

// Shared --json emitter: one verdict record per invocation.
struct Report {
  bool as_json = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  [[noreturn]] void finish(const std::string& verdict, int exit_code,
                           json witness = nullptr) {
    if (as_json) {
      const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
          std::chrono::steady_clock::now() - start);
      json doc;
      doc["verdict"] = verdict;
      doc["witness"] = witness;
      doc["timings"] = {{"total_us", elapsed.count()}};
      std::printf("%s\n", doc.dump().c_str());
    } else {
      std::printf("%s\n", verdict.c_str());
      if (witness.is_object()) {
        if (witness.contains("model"))
          std::printf("%s", witness["model"].get<std::string>().c_str());
        if (witness.contains("subteam"))
          std::printf("--\n%s", witness["subteam"].get<std::string>().c_str());
        if (witness.contains("world"))
          std::printf("# world %zu\n",
                      static_cast<size_t>(witness["world"].get<long long>()));
        if (witness.contains("formula"))
          std::printf("%s\n", witness["formula"].get<std::string>().c_str());
      }
    }
    std::exit(exit_code);
  }
};

json witness_json(pdl_model* model, size_t world) {
  json out;
  if (model != nullptr) {
    ModelPtr holder(model);
    out["model"] = model_text(model);
  }
  if (world != static_cast<size_t>(-1)) out["world"] = static_cast<long long>(world);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"propositional dependence/independence logic toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  int jobs = 1;
  unsigned long long seed = 0;  // reserved for sampling subcommands
  app.add_flag("--json", as_json, "emit one JSON verdict record");
  app.add_option("--jobs", jobs, "parallelise model scans");
  app.add_option("--seed", seed, "seed for randomized corpora");

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "parse and print a formula");
  std::string p_frag = "ld", p_text;
  cmd_parse->add_option("--fragment", p_frag, "fragment to validate against");
  cmd_parse->add_option("formula", p_text)->required();

  // eval
  auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula in a model");
  std::string e_sem = "team", e_frag = "d", e_model, e_strategy = "general", e_text;
  long long e_world = -1;
  cmd_eval->add_option("--semantics", e_sem, "team or kripke");
  cmd_eval->add_option("--fragment", e_frag);
  cmd_eval->add_option("--model", e_model)->required();
  cmd_eval->add_option("--world", e_world, "world index (kripke; omit for global)");
  cmd_eval->add_option("--strategy", e_strategy, "general or partition");
  cmd_eval->add_option("formula", e_text)->required();

  // validity / sat
  auto* cmd_validity = app.add_subcommand("validity", "brute-force validity check");
  std::string v_frag = "ld", v_text;
  cmd_validity->add_option("--fragment", v_frag);
  cmd_validity->add_option("formula", v_text)->required();

  auto* cmd_sat = app.add_subcommand("sat", "brute-force satisfiability check");
  std::string s_frag = "ld", s_text;
  cmd_sat->add_option("--fragment", s_frag);
  cmd_sat->add_option("formula", s_text)->required();

  // equiv
  auto* cmd_equiv = app.add_subcommand("equiv", "equivalence of two formulas");
  std::string q_frag = "ld", q_mode = "pointwise", q_target_frag = "ld", q_a, q_b;
  cmd_equiv->add_option("--fragment", q_frag, "fragment of the first formula");
  cmd_equiv->add_option("--mode", q_mode, "pointwise, team, or team-vs-global");
  cmd_equiv->add_option("--target-fragment", q_target_frag,
                        "fragment of the second formula (team-vs-global)");
  cmd_equiv->add_option("formula", q_a)->required();
  cmd_equiv->add_option("other", q_b)->required();

  // translate
  auto* cmd_translate = app.add_subcommand("translate", "translate between logics");
  std::string t_from, t_to, t_text;
  cmd_translate->add_option("--from", t_from)->required();
  cmd_translate->add_option("--to", t_to)->required();
  cmd_translate->add_option("formula", t_text)->required();

  // charform
  auto* cmd_charform =
      app.add_subcommand("charform", "characteristic / class-defining formula");
  std::vector<std::string> c_models;
  std::string c_sig;
  bool c_delta = false;
  cmd_charform->add_option("--sig", c_sig, "symbols (default: model signature)");
  cmd_charform->add_flag("--delta", c_delta,
                         "treat the models as a class (must include the empty model)");
  cmd_charform->add_option("models", c_models, ".sdm files")->required();

  // check-proof
  auto* cmd_proof = app.add_subcommand("check-proof", "check a derivation file");
  std::string d_path;
  bool d_audit = false;
  cmd_proof->add_flag("--audit", d_audit, "also brute-force-check every line's validity");
  cmd_proof->add_option("file", d_path)->required();

  // search
  auto* cmd_search = app.add_subcommand("search", "bounded expressibility search");
  bool se_inexpressible = false;
  std::string se_target, se_target_frag = "ld", se_source = "i", se_sig = "p";
  int se_max = 6;
  cmd_search->add_flag("--inexpressible", se_inexpressible)->required();
  cmd_search->add_option("--target", se_target)->required();
  cmd_search->add_option("--target-fragment", se_target_frag);
  cmd_search->add_option("--source", se_source, "source fragment (i)");
  cmd_search->add_option("--sig", se_sig, "enumeration symbols");
  cmd_search->add_option("--max-size", se_max, "formula size bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Report report;
  report.as_json = as_json;

  if (cmd_parse->parsed()) {
    auto f = parse_formula(p_text, p_frag);
    report.finish(formula_text(f.get()), kExitTrue);
  }

  if (cmd_eval->parsed()) {
    auto f = parse_formula(e_text, e_frag);
    auto m = read_model(e_model);
    int value = 0;
    if (e_sem == "team") {
      const auto strat =
          e_strategy == "partition" ? PDL_SPLIT_PARTITION : PDL_SPLIT_GENERAL;
      check(pdl_eval_team(m.get(), f.get(), fragment_of(e_frag), strat, &value));
    } else if (e_sem == "kripke") {
      if (e_world >= 0) {
        check(pdl_eval_kripke(m.get(), static_cast<size_t>(e_world), f.get(),
                              fragment_of(e_frag), &value));
      } else {
        check(pdl_eval_global(m.get(), f.get(), fragment_of(e_frag), &value));
      }
    } else {
      throw CliError{kExitUsage, "unknown semantics: " + e_sem};
    }
    report.finish(value != 0 ? "true" : "false", value != 0 ? kExitTrue : kExitFalse);
  }

  if (cmd_validity->parsed()) {
    auto f = parse_formula(v_text, v_frag);
    int verdict = 0;
    pdl_model* witness = nullptr;
    size_t world = static_cast<size_t>(-1);
    if (team_fragment(v_frag)) {
      check(pdl_team_validity(f.get(), fragment_of(v_frag), jobs, &verdict, &witness));
    } else {
      check(pdl_validity(f.get(), fragment_of(v_frag), jobs, &verdict, &witness, &world));
    }
    if (verdict != 0) report.finish("valid", kExitTrue);
    report.finish("invalid", kExitFalse, witness_json(witness, world));
  }

  if (cmd_sat->parsed()) {
    auto f = parse_formula(s_text, s_frag);
    int verdict = 0;
    pdl_model* witness = nullptr;
    size_t world = static_cast<size_t>(-1);
    if (team_fragment(s_frag)) {
      check(pdl_team_satisfiable(f.get(), fragment_of(s_frag), jobs, &verdict, &witness));
    } else {
      check(pdl_satisfiable(f.get(), fragment_of(s_frag), jobs, &verdict, &witness,
                            &world));
    }
    if (verdict != 0)
      report.finish("satisfiable", kExitTrue, witness_json(witness, world));
    report.finish("unsatisfiable", kExitFalse);
  }

  if (cmd_equiv->parsed()) {
    int verdict = 0;
    pdl_model* witness = nullptr;
    size_t world = static_cast<size_t>(-1);
    if (q_mode == "pointwise") {
      auto a = parse_formula(q_a, q_frag);
      auto b = parse_formula(q_b, q_frag);
      check(pdl_equivalent(a.get(), b.get(), fragment_of(q_frag), jobs, &verdict,
                           &witness, &world));
    } else if (q_mode == "team") {
      auto a = parse_formula(q_a, q_frag);
      auto b = parse_formula(q_b, q_frag);
      check(pdl_team_equivalent(a.get(), b.get(), fragment_of(q_frag), jobs, &verdict,
                                &witness));
    } else if (q_mode == "team-vs-global") {
      auto a = parse_formula(q_a, q_frag);
      auto b = parse_formula(q_b, q_target_frag);
      check(pdl_team_vs_kripke(a.get(), fragment_of(q_frag), b.get(),
                               fragment_of(q_target_frag), jobs, &verdict, &witness));
    } else {
      throw CliError{kExitUsage, "unknown mode: " + q_mode};
    }
    if (verdict != 0) report.finish("equivalent", kExitTrue);
    report.finish("inequivalent", kExitFalse, witness_json(witness, world));
  }

  if (cmd_translate->parsed()) {
    auto f = parse_formula(t_text, t_from);
    pdl_formula* out = nullptr;
    check(pdl_translate(f.get(), t_from.c_str(), t_to.c_str(), &out));
    FormulaPtr holder(out);
    report.finish(formula_text(out), kExitTrue);
  }

  if (cmd_charform->parsed()) {
    std::vector<ModelPtr> models;
    std::vector<const pdl_model*> raw;
    for (const auto& path : c_models) {
      models.push_back(read_model(path));
      raw.push_back(models.back().get());
    }
    pdl_formula* out = nullptr;
    if (c_delta || models.size() > 1) {
      check(pdl_defining_formula(raw.data(), raw.size(), c_sig.c_str(), &out));
    } else {
      check(pdl_characteristic_formula(raw[0], c_sig.c_str(), &out));
    }
    FormulaPtr holder(out);
    report.finish(formula_text(out), kExitTrue);
  }

  if (cmd_proof->parsed()) {
    pdl_derivation* d = nullptr;
    check(pdl_derivation_read(d_path.c_str(), &d));
    DerivationPtr holder(d);
    int ok = 0, line = 0;
    check(d_audit ? pdl_soundness_audit(d, &ok, &line)
                  : pdl_check_derivation(d, &ok, &line));
    if (ok != 0) report.finish("ok", kExitTrue);
    report.finish("rejected line " + std::to_string(line) + ": " + pdl_last_error(),
                  kExitFalse);
  }

  if (cmd_search->parsed()) {
    auto target = parse_formula(se_target, se_target_frag);
    int found = 0;
    pdl_formula* match = nullptr;
    check(pdl_inexpressibility_scan(target.get(), se_source.c_str(), se_sig.c_str(),
                                    se_max, &found, &match));
    if (found == 0) report.finish("none", kExitTrue);
    FormulaPtr holder(match);
    json witness;
    witness["formula"] = formula_text(match);
    report.finish("found", kExitFalse, witness);
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
}
