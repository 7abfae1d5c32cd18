// extern "C" surface over the C++ core.  Handles wrap values; errors are
// mapped to pdl_status with the message parked in a thread-local slot.

#include "pdl/pdl.h"

#include <cstring>
#include <new>
#include <string>

#include "decide.hpp"
#include "enumerate.hpp"
#include "fragment.hpp"
#include "formula.hpp"
#include "kripke_eval.hpp"
#include "model.hpp"
#include "parser.hpp"
#include "proof.hpp"
#include "team_eval.hpp"
#include "translations.hpp"

struct pdl_formula {
  pdl::FormulaId id;
};
struct pdl_model {
  pdl::SDModel value;
};
struct pdl_derivation {
  pdl::Derivation value;
};

namespace {

thread_local std::string g_last_error;

pdl_status fail(const std::exception& e, pdl_status code) {
  g_last_error = e.what();
  return code;
}

template <typename Fn>
pdl_status guarded(Fn&& fn) {
  try {
    fn();
    return PDL_OK;
  } catch (const pdl::PdlError& e) {
    return fail(e, static_cast<pdl_status>(e.code()));
  } catch (const std::bad_alloc& e) {
    return fail(e, PDL_ERR_INTERNAL);
  } catch (const std::exception& e) {
    return fail(e, PDL_ERR_INTERNAL);
  }
}

pdl::Fragment cxx_fragment(pdl_fragment f) {
  switch (f) {
    case PDL_FRAG_PL_NNF: return pdl::Fragment::PL_NNF;
    case PDL_FRAG_TEAM_D: return pdl::Fragment::TEAM_D;
    case PDL_FRAG_TEAM_I: return pdl::Fragment::TEAM_I;
    case PDL_FRAG_LC: return pdl::Fragment::LC;
    case PDL_FRAG_LD: return pdl::Fragment::LD;
    case PDL_FRAG_LD_REL: return pdl::Fragment::LD_REL;
    case PDL_FRAG_LI: return pdl::Fragment::LI;
    case PDL_FRAG_LU: return pdl::Fragment::LU;
  }
  throw pdl::ArgError("bad fragment value");
}

pdl::Fragment named_fragment(const char* name) {
  const auto f = pdl::fragment_from_name(name == nullptr ? "" : name);
  if (!f) throw pdl::ArgError("unknown fragment name");
  return *f;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pdl::Signature parse_symbols(const char* symbols) {
  std::vector<std::string> syms;
  std::string cur;
  for (const char* p = symbols; p != nullptr && *p != '\0'; ++p) {
    if (*p == ' ' || *p == '\t' || *p == ',') {
      if (!cur.empty()) syms.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(*p);
    }
  }
  if (!cur.empty()) syms.push_back(std::move(cur));
  return pdl::Signature::of(std::move(syms));
}

void emit_verdict(const pdl::Verdict& v, int* verdict, pdl_model** witness,
                  size_t* witness_world) {
  if (verdict != nullptr) *verdict = v.result ? 1 : 0;
  if (witness != nullptr) {
    *witness = v.witness_model ? new pdl_model{*v.witness_model} : nullptr;
  }
  if (witness_world != nullptr)
    *witness_world = v.witness_world ? *v.witness_world : static_cast<size_t>(-1);
}

}  // namespace

extern "C" {

const char* pdl_version(void) { return "0.1.0"; }

const char* pdl_last_error(void) { return g_last_error.c_str(); }

void pdl_string_free(char* s) { delete[] s; }
void pdl_formula_free(pdl_formula* f) { delete f; }
void pdl_model_free(pdl_model* m) { delete m; }
void pdl_derivation_free(pdl_derivation* d) { delete d; }

pdl_status pdl_parse(const char* text, pdl_fragment frag, pdl_formula** out) {
  return guarded([&] {
    if (text == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = new pdl_formula{pdl::parse(text, cxx_fragment(frag))};
  });
}

pdl_status pdl_print(const pdl_formula* f, char** out) {
  return guarded([&] {
    if (f == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = dup_string(pdl::print(f->id));
  });
}

pdl_status pdl_validate_fragment(const pdl_formula* f, pdl_fragment frag) {
  return guarded([&] {
    if (f == nullptr) throw pdl::ArgError("null argument");
    pdl::require_fragment(f->id, cxx_fragment(frag));
  });
}

pdl_status pdl_props_of(const pdl_formula* f, char** out) {
  return guarded([&] {
    if (f == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    std::string joined;
    for (const auto& s : pdl::props_of(f->id)) {
      if (!joined.empty()) joined += ' ';
      joined += s;
    }
    *out = dup_string(joined);
  });
}

pdl_status pdl_formula_size(const pdl_formula* f, long long* out) {
  return guarded([&] {
    if (f == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = pdl::formula_size(f->id);
  });
}

int pdl_formula_equal(const pdl_formula* a, const pdl_formula* b) {
  return a != nullptr && b != nullptr && a->id == b->id ? 1 : 0;
}

pdl_status pdl_bot_substitute(const pdl_formula* f, int max_premises, pdl_formula** out) {
  return guarded([&] {
    if (f == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = new pdl_formula{pdl::bot_substitute(f->id, max_premises)};
  });
}

pdl_status pdl_model_parse(const char* text, pdl_model** out) {
  return guarded([&] {
    if (text == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = new pdl_model{pdl::parse_sdm(text)};
  });
}

pdl_status pdl_model_read(const char* path, pdl_model** out) {
  return guarded([&] {
    if (path == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = new pdl_model{pdl::read_sdm_file(path)};
  });
}

pdl_status pdl_model_write(const pdl_model* m, char** out) {
  return guarded([&] {
    if (m == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = dup_string(pdl::write_sdm(m->value));
  });
}

pdl_status pdl_model_world_count(const pdl_model* m, size_t* out) {
  return guarded([&] {
    if (m == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = m->value.world_count();
  });
}

pdl_status pdl_full_model(const char* symbols, pdl_model** out) {
  return guarded([&] {
    if (symbols == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = new pdl_model{pdl::full_model(parse_symbols(symbols))};
  });
}

pdl_status pdl_eval_team(const pdl_model* m, const pdl_formula* f, pdl_fragment frag,
                         pdl_split_strategy strategy, int* out) {
  return guarded([&] {
    if (m == nullptr || f == nullptr || out == nullptr)
      throw pdl::ArgError("null argument");
    const auto strat = strategy == PDL_SPLIT_PARTITION ? pdl::SplitStrategy::Partition
                                                       : pdl::SplitStrategy::General;
    *out = pdl::eval_team(m->value, f->id, cxx_fragment(frag), strat) ? 1 : 0;
  });
}

pdl_status pdl_eval_kripke(const pdl_model* m, size_t world, const pdl_formula* f,
                           pdl_fragment frag, int* out) {
  return guarded([&] {
    if (m == nullptr || f == nullptr || out == nullptr)
      throw pdl::ArgError("null argument");
    *out = pdl::eval_kripke(m->value, world, f->id, cxx_fragment(frag)) ? 1 : 0;
  });
}

pdl_status pdl_eval_global(const pdl_model* m, const pdl_formula* f, pdl_fragment frag,
                           int* out) {
  return guarded([&] {
    if (m == nullptr || f == nullptr || out == nullptr)
      throw pdl::ArgError("null argument");
    *out = pdl::eval_global(m->value, f->id, cxx_fragment(frag)) ? 1 : 0;
  });
}

pdl_status pdl_validity(const pdl_formula* f, pdl_fragment frag, int jobs, int* verdict,
                        pdl_model** witness, size_t* witness_world) {
  return guarded([&] {
    if (f == nullptr) throw pdl::ArgError("null argument");
    emit_verdict(pdl::validity(f->id, cxx_fragment(frag), jobs), verdict, witness,
                 witness_world);
  });
}

pdl_status pdl_satisfiable(const pdl_formula* f, pdl_fragment frag, int jobs, int* verdict,
                           pdl_model** witness, size_t* witness_world) {
  return guarded([&] {
    if (f == nullptr) throw pdl::ArgError("null argument");
    emit_verdict(pdl::satisfiable(f->id, cxx_fragment(frag), jobs), verdict, witness,
                 witness_world);
  });
}

pdl_status pdl_equivalent(const pdl_formula* a, const pdl_formula* b, pdl_fragment frag,
                          int jobs, int* verdict, pdl_model** witness,
                          size_t* witness_world) {
  return guarded([&] {
    if (a == nullptr || b == nullptr) throw pdl::ArgError("null argument");
    emit_verdict(pdl::equivalent(a->id, b->id, cxx_fragment(frag), jobs), verdict,
                 witness, witness_world);
  });
}

pdl_status pdl_team_validity(const pdl_formula* f, pdl_fragment frag, int jobs,
                             int* verdict, pdl_model** witness) {
  return guarded([&] {
    if (f == nullptr) throw pdl::ArgError("null argument");
    emit_verdict(pdl::team_validity(f->id, cxx_fragment(frag), jobs), verdict, witness,
                 nullptr);
  });
}

pdl_status pdl_team_satisfiable(const pdl_formula* f, pdl_fragment frag, int jobs,
                                int* verdict, pdl_model** witness) {
  return guarded([&] {
    if (f == nullptr) throw pdl::ArgError("null argument");
    emit_verdict(pdl::team_satisfiable(f->id, cxx_fragment(frag), jobs), verdict, witness,
                 nullptr);
  });
}

pdl_status pdl_team_equivalent(const pdl_formula* a, const pdl_formula* b,
                               pdl_fragment frag, int jobs, int* verdict,
                               pdl_model** witness) {
  return guarded([&] {
    if (a == nullptr || b == nullptr) throw pdl::ArgError("null argument");
    emit_verdict(pdl::team_equivalent(a->id, b->id, cxx_fragment(frag), jobs), verdict,
                 witness, nullptr);
  });
}

pdl_status pdl_team_vs_kripke(const pdl_formula* team_f, pdl_fragment team_frag,
                              const pdl_formula* kripke_f, pdl_fragment kripke_frag,
                              int jobs, int* verdict, pdl_model** witness) {
  return guarded([&] {
    if (team_f == nullptr || kripke_f == nullptr) throw pdl::ArgError("null argument");
    emit_verdict(pdl::team_vs_kripke(team_f->id, cxx_fragment(team_frag), kripke_f->id,
                                     cxx_fragment(kripke_frag), jobs),
                 verdict, witness, nullptr);
  });
}

pdl_status pdl_downward_closure_scan(const pdl_formula* f, int* closed, pdl_model** team,
                                     pdl_model** subteam) {
  return guarded([&] {
    if (f == nullptr || closed == nullptr) throw pdl::ArgError("null argument");
    std::vector<std::string> syms = pdl::props_of(f->id);
    std::erase(syms, std::string(pdl::k_top_witness));
    const auto witness =
        pdl::downward_closure_scan(f->id, pdl::Signature::of(std::move(syms)));
    *closed = witness ? 0 : 1;
    if (team != nullptr) *team = witness ? new pdl_model{witness->team} : nullptr;
    if (subteam != nullptr)
      *subteam = witness ? new pdl_model{witness->subteam} : nullptr;
  });
}

pdl_status pdl_transfer_check(const pdl_formula* f, int* holds) {
  return guarded([&] {
    if (f == nullptr || holds == nullptr) throw pdl::ArgError("null argument");
    *holds = pdl::transfer_check(f->id) ? 1 : 0;
  });
}

pdl_status pdl_inexpressibility_scan(const pdl_formula* target,
                                     const char* source_fragment, const char* symbols,
                                     int max_size, int* found, pdl_formula** match) {
  return guarded([&] {
    if (target == nullptr || found == nullptr) throw pdl::ArgError("null argument");
    const pdl::EnumBudget budget{parse_symbols(symbols), max_size};
    const auto hit =
        pdl::inexpressibility_scan(target->id, budget, named_fragment(source_fragment));
    *found = hit ? 1 : 0;
    if (match != nullptr) *match = hit ? new pdl_formula{*hit} : nullptr;
  });
}

pdl_status pdl_flatness_check(const pdl_formula* f, const char* symbols, int* flat) {
  return guarded([&] {
    if (f == nullptr || flat == nullptr) throw pdl::ArgError("null argument");
    *flat = pdl::flatness_check(f->id, parse_symbols(symbols)) ? 1 : 0;
  });
}

pdl_status pdl_translate(const pdl_formula* f, const char* from, const char* to,
                         pdl_formula** out) {
  return guarded([&] {
    if (f == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = new pdl_formula{
        pdl::translate(f->id, named_fragment(from), named_fragment(to))};
  });
}

pdl_status pdl_characteristic_formula(const pdl_model* m, const char* symbols,
                                      pdl_formula** out) {
  return guarded([&] {
    if (m == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    const pdl::Signature phi =
        symbols == nullptr || *symbols == '\0'
            ? m->value.sig
            : parse_symbols(symbols);
    *out = new pdl_formula{pdl::characteristic_formula(m->value, phi)};
  });
}

pdl_status pdl_defining_formula(const pdl_model* const* models, size_t count,
                                const char* symbols, pdl_formula** out) {
  return guarded([&] {
    if (models == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    std::vector<pdl::SDModel> all;
    all.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (models[i] == nullptr) throw pdl::ArgError("null model in class");
      all.push_back(models[i]->value);
    }
    pdl::Signature phi = symbols == nullptr || *symbols == '\0'
                             ? (count > 0 ? all[0].sig : pdl::Signature{})
                             : parse_symbols(symbols);
    *out = new pdl_formula{pdl::defining_formula(all, phi)};
  });
}

pdl_status pdl_derivation_parse(const char* text, pdl_derivation** out) {
  return guarded([&] {
    if (text == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = new pdl_derivation{pdl::parse_prf(text)};
  });
}

pdl_status pdl_derivation_read(const char* path, pdl_derivation** out) {
  return guarded([&] {
    if (path == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = new pdl_derivation{pdl::read_prf_file(path)};
  });
}

pdl_status pdl_check_derivation(const pdl_derivation* d, int* ok, int* error_line) {
  return guarded([&] {
    if (d == nullptr || ok == nullptr) throw pdl::ArgError("null argument");
    const auto err = pdl::check_derivation(d->value);
    *ok = err ? 0 : 1;
    if (error_line != nullptr) *error_line = err ? err->line : 0;
    if (err) g_last_error = err->reason;
  });
}

pdl_status pdl_soundness_audit(const pdl_derivation* d, int* ok, int* error_line) {
  return guarded([&] {
    if (d == nullptr || ok == nullptr) throw pdl::ArgError("null argument");
    const auto err = pdl::soundness_audit(d->value);
    *ok = err ? 0 : 1;
    if (error_line != nullptr) *error_line = err ? err->line : 0;
    if (err) g_last_error = err->reason;
  });
}

pdl_status pdl_derivation_theorem(const pdl_derivation* d, pdl_formula** out) {
  return guarded([&] {
    if (d == nullptr || out == nullptr) throw pdl::ArgError("null argument");
    *out = new pdl_formula{d->value.theorem()};
  });
}

}  // extern "C"
