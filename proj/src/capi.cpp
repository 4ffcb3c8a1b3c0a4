#include "pdectl/pdectl.h"

#include <new>
#include <string>

#include "pdectl/error.hpp"
#include "pdectl/parser.hpp"
#include "pdectl/report.hpp"

struct pdectl_problem {
  pdectl::ProblemFile file;
};

struct pdectl_report {
  std::string text;
  std::string json;
};

namespace {

thread_local std::string last_error;

pdectl_status fail(pdectl_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
pdectl_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const pdectl::ParseError& e) {
    return fail(PDECTL_ERR_PARSE, e.what());
  } catch (const pdectl::Undecidable& e) {
    return fail(PDECTL_UNDECIDABLE, e.what());
  } catch (const pdectl::UnsupportedCase& e) {
    return fail(PDECTL_ERR_UNSUPPORTED, e.what());
  } catch (const pdectl::InvalidArgument& e) {
    return fail(PDECTL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const pdectl::StructuralError& e) {
    return fail(PDECTL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(PDECTL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PDECTL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PDECTL_ERR_INTERNAL, e.what());
  }
}

pdectl::SignalSpace to_space(pdectl_space s) {
  switch (s) {
    case PDECTL_SPACE_DPRIME: return pdectl::SignalSpace::Dprime;
    case PDECTL_SPACE_CINF: return pdectl::SignalSpace::Cinfinity;
    case PDECTL_SPACE_SPRIME: return pdectl::SignalSpace::Sprime;
    case PDECTL_SPACE_S: return pdectl::SignalSpace::Schwartz;
    case PDECTL_SPACE_EPRIME: return pdectl::SignalSpace::Eprime;
    case PDECTL_SPACE_D: return pdectl::SignalSpace::Dtest;
  }
  throw pdectl::InvalidArgument("unknown signal space code " + std::to_string(static_cast<int>(s)));
}

pdectl_status emit(std::string text, const pdectl::Json& json, pdectl_report** out) {
  *out = new pdectl_report{std::move(text), json.dump(2)};
  return PDECTL_OK;
}

pdectl_status check_out(const void* problem, pdectl_report** out) {
  if (!out) return fail(PDECTL_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  if (!problem) return fail(PDECTL_ERR_INVALID_ARGUMENT, "null problem");
  return PDECTL_OK;
}

pdectl::AnalysisReport run(const pdectl_problem* p, pdectl_space space) {
  return pdectl::analyze(p->file.matrix, to_space(space), p->file.ring.names);
}

pdectl_status undecided(const pdectl::AnalysisReport& r) {
  if (r.closure.decided()) return PDECTL_OK;
  return fail(PDECTL_UNDECIDABLE, "Willems closure " + r.closure.method);
}

}  // namespace

extern "C" {

const char* pdectl_version(void) { return "0.1.0"; }

const char* pdectl_last_error(void) { return last_error.c_str(); }

pdectl_status pdectl_space_from_name(const char* name, pdectl_space* out) {
  return guarded([&] {
    if (!name || !out) return fail(PDECTL_ERR_INVALID_ARGUMENT, "null argument");
    auto s = pdectl::parse_signal_space(name);
    if (!s) return fail(PDECTL_ERR_INVALID_ARGUMENT, std::string("unknown signal space '") + name + "'");
    *out = static_cast<pdectl_space>(static_cast<int>(*s));
    return PDECTL_OK;
  });
}

pdectl_status pdectl_problem_from_string(const char* text, pdectl_problem** out) {
  return guarded([&] {
    if (!text || !out) return fail(PDECTL_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    *out = new pdectl_problem{pdectl::parse_problem(text)};
    return PDECTL_OK;
  });
}

pdectl_status pdectl_problem_from_file(const char* path, pdectl_problem** out) {
  return guarded([&] {
    if (!path || !out) return fail(PDECTL_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    *out = new pdectl_problem{pdectl::parse_matrix_file(path)};
    return PDECTL_OK;
  });
}

int pdectl_problem_space(const pdectl_problem* problem) {
  if (!problem || !problem->file.space) return -1;
  return static_cast<int>(*problem->file.space);
}

void pdectl_problem_free(pdectl_problem* problem) { delete problem; }

pdectl_status pdectl_analyze(const pdectl_problem* problem, pdectl_space space, pdectl_report** out) {
  return guarded([&] {
    if (auto s = check_out(problem, out)) return s;
    auto r = run(problem, space);
    emit(pdectl::render_text(r), pdectl::to_json(r), out);
    return undecided(r);
  });
}

pdectl_status pdectl_potential(const pdectl_problem* problem, pdectl_space space, pdectl_report** out) {
  return guarded([&] {
    if (auto s = check_out(problem, out)) return s;
    auto r = run(problem, space);
    emit(pdectl::render_potential_text(r), pdectl::potential_json(r), out);
    return undecided(r);
  });
}

pdectl_status pdectl_decompose(const pdectl_problem* problem, pdectl_report** out) {
  return guarded([&] {
    if (auto s = check_out(problem, out)) return s;
    auto r = run(problem, PDECTL_SPACE_DPRIME);
    return emit(pdectl::render_decomposition_text(r), pdectl::decomposition_json(r), out);
  });
}

pdectl_status pdectl_closure(const pdectl_problem* problem, pdectl_space space, pdectl_report** out) {
  return guarded([&] {
    if (auto s = check_out(problem, out)) return s;
    auto r = run(problem, space);
    emit(pdectl::render_closure_text(r), pdectl::closure_json(r), out);
    return undecided(r);
  });
}

pdectl_status pdectl_eliminate(const pdectl_problem* problem, pdectl_space space, size_t keep, pdectl_report** out) {
  return guarded([&] {
    if (auto s = check_out(problem, out)) return s;
    const auto& f = problem->file;
    pdectl::EliminationResult e{f.matrix, f.ring.names, to_space(space), keep,
                                pdectl::project_behavior(pdectl::Submodule::row_module(f.matrix), keep)};
    return emit(pdectl::render_text(e), pdectl::to_json(e), out);
  });
}

pdectl_status pdectl_pbh(const char* x_json, const char* u_json, pdectl_report** out) {
  return guarded([&] {
    if (!x_json || !u_json || !out) return fail(PDECTL_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    auto r = pdectl::run_pbh(pdectl::parse_rational_matrix(x_json), pdectl::parse_rational_matrix(u_json));
    return emit(pdectl::render_text(r), pdectl::to_json(r), out);
  });
}

void pdectl_generic_spec_default(pdectl_generic_spec* spec) {
  if (!spec) return;
  *spec = pdectl_generic_spec{1, 2, 2, 2, 50, -5, 5, 1, 0};
}

pdectl_status pdectl_generic(const pdectl_generic_spec* spec, pdectl_report** out) {
  return guarded([&] {
    if (!spec || !out) return fail(PDECTL_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    pdectl::SampleSpec s;
    s.rows = spec->rows;
    s.cols = spec->cols;
    s.nvars = spec->nvars;
    s.degree = spec->degree;
    s.trials = spec->trials;
    s.pool = pdectl::SampleSpec::integer_pool(spec->pool_min, spec->pool_max);
    s.seed = spec->seed;
    auto r = pdectl::run_experiment(s, spec->threads);
    return emit(pdectl::render_text(r), pdectl::to_json(r), out);
  });
}

pdectl_status pdectl_demo_derham(pdectl_report** out) {
  return guarded([&] {
    if (!out) return fail(PDECTL_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    auto checks = pdectl::derham_resolution_checks();
    return emit(pdectl::render_text(checks), pdectl::to_json(checks), out);
  });
}

const char* pdectl_report_text(const pdectl_report* report) { return report ? report->text.c_str() : ""; }

const char* pdectl_report_json(const pdectl_report* report) { return report ? report->json.c_str() : ""; }

void pdectl_report_free(pdectl_report* report) { delete report; }

}  // extern "C"
