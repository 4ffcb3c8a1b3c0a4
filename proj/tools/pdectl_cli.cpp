// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "pdectl/pdectl.h"

namespace {

enum Exit { kOk = 0, kInputError = 1, kUndecidable = 2 };

struct ProblemDeleter {
  void operator()(pdectl_problem* p) const { pdectl_problem_free(p); }
};
struct ReportDeleter {
  void operator()(pdectl_report* r) const { pdectl_report_free(r); }
};
using Problem = std::unique_ptr<pdectl_problem, ProblemDeleter>;
using Report = std::unique_ptr<pdectl_report, ReportDeleter>;

struct Common {
  std::string file;
  std::string space;
  bool json = false;
};

int report_error(const char* what) {
  std::cerr << "error: " << what << "\n";
  return kInputError;
}

// Prints whatever report was produced and maps the status to an exit code.
int finish(pdectl_status status, pdectl_report* raw, bool json) {
  Report report(raw);
  if (report) std::cout << (json ? pdectl_report_json(report.get()) : pdectl_report_text(report.get()))
                        << (json ? "\n" : "");
  if (status == PDECTL_OK) return kOk;
  if (status == PDECTL_UNDECIDABLE) {
    std::cerr << "undecidable: " << pdectl_last_error() << "\n";
    return kUndecidable;
  }
  return report_error(pdectl_last_error());
}

std::optional<Problem> load(const Common& c, pdectl_space* space, int* code) {
  pdectl_problem* raw = nullptr;
  if (pdectl_problem_from_file(c.file.c_str(), &raw) != PDECTL_OK) {
    *code = report_error(pdectl_last_error());
    return std::nullopt;
  }
  Problem p(raw);
  *space = PDECTL_SPACE_DPRIME;
  if (int declared = pdectl_problem_space(p.get()); declared >= 0) *space = static_cast<pdectl_space>(declared);
  if (!c.space.empty() && pdectl_space_from_name(c.space.c_str(), space) != PDECTL_OK) {
    *code = report_error(pdectl_last_error());
    return std::nullopt;
  }
  return p;
}

void add_common(CLI::App* sub, Common& c, bool with_space = true) {
  sub->add_option("file", c.file, "problem file")->required();
  if (with_space) sub->add_option("--space", c.space, "Dprime, Cinf, Sprime, S, Eprime or D (default: the file's, else Dprime)");
  sub->add_flag("--json", c.json, "print the JSON report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Controllability of linear constant-coefficient PDE systems"};
  app.set_version_flag("--version", pdectl_version());
  app.require_subcommand(1);

  Common analyze_c, potential_c, decompose_c, closure_c, eliminate_c;
  auto* analyze = app.add_subcommand("analyze", "full structural report");
  add_common(analyze, analyze_c);
  auto* potential = app.add_subcommand("potential", "vector potential, or torsion witnesses");
  add_common(potential, potential_c);
  auto* decompose = app.add_subcommand("decompose", "controllable part and torsion presentation");
  add_common(decompose, decompose_c, false);
  auto* closure = app.add_subcommand("closure", "Willems closure in a signal space");
  add_common(closure, closure_c);
  auto* eliminate = app.add_subcommand("eliminate", "project onto the last coordinates");
  add_common(eliminate, eliminate_c);
  std::size_t keep = 1;
  eliminate->add_option("--keep", keep, "number of trailing coordinates kept")->required();

  auto* pbh = app.add_subcommand("pbh", "Hautus test for x' = Xx + Uu");
  std::string x_json, u_json;
  bool pbh_json = false;
  pbh->add_option("--X", x_json, "state matrix as JSON rows")->required();
  pbh->add_option("--U", u_json, "input matrix as JSON rows")->required();
  pbh->add_flag("--json", pbh_json, "print the JSON report");

  auto* generic = app.add_subcommand("generic", "sample random operators and count controllability grades");
  pdectl_generic_spec spec;
  pdectl_generic_spec_default(&spec);
  bool generic_json = false;
  generic->add_option("--rows", spec.rows, "l")->capture_default_str();
  generic->add_option("--cols", spec.cols, "k")->capture_default_str();
  generic->add_option("--nvars", spec.nvars, "n")->capture_default_str();
  generic->add_option("--degree", spec.degree, "entry degree bound")->capture_default_str();
  generic->add_option("--trials", spec.trials, "number of samples")->capture_default_str();
  generic->add_option("--seed", spec.seed, "random seed")->capture_default_str();
  generic->add_option("--pool-min", spec.pool_min, "smallest coefficient")->capture_default_str();
  generic->add_option("--pool-max", spec.pool_max, "largest coefficient")->capture_default_str();
  generic->add_option("--threads", spec.threads, "worker threads, 0 for all cores")->capture_default_str();
  generic->add_flag("--json", generic_json, "print the JSON report");

  auto* derham = app.add_subcommand("demo-derham", "check that grad, curl, div resolve A/m");
  bool derham_json = false;
  derham->add_flag("--json", derham_json, "print the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  pdectl_report* out = nullptr;
  pdectl_space space;
  int code = kOk;

  auto with_problem = [&](const Common& c, auto&& call) {
    auto p = load(c, &space, &code);
    if (!p) return code;
    pdectl_status status = call(p->get());
    return finish(status, out, c.json);
  };

  if (*analyze)
    return with_problem(analyze_c, [&](pdectl_problem* p) { return pdectl_analyze(p, space, &out); });
  if (*potential)
    return with_problem(potential_c, [&](pdectl_problem* p) { return pdectl_potential(p, space, &out); });
  if (*decompose) return with_problem(decompose_c, [&](pdectl_problem* p) { return pdectl_decompose(p, &out); });
  if (*closure)
    return with_problem(closure_c, [&](pdectl_problem* p) { return pdectl_closure(p, space, &out); });
  if (*eliminate)
    return with_problem(eliminate_c, [&](pdectl_problem* p) { return pdectl_eliminate(p, space, keep, &out); });
  if (*pbh) {
    pdectl_status s = pdectl_pbh(x_json.c_str(), u_json.c_str(), &out);
    return finish(s, out, pbh_json);
  }
  if (*generic) {
    pdectl_status s = pdectl_generic(&spec, &out);
    return finish(s, out, generic_json);
  }
  if (*derham) {
    pdectl_status s = pdectl_demo_derham(&out);
    Report r(out);
    if (s != PDECTL_OK) return report_error(pdectl_last_error());
    const char* text = derham_json ? pdectl_report_json(r.get()) : pdectl_report_text(r.get());
    std::cout << text << (derham_json ? "\n" : "");
    return std::string(pdectl_report_json(r.get())).find("\"exact\": true") != std::string::npos ? kOk : kInputError;
  }
  return kInputError;
}
