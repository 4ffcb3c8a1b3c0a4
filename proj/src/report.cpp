#include "pdectl/report.hpp"

#include <cstdio>
#include <sstream>

#include "pdectl/error.hpp"
#include "pdectl/parser.hpp"

namespace pdectl {

namespace {

using Names = std::vector<std::string>;

std::string str(const Polynomial& p, const Names& names) { return p.to_string(names); }

std::string ideal_text(const Ideal& i, const Names& names) {
  auto g = i.groebner_basis();
  if (g.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t j = 0; j < g.size(); ++j) out += (j ? ", " : "") + str(g[j], names);
  return out + ")";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string indent(const std::string& block, const std::string& pad = "  ") {
  std::string out;
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line)) out += pad + line + "\n";
  return out;
}

Json poly_list(const std::vector<Polynomial>& ps, const Names& names) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(str(p, names));
  return a;
}

Json ideal_json(const Ideal& i, const Names& names) { return Json{{"generators", poly_list(i.groebner_basis(), names)}}; }

Json vector_json(const FreeModuleElement& v, const Names& names) { return poly_list(v.components(), names); }

Json vectors_json(const std::vector<FreeModuleElement>& vs, const Names& names) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vector_json(v, names));
  return a;
}

Json module_json(const Submodule& m, const Names& names) {
  return Json{{"rank", m.rank()}, {"generators", vectors_json(m.groebner().elements(), names)}};
}

Json matrix_json(const PolyMatrix& m, const Names& names) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(str(m.at(i, j), names));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

std::string matrix_text(const PolyMatrix& m, const Names& names) {
  if (m.cols() == 0) return "(" + std::to_string(m.rows()) + " x 0 matrix)\n";
  return m.to_string(names);
}

// Parsing back.

Polynomial poly_from(const Json& j, const Ring& ring) { return parse_polynomial(j.get<std::string>(), ring); }

std::vector<Polynomial> polys_from(const Json& j, const Ring& ring) {
  std::vector<Polynomial> out;
  for (const auto& e : j) out.push_back(poly_from(e, ring));
  return out;
}

Ideal ideal_from(const Json& j, const Ring& ring) { return Ideal(ring.nvars, polys_from(j.at("generators"), ring)); }

FreeModuleElement vector_from(const Json& j, const Ring& ring) { return FreeModuleElement(ring.nvars, polys_from(j, ring)); }

std::vector<FreeModuleElement> vectors_from(const Json& j, const Ring& ring) {
  std::vector<FreeModuleElement> out;
  for (const auto& v : j) out.push_back(vector_from(v, ring));
  return out;
}

Submodule module_from(const Json& j, const Ring& ring) {
  return Submodule(ring.nvars, j.at("rank").get<std::size_t>(), vectors_from(j.at("generators"), ring));
}

PolyMatrix matrix_from(const Json& j, const Ring& ring) {
  const std::size_t rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
  PolyMatrix m(ring.nvars, rows, cols);
  const Json& e = j.at("entries");
  if (e.size() != rows) throw InvalidArgument("matrix entry count does not match its shape");
  for (std::size_t i = 0; i < rows; ++i) {
    if (e[i].size() != cols) throw InvalidArgument("matrix row does not match its shape");
    for (std::size_t jj = 0; jj < cols; ++jj) m.at(i, jj) = poly_from(e[i][jj], ring);
  }
  return m;
}

Json header(const AnalysisReport& r, const char* kind) {
  return Json{{"kind", kind},
              {"ring", {{"nvars", r.nvars}, {"variables", r.variables}}},
              {"space", std::string(name(r.space))},
              {"matrix", matrix_json(r.matrix, r.variables)}};
}

std::string header_text(const AnalysisReport& r) {
  std::string vars;
  for (std::size_t i = 0; i < r.variables.size(); ++i) vars += (i ? "," : "") + r.variables[i];
  return "system: " + std::to_string(r.matrix.rows()) + " x " + std::to_string(r.k) + " over Q[" + vars +
         "], signal space " + std::string(name(r.space)) + "\n" + indent(matrix_text(r.matrix, r.variables));
}

std::string closure_line(const AnalysisReport& r) {
  std::string out = "Willems closure (" + std::string(name(r.space)) + "): ";
  if (!r.closure.decided()) return out + "UNDECIDABLE, " + r.closure.method + "\n";
  const Submodule& c = *r.closure.module;
  const Submodule p = Submodule::row_module(r.matrix);
  if (c == p)
    out += "P itself";
  else if (c.is_full())
    out += "A^" + std::to_string(c.rank());
  else
    out += "a strictly larger module";
  return out + " (" + r.closure.method + ")\n";
}

}  // namespace

std::string verdict(const AnalysisReport& r) {
  if (!r.controllable_in_space) return "UNDECIDABLE";
  return *r.controllable_in_space ? "CONTROLLABLE" : "NOT CONTROLLABLE";
}

std::string render_text(const AnalysisReport& r) {
  const Names& v = r.variables;
  const auto& g = r.grade;
  std::string out = header_text(r);
  out += "verdict: " + verdict(r) + "\n";
  out += "rank: " + std::to_string(r.rank) + " (" + std::to_string(r.generator_count) + " generators)\n";
  out += "characteristic ideal: " + ideal_text(r.characteristic_ideal, v) + ", characteristic variety dimension " +
         std::to_string(r.characteristic_dimension) + "\n";
  out += "cancellation ideal: " + ideal_text(r.cancellation_ideal, v) + (r.free ? " (free)" : " (not free)") +
         ", cancellation variety dimension " + std::to_string(r.cancellation_dimension) + "\n";
  out += "annihilator: " + ideal_text(r.annihilator, v) + "\n";
  out += "zero system: " + yes(g.zero_system) + "\n";
  out += "strongly controllable: " + yes(g.strongly_controllable) + "\n";
  out += "controllable (torsion free): " + yes(g.controllable) + "\n";
  out += "coordinate controllable: " + yes(g.coordinate_controllable) + "\n";
  out += "autonomous: " + yes(g.autonomous) + "\n";
  out += "strongly autonomous: " + yes(g.strongly_autonomous) + "\n";
  out += "solution space dimension: " +
         (r.solution_dimension ? std::to_string(*r.solution_dimension) : std::string("infinite")) + "\n";
  out += "surjective coordinates:";
  if (r.surjective_coordinates.empty()) out += " none";
  for (auto j : r.surjective_coordinates) out += " " + std::to_string(j);
  out += "\n";
  if (r.uncontrollable_polynomial) out += "uncontrollable polynomial: " + str(*r.uncontrollable_polynomial, v) + "\n";
  if (r.potential)
    out += "vector potential R:\n" + indent(matrix_text(*r.potential, v));
  else
    out += "vector potential: none\n";
  for (const auto& w : r.torsion_witnesses) out += "torsion witness: " + w.to_string(v) + "\n";
  out += closure_line(r);
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  return out;
}

Json to_json(const AnalysisReport& r) {
  const Names& v = r.variables;
  Json j = header(r, "analysis");
  j["verdict"] = verdict(r);
  j["generator_count"] = r.generator_count;
  j["rank"] = r.rank;
  j["characteristic_ideal"] = ideal_json(r.characteristic_ideal, v);
  j["characteristic_ideal"]["krull_dimension"] = r.characteristic_dimension;
  j["cancellation_ideal"] = ideal_json(r.cancellation_ideal, v);
  j["cancellation_ideal"]["free"] = r.free;
  j["cancellation_ideal"]["krull_dimension"] = r.cancellation_dimension;
  j["annihilator"] = ideal_json(r.annihilator, v);
  const auto& g = r.grade;
  j["grade"] = {{"zero_system", g.zero_system},
                {"strongly_controllable", g.strongly_controllable},
                {"controllable", g.controllable},
                {"coordinate_controllable", g.coordinate_controllable},
                {"autonomous", g.autonomous},
                {"strongly_autonomous", g.strongly_autonomous}};
  j["controllable_in_space"] = r.controllable_in_space ? Json(*r.controllable_in_space) : Json(nullptr);
  j["solution_dimension"] = r.solution_dimension ? Json(*r.solution_dimension) : Json("infinite");
  j["surjective_coordinates"] = r.surjective_coordinates;
  j["uncontrollable_polynomial"] = r.uncontrollable_polynomial ? Json(str(*r.uncontrollable_polynomial, v)) : Json(nullptr);
  j["potential"] = r.potential ? matrix_json(*r.potential, v) : Json(nullptr);
  j["torsion_witnesses"] = vectors_json(r.torsion_witnesses, v);
  j["decomposition"] = {{"controllable_part", module_json(r.decomposition.p0, v)},
                        {"torsion_generators", vectors_json(r.decomposition.torsion_generators, v)},
                        {"torsion_presentation", matrix_json(r.decomposition.torsion_presentation, v)},
                        {"torsion_annihilator", ideal_json(r.decomposition.torsion_annihilator, v)}};
  j["closure"] = {{"decided", r.closure.decided()},
                  {"method", r.closure.method},
                  {"module", r.closure.module ? module_json(*r.closure.module, v) : Json(nullptr)}};
  j["notes"] = r.notes;
  return j;
}

AnalysisReport analysis_from_json(const Json& j) {
  if (j.at("kind") != "analysis") throw InvalidArgument("not an analysis report");
  AnalysisReport r;
  r.variables = j.at("ring").at("variables").get<Names>();
  r.nvars = j.at("ring").at("nvars").get<std::size_t>();
  const Ring ring{r.nvars, r.variables};
  auto space = parse_signal_space(j.at("space").get<std::string>());
  if (!space) throw InvalidArgument("unknown signal space in report");
  r.space = *space;
  r.matrix = matrix_from(j.at("matrix"), ring);
  r.k = r.matrix.cols();
  r.generator_count = j.at("generator_count").get<std::size_t>();
  r.rank = j.at("rank").get<std::size_t>();
  r.characteristic_ideal = ideal_from(j.at("characteristic_ideal"), ring);
  r.characteristic_dimension = j.at("characteristic_ideal").at("krull_dimension").get<int>();
  r.cancellation_ideal = ideal_from(j.at("cancellation_ideal"), ring);
  r.free = j.at("cancellation_ideal").at("free").get<bool>();
  r.cancellation_dimension = j.at("cancellation_ideal").at("krull_dimension").get<int>();
  r.annihilator = ideal_from(j.at("annihilator"), ring);
  const Json& g = j.at("grade");
  r.grade.zero_system = g.at("zero_system").get<bool>();
  r.grade.strongly_controllable = g.at("strongly_controllable").get<bool>();
  r.grade.controllable = g.at("controllable").get<bool>();
  r.grade.coordinate_controllable = g.at("coordinate_controllable").get<bool>();
  r.grade.autonomous = g.at("autonomous").get<bool>();
  r.grade.strongly_autonomous = g.at("strongly_autonomous").get<bool>();
  if (!j.at("controllable_in_space").is_null()) r.controllable_in_space = j.at("controllable_in_space").get<bool>();
  if (j.at("solution_dimension").is_number()) r.solution_dimension = j.at("solution_dimension").get<std::size_t>();
  r.surjective_coordinates = j.at("surjective_coordinates").get<std::vector<std::size_t>>();
  if (!j.at("uncontrollable_polynomial").is_null())
    r.uncontrollable_polynomial = poly_from(j.at("uncontrollable_polynomial"), ring);
  if (!j.at("potential").is_null()) r.potential = matrix_from(j.at("potential"), ring);
  r.torsion_witnesses = vectors_from(j.at("torsion_witnesses"), ring);
  const Json& d = j.at("decomposition");
  r.decomposition = Decomposition{module_from(d.at("controllable_part"), ring),
                                  vectors_from(d.at("torsion_generators"), ring),
                                  matrix_from(d.at("torsion_presentation"), ring),
                                  ideal_from(d.at("torsion_annihilator"), ring)};
  const Json& c = j.at("closure");
  r.closure.method = c.at("method").get<std::string>();
  if (!c.at("module").is_null()) r.closure.module = module_from(c.at("module"), ring);
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string render_decomposition_text(const AnalysisReport& r) {
  const Names& v = r.variables;
  const Decomposition& d = r.decomposition;
  std::string out = header_text(r);
  out += "controllable part P0 (reduced basis):\n";
  for (const auto& e : d.p0.groebner().elements()) out += "  " + e.to_string(v) + "\n";
  if (d.torsion_generators.empty()) {
    out += "A^k/P is torsion free: P = P0, no uncontrollable part\n";
    return out;
  }
  out += "torsion generators of P0/P:\n";
  for (const auto& t : d.torsion_generators) out += "  " + t.to_string(v) + "\n";
  out += "P0/P = A^" + std::to_string(d.torsion_generators.size()) + " modulo the rows of:\n" +
         indent(matrix_text(d.torsion_presentation, v));
  out += "annihilator of P0/P: " + ideal_text(d.torsion_annihilator, v) + "\n";
  out += "note: the uncontrollable part is delivered as this presentation, not as a sub-system\n";
  return out;
}

Json decomposition_json(const AnalysisReport& r) {
  Json j = header(r, "decomposition");
  j["torsion_free"] = r.decomposition.torsion_generators.empty();
  j["decomposition"] = to_json(r).at("decomposition");
  return j;
}

std::string render_potential_text(const AnalysisReport& r) {
  std::string out = header_text(r);
  out += "verdict: " + verdict(r) + "\n";
  if (r.potential) {
    out += "vector potential R (P R = 0, Ker P = Im R):\n" + indent(matrix_text(*r.potential, r.variables));
  } else {
    out += "vector potential: none\n";
    for (const auto& w : r.torsion_witnesses) out += "torsion witness: " + w.to_string(r.variables) + "\n";
  }
  if (!r.closure.decided()) out += closure_line(r);
  return out;
}

Json potential_json(const AnalysisReport& r) {
  Json j = header(r, "potential");
  Json full = to_json(r);
  j["verdict"] = full["verdict"];
  j["potential"] = full["potential"];
  j["torsion_witnesses"] = full["torsion_witnesses"];
  return j;
}

std::string render_closure_text(const AnalysisReport& r) {
  std::string out = header_text(r) + closure_line(r);
  if (r.closure.decided()) {
    out += "closure (reduced basis):\n";
    for (const auto& e : r.closure.module->groebner().elements()) out += "  " + e.to_string(r.variables) + "\n";
    if (r.closure.module->is_zero()) out += "  (0)\n";
  }
  return out;
}

Json closure_json(const AnalysisReport& r) {
  Json j = header(r, "closure");
  j["closure"] = to_json(r).at("closure");
  return j;
}

std::string render_text(const EliminationResult& r) {
  std::string out = "projection onto the last " + std::to_string(r.keep) + " of " + std::to_string(r.matrix.cols()) +
                    " coordinates, signal space " + std::string(name(r.space)) + "\n";
  const auto& elems = r.projected.groebner().elements();
  if (r.keep == 1) {
    Ideal i(r.projected);
    out += "projected behavior: kernel of the ideal " + ideal_text(i, r.variables) + "\n";
  } else {
    out += "projected behavior: kernel of\n";
    for (const auto& e : elems) out += "  " + e.to_string(r.variables) + "\n";
    if (elems.empty()) out += "  (0)\n";
  }
  if (classify(r.space) == SpaceClass::Flat)
    out += "note: in a flat space the projection is only contained in this kernel\n";
  return out;
}

Json to_json(const EliminationResult& r) {
  Json j{{"kind", "elimination"},
         {"ring", {{"nvars", r.matrix.nvars()}, {"variables", r.variables}}},
         {"space", std::string(name(r.space))},
         {"matrix", matrix_json(r.matrix, r.variables)},
         {"keep", r.keep},
         {"projected", module_json(r.projected, r.variables)}};
  j["exact"] = classify(r.space) != SpaceClass::Flat;
  return j;
}

PbhResult run_pbh(const RationalMatrix& x, const RationalMatrix& u) {
  PbhResult r;
  r.x = x;
  r.u = u;
  r.matrix = kalman_matrix(x, u);
  r.minors = Ideal(1, r.matrix.minors(r.matrix.rows()));
  r.controllable = r.minors.is_unit();
  r.torsion_free = is_controllable(Submodule::row_module(r.matrix), SignalSpace::Dprime);
  if (r.controllable != r.torsion_free) throw std::logic_error("PBH test and torsion test disagree");
  return r;
}

std::string render_text(const PbhResult& r) {
  const Names v{"s"};
  std::string out = "Kalman matrix (s I - X, -U):\n" + indent(r.matrix.to_string(v));
  out += "ideal of maximal minors: " + ideal_text(r.minors, v) + "\n";
  out += std::string("verdict: ") + (r.controllable ? "CONTROLLABLE" : "NOT CONTROLLABLE") + "\n";
  out += "torsion test agrees: " + yes(r.controllable == r.torsion_free) + "\n";
  return out;
}

Json to_json(const PbhResult& r) {
  const Names v{"s"};
  return Json{{"kind", "pbh"},
              {"matrix", matrix_json(r.matrix, v)},
              {"minors_ideal", ideal_json(r.minors, v)},
              {"verdict", r.controllable ? "CONTROLLABLE" : "NOT CONTROLLABLE"},
              {"controllable", r.controllable},
              {"torsion_free", r.torsion_free}};
}

std::string render_text(const FrequencyReport& r) {
  const SampleSpec& s = r.spec;
  std::string out =
      "random operators: " + std::to_string(s.rows) + " x " + std::to_string(s.cols) + " over " +
      std::to_string(s.nvars) + " variables, entries of degree <= " + std::to_string(s.degree) + ", " +
      std::to_string(s.trials) + " trials, seed " + std::to_string(s.seed) + "\n" +
      "Zariski-open dense sets have full measure, so random coefficients should land in them; "
      "rare exceptional draws are tolerated by the thresholds.\n";
  auto line = [&](const char* label, std::size_t count) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.fraction(count));
    out += std::string(label) + ": " + std::to_string(count) + " (" + buf + ")\n";
  };
  line("autonomous", r.autonomous);
  line("strongly controllable", r.strongly_controllable);
  line("controllable, not strongly", r.controllable);
  line("coordinate controllable only", r.coordinate_only);
  line("failures", r.failures);
  char buf[96];
  std::snprintf(buf, sizeof buf, "controllable fraction: %.3f\n", r.controllable_fraction());
  out += buf;
  std::snprintf(buf, sizeof buf, "time per trial: mean %.4fs, max %.4fs\n", r.time_mean, r.time_max);
  out += buf;
  for (const auto& f : r.failure_log) out += "failure at trial " + std::to_string(f.index) + ": " + f.message + "\n";
  return out;
}

Json to_json(const FrequencyReport& r) {
  const SampleSpec& s = r.spec;
  Json pool = Json::array();
  for (const auto& q : s.pool) pool.push_back(q.get_str());
  Json failures = Json::array();
  for (const auto& f : r.failure_log) failures.push_back({{"index", f.index}, {"message", f.message}});
  return Json{{"kind", "genericity"},
              {"spec",
               {{"rows", s.rows},
                {"cols", s.cols},
                {"nvars", s.nvars},
                {"degree", s.degree},
                {"trials", s.trials},
                {"seed", s.seed},
                {"pool", pool}}},
              {"counts",
               {{"autonomous", r.autonomous},
                {"strongly_controllable", r.strongly_controllable},
                {"controllable", r.controllable},
                {"coordinate_only", r.coordinate_only},
                {"failures", r.failures}}},
              {"controllable_fraction", r.controllable_fraction()},
              {"failure_log", failures},
              {"timing", {{"total", r.time_total}, {"min", r.time_min}, {"max", r.time_max}, {"mean", r.time_mean}}}};
}

FrequencyReport frequency_from_json(const Json& j) {
  if (j.at("kind") != "genericity") throw InvalidArgument("not a genericity report");
  FrequencyReport r;
  const Json& s = j.at("spec");
  r.spec.rows = s.at("rows").get<std::size_t>();
  r.spec.cols = s.at("cols").get<std::size_t>();
  r.spec.nvars = s.at("nvars").get<std::size_t>();
  r.spec.degree = s.at("degree").get<int>();
  r.spec.trials = s.at("trials").get<std::size_t>();
  r.spec.seed = s.at("seed").get<std::uint64_t>();
  r.spec.pool.clear();
  for (const auto& q : s.at("pool")) r.spec.pool.emplace_back(q.get<std::string>());
  const Json& c = j.at("counts");
  r.autonomous = c.at("autonomous").get<std::size_t>();
  r.strongly_controllable = c.at("strongly_controllable").get<std::size_t>();
  r.controllable = c.at("controllable").get<std::size_t>();
  r.coordinate_only = c.at("coordinate_only").get<std::size_t>();
  r.failures = c.at("failures").get<std::size_t>();
  for (const auto& f : j.at("failure_log"))
    r.failure_log.push_back({f.at("index").get<std::size_t>(), f.at("message").get<std::string>()});
  const Json& t = j.at("timing");
  r.time_total = t.at("total").get<double>();
  r.time_min = t.at("min").get<double>();
  r.time_max = t.at("max").get<double>();
  r.time_mean = t.at("mean").get<double>();
  return r;
}

std::string render_text(const std::vector<NamedCheck>& checks) {
  std::string out = "grad, curl, div resolve A/m over Q[d1,d2,d3]:\n";
  bool all = true;
  for (const auto& c : checks) {
    out += std::string(c.passed ? "  ok    " : "  FAIL  ") + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]") + "\n";
    all = all && c.passed;
  }
  out += all ? "the sequence is exact\n" : "the sequence is NOT exact\n";
  return out;
}

Json to_json(const std::vector<NamedCheck>& checks) {
  Json a = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    all = all && c.passed;
  }
  return Json{{"kind", "derham"}, {"checks", a}, {"exact", all}};
}

RationalMatrix parse_rational_matrix(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("matrix is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw InvalidArgument("matrix must be a JSON array of rows");
  RationalMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidArgument("matrix rows must be arrays");
    std::vector<Rational> r;
    for (const auto& e : row) {
      if (e.is_number_integer()) {
        r.emplace_back(std::to_string(e.get<long long>()));
      } else if (e.is_string()) {
        Rational q;
        if (q.set_str(e.get<std::string>(), 10) != 0 || q.get_den() == 0)
          throw InvalidArgument("bad rational entry '" + e.get<std::string>() + "'");
        q.canonicalize();
        r.push_back(q);
      } else {
        throw InvalidArgument("matrix entries must be integers or \"p/q\" strings");
      }
    }
    if (!m.empty() && r.size() != m.front().size()) throw InvalidArgument("matrix rows have different lengths");
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace pdectl
