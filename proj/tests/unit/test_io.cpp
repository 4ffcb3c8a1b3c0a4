#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pdectl/report.hpp"

using namespace pdectl;
using fx::poly;

namespace {

ParseError parse_error(std::string_view src, const Ring& ring) {
  try {
    parse_polynomial(src, ring);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for " << src);
  return ParseError("", 0, 0);
}

ParseError problem_error(std::string_view text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0, 0);
}

Ring dring(std::size_t n) { return Ring::standard(n); }

}  // namespace

TEST_CASE("polynomial expressions") {
  CHECK(parse_polynomial("d1^2 + d2^2", dring(2)) == poly("x1^2 + x2^2", 2));
  CHECK(parse_polynomial("-d3", dring(3)) == -Polynomial::variable(3, 2));
  CHECK(parse_polynomial("d1*d2 - 1/2", dring(2)) ==
        Polynomial::variable(2, 0) * Polynomial::variable(2, 1) - Polynomial::constant(2, Rational(1, 2)));
  CHECK(parse_polynomial("(d1 + 1)^2", dring(1)) == poly("x1^2 + 2*x1 + 1", 1));
  CHECK(parse_polynomial("-d1^2", dring(1)) == poly("-1*x1^2", 1));
  CHECK(parse_polynomial("x2 - d2", dring(2)).is_zero());
  CHECK(parse_polynomial("3/6*dx", Ring{2, {"dx", "dy"}}) == poly("1/2*x1", 2));
}

TEST_CASE("polynomial expression errors carry positions") {
  auto e1 = parse_error("d1 + q", dring(2));
  CHECK(e1.column() == 6);
  CHECK(std::string(e1.what()).find("unknown variable 'q'") != std::string::npos);
  CHECK(parse_error("d3", dring(2)).column() == 1);
  CHECK(std::string(parse_error("d1^", dring(2)).what()).find("malformed exponent") != std::string::npos);
  CHECK(std::string(parse_error("d1^-2", dring(2)).what()).find("malformed exponent") != std::string::npos);
  CHECK(std::string(parse_error("d1^x", dring(2)).what()).find("malformed exponent") != std::string::npos);
  CHECK(std::string(parse_error("   ", dring(2)).what()).find("empty") != std::string::npos);
  auto im = parse_error("2 d1", dring(2));
  CHECK(im.column() == 3);
  CHECK(std::string(im.what()).find("implicit multiplication") != std::string::npos);
  CHECK_THROWS_AS(parse_polynomial("d1/d2", dring(2)), ParseError);
  CHECK_THROWS_AS(parse_polynomial("d1/0", dring(2)), ParseError);
  CHECK_THROWS_AS(parse_polynomial("0.5*d1", dring(2)), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(d1 + d2", dring(2)), ParseError);
  CHECK(parse_error("1 +\td1 +", dring(2)).line() == 1);
}

TEST_CASE("problem files") {
  auto d = parse_problem("# divergence\nring n=3 vars=d1,d2,d3\nmatrix 1 3\nd1, d2, d3\nspace=Dprime\n");
  CHECK(d.matrix == fx::div());
  CHECK(d.space == SignalSpace::Dprime);
  CHECK(d.ring.names == std::vector<std::string>{"d1", "d2", "d3"});

  auto c = parse_matrix_file(std::filesystem::path(PDECTL_DATA_DIR) / "curl.sys");
  CHECK(c.matrix == fx::curl());
  CHECK_FALSE(c.space.has_value());

  auto r = problem_error("ring n=2 vars=a,b\nmatrix 2 2\na, b\na\n");
  CHECK(r.line() == 4);
  CHECK(std::string(r.what()).find("row 2 has 1 entries, expected 2") != std::string::npos);

  auto u = problem_error("ring n=1 vars=t\nmatrix 1 1\nt\ncolour=red\n");
  CHECK(u.line() == 4);
  CHECK(std::string(u.what()).find("unknown directive") != std::string::npos);

  CHECK_THROWS_AS(parse_problem("ring n=1 vars=t\nmatrix 1 1\nt\nspace=Lp\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring n=2 vars=t\nmatrix 1 1\nt\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("matrix 1 1\nt\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring n=1 vars=t\nmatrix 2 1\nt\n"), ParseError);
  auto bad_entry = problem_error("ring n=2 vars=a,b\nmatrix 1 2\na, b + c\n");
  CHECK(bad_entry.line() == 3);
  CHECK(bad_entry.column() == 8);
  CHECK_THROWS_AS(parse_matrix_file("/nonexistent/file.sys"), InvalidArgument);

  auto o = parse_problem("ring n=1 vars=t\nmatrix 1 1\nt\norder=lex\ntask=closure\n");
  CHECK(o.order == "lex");
  CHECK(o.task == "closure");
}

TEST_CASE("signal space names") {
  for (auto s : {SignalSpace::Dprime, SignalSpace::Cinfinity, SignalSpace::Sprime, SignalSpace::Schwartz,
                 SignalSpace::Eprime, SignalSpace::Dtest})
    CHECK(parse_signal_space(name(s)) == s);
  CHECK(parse_signal_space("Cinfinity") == SignalSpace::Cinfinity);
  CHECK_FALSE(parse_signal_space("L2").has_value());
  CHECK(classify(SignalSpace::Sprime) == SpaceClass::Injective);
  CHECK(classify(SignalSpace::Cinfinity) == SpaceClass::InjectiveCogenerator);
  CHECK(classify(SignalSpace::Dtest) == SpaceClass::Flat);
}

TEST_CASE("property: parse after render is the identity") {
  oracle::Rng rng(99);
  Ring ring{3, {"dx", "dy", "dz"}};
  for (int t = 0; t < 200; ++t) {
    auto p = oracle::random_polynomial(rng, 3, 1 + t % 4, 0.5, 12);
    if (t % 3 == 0) p = p.scaled(Rational(1, 1 + t % 7));
    CHECK(parse_polynomial(p.to_string(ring.names), ring) == p);
    CHECK(parse_polynomial(p.to_string(), Ring::standard(3)) == p);
  }
  ProblemFile pf{Ring::standard(2), oracle::random_matrix(rng, 2, 2, 3, 2), SignalSpace::Eprime, "lex", "analyze"};
  auto back = parse_problem(render_problem(pf));
  CHECK(back.matrix == pf.matrix);
  CHECK(back.space == pf.space);
  CHECK(back.order == pf.order);
  CHECK(back.task == pf.task);
}

TEST_CASE("JSON round trip and verdict agreement") {
  std::vector<std::pair<PolyMatrix, SignalSpace>> cases = {
      {fx::div(), SignalSpace::Dprime},           {fx::curl(), SignalSpace::Cinfinity},
      {fx::grad(), SignalSpace::Dprime},          {fx::p2(), SignalSpace::Schwartz},
      {fx::p2(), SignalSpace::Sprime},            {fx::cauchy_riemann(), SignalSpace::Dprime},
      {PolyMatrix::identity(2, 2), SignalSpace::Dprime}};
  for (const auto& [m, sp] : cases) {
    auto r = analyze(m, sp);
    Json j = to_json(r);
    CHECK(to_json(analysis_from_json(j)) == j);
    CHECK(Json::parse(j.dump()) == j);
    CHECK(j["verdict"] == verdict(r));
    CHECK(render_text(r).find("verdict: " + verdict(r)) != std::string::npos);
    CHECK(j["kind"] == "analysis");
  }
  CHECK(verdict(analyze(fx::div(), SignalSpace::Dprime)) == "CONTROLLABLE");
  CHECK(verdict(analyze(fx::grad(), SignalSpace::Dprime)) == "NOT CONTROLLABLE");
  CHECK(verdict(analyze(fx::p2(), SignalSpace::Sprime)) == "UNDECIDABLE");

  SampleSpec s;
  s.trials = 6;
  s.pool = {Rational(-1, 2), Rational(3)};
  auto fr = run_experiment(s);
  Json fj = to_json(fr);
  CHECK(frequency_from_json(fj) == fr);
  CHECK(to_json(frequency_from_json(fj))["counts"] == fj["counts"]);
  CHECK(render_text(fr).find("controllable fraction") != std::string::npos);
}

TEST_CASE("rational matrices from JSON") {
  auto m = parse_rational_matrix("[[0, 1], [\"-3/4\", 2]]");
  REQUIRE(m.size() == 2);
  CHECK(m[1][0] == Rational(-3, 4));
  CHECK_THROWS_AS(parse_rational_matrix("[[1, 2], [3]]"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational_matrix("[[1.5]]"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational_matrix("nope"), InvalidArgument);
}
