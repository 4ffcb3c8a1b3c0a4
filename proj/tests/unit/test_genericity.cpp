#include <doctest.h>

#include "fixtures.hpp"
#include "pdectl/genericity.hpp"

using namespace pdectl;

namespace {

SampleSpec spec(std::size_t rows, std::size_t cols, std::size_t n, int d, std::size_t trials) {
  SampleSpec s;
  s.rows = rows;
  s.cols = cols;
  s.nvars = n;
  s.degree = d;
  s.trials = trials;
  s.seed = 20261015;
  return s;
}

}  // namespace

TEST_CASE("sample shape and determinism") {
  auto s = spec(2, 3, 2, 0, 5);
  auto m = sample_matrix(s, 0);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(m.at(i, j).is_constant());

  auto a = spec(1, 2, 2, 1, 5);
  a.pool = SampleSpec::integer_pool(-3, 3);
  auto x = sample_matrix(a, 4);
  CHECK(x == sample_matrix(a, 4));
  CHECK(x.rows() == 1);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(x.at(0, j).degree() <= 1);
    for (const auto& t : x.at(0, j).terms()) CHECK(abs(t.coeff) <= 3);
  }
  // Different indices and seeds give different draws.
  bool differs = false;
  for (std::size_t i = 0; i < 5; ++i) differs |= !(sample_matrix(a, i) == sample_matrix(a, i + 1));
  CHECK(differs);
  auto b = a;
  b.seed = a.seed + 1;
  CHECK_FALSE(sample_matrix(a, 0) == sample_matrix(b, 0));
}

TEST_CASE("pool weights repeated values") {
  auto s = spec(1, 1, 1, 3, 1);
  s.pool = {Rational(2), Rational(2), Rational(1, 2)};
  for (std::size_t i = 0; i < 10; ++i) {
    auto m = sample_matrix(s, i);
    for (const auto& t : m.at(0, 0).terms()) CHECK((t.coeff == 2 || t.coeff == Rational(1, 2)));
  }
}

TEST_CASE("spec validation") {
  auto s = spec(1, 2, 2, 2, 1);
  s.pool.clear();
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = spec(0, 2, 2, 2, 1);
  CHECK_THROWS_AS(run_experiment(s), InvalidArgument);
  s = spec(1, 2, 2, 2, 0);
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = spec(1, 2, 2, -1, 1);
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
}

TEST_CASE("experiments: counts, determinism and thread independence") {
  auto s = spec(1, 2, 2, 2, 20);
  auto r1 = run_experiment(s, 1);
  auto r4 = run_experiment(s, 4);
  CHECK(r1 == r4);
  CHECK(r1.autonomous + r1.strongly_controllable + r1.controllable + r1.coordinate_only + r1.failures == 20);
  CHECK(r1.failures == 0);
  CHECK(r1.time_min <= r1.time_mean);
  CHECK(r1.time_mean <= r1.time_max);
}

TEST_CASE("experiments: per-trial grades respect the ordering") {
  auto s = spec(2, 3, 2, 1, 15);
  for (std::size_t i = 0; i < s.trials; ++i) {
    auto r = analyze(sample_matrix(s, i), SignalSpace::Dprime);
    const auto& g = r.grade;
    if (g.strongly_controllable) CHECK(g.controllable);
    if (g.controllable && !g.zero_system) CHECK(g.coordinate_controllable);
    if (g.strongly_autonomous) CHECK(g.autonomous);
    if (!g.zero_system) CHECK(g.autonomous == !g.coordinate_controllable);
  }
}

TEST_CASE("experiments: under- and overdetermined regimes") {
  auto under = run_experiment(spec(1, 2, 2, 2, 50));
  CHECK(under.controllable_fraction() >= 0.95);
  auto over = run_experiment(spec(2, 1, 2, 2, 50));
  CHECK(over.fraction(over.autonomous) == 1.0);
  auto strong = run_experiment(spec(1, 3, 2, 1, 50));
  CHECK(strong.fraction(strong.strongly_controllable) >= 0.95);
}

TEST_CASE("dichotomy trend") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto u = spec(1, 2, 2, 2, 30), o = spec(2, 2, 2, 2, 30);
    u.seed = o.seed = seed;
    CHECK(run_experiment(u).controllable_fraction() > run_experiment(o).controllable_fraction());
  }
}
