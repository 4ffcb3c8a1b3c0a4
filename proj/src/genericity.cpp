#include "pdectl/genericity.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "pdectl/behavior.hpp"
#include "pdectl/error.hpp"

namespace pdectl {

std::vector<Rational> SampleSpec::integer_pool(long lo, long hi) {
  if (lo > hi) throw InvalidArgument("empty coefficient range");
  std::vector<Rational> out;
  for (long v = lo; v <= hi; ++v) out.emplace_back(v);
  return out;
}

void SampleSpec::validate() const {
  if (rows == 0 || cols == 0 || nvars == 0) throw InvalidArgument("rows, cols and nvars must be positive");
  if (degree < 0) throw InvalidArgument("degree must be non-negative");
  if (trials == 0) throw InvalidArgument("at least one trial is needed");
  if (pool.empty()) throw InvalidArgument("empty coefficient pool");
}

bool operator==(const FrequencyReport& a, const FrequencyReport& b) {
  return a.spec.rows == b.spec.rows && a.spec.cols == b.spec.cols && a.spec.nvars == b.spec.nvars &&
         a.spec.degree == b.spec.degree && a.spec.trials == b.spec.trials && a.spec.pool == b.spec.pool &&
         a.spec.seed == b.spec.seed && a.autonomous == b.autonomous &&
         a.strongly_controllable == b.strongly_controllable && a.controllable == b.controllable &&
         a.coordinate_only == b.coordinate_only && a.failures == b.failures && a.failure_log == b.failure_log;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, bound) by rejection; std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % b);
  std::uint64_t v;
  do v = rng();
  while (v >= limit);
  return static_cast<std::size_t>(v % b);
}

std::vector<Monomial> monomials_up_to(std::size_t n, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  while (true) {
    int total = 0;
    for (int x : e) total += x;
    if (total <= d) out.emplace_back(e);
    std::size_t v = 0;
    while (v < n && ++e[v] > d) e[v++] = 0;
    if (v == n) break;
  }
  return out;
}

}  // namespace

PolyMatrix sample_matrix(const SampleSpec& spec, std::size_t index) {
  spec.validate();
  std::mt19937_64 rng(splitmix64(spec.seed ^ splitmix64(index)));
  const auto monos = monomials_up_to(spec.nvars, spec.degree);
  PolyMatrix m(spec.nvars, spec.rows, spec.cols);
  for (std::size_t i = 0; i < spec.rows; ++i)
    for (std::size_t j = 0; j < spec.cols; ++j) {
      std::vector<Term> terms;
      for (const auto& mono : monos) terms.push_back({mono, spec.pool[draw(rng, spec.pool.size())]});
      m.at(i, j) = Polynomial::from_terms(spec.nvars, std::move(terms));
    }
  return m;
}

namespace {

enum class Bucket { Autonomous, Strong, Controllable, CoordinateOnly, Failed };

struct Trial {
  Bucket bucket = Bucket::Failed;
  std::string error;
  double seconds = 0;
};

Trial classify_sample(const SampleSpec& spec, std::size_t index) {
  Trial t;
  auto start = std::chrono::steady_clock::now();
  try {
    AnalysisReport r = analyze(sample_matrix(spec, index), SignalSpace::Dprime);
    const auto& g = r.grade;
    if (g.autonomous)
      t.bucket = Bucket::Autonomous;
    else if (g.strongly_controllable)
      t.bucket = Bucket::Strong;
    else if (g.controllable)
      t.bucket = Bucket::Controllable;
    else
      t.bucket = Bucket::CoordinateOnly;
  } catch (const std::exception& e) {
    t.bucket = Bucket::Failed;
    t.error = e.what();
  }
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

}  // namespace

FrequencyReport run_experiment(const SampleSpec& spec, std::size_t threads) {
  spec.validate();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, spec.trials);

  std::vector<Trial> results(spec.trials);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < threads; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < spec.trials; i = next++) results[i] = classify_sample(spec, i);
      });
  }

  FrequencyReport rep;
  rep.spec = spec;
  rep.time_min = results.front().seconds;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Trial& t = results[i];
    switch (t.bucket) {
      case Bucket::Autonomous: ++rep.autonomous; break;
      case Bucket::Strong: ++rep.strongly_controllable; break;
      case Bucket::Controllable: ++rep.controllable; break;
      case Bucket::CoordinateOnly: ++rep.coordinate_only; break;
      case Bucket::Failed:
        ++rep.failures;
        rep.failure_log.push_back({i, t.error});
        break;
    }
    rep.time_total += t.seconds;
    rep.time_min = std::min(rep.time_min, t.seconds);
    rep.time_max = std::max(rep.time_max, t.seconds);
  }
  rep.time_mean = rep.time_total / static_cast<double>(results.size());
  return rep;
}

}  // namespace pdectl
