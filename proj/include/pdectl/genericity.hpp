#pragma once

// Random sampling of operators with entries of bounded degree, classified by
// controllability grade.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pdectl/poly_matrix.hpp"

namespace pdectl {

struct SampleSpec {
  std::size_t rows = 1;
  std::size_t cols = 2;
  std::size_t nvars = 2;
  int degree = 2;
  std::size_t trials = 50;
  /// Coefficients are drawn uniformly from this list (repeats weight a value).
  std::vector<Rational> pool = integer_pool(-5, 5);
  std::uint64_t seed = 1;

  static std::vector<Rational> integer_pool(long lo, long hi);
  /// Throws InvalidArgument on an empty pool or zero dimensions.
  void validate() const;
};

struct TrialFailure {
  std::size_t index;
  std::string message;
  friend bool operator==(const TrialFailure&, const TrialFailure&) = default;
};

/// Buckets are exclusive and checked in this order: autonomous (the zero
/// system included), strongly controllable, controllable, coordinate only.
struct FrequencyReport {
  SampleSpec spec;
  std::size_t autonomous = 0;
  std::size_t strongly_controllable = 0;
  std::size_t controllable = 0;  // controllable but not strongly
  std::size_t coordinate_only = 0;
  std::size_t failures = 0;
  std::vector<TrialFailure> failure_log;
  /// Per-trial wall time in seconds. Not part of equality.
  double time_total = 0, time_min = 0, time_max = 0, time_mean = 0;

  std::size_t trials() const { return spec.trials; }
  double fraction(std::size_t count) const { return static_cast<double>(count) / static_cast<double>(spec.trials); }
  /// Strongly controllable samples count as controllable here.
  double controllable_fraction() const { return fraction(strongly_controllable + controllable); }

  friend bool operator==(const FrequencyReport& a, const FrequencyReport& b);
};

/// Entries have every monomial of degree <= d with an independent coefficient;
/// the draw depends only on (seed, index).
PolyMatrix sample_matrix(const SampleSpec& spec, std::size_t index);

/// Classifies each sample over D'; failures are counted, not thrown.
/// threads = 0 uses the hardware concurrency.
FrequencyReport run_experiment(const SampleSpec& spec, std::size_t threads = 0);

}  // namespace pdectl
