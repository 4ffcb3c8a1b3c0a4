#pragma once

// Structural analysis of the behavior Ker_F(P) defined by a submodule P of A^k.

#include <optional>
#include <string>
#include <vector>

#include "pdectl/groebner.hpp"
#include "pdectl/poly_matrix.hpp"
#include "pdectl/signal_space.hpp"

namespace pdectl {

std::size_t rank(const PolyMatrix& m);

/// Ideal of the k x k minors of an l x k matrix; zero when l < k.
Ideal characteristic_ideal(const PolyMatrix& m);

struct Freeness {
  bool free = false;
  std::size_t rank = 0;  // rank of the generator matrix
};

/// Fitting test on the syzygies S of the generators: free iff S = 0 or the
/// (s - r) minors of S generate (1).
Freeness is_free_submodule(const Submodule& p);

struct CancellationIdeal {
  Ideal ideal;
  bool free = false;  // the ideal is the r x r minors when free, (0) otherwise
};

CancellationIdeal cancellation_ideal(const PolyMatrix& m);

/// Columns generate {x : M x = 0}; k x k1, possibly with no columns.
PolyMatrix column_syzygy_matrix(const PolyMatrix& m);

/// Smallest P0 containing P with A^k/P0 torsion free.
Submodule torsion_closure(const Submodule& p);

bool is_torsion_free(const Submodule& p);

/// Throws Undecidable when the S' closure is outside the implemented fragment.
bool is_controllable(const Submodule& p, SignalSpace space);

struct PotentialResult {
  std::optional<PolyMatrix> potential;
  /// When there is no potential: elements of P0 outside the defining module.
  std::vector<FreeModuleElement> torsion_witnesses;
};

PotentialResult vector_potential(const Submodule& p, SignalSpace space);

bool is_strongly_controllable(const Submodule& p);

bool is_coordinate_controllable(const Submodule& p);
/// Indices j (0-based) whose projection of the behavior is onto.
std::vector<std::size_t> surjective_coordinates(const Submodule& p);

/// rank = k, for proper P.
bool is_autonomous(const Submodule& p);
/// Characteristic variety of dimension 0.
bool is_strongly_autonomous(const Submodule& p);
/// dim A^k/P, nullopt when infinite.
std::optional<std::size_t> solution_space_dimension(const Submodule& p);

/// ann(A^k/P), the intersection of (P : e_j).
Ideal annihilator(const Submodule& p);

struct Decomposition {
  Submodule p0;
  /// Lifts to A^k of generators of P0/P.
  std::vector<FreeModuleElement> torsion_generators;
  /// Rows generate the relations: P0/P is A^g modulo this row module.
  PolyMatrix torsion_presentation;
  /// ann(P0/P); the unit ideal exactly when P0 = P.
  Ideal torsion_annihilator;
};

Decomposition decompose(const Submodule& p);

/// Squarefree gcd of the r x r minors. Free modules only.
Polynomial uncontrollable_polynomial(const Submodule& p);

struct ClosureResult {
  std::optional<Submodule> module;  // empty when undecidable
  std::string method;
  bool decided() const { return module.has_value(); }
};

ClosureResult willems_closure(const Submodule& p, SignalSpace space);

/// Kernel representation of the projection onto the last q coordinates.
Submodule project_behavior(const Submodule& p, std::size_t keep_last);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// (x I - X, -U) over Q[x].
PolyMatrix kalman_matrix(const RationalMatrix& x, const RationalMatrix& u);
/// The l x l minors of the Kalman matrix generate (1).
bool pbh_test(const RationalMatrix& x, const RationalMatrix& u);

struct ControllabilityGrade {
  bool zero_system = false;  // P = A^k
  bool strongly_controllable = false;
  bool controllable = false;  // torsion free, independent of the signal space
  bool coordinate_controllable = false;
  bool autonomous = false;
  bool strongly_autonomous = false;
};

struct AnalysisReport {
  PolyMatrix matrix;
  std::vector<std::string> variables;
  SignalSpace space = SignalSpace::Dprime;
  std::size_t nvars = 0;
  std::size_t k = 0;
  std::size_t generator_count = 0;
  std::size_t rank = 0;

  Ideal characteristic_ideal = Ideal::zero(0);
  int characteristic_dimension = 0;  // Krull dimension, -1 for (1)
  Ideal cancellation_ideal = Ideal::zero(0);
  bool free = false;
  int cancellation_dimension = 0;
  Ideal annihilator = Ideal::zero(0);

  ControllabilityGrade grade;
  /// Controllability in the chosen space; empty when undecidable.
  std::optional<bool> controllable_in_space;
  std::optional<std::size_t> solution_dimension;
  std::vector<std::size_t> surjective_coordinates;  // 1-based
  std::optional<Polynomial> uncontrollable_polynomial;

  std::optional<PolyMatrix> potential;
  std::vector<FreeModuleElement> torsion_witnesses;
  Decomposition decomposition{Submodule::zero(0, 0), {}, PolyMatrix(), Ideal::zero(0)};
  ClosureResult closure;
  std::vector<std::string> notes;
};

/// Runs every test above and cross-checks the results against each other;
/// a failed cross-check throws std::logic_error.
AnalysisReport analyze(const PolyMatrix& m, SignalSpace space, std::vector<std::string> variables = {});

}  // namespace pdectl
