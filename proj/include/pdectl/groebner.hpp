#pragma once

// Gröbner bases for submodules of A^k and ideals of A = Q[x1..xn].
//
// One Buchberger engine over sparse module vectors serves everything here:
// syzygies, kernels, intersections and colon ideals are all computed by
// adjoining tag components and eliminating under a block module order.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pdectl/module.hpp"
#include "pdectl/polynomial.hpp"

namespace pdectl {

class PolyMatrix;

class ModuleOrder {
 public:
  enum class Placement { PositionOverTerm, TermOverPosition };

  ModuleOrder() = default;
  ModuleOrder(MonomialOrder base, Placement placement, std::size_t elimination_prefix = 0)
      : base_(std::move(base)), placement_(placement), prefix_(elimination_prefix) {}

  /// grevlex, position over term: the default for module bases.
  static ModuleOrder standard() { return {}; }
  /// Any term in components [0, prefix) dominates every term outside it.
  static ModuleOrder eliminating(std::size_t prefix, MonomialOrder base = MonomialOrder::grevlex()) {
    return ModuleOrder(std::move(base), Placement::TermOverPosition, prefix);
  }

  const MonomialOrder& base() const { return base_; }
  Placement placement() const { return placement_; }
  std::size_t elimination_prefix() const { return prefix_; }

  /// Three-way comparison of the terms m_a*e_{ca} and m_b*e_{cb}. Lower
  /// component indices rank higher.
  int compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const;

  friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;

 private:
  MonomialOrder base_ = MonomialOrder::grevlex();
  Placement placement_ = Placement::PositionOverTerm;
  std::size_t prefix_ = 0;
};

struct LeadingTerm {
  Monomial monomial;
  std::size_t component;
};

/// A reduced Gröbner basis: monic, interreduced, sorted by descending leading term.
class GroebnerBasis {
 public:
  std::size_t nvars() const;
  std::size_t rank() const;
  const ModuleOrder& order() const;
  const std::vector<FreeModuleElement>& elements() const;
  const std::vector<LeadingTerm>& leading_terms() const;
  std::size_t size() const { return elements().size(); }

  /// The unique remainder of v modulo the basis.
  FreeModuleElement normal_form(const FreeModuleElement& v) const;
  bool reduces_to_zero(const FreeModuleElement& v) const { return normal_form(v).is_zero(); }

  /// Re-checks that every S-vector of a basis pair reduces to zero.
  bool satisfies_buchberger_criterion() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

  struct Impl;

 private:
  friend GroebnerBasis buchberger(std::size_t, std::size_t, std::span<const FreeModuleElement>,
                                  const ModuleOrder&);
  explicit GroebnerBasis(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Completes the generators to a reduced basis of the module they span in A^rank.
GroebnerBasis buchberger(std::size_t nvars, std::size_t rank, std::span<const FreeModuleElement> gens,
                         const ModuleOrder& order = ModuleOrder::standard());

/// A finitely generated submodule of A^k. Zero generators are dropped. The
/// reduced basis under the standard order is computed on first use and then
/// shared by all copies.
class Submodule {
 public:
  Submodule(std::size_t nvars, std::size_t rank, std::vector<FreeModuleElement> generators);

  static Submodule zero(std::size_t nvars, std::size_t rank);
  static Submodule full(std::size_t nvars, std::size_t rank);
  /// The module spanned by the rows of a matrix.
  static Submodule row_module(const PolyMatrix& m);
  /// The module spanned by the columns of a matrix.
  static Submodule column_module(const PolyMatrix& m);

  std::size_t nvars() const { return n_; }
  std::size_t rank() const { return k_; }
  const std::vector<FreeModuleElement>& generators() const { return gens_; }

  const GroebnerBasis& groebner() const;
  GroebnerBasis groebner(const ModuleOrder& order) const;

  bool contains(const FreeModuleElement& v) const;
  bool contains(const Submodule& other) const;
  bool is_zero() const { return groebner().size() == 0; }
  /// P = A^k
  bool is_full() const;

  /// Generators as the rows of an s x k matrix.
  PolyMatrix generator_matrix() const;

  friend bool operator==(const Submodule& a, const Submodule& b);

 private:
  struct Cache;
  std::size_t n_;
  std::size_t k_;
  std::vector<FreeModuleElement> gens_;
  std::shared_ptr<Cache> cache_;
};

/// An ideal of A, i.e. a submodule of A^1.
class Ideal {
 public:
  Ideal(std::size_t nvars, std::vector<Polynomial> generators);
  explicit Ideal(Submodule module);

  static Ideal zero(std::size_t nvars) { return Ideal(nvars, {}); }
  static Ideal unit(std::size_t nvars) { return Ideal(nvars, {Polynomial::constant(nvars, Rational(1))}); }

  std::size_t nvars() const { return module_.nvars(); }
  std::vector<Polynomial> generators() const;
  /// Reduced grevlex basis, monic polynomials in descending order.
  std::vector<Polynomial> groebner_basis() const;
  const Submodule& module() const { return module_; }

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const { return module_.contains(other.module_); }
  bool is_zero() const { return module_.is_zero(); }
  bool is_unit() const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.module_ == b.module_; }

 private:
  Submodule module_;
};

FreeModuleElement normal_form(const FreeModuleElement& v, const Submodule& g);

/// All relations (a_1..a_s) with a_1 g_1 + ... + a_s g_s = 0, as a submodule of A^s.
Submodule syzygies(std::size_t nvars, std::size_t rank, std::span<const FreeModuleElement> gens);

/// {x in A^k : M x = 0} for an l x k matrix M.
Submodule kernel_of_matrix(const PolyMatrix& m);

bool module_membership(const FreeModuleElement& v, const Submodule& p);

Submodule module_intersection(const Submodule& a, const Submodule& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// (P : v) = {a in A : a v in P}
Ideal quotient_by_element(const Submodule& p, const FreeModuleElement& v);

/// (P : f) = {w : f w in P}
Submodule colon(const Submodule& p, const Polynomial& f);

/// P : f^infinity, by iterating colon until the basis stops changing. f != 0.
Submodule saturation(const Submodule& p, const Polynomial& f);

/// The submodule of A^q (q = k - drop_first) of vectors whose zero-padded
/// lifts (0, ..., 0, w) lie in P.
Submodule eliminate_components(const Submodule& p, std::size_t drop_first);

/// I intersected with Q[kept variables]; keep[i] flags variable i as kept.
Ideal eliminate_variables(const Ideal& ideal, const std::vector<bool>& keep);

bool is_unit_ideal(const Ideal& ideal);

/// f in sqrt(I), decided by the Rabinowitsch trick in one extra variable.
bool radical_membership(const Polynomial& f, const Ideal& ideal);

/// Dimension of A/I, -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);

/// dim_Q A^k/P, or nullopt when infinite.
std::optional<std::size_t> vector_space_dimension(const Submodule& p);

/// Monic gcd, via (f) ∩ (g) = (lcm f g). Not both zero.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
Polynomial lcm(const Polynomial& f, const Polynomial& g);
/// Monic product of the distinct irreducible factors of f. f != 0.
Polynomial squarefree_part(const Polynomial& f);

}  // namespace pdectl
