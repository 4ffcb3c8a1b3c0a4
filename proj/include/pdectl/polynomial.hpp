#pragma once

// Exact multivariate polynomials over the rationals.
//
// A Polynomial lives in Q[x1, ..., xn] for a fixed n and stores its terms in
// descending graded reverse lexicographic order with nonzero coefficients, so
// two polynomials are equal exactly when their term vectors are equal.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdectl/error.hpp"

namespace pdectl {

using Rational = mpq_class;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t var, int power = 1);

  std::size_t nvars() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  /// Elimination order: monomials are compared by grevlex on the variables
  /// flagged in `eliminate` first, ties broken by grevlex on the rest.
  static MonomialOrder block(std::vector<bool> eliminate) {
    return MonomialOrder(Kind::Block, std::move(eliminate));
  }
  static MonomialOrder block_first(std::size_t m, std::size_t nvars);

  Kind kind() const { return kind_; }
  const std::vector<bool>& eliminated() const { return eliminate_; }

  /// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<bool> eliminate) : kind_(kind), eliminate_(std::move(eliminate)) {}

  Kind kind_ = Kind::Grevlex;
  std::vector<bool> eliminate_;
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

class Polynomial {
 public:
  /// The zero polynomial of the ring with no variables; a placeholder only.
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : n_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t var);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }
  int degree_in(std::size_t var) const;
  /// Leading term under grevlex. Requires !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  Rational constant_term() const;
  /// True when only the given variable occurs.
  bool is_univariate_in(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
  Polynomial monic() const;

  Rational evaluate(std::span<const Rational> point) const;
  Polynomial derivative(std::size_t var) const;

  /// Re-homes the polynomial into Q[y1..y_new_n], sending x_i to y_{var_map[i]}.
  Polynomial embed(std::size_t new_nvars, std::span<const std::size_t> var_map) const;

  /// Canonical rendering, e.g. "d1^2*d2 - 1/2*d3 + 4".
  std::string to_string(std::span<const std::string> names) const;
  /// Renders with the default names d1..dn.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void require_same_ring(const Polynomial& other) const;

  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

/// Default variable names d1..dn.
std::vector<std::string> default_variable_names(std::size_t nvars);

Rational evaluate(const Polynomial& f, std::span<const Rational> point);
Polynomial partial_derivative(const Polynomial& f, std::size_t var);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Multivariate division by a single polynomial with respect to grevlex.
DivisionResult divide(const Polynomial& f, const Polynomial& g);
/// f / g when g divides f; throws InvalidArgument otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

struct RealImagParts {
  Polynomial real;
  Polynomial imag;
};

/// For univariate p, writes p(i*y) = u(y) + i*v(y) with u, v rational.
/// Throws UnsupportedCase for n != 1.
RealImagParts real_imag_split(const Polynomial& p);

/// True when the univariate p has a root on the imaginary axis (0 included).
/// The zero polynomial vanishes everywhere and therefore qualifies.
bool has_purely_imaginary_root(const Polynomial& p);

}  // namespace pdectl
