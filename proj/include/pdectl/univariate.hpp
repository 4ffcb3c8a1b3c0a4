#pragma once

// Dense univariate polynomials over Q, used for Euclidean gcds and Sturm
// sequences where the sparse multivariate representation is overkill.

#include <cstddef>
#include <optional>
#include <vector>

#include "pdectl/polynomial.hpp"

namespace pdectl {

class UPoly {
 public:
  UPoly() = default;
  /// coeffs[i] is the coefficient of t^i.
  explicit UPoly(std::vector<Rational> coeffs);

  /// Reads a polynomial that only involves `var`; throws UnsupportedCase otherwise.
  static UPoly from_polynomial(const Polynomial& p, std::size_t var = 0);
  /// Writes the polynomial back as a polynomial in `var` of Q[x1..x_nvars].
  Polynomial to_polynomial(std::size_t nvars = 1, std::size_t var = 0) const;

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly scaled(const Rational& s) const;
  UPoly monic() const;
  UPoly derivative() const;
  /// p(-t)
  UPoly reflected() const;
  Rational evaluate(const Rational& t) const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};

UDivision divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

/// Number of distinct real roots in the half-open interval (lo, hi]; an empty
/// optional stands for -infinity (lo) or +infinity (hi). p must be nonzero.
std::size_t count_real_roots(const UPoly& p, const std::optional<Rational>& lo,
                             const std::optional<Rational>& hi);

}  // namespace pdectl
