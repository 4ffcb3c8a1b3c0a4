#include "pdectl/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "pdectl/univariate.hpp"

namespace pdectl {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw InvalidArgument("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, int power) {
  std::vector<int> e(nvars, 0);
  e.at(var) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  r.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// MonomialOrder

namespace {

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// grevlex restricted to the variables where mask[i] == want
int masked_grevlex(const Monomial& a, const Monomial& b, const std::vector<bool>& mask, bool want) {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (mask[i] == want) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (mask[i] != want) continue;
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::block_first(std::size_t m, std::size_t nvars) {
  std::vector<bool> mask(nvars, false);
  for (std::size_t i = 0; i < m && i < nvars; ++i) mask[i] = true;
  return block(std::move(mask));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_compare(a, b);
    case Kind::Lex:
      return lex_compare(a, b);
    case Kind::Block: {
      if (eliminate_.size() != a.nvars()) throw StructuralError("block order sized for a different ring");
      int c = masked_grevlex(a, b, eliminate_, true);
      if (c != 0) return c;
      return masked_grevlex(a, b, eliminate_, false);
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.monomial, b.monomial) > 0; }

// Merge of two descending term lists, b scaled by `sb`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, const Rational& sb) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, b[j].coeff * sb});
      ++j;
    } else {
      Rational s = a[i].coeff + b[j].coeff * sb;
      if (s != 0) out.push_back({a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, b[j].coeff * sb});
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw StructuralError("variable index out of range");
  Polynomial p(nvars);
  p.terms_.push_back({Monomial::variable(nvars, var), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.nvars() != nvars) throw StructuralError("term lives in a different ring");
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Rational(0);
}

bool Polynomial::is_univariate_in(std::size_t var) const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < n_; ++i)
      if (i != var && t.monomial[i] != 0) return false;
  return true;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (n_ != other.n_)
    throw StructuralError("polynomials in rings with " + std::to_string(n_) + " and " +
                          std::to_string(other.n_) + " variables");
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(other);
  Polynomial r(n_);
  r.terms_ = merge_terms(terms_, other.terms_, Rational(1));
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(other);
  Polynomial r(n_);
  r.terms_ = merge_terms(terms_, other.terms_, Rational(-1));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(other);
  if (is_zero() || other.is_zero()) return Polynomial(n_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) prod.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  return from_terms(n_, std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(n_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (m.nvars() != n_) throw StructuralError("monomial lives in a different ring");
  if (c == 0) return Polynomial(n_);
  Polynomial r(n_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(n_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_term().coeff;
  return scaled(inv);
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != n_) throw StructuralError("evaluation point has the wrong length");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < n_; ++i) {
      for (int e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= n_) throw StructuralError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.monomial[var];
    if (e == 0) continue;
    std::vector<int> exps = t.monomial.exponents();
    exps[var] -= 1;
    out.push_back({Monomial(std::move(exps)), t.coeff * e});
  }
  return from_terms(n_, std::move(out));
}

Polynomial Polynomial::embed(std::size_t new_nvars, std::span<const std::size_t> var_map) const {
  if (var_map.size() != n_) throw StructuralError("variable map has the wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> exps(new_nvars, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (t.monomial[i] == 0) continue;
      if (var_map[i] >= new_nvars) throw StructuralError("variable map target out of range");
      exps[var_map[i]] += t.monomial[i];
    }
    out.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return from_terms(new_nvars, std::move(out));
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (names.size() < n_) throw StructuralError("not enough variable names");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      int e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

std::string Polynomial::to_string() const { return to_string(default_variable_names(n_)); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("d" + std::to_string(i + 1));
  return names;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) { return f.evaluate(point); }

Polynomial partial_derivative(const Polynomial& f, std::size_t var) { return f.derivative(var); }

DivisionResult divide(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw StructuralError("division across rings");
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const std::size_t n = f.nvars();
  const Term& lead = g.leading_term();
  std::vector<Term> quotient;
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& t = p.leading_term();
    if (lead.monomial.divides(t.monomial)) {
      Monomial m = t.monomial / lead.monomial;
      Rational c = t.coeff / lead.coeff;
      quotient.push_back({m, c});
      p -= g.times_monomial(m, c);
    } else {
      remainder.push_back(t);
      p -= Polynomial::monomial(t.monomial, t.coeff);
    }
  }
  return {Polynomial::from_terms(n, std::move(quotient)), Polynomial::from_terms(n, std::move(remainder))};
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  DivisionResult d = divide(f, g);
  if (!d.remainder.is_zero()) throw InvalidArgument("polynomial division is not exact");
  return d.quotient;
}

RealImagParts real_imag_split(const Polynomial& p) {
  if (p.nvars() != 1) throw UnsupportedCase("real/imaginary split needs a univariate polynomial");
  // (i y)^e = i^e y^e, with i^e cycling through 1, i, -1, -i.
  std::vector<Term> re, im;
  for (const auto& t : p.terms()) {
    int e = t.monomial[0];
    switch (e % 4) {
      case 0: re.push_back(t); break;
      case 1: im.push_back(t); break;
      case 2: re.push_back({t.monomial, -t.coeff}); break;
      case 3: im.push_back({t.monomial, -t.coeff}); break;
    }
  }
  return {Polynomial::from_terms(1, std::move(re)), Polynomial::from_terms(1, std::move(im))};
}

bool has_purely_imaginary_root(const Polynomial& p) {
  if (p.is_zero()) return true;
  RealImagParts parts = real_imag_split(p);
  UPoly common = gcd(UPoly::from_polynomial(parts.real), UPoly::from_polynomial(parts.imag));
  if (common.is_zero()) return true;
  return count_real_roots(common, std::nullopt, std::nullopt) > 0;
}

}  // namespace pdectl
