#include "pdectl/univariate.hpp"

#include <algorithm>

namespace pdectl {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw StructuralError("variable index out of range");
  if (!p.is_univariate_in(var)) throw UnsupportedCase("polynomial involves more than one variable");
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.degree_in(var) + 1)));
  for (const auto& t : p.terms()) c[static_cast<std::size_t>(t.monomial[var])] = t.coeff;
  return UPoly(std::move(c));
}

Polynomial UPoly::to_polynomial(std::size_t nvars, std::size_t var) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    terms.push_back({Monomial::variable(nvars, var, static_cast<int>(i)), c_[i]});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-() const { return scaled(Rational(-1)); }

UPoly UPoly::scaled(const Rational& s) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= s;
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading());
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(c));
}

UPoly UPoly::reflected() const {
  std::vector<Rational> c = c_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return UPoly(std::move(c));
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

UDivision divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quo(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / bc[db];
    quo[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
  }
  rem.resize(db);
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree part of the zero polynomial");
  UPoly g = gcd(p, p.derivative());
  return divmod(p, g).quotient.monic();
}

namespace {

int sign(const Rational& r) { return sgn(r); }

int sign_at_infinity(const UPoly& p, bool positive) {
  int s = sign(p.leading());
  if (!positive && p.degree() % 2 == 1) s = -s;
  return s;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_real_roots(const UPoly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (p.is_zero()) throw InvalidArgument("root count of the zero polynomial");
  if (lo && hi && *hi <= *lo) return 0;
  UPoly base = squarefree_part(p);
  std::vector<UPoly> seq{base, base.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    seq.push_back(-r);
  }
  seq.pop_back();

  auto signs_at = [&](const std::optional<Rational>& x, bool positive_infinity) {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& q : seq) s.push_back(x ? sign(q.evaluate(*x)) : sign_at_infinity(q, positive_infinity));
    return s;
  };
  std::size_t v_lo = sign_changes(signs_at(lo, false));
  std::size_t v_hi = sign_changes(signs_at(hi, true));
  return v_lo >= v_hi ? v_lo - v_hi : 0;
}

}  // namespace pdectl
