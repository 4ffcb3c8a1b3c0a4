#include "pdectl/module.hpp"

#include <algorithm>

namespace pdectl {

FreeModuleElement::FreeModuleElement(std::size_t nvars, std::vector<Polynomial> components)
    : n_(nvars), comps_(std::move(components)) {
  for (const auto& c : comps_)
    if (c.nvars() != n_) throw StructuralError("module component lives in a different ring");
}

FreeModuleElement::FreeModuleElement(std::vector<Polynomial> components) {
  if (components.empty()) throw StructuralError("cannot infer the ring of an empty vector");
  n_ = components.front().nvars();
  comps_ = std::move(components);
  for (const auto& c : comps_)
    if (c.nvars() != n_) throw StructuralError("module component lives in a different ring");
}

FreeModuleElement FreeModuleElement::zero(std::size_t nvars, std::size_t rank) {
  return FreeModuleElement(nvars, std::vector<Polynomial>(rank, Polynomial(nvars)));
}

FreeModuleElement FreeModuleElement::unit(std::size_t nvars, std::size_t rank, std::size_t index) {
  if (index >= rank) throw StructuralError("unit vector index out of range");
  std::vector<Polynomial> c(rank, Polynomial(nvars));
  c[index] = Polynomial::constant(nvars, Rational(1));
  return FreeModuleElement(nvars, std::move(c));
}

bool FreeModuleElement::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int FreeModuleElement::degree() const {
  int d = -1;
  for (const auto& c : comps_) d = std::max(d, c.degree());
  return d;
}

void FreeModuleElement::require_same_module(const FreeModuleElement& o) const {
  if (n_ != o.n_ || comps_.size() != o.comps_.size())
    throw StructuralError("vectors live in different free modules");
}

FreeModuleElement FreeModuleElement::operator+(const FreeModuleElement& o) const {
  require_same_module(o);
  FreeModuleElement r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] += o.comps_[i];
  return r;
}

FreeModuleElement FreeModuleElement::operator-(const FreeModuleElement& o) const {
  require_same_module(o);
  FreeModuleElement r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] -= o.comps_[i];
  return r;
}

FreeModuleElement FreeModuleElement::operator-() const {
  FreeModuleElement r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

FreeModuleElement FreeModuleElement::scaled(const Polynomial& f) const {
  if (f.nvars() != n_) throw StructuralError("scalar lives in a different ring");
  FreeModuleElement r = *this;
  for (auto& c : r.comps_) c = c * f;
  return r;
}

FreeModuleElement FreeModuleElement::slice(std::size_t from, std::size_t count) const {
  if (from + count > comps_.size()) throw StructuralError("slice out of range");
  return FreeModuleElement(n_, std::vector<Polynomial>(comps_.begin() + static_cast<std::ptrdiff_t>(from),
                                                       comps_.begin() + static_cast<std::ptrdiff_t>(from + count)));
}

FreeModuleElement FreeModuleElement::concat(const FreeModuleElement& tail) const {
  if (tail.n_ != n_) throw StructuralError("vectors over different rings");
  std::vector<Polynomial> c = comps_;
  c.insert(c.end(), tail.comps_.begin(), tail.comps_.end());
  return FreeModuleElement(n_, std::move(c));
}

std::string FreeModuleElement::to_string(std::span<const std::string> names) const {
  std::string out = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += ", ";
    out += comps_[i].to_string(names);
  }
  return out + ")";
}

std::string FreeModuleElement::to_string() const { return to_string(default_variable_names(n_)); }

}  // namespace pdectl
