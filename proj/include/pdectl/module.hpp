#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pdectl/polynomial.hpp"

namespace pdectl {

/// An element of the free module A^k, A = Q[x1..xn].
class FreeModuleElement {
 public:
  FreeModuleElement() = default;
  FreeModuleElement(std::size_t nvars, std::vector<Polynomial> components);
  /// Requires a nonempty component list (the ring is read off the first entry).
  explicit FreeModuleElement(std::vector<Polynomial> components);

  static FreeModuleElement zero(std::size_t nvars, std::size_t rank);
  static FreeModuleElement unit(std::size_t nvars, std::size_t rank, std::size_t index);

  std::size_t nvars() const { return n_; }
  std::size_t rank() const { return comps_.size(); }
  const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }
  bool is_zero() const;
  int degree() const;

  FreeModuleElement operator+(const FreeModuleElement& o) const;
  FreeModuleElement operator-(const FreeModuleElement& o) const;
  FreeModuleElement operator-() const;
  FreeModuleElement scaled(const Polynomial& f) const;
  /// Components [from, from + count).
  FreeModuleElement slice(std::size_t from, std::size_t count) const;
  /// Concatenation (*this, tail).
  FreeModuleElement concat(const FreeModuleElement& tail) const;

  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

  friend bool operator==(const FreeModuleElement&, const FreeModuleElement&) = default;

 private:
  void require_same_module(const FreeModuleElement& o) const;

  std::size_t n_ = 0;
  std::vector<Polynomial> comps_;
};

}  // namespace pdectl
