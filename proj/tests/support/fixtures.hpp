#pragma once

// Named operators used across the test suites. Variables are x1..xn.

#include <initializer_list>
#include <string>
#include <vector>

#include "pdectl/behavior.hpp"
#include "pdectl/parser.hpp"

namespace fx {

using namespace pdectl;

inline Polynomial poly(const std::string& s, std::size_t n) { return parse_polynomial(s, Ring::standard(n)); }

inline FreeModuleElement vec(std::initializer_list<const char*> comps, std::size_t n) {
  std::vector<Polynomial> c;
  for (const char* s : comps) c.push_back(poly(s, n));
  return FreeModuleElement(n, std::move(c));
}

inline PolyMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows, std::size_t n) {
  std::vector<std::vector<Polynomial>> r;
  std::size_t cols = 0;
  for (auto row : rows) {
    std::vector<Polynomial> entries;
    for (const char* s : row) entries.push_back(poly(s, n));
    cols = entries.size();
    r.push_back(std::move(entries));
  }
  return PolyMatrix::from_rows(n, cols, r);
}

inline Ideal ideal(std::initializer_list<const char*> gens, std::size_t n) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(poly(s, n));
  return Ideal(n, std::move(g));
}

inline PolyMatrix div() { return mat({{"x1", "x2", "x3"}}, 3); }
inline PolyMatrix curl() { return mat({{"0", "-x3", "x2"}, {"x3", "0", "-x1"}, {"-x2", "x1", "0"}}, 3); }
inline PolyMatrix grad() { return mat({{"x1"}, {"x2"}, {"x3"}}, 3); }
/// curl with its last row multiplied by x1
inline PolyMatrix p2() { return mat({{"0", "-x3", "x2"}, {"x3", "0", "-x1"}, {"-x1*x2", "x1^2", "0"}}, 3); }
inline PolyMatrix cauchy_riemann() { return mat({{"x1", "-x2"}, {"x2", "x1"}}, 2); }

inline Submodule rows(const PolyMatrix& m) { return Submodule::row_module(m); }
inline Submodule cols(const PolyMatrix& m) { return Submodule::column_module(m); }

}  // namespace fx
