#include "pdectl/behavior.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "pdectl/error.hpp"
#include "pdectl/univariate.hpp"

namespace pdectl {

std::size_t rank(const PolyMatrix& m) { return m.rank(); }

Ideal characteristic_ideal(const PolyMatrix& m) {
  if (m.rows() < m.cols()) return Ideal::zero(m.nvars());
  return Ideal(m.nvars(), m.minors(m.cols()));
}

Freeness is_free_submodule(const Submodule& p) {
  const auto& gens = p.generators();
  const std::size_t s = gens.size();
  if (s == 0) return {true, 0};
  const std::size_t r = p.generator_matrix().rank();
  Submodule syz = syzygies(p.nvars(), p.rank(), gens);
  if (syz.is_zero()) return {true, r};
  PolyMatrix sm = PolyMatrix::from_rows(p.nvars(), s, syz.generators());
  return {Ideal(p.nvars(), sm.minors(s - r)).is_unit(), r};
}

CancellationIdeal cancellation_ideal(const PolyMatrix& m) {
  Freeness f = is_free_submodule(Submodule::row_module(m));
  if (!f.free) return {Ideal::zero(m.nvars()), false};
  return {Ideal(m.nvars(), m.minors(f.rank)), true};
}

PolyMatrix column_syzygy_matrix(const PolyMatrix& m) {
  Submodule k = kernel_of_matrix(m);
  return PolyMatrix::from_columns(m.nvars(), m.cols(), k.generators());
}

Submodule torsion_closure(const Submodule& p) {
  if (p.generators().empty()) return p;
  PolyMatrix r = column_syzygy_matrix(p.generator_matrix());
  if (r.cols() == 0) return Submodule::full(p.nvars(), p.rank());
  return kernel_of_matrix(r.transpose());
}

bool is_torsion_free(const Submodule& p) { return p.contains(torsion_closure(p)); }

namespace {

std::vector<FreeModuleElement> outside(const Submodule& big, const Submodule& small) {
  std::vector<FreeModuleElement> out;
  for (const auto& g : big.groebner().elements())
    if (!small.contains(g)) out.push_back(g);
  return out;
}

// x^a * M(x^2) = t, for t with t(-x) = +-t(x).
struct EvenSplit {
  int a = 0;
  UPoly m;
};

EvenSplit even_split(const UPoly& t) {
  const auto& c = t.coeffs();
  EvenSplit out;
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  out.a = static_cast<int>(shift);
  std::vector<Rational> even;
  for (std::size_t i = shift; i < c.size(); ++i) {
    if ((i - shift) % 2 == 0)
      even.push_back(c[i]);
    else if (c[i] != 0)
      throw std::logic_error("symmetric factor is not even");
  }
  out.m = UPoly(std::move(even));
  return out;
}

ClosureResult univariate_s_prime_closure(const Submodule& p) {
  Decomposition d = decompose(p);
  auto basis = d.torsion_annihilator.groebner_basis();
  if (basis.size() != 1) throw std::logic_error("annihilator over Q[x] is not principal");
  UPoly s = squarefree_part(UPoly::from_polynomial(basis.front()));
  UPoly t = gcd(s, s.reflected());
  UPoly c = divmod(s, t).quotient;
  EvenSplit e = even_split(t);

  UPoly bad = c;
  if (e.m.degree() > 0) {
    std::size_t negative = count_real_roots(e.m, std::nullopt, Rational(0));
    if (negative == 0) {
      std::vector<Rational> stretched(2 * static_cast<std::size_t>(e.m.degree()) + 1, Rational(0));
      for (std::size_t i = 0; i < e.m.coeffs().size(); ++i) stretched[2 * i] = e.m.coeffs()[i];
      bad = c * UPoly(std::move(stretched));
    } else if (negative != static_cast<std::size_t>(e.m.degree())) {
      return {std::nullopt,
              "undecidable: a symmetric factor mixes imaginary and non-imaginary roots and would need factorization"};
    }
  }
  if (bad.degree() <= 0) return {p, "every torsion component meets the imaginary axis"};
  return {saturation(p, bad.to_polynomial(1, 0)), "removed torsion without purely imaginary roots"};
}

// Distinct roots i*y of p(x) are the distinct real roots of gcd(u, v).
bool all_roots_imaginary(const Polynomial& uni) {
  RealImagParts parts = real_imag_split(uni);
  UPoly common = gcd(UPoly::from_polynomial(parts.real), UPoly::from_polynomial(parts.imag));
  UPoly distinct = squarefree_part(UPoly::from_polynomial(uni));
  return count_real_roots(common, std::nullopt, std::nullopt) == static_cast<std::size_t>(distinct.degree());
}

ClosureResult ideal_s_prime_closure(const Submodule& p) {
  Ideal ideal(p);
  if (krull_dimension(ideal) != 0)
    return {std::nullopt, "undecidable: characteristic variety has positive dimension"};
  const std::size_t n = p.nvars();
  bool every_point_imaginary = true;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> keep(n, false);
    keep[j] = true;
    auto g = eliminate_variables(ideal, keep).groebner_basis();
    if (g.empty()) throw std::logic_error("zero-dimensional ideal without an eliminant");
    Polynomial uni = UPoly::from_polynomial(g.front(), j).to_polynomial(1, 0);
    if (!has_purely_imaginary_root(uni))
      return {Submodule::full(n, 1), "no purely imaginary point, certified by coordinate " + std::to_string(j + 1)};
    every_point_imaginary = every_point_imaginary && all_roots_imaginary(uni);
  }
  if (every_point_imaginary) return {p, "every point of the variety is purely imaginary"};
  return {std::nullopt, "undecidable: every coordinate projection meets the imaginary axis"};
}

ClosureResult s_prime_closure(const Submodule& p) {
  if (is_torsion_free(p)) return {p, "torsion free, hence closed"};
  if (p.nvars() == 1) return univariate_s_prime_closure(p);
  if (p.rank() == 1) return ideal_s_prime_closure(p);
  return {std::nullopt, "undecidable: torsion of a multivariate module"};
}

Submodule permuted(const Submodule& p, const std::vector<std::size_t>& order) {
  std::vector<FreeModuleElement> gens;
  for (const auto& g : p.generators()) {
    std::vector<Polynomial> c;
    for (std::size_t j : order) c.push_back(g[j]);
    gens.emplace_back(p.nvars(), std::move(c));
  }
  return Submodule(p.nvars(), p.rank(), std::move(gens));
}

PolyMatrix potential_of(const Submodule& p) { return column_syzygy_matrix(p.generator_matrix()); }

}  // namespace

ClosureResult willems_closure(const Submodule& p, SignalSpace space) {
  switch (classify(space)) {
    case SpaceClass::InjectiveCogenerator:
      return {p, "every submodule is closed"};
    case SpaceClass::Flat:
      return {torsion_closure(p), "torsion closure"};
    case SpaceClass::Injective:
      break;
  }
  return s_prime_closure(p);
}

bool is_controllable(const Submodule& p, SignalSpace space) {
  switch (classify(space)) {
    case SpaceClass::InjectiveCogenerator:
      return is_torsion_free(p);
    case SpaceClass::Flat:
      return true;
    case SpaceClass::Injective:
      break;
  }
  ClosureResult c = willems_closure(p, space);
  if (!c.decided()) throw Undecidable(c.method);
  return is_torsion_free(*c.module);
}

PotentialResult vector_potential(const Submodule& p, SignalSpace space) {
  Submodule defining = p;
  switch (classify(space)) {
    case SpaceClass::Flat:
      return {potential_of(p), {}};
    case SpaceClass::InjectiveCogenerator:
      break;
    case SpaceClass::Injective: {
      ClosureResult c = willems_closure(p, space);
      if (!c.decided()) throw Undecidable(c.method);
      defining = *c.module;
      break;
    }
  }
  Submodule p0 = torsion_closure(defining);
  if (defining.contains(p0)) return {potential_of(defining), {}};
  return {std::nullopt, outside(p0, defining)};
}

bool is_strongly_controllable(const Submodule& p) {
  PolyMatrix g = p.generator_matrix();
  return Ideal(p.nvars(), g.minors(g.rank())).is_unit();
}

bool is_coordinate_controllable(const Submodule& p) { return p.generator_matrix().rank() < p.rank(); }

std::vector<std::size_t> surjective_coordinates(const Submodule& p) {
  const std::size_t k = p.rank();
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) order.push_back(i);
    order.push_back(j);
    if (eliminate_components(permuted(p, order), k - 1).is_zero()) out.push_back(j);
  }
  return out;
}

bool is_autonomous(const Submodule& p) { return p.generator_matrix().rank() == p.rank(); }

bool is_strongly_autonomous(const Submodule& p) {
  return krull_dimension(characteristic_ideal(p.generator_matrix())) == 0;
}

std::optional<std::size_t> solution_space_dimension(const Submodule& p) { return vector_space_dimension(p); }

Ideal annihilator(const Submodule& p) {
  const std::size_t n = p.nvars();
  if (p.rank() == 0) return Ideal::unit(n);
  Ideal acc = quotient_by_element(p, FreeModuleElement::unit(n, p.rank(), 0));
  for (std::size_t j = 1; j < p.rank() && !acc.is_zero(); ++j)
    acc = ideal_intersection(acc, quotient_by_element(p, FreeModuleElement::unit(n, p.rank(), j)));
  return acc;
}

Decomposition decompose(const Submodule& p) {
  const std::size_t n = p.nvars();
  Submodule p0 = torsion_closure(p);
  std::vector<FreeModuleElement> t = outside(p0, p);
  const std::size_t g = t.size();
  if (g == 0) return {p0, {}, PolyMatrix(n, 0, 0), Ideal::unit(n)};

  std::vector<FreeModuleElement> all = t;
  all.insert(all.end(), p.generators().begin(), p.generators().end());
  Submodule syz = syzygies(n, p.rank(), all);
  std::vector<FreeModuleElement> rows;
  for (const auto& s : syz.generators()) {
    FreeModuleElement r = s.slice(0, g);
    if (!r.is_zero()) rows.push_back(std::move(r));
  }
  Submodule relations(n, g, rows);
  Ideal ann = annihilator(relations);
  if (ann.is_zero()) throw std::logic_error("torsion part has a zero annihilator");
  return {p0, std::move(t), PolyMatrix::from_rows(n, g, rows), std::move(ann)};
}

Polynomial uncontrollable_polynomial(const Submodule& p) {
  Freeness f = is_free_submodule(p);
  if (!f.free)
    throw UnsupportedCase("the submodule is not free, so the common factor of its minors does not locate the torsion");
  Polynomial g(p.nvars());
  for (const auto& m : p.generator_matrix().minors(f.rank)) {
    if (m.is_zero()) continue;
    g = g.is_zero() ? m.monic() : gcd(g, m);
    if (g.is_constant()) break;
  }
  if (g.is_zero()) throw std::logic_error("free module with vanishing minors");
  return squarefree_part(g);
}

Submodule project_behavior(const Submodule& p, std::size_t keep_last) {
  if (keep_last == 0 || keep_last > p.rank())
    throw InvalidArgument("cannot keep " + std::to_string(keep_last) + " of " + std::to_string(p.rank()) +
                          " coordinates");
  return eliminate_components(p, p.rank() - keep_last);
}

PolyMatrix kalman_matrix(const RationalMatrix& x, const RationalMatrix& u) {
  const std::size_t l = x.size();
  if (l == 0) throw InvalidArgument("the state matrix is empty");
  for (const auto& row : x)
    if (row.size() != l) throw InvalidArgument("the state matrix is not square");
  if (u.size() != l) throw InvalidArgument("the input matrix needs " + std::to_string(l) + " rows");
  const std::size_t m = u.front().size();
  for (const auto& row : u)
    if (row.size() != m) throw InvalidArgument("the input matrix is ragged");

  PolyMatrix k(1, l, l + m);
  const Polynomial t = Polynomial::variable(1, 0);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      Polynomial e = Polynomial::constant(1, -x[i][j]);
      if (i == j) e += t;
      k.at(i, j) = e;
    }
    for (std::size_t c = 0; c < m; ++c) k.at(i, l + c) = Polynomial::constant(1, -u[i][c]);
  }
  return k;
}

bool pbh_test(const RationalMatrix& x, const RationalMatrix& u) {
  PolyMatrix k = kalman_matrix(x, u);
  return Ideal(1, k.minors(k.rows())).is_unit();
}

AnalysisReport analyze(const PolyMatrix& m, SignalSpace space, std::vector<std::string> variables) {
  const std::size_t n = m.nvars(), k = m.cols();
  if (k == 0) throw InvalidArgument("a system needs at least one unknown");
  if (variables.empty()) variables = default_variable_names(n);
  if (variables.size() != n) throw InvalidArgument("variable names do not match the ring");

  AnalysisReport rep;
  rep.matrix = m;
  rep.variables = std::move(variables);
  rep.space = space;
  rep.nvars = n;
  rep.k = k;
  rep.generator_count = m.rows();
  const Submodule p = Submodule::row_module(m);
  p.groebner();

  struct Ideals {
    std::size_t rank;
    Ideal chi = Ideal::zero(0);
    int chi_dim;
    CancellationIdeal cancel;
    int cancel_dim;
    bool strong;
    std::optional<Polynomial> uncontrollable;
  };
  auto ideals = std::async(std::launch::async, [&] {
    Ideals r{m.rank(), characteristic_ideal(m), 0, cancellation_ideal(m), 0, false, std::nullopt};
    r.chi_dim = krull_dimension(r.chi);
    r.cancel_dim = krull_dimension(r.cancel.ideal);
    r.strong = is_strongly_controllable(p);
    if (r.cancel.free) r.uncontrollable = uncontrollable_polynomial(p);
    return r;
  });
  auto decomposition = std::async(std::launch::async, [&] { return decompose(p); });
  struct Coordinates {
    Ideal ann = Ideal::zero(0);
    std::vector<bool> coordinate_zero;
    std::vector<std::size_t> surjective;
  };
  auto coords = std::async(std::launch::async, [&] {
    Coordinates c;
    c.ann = annihilator(p);
    for (std::size_t j = 0; j < k; ++j)
      c.coordinate_zero.push_back(quotient_by_element(p, FreeModuleElement::unit(n, k, j)).is_zero());
    c.surjective = surjective_coordinates(p);
    return c;
  });
  auto closure = std::async(std::launch::async, [&] { return willems_closure(p, space); });
  auto dimension = std::async(std::launch::async, [&] { return vector_space_dimension(p); });

  Ideals id = ideals.get();
  rep.decomposition = decomposition.get();
  Coordinates co = coords.get();
  rep.closure = closure.get();
  rep.solution_dimension = dimension.get();

  rep.rank = id.rank;
  rep.characteristic_ideal = id.chi;
  rep.characteristic_dimension = id.chi_dim;
  rep.cancellation_ideal = id.cancel.ideal;
  rep.free = id.cancel.free;
  rep.cancellation_dimension = id.cancel_dim;
  rep.uncontrollable_polynomial = id.uncontrollable;
  rep.annihilator = co.ann;
  for (std::size_t j : co.surjective) rep.surjective_coordinates.push_back(j + 1);

  ControllabilityGrade& g = rep.grade;
  g.zero_system = p.is_full();
  g.controllable = rep.decomposition.torsion_generators.empty();
  g.strongly_controllable = id.strong;
  g.autonomous = id.rank == k;
  g.coordinate_controllable = id.rank < k;
  g.strongly_autonomous = id.chi_dim == 0;

  switch (classify(space)) {
    case SpaceClass::InjectiveCogenerator:
      rep.controllable_in_space = g.controllable;
      if (g.controllable) rep.potential = potential_of(p);
      break;
    case SpaceClass::Flat:
      rep.controllable_in_space = true;
      rep.potential = potential_of(p);
      break;
    case SpaceClass::Injective:
      if (rep.closure.decided()) {
        const Submodule& c = *rep.closure.module;
        rep.controllable_in_space = is_torsion_free(c);
        if (*rep.controllable_in_space) rep.potential = potential_of(c);
      }
      break;
  }
  if (!rep.potential) rep.torsion_witnesses = rep.decomposition.torsion_generators;

  // Cross-checks.
  auto check = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal cross-check failed: ") + what);
  };
  check(!g.strongly_controllable || g.controllable, "strongly controllable but not controllable");
  if (!g.zero_system) check(!g.controllable || g.coordinate_controllable, "controllable but not coordinate controllable");
  check(g.autonomous != g.coordinate_controllable, "autonomy and coordinate controllability overlap");
  check(!g.strongly_autonomous || g.autonomous, "strongly autonomous but not autonomous");
  check(co.ann.is_zero() == !g.autonomous, "annihilator and rank disagree");
  for (std::size_t j = 0; j < k; ++j) {
    bool listed = std::find(co.surjective.begin(), co.surjective.end(), j) != co.surjective.end();
    check(listed == co.coordinate_zero[j], "coordinate projection tests disagree");
  }
  check(co.surjective.empty() == !g.coordinate_controllable, "surjective coordinates and rank disagree");
  for (const auto& f : id.chi.generators()) check(co.ann.contains(f), "characteristic ideal not inside the annihilator");
  for (const auto& a : co.ann.generators())
    check(radical_membership(a, id.chi), "annihilator not inside the radical of the characteristic ideal");
  check(rep.decomposition.p0.contains(p), "controllable part does not contain P");
  if (rep.free && !rep.cancellation_ideal.is_zero())
    check(g.controllable == (rep.cancellation_dimension <= static_cast<int>(n) - 2),
          "torsion test and cancellation variety dimension disagree");
  if (rep.potential) {
    const Submodule& defining = (classify(space) == SpaceClass::Injective) ? *rep.closure.module : p;
    check((defining.generator_matrix() * *rep.potential).is_zero(), "P R != 0");
  }
  check(g.strongly_autonomous == (rep.solution_dimension.has_value() && !g.zero_system),
        "finite solution space without a zero-dimensional characteristic variety");

  if (g.zero_system) rep.notes.push_back("zero system: P = A^k, the only solution is 0");
  if (m.rows() != id.rank)
    rep.notes.push_back(std::to_string(m.rows()) + " generators for a module of rank " + std::to_string(id.rank) +
                        "; minimal generation is not computed and every test uses presentation-independent invariants");
  if (!rep.free) rep.notes.push_back("the module is not free, so the cancellation ideal is reported as (0)");
  if (!g.controllable)
    rep.notes.push_back("the uncontrollable part is given as a presentation of P0/P; the presentation is not canonical");
  if (!rep.closure.decided()) rep.notes.push_back("Willems closure " + rep.closure.method);
  return rep;
}

}  // namespace pdectl
