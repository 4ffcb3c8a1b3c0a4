#include "pdectl/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <set>
#include <utility>

#include "pdectl/poly_matrix.hpp"

namespace pdectl {

int ModuleOrder::compare(const Monomial& a, std::size_t ca, const Monomial& b, std::size_t cb) const {
  if (prefix_ > 0) {
    const bool ia = ca < prefix_;
    const bool ib = cb < prefix_;
    if (ia != ib) return ia ? 1 : -1;
  }
  if (placement_ == Placement::PositionOverTerm) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return base_.compare(a, b);
  }
  int c = base_.compare(a, b);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Sparse module vectors: terms m * e_comp, sorted descending by a module order.

namespace {

struct MTerm {
  Monomial m;
  std::size_t comp;
  Rational c;
};

using SVec = std::vector<MTerm>;

SVec to_svec(const FreeModuleElement& v, const ModuleOrder& ord) {
  SVec out;
  for (std::size_t i = 0; i < v.rank(); ++i)
    for (const auto& t : v[i].terms()) out.push_back({t.monomial, i, t.coeff});
  std::sort(out.begin(), out.end(),
            [&](const MTerm& a, const MTerm& b) { return ord.compare(a.m, a.comp, b.m, b.comp) > 0; });
  return out;
}

FreeModuleElement from_svec(const SVec& v, std::size_t n, std::size_t k) {
  std::vector<std::vector<Term>> comps(k);
  for (const auto& t : v) comps[t.comp].push_back({t.m, t.c});
  std::vector<Polynomial> polys;
  polys.reserve(k);
  for (auto& c : comps) polys.push_back(Polynomial::from_terms(n, std::move(c)));
  return FreeModuleElement(n, std::move(polys));
}

void make_monic(SVec& v) {
  if (v.empty() || v.front().c == 1) return;
  Rational inv = 1 / v.front().c;
  for (auto& t : v) t.c *= inv;
}

// f[0, from) followed by f[from, end) - c * t * g.
SVec sub_multiple(const SVec& f, std::size_t from, const Rational& c, const Monomial& t, const SVec& g,
                  const ModuleOrder& ord) {
  SVec out;
  out.reserve(f.size() + g.size());
  out.insert(out.end(), f.begin(), f.begin() + static_cast<std::ptrdiff_t>(from));
  std::size_t i = from, j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < f.size() && j < g.size()) {
    if (!have_gm) {
      gm = g[j].m * t;
      have_gm = true;
    }
    int cmp = ord.compare(f[i].m, f[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), g[j].comp, -c * g[j].c});
      have_gm = false;
      ++j;
    } else {
      Rational s = f[i].c - c * g[j].c;
      if (s != 0) out.push_back({f[i].m, f[i].comp, std::move(s)});
      have_gm = false;
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back(f[i]);
  for (; j < g.size(); ++j) out.push_back({g[j].m * t, g[j].comp, -c * g[j].c});
  return out;
}

// Division by a list of vectors. With `skip` set, that basis index is ignored.
SVec reduce(SVec f, const std::vector<SVec>& basis, const ModuleOrder& ord, std::size_t skip = SIZE_MAX,
            bool monic = true) {
  std::size_t i = 0;
  while (i < f.size()) {
    const MTerm& t = f[i];
    const SVec* divisor = nullptr;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (b == skip || basis[b].empty()) continue;
      const MTerm& lead = basis[b].front();
      if (lead.comp == t.comp && lead.m.divides(t.m)) {
        divisor = &basis[b];
        break;
      }
    }
    if (!divisor) {
      ++i;
      continue;
    }
    const MTerm& lead = divisor->front();
    Rational c = t.c / lead.c;
    Monomial q = t.m / lead.m;
    f = sub_multiple(f, i, c, q, *divisor, ord);
  }
  if (monic) make_monic(f);
  return f;
}

SVec s_vector(const SVec& f, const SVec& g, const ModuleOrder& ord) {
  const Monomial l = f.front().m.lcm(g.front().m);
  const Monomial tf = l / f.front().m;
  const Monomial tg = l / g.front().m;
  SVec scaled_f;
  scaled_f.reserve(f.size());
  Rational inv = 1 / f.front().c;
  for (const auto& term : f) scaled_f.push_back({term.m * tf, term.comp, term.c * inv});
  return sub_multiple(scaled_f, 0, 1 / g.front().c, tg, g, ord);
}

}  // namespace

struct GroebnerBasis::Impl {
  std::size_t n = 0;
  std::size_t k = 0;
  ModuleOrder order;
  std::vector<SVec> basis;
  std::vector<FreeModuleElement> elements;
  std::vector<LeadingTerm> leads;
};

std::size_t GroebnerBasis::nvars() const { return impl_->n; }
std::size_t GroebnerBasis::rank() const { return impl_->k; }
const ModuleOrder& GroebnerBasis::order() const { return impl_->order; }
const std::vector<FreeModuleElement>& GroebnerBasis::elements() const { return impl_->elements; }
const std::vector<LeadingTerm>& GroebnerBasis::leading_terms() const { return impl_->leads; }

FreeModuleElement GroebnerBasis::normal_form(const FreeModuleElement& v) const {
  if (v.nvars() != impl_->n || v.rank() != impl_->k)
    throw StructuralError("vector of rank " + std::to_string(v.rank()) + " reduced modulo a submodule of rank " +
                          std::to_string(impl_->k));
  SVec r = reduce(to_svec(v, impl_->order), impl_->basis, impl_->order, SIZE_MAX, false);
  return from_svec(r, impl_->n, impl_->k);
}

bool GroebnerBasis::satisfies_buchberger_criterion() const {
  const auto& b = impl_->basis;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (b[i].front().comp != b[j].front().comp) continue;
      if (!reduce(s_vector(b[i], b[j], impl_->order), b, impl_->order).empty()) return false;
    }
  return true;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  return a.impl_->n == b.impl_->n && a.impl_->k == b.impl_->k && a.impl_->order == b.impl_->order &&
         a.impl_->elements == b.impl_->elements;
}

GroebnerBasis buchberger(std::size_t nvars, std::size_t rank, std::span<const FreeModuleElement> gens,
                         const ModuleOrder& order) {
  for (const auto& g : gens)
    if (g.nvars() != nvars || g.rank() != rank) throw StructuralError("generator lives in a different free module");

  std::vector<SVec> basis;
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::size_t comp;
  };
  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto insert = [&](SVec f) {
    f = reduce(std::move(f), basis, order);
    if (f.empty()) return;
    const std::size_t idx = basis.size();
    for (std::size_t i = 0; i < idx; ++i) {
      if (basis[i].front().comp != f.front().comp) continue;
      queue.push_back({i, idx, basis[i].front().m.lcm(f.front().m), f.front().comp});
      pending.insert({i, idx});
    }
    basis.push_back(std::move(f));
  };

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  // Buchberger's chain criterion.
  auto chain_skips = [&](const Pair& p) {
    for (std::size_t l = 0; l < basis.size(); ++l) {
      if (l == p.i || l == p.j) continue;
      const MTerm& lead = basis[l].front();
      if (lead.comp != p.comp || !lead.m.divides(p.lcm)) continue;
      if (!is_pending(p.i, l) && !is_pending(p.j, l)) return true;
    }
    return false;
  };

  for (const auto& g : gens) insert(to_svec(g, order));

  while (!queue.empty()) {
    // Normal selection strategy: smallest lcm first.
    std::size_t best = 0;
    for (std::size_t q = 1; q < queue.size(); ++q) {
      const Pair& a = queue[q];
      const Pair& b = queue[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = q;
      } else if (order.compare(a.lcm, a.comp, b.lcm, b.comp) < 0) {
        best = q;
      }
    }
    Pair p = std::move(queue[best]);
    queue[best] = std::move(queue.back());
    queue.pop_back();
    pending.erase({p.i, p.j});

    // Product criterion; valid for ideals only.
    if (rank == 1 && basis[p.i].front().m.coprime(basis[p.j].front().m)) continue;
    if (chain_skips(p)) continue;
    insert(s_vector(basis[p.i], basis[p.j], order));
  }

  // Minimal basis: drop elements whose leading term is divisible by another's.
  std::vector<std::size_t> idx(basis.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const MTerm& x = basis[a].front();
    const MTerm& y = basis[b].front();
    return order.compare(x.m, x.comp, y.m, y.comp) < 0;
  });
  std::vector<SVec> minimal;
  for (std::size_t i : idx) {
    const MTerm& lead = basis[i].front();
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const SVec& m) {
      return m.front().comp == lead.comp && m.front().m.divides(lead.m);
    });
    if (!redundant) minimal.push_back(std::move(basis[i]));
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) minimal[i] = reduce(std::move(minimal[i]), minimal, order, i);
  std::sort(minimal.begin(), minimal.end(), [&](const SVec& a, const SVec& b) {
    return order.compare(a.front().m, a.front().comp, b.front().m, b.front().comp) > 0;
  });

  auto impl = std::make_shared<GroebnerBasis::Impl>();
  impl->n = nvars;
  impl->k = rank;
  impl->order = order;
  for (const auto& v : minimal) {
    impl->elements.push_back(from_svec(v, nvars, rank));
    impl->leads.push_back({v.front().m, v.front().comp});
  }
  impl->basis = std::move(minimal);
  return GroebnerBasis(std::move(impl));
}

// ---------------------------------------------------------------------------
// Submodule / Ideal

struct Submodule::Cache {
  std::once_flag once;
  std::optional<GroebnerBasis> gb;
};

Submodule::Submodule(std::size_t nvars, std::size_t rank, std::vector<FreeModuleElement> generators)
    : n_(nvars), k_(rank), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.nvars() != nvars || g.rank() != rank)
      throw StructuralError("generator of rank " + std::to_string(g.rank()) + " in a submodule of A^" +
                            std::to_string(rank));
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Submodule Submodule::zero(std::size_t nvars, std::size_t rank) { return Submodule(nvars, rank, {}); }

Submodule Submodule::full(std::size_t nvars, std::size_t rank) {
  std::vector<FreeModuleElement> g;
  for (std::size_t j = 0; j < rank; ++j) g.push_back(FreeModuleElement::unit(nvars, rank, j));
  return Submodule(nvars, rank, std::move(g));
}

Submodule Submodule::row_module(const PolyMatrix& m) { return Submodule(m.nvars(), m.cols(), m.row_elements()); }

Submodule Submodule::column_module(const PolyMatrix& m) {
  return Submodule(m.nvars(), m.rows(), m.column_elements());
}

const GroebnerBasis& Submodule::groebner() const {
  std::call_once(cache_->once, [this] { cache_->gb = buchberger(n_, k_, gens_, ModuleOrder::standard()); });
  return *cache_->gb;
}

GroebnerBasis Submodule::groebner(const ModuleOrder& order) const {
  if (order == ModuleOrder::standard()) return groebner();
  return buchberger(n_, k_, gens_, order);
}

bool Submodule::contains(const FreeModuleElement& v) const {
  if (v.nvars() != n_ || v.rank() != k_) throw StructuralError("membership test across free modules");
  if (v.is_zero()) return true;
  return groebner().reduces_to_zero(v);
}

bool Submodule::contains(const Submodule& other) const {
  if (other.n_ != n_ || other.k_ != k_) throw StructuralError("containment test across free modules");
  return std::all_of(other.gens_.begin(), other.gens_.end(), [this](const FreeModuleElement& g) { return contains(g); });
}

bool Submodule::is_full() const {
  std::vector<bool> unit(k_, false);
  for (const auto& lt : groebner().leading_terms())
    if (lt.monomial.is_one()) unit[lt.component] = true;
  return std::all_of(unit.begin(), unit.end(), [](bool b) { return b; });
}

PolyMatrix Submodule::generator_matrix() const { return PolyMatrix::from_rows(n_, k_, gens_); }

bool operator==(const Submodule& a, const Submodule& b) {
  if (a.n_ != b.n_ || a.k_ != b.k_) return false;
  return a.groebner().elements() == b.groebner().elements();
}

namespace {

std::vector<FreeModuleElement> wrap(std::size_t n, const std::vector<Polynomial>& polys) {
  std::vector<FreeModuleElement> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    if (p.nvars() != n) throw StructuralError("ideal generator lives in a different ring");
    out.emplace_back(n, std::vector<Polynomial>{p});
  }
  return out;
}

// Basis elements whose leading term lies outside the first `prefix`
// components, truncated to components [prefix, prefix + count).
std::vector<FreeModuleElement> harvest(const GroebnerBasis& gb, std::size_t prefix, std::size_t count) {
  std::vector<FreeModuleElement> out;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (gb.leading_terms()[i].component < prefix) continue;
    out.push_back(gb.elements()[i].slice(prefix, count));
  }
  return out;
}

}  // namespace

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators) : module_(nvars, 1, wrap(nvars, generators)) {}

Ideal::Ideal(Submodule module) : module_(std::move(module)) {
  if (module_.rank() != 1) throw StructuralError("an ideal is a submodule of rank 1");
}

std::vector<Polynomial> Ideal::generators() const {
  std::vector<Polynomial> out;
  for (const auto& g : module_.generators()) out.push_back(g[0]);
  return out;
}

std::vector<Polynomial> Ideal::groebner_basis() const {
  std::vector<Polynomial> out;
  for (const auto& g : module_.groebner().elements()) out.push_back(g[0]);
  return out;
}

bool Ideal::contains(const Polynomial& f) const {
  return module_.contains(FreeModuleElement(nvars(), std::vector<Polynomial>{f}));
}

bool Ideal::is_unit() const {
  const auto& lts = module_.groebner().leading_terms();
  return std::any_of(lts.begin(), lts.end(), [](const LeadingTerm& lt) { return lt.monomial.is_one(); });
}

// ---------------------------------------------------------------------------
// Operations

FreeModuleElement normal_form(const FreeModuleElement& v, const Submodule& g) { return g.groebner().normal_form(v); }

Submodule syzygies(std::size_t nvars, std::size_t rank, std::span<const FreeModuleElement> gens) {
  const std::size_t s = gens.size();
  if (s == 0) return Submodule::zero(nvars, 0);
  std::vector<FreeModuleElement> tagged;
  tagged.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    if (gens[i].nvars() != nvars || gens[i].rank() != rank) throw StructuralError("generator of the wrong rank");
    tagged.push_back(gens[i].concat(FreeModuleElement::unit(nvars, s, i)));
  }
  GroebnerBasis gb = buchberger(nvars, rank + s, tagged, ModuleOrder::eliminating(rank));
  return Submodule(nvars, s, harvest(gb, rank, s));
}

Submodule kernel_of_matrix(const PolyMatrix& m) {
  const auto cols = m.column_elements();
  if (cols.empty()) return Submodule::zero(m.nvars(), 0);
  return syzygies(m.nvars(), m.rows(), cols);
}

bool module_membership(const FreeModuleElement& v, const Submodule& p) { return p.contains(v); }

Submodule module_intersection(const Submodule& a, const Submodule& b) {
  if (a.nvars() != b.nvars() || a.rank() != b.rank()) throw StructuralError("intersection across free modules");
  const std::size_t n = a.nvars(), k = a.rank();
  if (a.generators().empty() || b.generators().empty()) return Submodule::zero(n, k);
  std::vector<FreeModuleElement> gens;
  for (const auto& g : a.generators()) gens.push_back(g.concat(g));
  for (const auto& h : b.generators()) gens.push_back(h.concat(FreeModuleElement::zero(n, k)));
  GroebnerBasis gb = buchberger(n, 2 * k, gens, ModuleOrder::eliminating(k));
  return Submodule(n, k, harvest(gb, k, k));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) { return Ideal(module_intersection(a.module(), b.module())); }

Ideal quotient_by_element(const Submodule& p, const FreeModuleElement& v) {
  if (v.nvars() != p.nvars() || v.rank() != p.rank()) throw StructuralError("quotient across free modules");
  const std::size_t n = p.nvars(), k = p.rank();
  std::vector<FreeModuleElement> gens;
  gens.push_back(v.concat(FreeModuleElement::unit(n, 1, 0)));
  for (const auto& g : p.generators()) gens.push_back(g.concat(FreeModuleElement::zero(n, 1)));
  GroebnerBasis gb = buchberger(n, k + 1, gens, ModuleOrder::eliminating(k));
  return Ideal(Submodule(n, 1, harvest(gb, k, 1)));
}

Submodule colon(const Submodule& p, const Polynomial& f) {
  if (f.nvars() != p.nvars()) throw StructuralError("colon by a polynomial of a different ring");
  if (f.is_zero()) throw InvalidArgument("colon by the zero polynomial");
  if (f.is_constant()) return p;
  const std::size_t n = p.nvars(), k = p.rank();
  std::vector<FreeModuleElement> multiples;
  for (std::size_t j = 0; j < k; ++j) multiples.push_back(FreeModuleElement::unit(n, k, j).scaled(f));
  Submodule both = module_intersection(p, Submodule(n, k, std::move(multiples)));
  std::vector<FreeModuleElement> divided;
  for (const auto& g : both.generators()) {
    std::vector<Polynomial> c;
    for (const auto& comp : g.components()) c.push_back(exact_divide(comp, f));
    divided.emplace_back(n, std::move(c));
  }
  // p ⊆ p:f always; keep p's generators so the result visibly contains p.
  for (const auto& g : p.generators()) divided.push_back(g);
  return Submodule(n, k, std::move(divided));
}

Submodule saturation(const Submodule& p, const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("saturation by the zero polynomial");
  Submodule current = p;
  while (true) {
    Submodule next = colon(current, f);
    if (current.contains(next)) return current;
    current = std::move(next);
  }
}

Submodule eliminate_components(const Submodule& p, std::size_t drop_first) {
  const std::size_t k = p.rank();
  if (drop_first >= k)
    throw InvalidArgument("cannot drop " + std::to_string(drop_first) + " of " + std::to_string(k) + " components");
  if (drop_first == 0) return p;
  GroebnerBasis gb = p.groebner(ModuleOrder::eliminating(drop_first));
  return Submodule(p.nvars(), k - drop_first, harvest(gb, drop_first, k - drop_first));
}

Ideal eliminate_variables(const Ideal& ideal, const std::vector<bool>& keep) {
  const std::size_t n = ideal.nvars();
  if (keep.size() != n) throw StructuralError("variable mask has the wrong length");
  if (std::all_of(keep.begin(), keep.end(), [](bool b) { return b; })) return ideal;
  std::vector<bool> eliminate(n);
  for (std::size_t i = 0; i < n; ++i) eliminate[i] = !keep[i];
  ModuleOrder order(MonomialOrder::block(eliminate), ModuleOrder::Placement::PositionOverTerm);
  GroebnerBasis gb = ideal.module().groebner(order);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    const Monomial& lm = gb.leading_terms()[i].monomial;
    bool kept_only = true;
    for (std::size_t v = 0; v < n; ++v)
      if (eliminate[v] && lm[v] != 0) kept_only = false;
    if (kept_only) out.push_back(gb.elements()[i][0]);
  }
  return Ideal(n, std::move(out));
}

bool is_unit_ideal(const Ideal& ideal) { return ideal.is_unit(); }

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  if (f.nvars() != ideal.nvars()) throw StructuralError("radical membership across rings");
  if (f.is_zero()) return true;
  const std::size_t n = ideal.nvars();
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.groebner_basis()) gens.push_back(g.embed(n + 1, map));
  Polynomial t = Polynomial::variable(n + 1, n);
  gens.push_back(Polynomial::constant(n + 1, Rational(1)) - t * f.embed(n + 1, map));
  return Ideal(n + 1, std::move(gens)).is_unit();
}

int krull_dimension(const Ideal& ideal) {
  if (ideal.is_unit()) return -1;
  const std::size_t n = ideal.nvars();
  if (n >= 63) throw UnsupportedCase("too many variables for subset enumeration");
  std::vector<std::uint64_t> supports;
  for (const auto& lt : ideal.module().groebner().leading_terms()) {
    std::uint64_t s = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (lt.monomial[v] != 0) s |= (std::uint64_t{1} << v);
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    int size = std::popcount(subset);
    if (size <= best) continue;
    // Independent: no leading monomial uses only variables of the subset.
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint64_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

std::optional<std::size_t> vector_space_dimension(const Submodule& p) {
  const std::size_t n = p.nvars(), k = p.rank();
  const auto& lts = p.groebner().leading_terms();
  std::size_t total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Monomial> here;
    for (const auto& lt : lts)
      if (lt.component == c) here.push_back(lt.monomial);
    if (std::any_of(here.begin(), here.end(), [](const Monomial& m) { return m.is_one(); })) continue;
    if (n == 0) {
      ++total;
      continue;
    }
    // Every variable needs a pure power among the leading monomials.
    std::vector<int> bound(n, -1);
    for (const auto& m : here) {
      std::size_t support = 0, var = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (m[v] != 0) {
          ++support;
          var = v;
        }
      if (support == 1 && (bound[var] < 0 || m[var] < bound[var])) bound[var] = m[var];
    }
    if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) return std::nullopt;
    std::vector<int> e(n, 0);
    while (true) {
      Monomial mono(e);
      if (std::none_of(here.begin(), here.end(), [&](const Monomial& m) { return m.divides(mono); })) ++total;
      std::size_t v = 0;
      while (v < n && ++e[v] == bound[v]) e[v++] = 0;
      if (v == n) break;
    }
  }
  return total;
}

Polynomial lcm(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw StructuralError("lcm across rings");
  if (f.is_zero() || g.is_zero()) return Polynomial(f.nvars());
  if (f.is_constant()) return g.monic();
  if (g.is_constant()) return f.monic();
  Ideal both = ideal_intersection(Ideal(f.nvars(), {f}), Ideal(g.nvars(), {g}));
  auto basis = both.groebner_basis();
  if (basis.size() != 1) throw std::logic_error("intersection of principal ideals is not principal");
  return basis.front().monic();
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw StructuralError("gcd across rings");
  if (f.is_zero() && g.is_zero()) throw InvalidArgument("gcd(0, 0) is undefined");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.nvars(), Rational(1));
  return exact_divide(f * g, lcm(f, g)).monic();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("squarefree part of the zero polynomial");
  if (f.is_constant()) return Polynomial::constant(f.nvars(), Rational(1));
  Polynomial common = f;
  for (std::size_t v = 0; v < f.nvars() && !common.is_constant(); ++v) {
    Polynomial d = f.derivative(v);
    if (!d.is_zero()) common = gcd(common, d);
  }
  return exact_divide(f, common).monic();
}

}  // namespace pdectl
