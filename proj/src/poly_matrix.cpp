#include "pdectl/poly_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace pdectl {

PolyMatrix::PolyMatrix(std::size_t nvars, std::size_t rows, std::size_t cols)
    : n_(nvars), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(nvars)) {}

PolyMatrix PolyMatrix::from_rows(std::size_t nvars, std::size_t cols, const std::vector<std::vector<Polynomial>>& rows) {
  PolyMatrix m(nvars, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw StructuralError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].nvars() != nvars) throw StructuralError("matrix entry lives in a different ring");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::from_rows(std::size_t nvars, std::size_t cols, std::span<const FreeModuleElement> rows) {
  PolyMatrix m(nvars, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rank() != cols || rows[i].nvars() != nvars) throw StructuralError("row has the wrong shape");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

PolyMatrix PolyMatrix::from_columns(std::size_t nvars, std::size_t rows, std::span<const FreeModuleElement> cols) {
  PolyMatrix m(nvars, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rank() != rows || cols[j].nvars() != nvars) throw StructuralError("column has the wrong shape");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

PolyMatrix PolyMatrix::identity(std::size_t nvars, std::size_t size) {
  PolyMatrix m(nvars, size, size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = Polynomial::constant(nvars, Rational(1));
  return m;
}

FreeModuleElement PolyMatrix::row(std::size_t i) const {
  std::vector<Polynomial> c(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  return FreeModuleElement(n_, std::move(c));
}

FreeModuleElement PolyMatrix::column(std::size_t j) const {
  std::vector<Polynomial> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return FreeModuleElement(n_, std::move(c));
}

std::vector<FreeModuleElement> PolyMatrix::row_elements() const {
  std::vector<FreeModuleElement> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<FreeModuleElement> PolyMatrix::column_elements() const {
  std::vector<FreeModuleElement> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(n_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_ || n_ != other.n_) throw StructuralError("matrix product shape mismatch");
  PolyMatrix r(n_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) {
      Polynomial s(n_);
      for (std::size_t l = 0; l < cols_; ++l) s += at(i, l) * other.at(l, j);
      r.at(i, j) = std::move(s);
    }
  return r;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  PolyMatrix s(n_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(rows[i], cols[j]);
  return s;
}

namespace {

struct BareissResult {
  std::size_t rank;
  Polynomial last_pivot;
  int sign;
};

// Fraction-free elimination; each entry after step t is a (t+1)-minor of the
// permuted input, so every division below is exact.
BareissResult bareiss(PolyMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols(), n = a.nvars();
  Polynomial prev = Polynomial::constant(n, Rational(1));
  int sign = 1;
  std::size_t r = 0;
  for (; r < std::min(rows, cols); ++r) {
    std::size_t pi = rows, pj = cols;
    int best_deg = 0;
    std::size_t best_size = 0;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j) {
        const Polynomial& e = a.at(i, j);
        if (e.is_zero()) continue;
        if (pi == rows || e.degree() < best_deg || (e.degree() == best_deg && e.size() < best_size)) {
          pi = i;
          pj = j;
          best_deg = e.degree();
          best_size = e.size();
        }
      }
    if (pi == rows) break;
    if (pi != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(pi, j), a.at(r, j));
      sign = -sign;
    }
    if (pj != r) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a.at(i, pj), a.at(i, r));
      sign = -sign;
    }
    const Polynomial pivot = a.at(r, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = r + 1; j < cols; ++j) {
        Polynomial num = pivot * a.at(i, j) - a.at(i, r) * a.at(r, j);
        a.at(i, j) = exact_divide(num, prev);
      }
      a.at(i, r) = Polynomial(n);
    }
    prev = pivot;
  }
  return {r, prev, sign};
}

}  // namespace

Polynomial PolyMatrix::determinant() const {
  if (rows_ != cols_) throw StructuralError("determinant of a non-square matrix");
  if (rows_ == 0) return Polynomial::constant(n_, Rational(1));
  BareissResult b = bareiss(*this);
  if (b.rank < rows_) return Polynomial(n_);
  return b.sign > 0 ? b.last_pivot : -b.last_pivot;
}

std::size_t PolyMatrix::rank() const { return bareiss(*this).rank; }

std::vector<Polynomial> PolyMatrix::minors(std::size_t r) const {
  if (r == 0) return {Polynomial::constant(n_, Rational(1))};
  std::vector<Polynomial> out;
  if (r > rows_ || r > cols_) return out;
  const auto row_sets = combinations(rows_, r);
  const auto col_sets = combinations(cols_, r);
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) out.push_back(submatrix(rs, cs).determinant());
  return out;
}

std::string PolyMatrix::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).to_string(names);
    }
    out += "]\n";
  }
  return out;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    out.push_back(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace pdectl
