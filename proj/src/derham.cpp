#include "pdectl/derham.hpp"

#include "pdectl/behavior.hpp"
#include "pdectl/parser.hpp"

namespace pdectl {

namespace {

PolyMatrix parse_rows(const Ring& ring, std::size_t cols, const std::vector<std::vector<const char*>>& rows) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& r : rows) {
    std::vector<Polynomial> row;
    for (const char* e : r) row.push_back(parse_polynomial(e, ring));
    out.push_back(std::move(row));
  }
  return PolyMatrix::from_rows(ring.nvars, cols, out);
}

}  // namespace

std::vector<NamedCheck> derham_resolution_checks() {
  const Ring ring = Ring::standard(3);
  const PolyMatrix div = parse_rows(ring, 3, {{"d1", "d2", "d3"}});
  const PolyMatrix curl = parse_rows(ring, 3, {{"0", "-d3", "d2"}, {"d3", "0", "-d1"}, {"-d2", "d1", "0"}});
  const PolyMatrix grad = parse_rows(ring, 1, {{"d1"}, {"d2"}, {"d3"}});

  std::vector<NamedCheck> out;
  PolyMatrix r_div = column_syzygy_matrix(div);
  out.push_back({"relations among the columns of div are generated by the columns of curl",
                 Submodule::column_module(r_div) == Submodule::column_module(curl),
                 "relation columns: " + std::to_string(r_div.cols())});
  PolyMatrix r_curl = column_syzygy_matrix(curl);
  out.push_back({"relations among the columns of curl are generated by the column of grad",
                 Submodule::column_module(r_curl) == Submodule::column_module(grad),
                 "relation columns: " + std::to_string(r_curl.cols())});
  PolyMatrix r_grad = column_syzygy_matrix(grad);
  out.push_back({"the column of grad has no relations", r_grad.cols() == 0, ""});
  out.push_back({"div * curl = 0", (div * curl).is_zero(), ""});
  out.push_back({"curl * grad = 0", (curl * grad).is_zero(), ""});
  Ideal m(3, grad.column(0).components());
  out.push_back({"the cokernel of div is A/m with m = (d1, d2, d3) of dimension 1",
                 vector_space_dimension(m.module()) == std::optional<std::size_t>(1) &&
                     Ideal(3, div.row(0).components()) == m,
                 ""});
  return out;
}

}  // namespace pdectl
