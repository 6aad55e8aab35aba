#include "hgp/triangular.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgp {

bool TriangularKernel::has_pivot(std::size_t pivot_row) const {
  return std::binary_search(pivot_rows.begin(), pivot_rows.end(), pivot_row);
}

const BitVector& TriangularKernel::basis_with_pivot(std::size_t pivot_row) const {
  auto it = std::lower_bound(pivot_rows.begin(), pivot_rows.end(), pivot_row);
  if (it == pivot_rows.end() || *it != pivot_row)
    throw std::out_of_range("no kernel basis vector with that pivot");
  return kernel_basis[static_cast<std::size_t>(it - pivot_rows.begin())];
}

BinaryMatrix TriangularKernel::as_matrix(std::size_t n) const {
  BinaryMatrix m(n, kernel_basis.size());
  for (std::size_t c = 0; c < kernel_basis.size(); ++c)
    for (std::size_t r : kernel_basis[c].support()) m.set(r, c, true);
  return m;
}

TriangularKernel strong_triangular_reduce(const BinaryMatrix& h) {
  const std::size_t n = h.cols();
  // Row-major storage favours row operations, so eliminate on transposes:
  // row j of ht is column j of h, row j of kt is kernel candidate K^j.
  BinaryMatrix ht = h.transposed();
  BinaryMatrix kt = BinaryMatrix::identity(n);
  std::vector<bool> is_pivot(n, true);

  for (std::size_t j = 0; j < n; ++j) {
    auto first = ht.row(j).first_set();
    if (!first) continue;  // column already zero: K^j is a kernel vector
    is_pivot[j] = false;
    const std::size_t i = *first;
    for (std::size_t l = j + 1; l < n; ++l) {
      if (ht.get(l, i)) {
        ht.xor_row_into(j, l);
        kt.xor_row_into(j, l);
      }
    }
  }

  TriangularKernel out;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) continue;
    out.kernel_basis.push_back(kt.row(j));
    out.pivot_rows.push_back(j);
    out.complement_basis.push_back(BitVector::unit(n, j));
  }
  return out;
}

bool is_strongly_lower_triangular(const BinaryMatrix& m) {
  const std::size_t ncols = m.cols();
  BinaryMatrix mt = m.transposed();
  std::vector<std::size_t> pivot(ncols);
  std::vector<bool> used(m.rows(), false);
  for (std::size_t j = 0; j < ncols; ++j) {
    auto last = mt.row(j).last_set();
    if (!last) return false;  // zero column has no pivot
    if (used[*last]) return false;
    used[*last] = true;
    pivot[j] = *last;
  }
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t j2 = 0; j2 < ncols; ++j2)
      if (j2 != j && pivot[j2] > pivot[j] && m.get(pivot[j], j2)) return false;
  return true;
}

}  // namespace hgp
