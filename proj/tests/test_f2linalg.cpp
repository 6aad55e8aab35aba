#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "hgp/binary_matrix.hpp"
#include "hgp/triangular.hpp"

using namespace hgp;

namespace {

const BinaryMatrix kTildeH = BinaryMatrix::from_rows({{1, 1, 0, 1, 1, 0, 0},
                                                      {1, 0, 1, 1, 0, 1, 0},
                                                      {0, 1, 1, 1, 0, 0, 1},
                                                      {1, 0, 1, 0, 1, 0, 1}});

// the strongly lower triangular example with pivots {3,5,6,7}
const BinaryMatrix kA = BinaryMatrix::from_rows({{1, 1, 0, 1},
                                                 {1, 1, 1, 0},
                                                 {1, 0, 0, 0},
                                                 {0, 1, 1, 1},
                                                 {0, 1, 0, 0},
                                                 {0, 0, 1, 0},
                                                 {0, 0, 0, 1}});

// Plain Gaussian-elimination kernel, the reference oracle for the reduction.
std::vector<BitVector> reference_kernel(const BinaryMatrix& h) {
  const std::size_t n = h.cols();
  BinaryMatrix m = h;
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> col_is_pivot(n, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && !m.get(sel, c)) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      BitVector tmp = m.row(r);
      m.set_row(r, m.row(sel));
      m.set_row(sel, tmp);
    }
    for (std::size_t r2 = 0; r2 < m.rows(); ++r2)
      if (r2 != r && m.get(r2, c)) m.xor_row_into(r, r2);
    pivot_col_of_row.push_back(c);
    col_is_pivot[c] = true;
    ++r;
  }
  std::vector<BitVector> kernel;
  for (std::size_t c = 0; c < n; ++c) {
    if (col_is_pivot[c]) continue;
    BitVector v(n);
    v.set(c, true);
    for (std::size_t row = 0; row < pivot_col_of_row.size(); ++row)
      if (m.get(row, c)) v.set(pivot_col_of_row[row], true);
    kernel.push_back(v);
  }
  return kernel;
}

BinaryMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  BinaryMatrix m(rows, cols);
  std::bernoulli_distribution coin(0.4);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, coin(rng));
  return m;
}

void check_reduction_contract(const BinaryMatrix& h) {
  TriangularKernel tk = strong_triangular_reduce(h);
  const std::size_t n = h.cols();

  // kernel membership and dimension
  for (const BitVector& v : tk.kernel_basis) CHECK(h.apply(v).is_zero());
  CHECK(tk.kernel_basis.size() == n - rank(h));
  CHECK(tk.kernel_basis.size() == tk.pivot_rows.size());
  CHECK(tk.kernel_basis.size() == tk.complement_basis.size());

  if (!tk.kernel_basis.empty())
    CHECK(is_strongly_lower_triangular(tk.as_matrix(n)));

  // span(F) ⊕ rowspace(h) = full space
  BinaryMatrix stacked = h;
  for (const BitVector& f : tk.complement_basis) {
    BinaryMatrix one(1, n);
    one.set_row(0, f);
    stacked = vstack(stacked, one);
  }
  CHECK(rank(stacked) == n);
  CHECK(rank(h) + tk.complement_basis.size() == n);

  // <k, f_p> = 1 iff k is the kernel column with pivot p
  for (std::size_t a = 0; a < tk.kernel_basis.size(); ++a)
    for (std::size_t b = 0; b < tk.complement_basis.size(); ++b)
      CHECK(tk.kernel_basis[a].dot(tk.complement_basis[b]) == (a == b));

  // the non-pivot columns are a basis of the column span
  std::vector<std::size_t> indep_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!tk.has_pivot(c)) indep_cols.push_back(c);
  BinaryMatrix ht = h.transposed();
  std::vector<BitVector> col_vectors;
  for (std::size_t c : indep_cols) col_vectors.push_back(ht.row(c));
  Gf2Solver span(col_vectors);
  CHECK(span.rank() == col_vectors.size());
  CHECK(span.rank() == rank(h));

  // span agreement with the plain-Gaussian reference kernel
  std::vector<BitVector> ref = reference_kernel(h);
  CHECK(ref.size() == tk.kernel_basis.size());
  std::vector<BitVector> both = ref;
  both.insert(both.end(), tk.kernel_basis.begin(), tk.kernel_basis.end());
  CHECK(Gf2Solver(both).rank() == ref.size());
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(kTildeH) == 3);
  CHECK(rank(BinaryMatrix::identity(4)) == 4);
  CHECK(rank(BinaryMatrix(3, 5)) == 0);
}

TEST_CASE("kron examples") {
  BinaryMatrix ones = BinaryMatrix::from_rows({{1, 1}});
  BinaryMatrix k = kron(BinaryMatrix::identity(2), ones);
  CHECK(k == BinaryMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}}));

  std::mt19937 rng(7);
  BinaryMatrix b = random_matrix(rng, 3, 4);
  CHECK(kron(BinaryMatrix::identity(1), b) == b);

  BinaryMatrix a47(4, 7), a74(7, 4);
  BinaryMatrix shape = kron(a47, a74);
  CHECK(shape.rows() == 28);
  CHECK(shape.cols() == 28);
}

TEST_CASE("strong triangular reduction of the Hamming example") {
  TriangularKernel tk = strong_triangular_reduce(kTildeH);
  CHECK(tk.pivot_rows == std::vector<std::size_t>{2, 4, 5, 6});  // 1-based {3,5,6,7}
  CHECK(tk.as_matrix(7) == kA);
  CHECK(is_strongly_lower_triangular(tk.as_matrix(7)));
}

TEST_CASE("strong triangular reduction of the transpose") {
  TriangularKernel tk = strong_triangular_reduce(kTildeH.transposed());
  REQUIRE(tk.kernel_basis.size() == 1);
  CHECK(tk.kernel_basis[0] == BitVector::from_bits({1, 0, 1, 1}));
  CHECK(tk.pivot_rows == std::vector<std::size_t>{3});  // 1-based {4}
}

TEST_CASE("reduction edge cases") {
  TriangularKernel full = strong_triangular_reduce(BinaryMatrix::identity(5));
  CHECK(full.kernel_basis.empty());
  CHECK(full.pivot_rows.empty());

  TriangularKernel zero = strong_triangular_reduce(BinaryMatrix(3, 4));
  CHECK(zero.kernel_basis.size() == 4);
  CHECK(zero.as_matrix(4) == BinaryMatrix::identity(4));
  CHECK(zero.pivot_rows == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("strongly lower triangular predicate") {
  CHECK(is_strongly_lower_triangular(kA));
  CHECK_FALSE(is_strongly_lower_triangular(BinaryMatrix::from_rows({{1, 1}, {0, 1}})));
  CHECK(is_strongly_lower_triangular(BinaryMatrix::identity(6)));
  CHECK_FALSE(is_strongly_lower_triangular(BinaryMatrix(3, 2)));  // zero columns
}

TEST_CASE("reduction properties on random matrices") {
  std::mt19937 rng(20220412);
  std::uniform_int_distribution<std::size_t> dim(1, 20);
  for (int trial = 0; trial < 200; ++trial) {
    check_reduction_contract(random_matrix(rng, dim(rng), dim(rng)));
  }
}

TEST_CASE("matrix text format") {
  std::string text = format_matrix_text(kTildeH);
  CHECK(parse_matrix_text(text) == kTildeH);

  CHECK_THROWS_AS(parse_matrix_text("2 2\n1 0\n1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_text("2 2\n1 0 1\n1 0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_text("1 2\nx 0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_text("1 2\n2 0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_text(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_text("1\n1"), std::invalid_argument);
}

TEST_CASE("solver decomposition") {
  std::vector<BitVector> gens = {BitVector::from_bits({1, 1, 0, 0}),
                                 BitVector::from_bits({0, 1, 1, 0}),
                                 BitVector::from_bits({1, 0, 1, 0})};
  Gf2Solver solver(gens);
  CHECK(solver.rank() == 2);
  CHECK(solver.contains(BitVector::from_bits({1, 0, 1, 0})));
  CHECK_FALSE(solver.contains(BitVector::from_bits({0, 0, 0, 1})));
  auto combo = solver.decompose(BitVector::from_bits({1, 0, 1, 0}));
  REQUIRE(combo.has_value());
  BitVector check(4);
  for (std::size_t g : combo->support()) check.xor_with(gens[g]);
  CHECK(check == BitVector::from_bits({1, 0, 1, 0}));
}
