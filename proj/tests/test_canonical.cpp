#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "hgp/canonical.hpp"

using namespace hgp;

namespace {

BinaryMatrix load_fixture(const std::string& name) {
  return load_matrix_file(std::string(TESTDATA_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("canonical basis of the non-full-rank Hamming square code") {
  BinaryMatrix tilde = load_fixture("tilde_h.txt");
  HgpCode code = build_hgp(tilde, tilde);
  CanonicalBasis basis = canonical_basis(code);

  CHECK(basis.k() == 17);
  CHECK(basis.ker_a.pivot_rows == std::vector<std::size_t>{2, 4, 5, 6});  // {3,5,6,7}
  CHECK(basis.ker_a_t.pivot_rows == std::vector<std::size_t>{3});         // {4}

  std::size_t left = 0, right = 0, left_diag = 0, right_diag = 0;
  for (const LogicalQubit& q : basis.qubits) {
    if (q.id.sector == Sector::Left) {
      ++left;
      if (q.id.qubit_class() == QubitClass::Diagonal) ++left_diag;
    } else {
      ++right;
      if (q.id.qubit_class() == QubitClass::Diagonal) ++right_diag;
    }
  }
  CHECK(left == 16);
  CHECK(left_diag == 4);
  CHECK(right == 1);
  CHECK(right_diag == 1);
  CHECK(basis.has({Sector::Right, 4, 4}));

  CHECK(verify_symplectic(code, basis).pass);
}

TEST_CASE("basis ordering is sector-then-lexicographic") {
  BinaryMatrix tilde = load_fixture("tilde_h.txt");
  HgpCode code = build_hgp(tilde, tilde);
  CanonicalBasis basis = canonical_basis(code);
  for (std::size_t i = 1; i < basis.qubits.size(); ++i)
    CHECK(basis.qubits[i - 1].id < basis.qubits[i].id);
  CHECK(basis.qubits.front().id == LogicalQubitId{Sector::Left, 3, 3});
  CHECK(basis.qubits.back().id == LogicalQubitId{Sector::Right, 4, 4});
}

TEST_CASE("canonical basis of the symmetric Hamming and toric codes") {
  BinaryMatrix h = load_fixture("h_ind.txt");
  BinaryMatrix m = multiply(h.transposed(), h);
  HgpCode sym = build_hgp(m, m);
  CanonicalBasis sym_basis = canonical_basis(sym);
  CHECK(sym_basis.k() == 32);
  CHECK(verify_symplectic(sym, sym_basis).pass);

  BinaryMatrix toric = load_fixture("h_toric.txt");
  HgpCode toric_code = build_hgp(toric, toric);
  CanonicalBasis toric_basis = canonical_basis(toric_code);
  CHECK(toric_basis.k() == 2);
  CHECK(verify_symplectic(toric_code, toric_basis).pass);
  // square [n,k] seed with [m,kT] transpose: k² left logicals (k diagonal)
  // and (kT)² right logicals (kT diagonal); toric has k = kT = 1
  for (const LogicalQubit& q : toric_basis.qubits)
    CHECK(q.id.qubit_class() == QubitClass::Diagonal);
  CHECK(toric_basis.qubits[0].id.sector == Sector::Left);
  CHECK(toric_basis.qubits[1].id.sector == Sector::Right);
}

TEST_CASE("full-rank transpose side leaves the right sector empty") {
  BinaryMatrix rep = load_fixture("h_rep.txt");
  HgpCode surface = build_hgp(rep, rep);
  CanonicalBasis basis = canonical_basis(surface);
  REQUIRE(basis.k() == 1);
  CHECK(basis.qubits[0].id == LogicalQubitId{Sector::Left, 3, 3});
  CHECK(basis.qubits[0].id.qubit_class() == QubitClass::Diagonal);
  CHECK(verify_symplectic(surface, basis).pass);
}

TEST_CASE("line supports sit on the pivot row and column") {
  BinaryMatrix tilde = load_fixture("tilde_h.txt");
  HgpCode code = build_hgp(tilde, tilde);
  CanonicalBasis basis = canonical_basis(code);
  for (const LogicalQubit& q : basis.qubits) {
    for (std::size_t idx : q.x_op.x.support()) {
      QubitCoord c = code.coord_of(idx);
      CHECK(c.sector == q.id.sector);
      // left X operators span a row; right X operators span a column
      if (q.id.sector == Sector::Left)
        CHECK(c.row == q.id.pivot_row);
      else
        CHECK(c.col == q.id.pivot_col);
    }
    for (std::size_t idx : q.z_op.z.support()) {
      QubitCoord c = code.coord_of(idx);
      CHECK(c.sector == q.id.sector);
      if (q.id.sector == Sector::Left)
        CHECK(c.col == q.id.pivot_col);
      else
        CHECK(c.row == q.id.pivot_row);
    }
  }
}

TEST_CASE("a corrupted basis fails the overlap check") {
  BinaryMatrix tilde = load_fixture("tilde_h.txt");
  HgpCode code = build_hgp(tilde, tilde);
  CanonicalBasis basis = canonical_basis(code);
  basis.qubits[0].z_op.z.xor_with(basis.qubits[0].x_op.x);
  SymplecticReport rep = verify_symplectic(code, basis);
  CHECK_FALSE(rep.pass);
  CHECK(!rep.first_violation.empty());
}

TEST_CASE("pivot, twin and sibling relations") {
  BinaryMatrix tilde = load_fixture("tilde_h.txt");
  HgpCode square = build_hgp(tilde, tilde);

  CHECK(pivot_qubit({Sector::Left, 3, 3}) == QubitCoord{3, 3, Sector::Left});
  CHECK(pivot_qubit({Sector::Right, 4, 4}) == QubitCoord{4, 4, Sector::Right});
  CHECK(pivot_qubit({Sector::Left, 6, 5}) == QubitCoord{6, 5, Sector::Left});

  CHECK(twin_of(square, {Sector::Left, 3, 5}) == LogicalQubitId{Sector::Left, 5, 3});
  CHECK_THROWS_AS(twin_of(square, {Sector::Left, 3, 3}), std::invalid_argument);

  HgpCode rect = build_hgp(tilde, load_fixture("h_rep.txt"));
  CHECK_THROWS_AS(twin_of(rect, {Sector::Left, 3, 5}), std::invalid_argument);

  BinaryMatrix toric = load_fixture("h_toric.txt");
  HgpCode toric_code = build_hgp(toric, toric);
  CanonicalBasis toric_basis = canonical_basis(toric_code);
  CHECK(sibling_of(toric_code, toric_basis, {Sector::Left, 3, 3}) ==
        LogicalQubitId{Sector::Right, 3, 3});
  CHECK_THROWS_AS(sibling_of(square, canonical_basis(square), {Sector::Left, 3, 3}),
                  std::invalid_argument);  // not a symmetric code

  BinaryMatrix h = load_fixture("h_ind.txt");
  BinaryMatrix m = multiply(h.transposed(), h);
  HgpCode sym = build_hgp(m, m);
  CanonicalBasis sym_basis = canonical_basis(sym);
  CHECK(sibling_of(sym, sym_basis, {Sector::Left, 6, 5}) == LogicalQubitId{Sector::Right, 6, 5});
}

TEST_CASE("X and Z pairs anticommute exactly on their own qubit") {
  BinaryMatrix h = load_fixture("h_ind.txt");
  BinaryMatrix m = multiply(h.transposed(), h);
  HgpCode sym = build_hgp(m, m);
  CanonicalBasis basis = canonical_basis(sym);
  for (const LogicalQubit& qa : basis.qubits)
    for (const LogicalQubit& qb : basis.qubits) {
      bool anticommute = !qa.x_op.commutes_with(qb.z_op);
      CHECK(anticommute == (qa.id == qb.id));
    }
}
