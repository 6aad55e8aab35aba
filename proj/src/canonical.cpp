#include "hgp/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgp {

std::string to_string(const LogicalQubitId& id) {
  return std::string(id.sector == Sector::Left ? "L" : "R") + "(" +
         std::to_string(id.pivot_row) + "," + std::to_string(id.pivot_col) + ")";
}

bool CanonicalBasis::has(const LogicalQubitId& id) const {
  for (const LogicalQubit& q : qubits)
    if (q.id == id) return true;
  return false;
}

std::size_t CanonicalBasis::index_of(const LogicalQubitId& id) const {
  for (std::size_t i = 0; i < qubits.size(); ++i)
    if (qubits[i].id == id) return i;
  throw std::out_of_range("logical qubit not in basis: " + to_string(id));
}

const LogicalQubit& CanonicalBasis::at(const LogicalQubitId& id) const {
  return qubits[index_of(id)];
}

CanonicalBasis canonical_basis(const HgpCode& code) {
  CanonicalBasis basis;
  basis.ker_a = strong_triangular_reduce(code.ha());
  basis.ker_a_t = strong_triangular_reduce(code.ha().transposed());
  basis.ker_b = strong_triangular_reduce(code.hb());
  basis.ker_b_t = strong_triangular_reduce(code.hb().transposed());

  const std::size_t n = code.n_qubits();
  const std::size_t n_left = code.na() * code.nb();
  const BitVector zeros_left(n_left);
  const BitVector zeros_right(n - n_left);

  for (std::size_t i : basis.ker_a.pivot_rows) {
    for (std::size_t h : basis.ker_b.pivot_rows) {
      LogicalQubit q;
      q.id = {Sector::Left, i + 1, h + 1};
      q.x_op = PauliOperator::x_type(
          concat(kron(BitVector::unit(code.na(), i), basis.ker_b.basis_with_pivot(h)), zeros_right));
      q.z_op = PauliOperator::z_type(
          concat(kron(basis.ker_a.basis_with_pivot(i), BitVector::unit(code.nb(), h)), zeros_right));
      basis.qubits.push_back(std::move(q));
    }
  }
  for (std::size_t j : basis.ker_a_t.pivot_rows) {
    for (std::size_t l : basis.ker_b_t.pivot_rows) {
      LogicalQubit q;
      q.id = {Sector::Right, j + 1, l + 1};
      q.x_op = PauliOperator::x_type(
          concat(zeros_left, kron(basis.ker_a_t.basis_with_pivot(j), BitVector::unit(code.mb(), l))));
      q.z_op = PauliOperator::z_type(
          concat(zeros_left, kron(BitVector::unit(code.ma(), j), basis.ker_b_t.basis_with_pivot(l))));
      basis.qubits.push_back(std::move(q));
    }
  }
  std::sort(basis.qubits.begin(), basis.qubits.end(),
            [](const LogicalQubit& a, const LogicalQubit& b) { return a.id < b.id; });
  return basis;
}

QubitCoord pivot_qubit(const LogicalQubitId& id) {
  return {id.pivot_row, id.pivot_col, id.sector};
}

LogicalQubitId twin_of(const HgpCode& code, const LogicalQubitId& id) {
  if (!code.is_square()) throw std::invalid_argument("twin_of requires a square code");
  if (id.qubit_class() == QubitClass::Diagonal)
    throw std::invalid_argument("diagonal qubit has no twin: " + to_string(id));
  return {id.sector, id.pivot_col, id.pivot_row};
}

LogicalQubitId sibling_of(const HgpCode& code, const CanonicalBasis& basis,
                          const LogicalQubitId& id) {
  if (!is_symmetric(code)) throw std::invalid_argument("sibling_of requires a symmetric code");
  LogicalQubitId sib{id.sector == Sector::Left ? Sector::Right : Sector::Left, id.pivot_row,
                     id.pivot_col};
  if (!basis.has(sib))
    throw std::invalid_argument("sibling pivot is not a logical qubit: " + to_string(sib) +
                                " (seed pivot sets of Ha and Haᵀ differ)");
  return sib;
}

namespace {

// Support confined to one row or one column of a single sector.
bool on_grid_line(const HgpCode& code, const BitVector& support) {
  std::vector<std::size_t> qubits = support.support();
  if (qubits.empty()) return false;
  QubitCoord first = code.coord_of(qubits.front());
  bool same_row = true, same_col = true;
  for (std::size_t q : qubits) {
    QubitCoord c = code.coord_of(q);
    if (c.sector != first.sector) return false;
    same_row = same_row && c.row == first.row;
    same_col = same_col && c.col == first.col;
  }
  return same_row || same_col;
}

}  // namespace

SymplecticReport verify_symplectic(const HgpCode& code, const CanonicalBasis& basis) {
  auto fail = [](std::string msg) { return SymplecticReport{false, std::move(msg)}; };

  std::vector<BitVector> hx_rows, hz_rows;
  for (std::size_t r = 0; r < code.hx().rows(); ++r) hx_rows.push_back(code.hx().row(r));
  for (std::size_t r = 0; r < code.hz().rows(); ++r) hz_rows.push_back(code.hz().row(r));
  Gf2Solver x_stab_span(hx_rows), z_stab_span(hz_rows);

  for (const LogicalQubit& q : basis.qubits) {
    for (const BitVector& zr : hz_rows)
      if (q.x_op.x.dot(zr))
        return fail("X operator of " + to_string(q.id) + " anticommutes with a Z stabiliser");
    for (const BitVector& xr : hx_rows)
      if (q.z_op.z.dot(xr))
        return fail("Z operator of " + to_string(q.id) + " anticommutes with an X stabiliser");
    if (x_stab_span.contains(q.x_op.x))
      return fail("X operator of " + to_string(q.id) + " lies in the stabiliser row space");
    if (z_stab_span.contains(q.z_op.z))
      return fail("Z operator of " + to_string(q.id) + " lies in the stabiliser row space");
    if (!on_grid_line(code, q.x_op.x) || !on_grid_line(code, q.z_op.z))
      return fail("operator of " + to_string(q.id) + " is not supported on a grid line");
  }

  for (const LogicalQubit& qx : basis.qubits) {
    for (const LogicalQubit& qz : basis.qubits) {
      std::size_t ov = qx.x_op.x.overlap(qz.z_op.z);
      std::size_t expected = (qx.id == qz.id) ? 1 : 0;
      if (ov != expected)
        return fail("support overlap of X " + to_string(qx.id) + " with Z " + to_string(qz.id) +
                    " is " + std::to_string(ov) + ", expected " + std::to_string(expected));
      if (qx.id == qz.id) {
        std::size_t pivot_index = code.qubit_index(pivot_qubit(qx.id));
        if (!(qx.x_op.x.get(pivot_index) && qz.z_op.z.get(pivot_index)))
          return fail("X/Z crossing of " + to_string(qx.id) + " is not at its pivot");
      }
    }
  }
  return {};
}

}  // namespace hgp
