#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hgp/code.hpp"
#include "hgp/triangular.hpp"

namespace hgp {

enum class QubitClass { Diagonal, Mirror };

/// Identity of a logical qubit by its physical pivot: the unique qubit where
/// its canonical X and Z operators cross.
struct LogicalQubitId {
  Sector sector;
  std::size_t pivot_row;  // 1-based
  std::size_t pivot_col;  // 1-based

  QubitClass qubit_class() const {
    return pivot_row == pivot_col ? QubitClass::Diagonal : QubitClass::Mirror;
  }
  /// Report order: sector L before R, then lexicographic (row, col).
  auto operator<=>(const LogicalQubitId&) const = default;
};

std::string to_string(const LogicalQubitId& id);

struct LogicalQubit {
  LogicalQubitId id;
  PauliOperator x_op;
  PauliOperator z_op;
};

/// Canonical symplectic line basis: per logical qubit one X and one Z
/// operator, each supported on a single grid line, crossing exactly at the
/// pivot. Built from the strongly-lower-triangular reductions of the four
/// seed matrices Ha, Haᵀ, Hb, Hbᵀ:
///   left  (i,h):  X = (f_i ⊗ b_h | 0),  Z = (a_i ⊗ f_h | 0)
///   right (j,l):  X = (0 | α_j ⊗ f_l),  Z = (0 | f_j ⊗ β_l)
struct CanonicalBasis {
  std::vector<LogicalQubit> qubits;  // L-sector first, each sector lexicographic
  TriangularKernel ker_a;    // ker Ha,  vectors a_i
  TriangularKernel ker_a_t;  // ker Haᵀ, vectors α_j
  TriangularKernel ker_b;    // ker Hb,  vectors b_h
  TriangularKernel ker_b_t;  // ker Hbᵀ, vectors β_l

  std::size_t k() const { return qubits.size(); }
  bool has(const LogicalQubitId& id) const;
  std::size_t index_of(const LogicalQubitId& id) const;  // throws if absent
  const LogicalQubit& at(const LogicalQubitId& id) const;
};

CanonicalBasis canonical_basis(const HgpCode& code);

QubitCoord pivot_qubit(const LogicalQubitId& id);

/// Coordinate-swapped partner within the same sector. Square codes only;
/// diagonal qubits have no twin.
LogicalQubitId twin_of(const HgpCode& code, const LogicalQubitId& id);

/// Same-coordinate partner in the other sector. Symmetric codes only;
/// throws if the partner pivot is not itself a logical qubit (possible when
/// the seed pivot sets of Ha and Haᵀ differ).
LogicalQubitId sibling_of(const HgpCode& code, const CanonicalBasis& basis,
                          const LogicalQubitId& id);

struct SymplecticReport {
  bool pass = true;
  std::string first_violation;
};

/// Checks that every basis operator commutes with the stabilisers and is a
/// true logical (not a stabiliser), that X/Z support overlaps follow the
/// exactly-one-qubit identity pattern located at the pivots, and that every
/// operator is supported on a single grid line.
SymplecticReport verify_symplectic(const HgpCode& code, const CanonicalBasis& basis);

}  // namespace hgp
