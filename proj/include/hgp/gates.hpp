#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hgp/canonical.hpp"
#include "hgp/partition.hpp"
#include "hgp/pauli.hpp"

namespace hgp {

/// Verified logical action of a physical circuit, reported modulo
/// stabilisers. Basis order is X_1..X_k then Z_1..Z_k (k logical qubits in
/// CanonicalBasis order); column q of the map is the image of basis
/// operator q expressed over the same order. phases[q] is the residual
/// i-exponent of the image relative to that product, with all-X-then-all-Z
/// multiplication order; a residual of 2 is a sign the report folds into a
/// Pauli correction rather than a failure.
struct LogicalAction {
  std::size_t k = 0;
  std::vector<BitVector> map_columns;  // 2k columns of length 2k
  std::vector<std::uint8_t> phases;    // 2k entries, mod 4
  std::string description;

  static LogicalAction identity(std::size_t k);
  bool get(std::size_t row, std::size_t col) const { return map_columns[col].get(row); }
  /// Preserves the canonical anticommutation pattern.
  bool is_symplectic() const;
  bool same_map(const LogicalAction& other) const;
};

/// Expected-action builders for schedule verification. Indices are positions
/// in the CanonicalBasis order.
LogicalAction expected_cz_action(const CanonicalBasis& basis, const LogicalQubitId& a,
                                 const LogicalQubitId& b);
LogicalAction expected_xcx_action(const CanonicalBasis& basis, const LogicalQubitId& a,
                                  const LogicalQubitId& b);
LogicalAction expected_cnot_action(const CanonicalBasis& basis, const LogicalQubitId& control,
                                   const LogicalQubitId& target);

class VerifyError : public std::runtime_error {
 public:
  explicit VerifyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Hadamard on every physical qubit, then SWAP within every 2-qubit subset
/// of the partition (diagonal-twin or sibling).
Circuit hadamard_swap_circuit(const HgpCode& code, const QubitPartition& p);

/// S on left diagonal qubits, S† on right diagonal qubits, CZ between twin
/// qubits. Square codes only.
Circuit cz_s_circuit(const HgpCode& code);

/// CZ on every sibling pair. Symmetric codes only.
Circuit sibling_cz_circuit(const HgpCode& code);

/// Conjugates every stabiliser generator through the circuit and demands the
/// image stays in the stabiliser group with phase exponent 0 (the executable
/// form of the S/S† phase-cancellation argument), then conjugates every
/// canonical basis operator and solves its image over basis + stabiliser
/// generators, recording the induced symplectic map and residual phases.
/// Throws VerifyError when the stabiliser group is not preserved, a
/// stabiliser image carries a nonzero phase, or an image falls outside the
/// stabiliser + logical span.
LogicalAction verify_gate(const HgpCode& code, const CanonicalBasis& basis, const Circuit& c);

}  // namespace hgp
