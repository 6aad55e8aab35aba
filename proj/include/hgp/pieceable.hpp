#pragma once

#include <string>
#include <vector>

#include "hgp/gates.hpp"

namespace hgp {

struct ScheduleStep {
  std::vector<GateOp> gates;  // pairwise-disjoint targets
  bool ec = true;             // error-correction round follows this step
};

/// Time-stepped physical gate schedule. For round-robin schedules delta is
/// the number of steps and every step is EC-marked; injection schedules span
/// the code qubits followed by the ancilla block.
struct Schedule {
  std::vector<ScheduleStep> steps;
  std::size_t delta = 0;
  std::size_t n_qubits = 0;  // code qubits, plus ancilla block if any
  std::size_t n_code_qubits = 0;
  std::string targets;

  std::size_t n_gates() const;
  /// All physical qubit indices touched by any gate.
  std::vector<std::size_t> support() const;
  Circuit flatten() const;
};

struct TimeCost {
  std::size_t steps = 0;
  std::size_t tau_units = 0;  // EC-marked steps
};

TimeCost time_cost(const Schedule& s);

/// Round-robin CZ between a left and a right logical qubit of a symmetric
/// code: CZ between every pair in supp(Z̄_L) × supp(Z̄_R), bucketed into
/// Δ = max(|supp(a_i)|, |supp(β_l)|) sector-transversal steps by cyclically
/// shifting the position of the target support element.
Schedule round_robin_cz(const HgpCode& code, const CanonicalBasis& basis,
                        const LogicalQubitId& q_left, const LogicalQubitId& q_right);

/// Same bucketing over supp(X̄_L) × supp(X̄_R) with XCX gates,
/// Δ = max(|supp(b_h)|, |supp(α_j)|).
Schedule round_robin_xcx(const HgpCode& code, const CanonicalBasis& basis,
                         const LogicalQubitId& q_left, const LogicalQubitId& q_right);

/// CNOT between two same-sector logical qubits as four round-robin legs
/// through an opposite-sector intermediary m:
///   CZ(c,m) · XCX(m,t) · CZ(c,m) · XCX(m,t) = CNOT(c -> t).
/// The intermediary is the lexicographically smallest opposite-sector
/// logical qubit whose line supports avoid the operands' lines.
Schedule cnot_composite(const HgpCode& code, const CanonicalBasis& basis,
                        const LogicalQubitId& control, const LogicalQubitId& target);

/// Round-robin CZ between a logical qubit and the logical qubit of an
/// ancilla CSS code whose logical Z support is zeta; ancilla qubits are
/// numbered after the code block. Every step couples code and ancilla
/// qubits only, hence is transversal across the two blocks.
Schedule injection_cz(const HgpCode& code, const CanonicalBasis& basis, const LogicalQubitId& q,
                      const BitVector& ancilla_logical_z);

enum class GadgetKind { H, S, T };

/// Structural description of a state-injection gadget: ancilla state,
/// pieceable-CZ slot, transversal X-basis measurement, classically
/// controlled correction. The T gadget is emitted but not verified
/// (non-Clifford).
struct GadgetSpec {
  GadgetKind kind;
  LogicalQubitId data_qubit;
  std::string ancilla_state;      // |+>, |-i>, |T>
  std::string cz_slot;            // the injection_cz schedule slot
  std::string measurement;        // which block is measured, X basis
  std::string correction;         // classically controlled slot
  bool non_clifford_unverified = false;
};

GadgetSpec gadget_circuit(GadgetKind kind, const LogicalQubitId& q);

/// Greedy grouping of schedules whose physical supports are pairwise
/// disjoint; schedules in one batch run in parallel with merged steps.
struct ParallelGrouping {
  std::vector<std::vector<std::size_t>> batches;  // indices into the input
  std::vector<Schedule> merged;                   // one merged schedule per batch
  std::size_t n_schedules = 0;
  std::size_t min_batch_size = 0;        // n_p of the time-cost bound
  std::size_t max_logical_weight = 0;    // d↑, max canonical operator weight
  std::size_t total_tau_units = 0;       // sum over batches of max Δ
  std::size_t bound_tau_units = 0;       // ceil(d↑ · m / n_p)
};

ParallelGrouping parallel_groups(const HgpCode& code, const CanonicalBasis& basis,
                                 const std::vector<Schedule>& schedules);

/// Diagnostic only: the maximum weight of a transformed X stabiliser
/// generator after each step prefix — the intermediate generators an EC
/// round between steps would have to measure. Nothing acts on these values.
std::vector<std::size_t> transformed_x_weights(const HgpCode& code, const Schedule& s);

struct ScheduleReport {
  bool pass = false;
  std::string message;
  LogicalAction action;
  // basis positions whose image carries a residual sign (phase 2), folded
  // into a Pauli correction layer
  std::vector<std::size_t> pauli_corrections;
};

/// Flattens the schedule (EC markers are metadata) and compares the verified
/// logical action against the expected one, up to stabilisers and reported
/// Pauli corrections.
ScheduleReport verify_schedule(const HgpCode& code, const CanonicalBasis& basis,
                               const Schedule& s, const LogicalAction& expected);

}  // namespace hgp
