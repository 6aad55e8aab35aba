#include "hgp/pieceable.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hgp {

std::size_t Schedule::n_gates() const {
  std::size_t n = 0;
  for (const ScheduleStep& st : steps) n += st.gates.size();
  return n;
}

std::vector<std::size_t> Schedule::support() const {
  std::set<std::size_t> qs;
  for (const ScheduleStep& st : steps)
    for (const GateOp& g : st.gates) {
      qs.insert(g.a);
      if (g.arity() == 2) qs.insert(g.b);
    }
  return {qs.begin(), qs.end()};
}

Circuit Schedule::flatten() const {
  Circuit c(n_qubits);
  for (const ScheduleStep& st : steps)
    for (const GateOp& g : st.gates) c.append(g);
  return c;
}

TimeCost time_cost(const Schedule& s) {
  TimeCost tc;
  tc.steps = s.steps.size();
  for (const ScheduleStep& st : s.steps)
    if (st.ec) ++tc.tau_units;
  return tc;
}

namespace {

void check_step_disjoint(const ScheduleStep& st) {
  std::set<std::size_t> seen;
  for (const GateOp& g : st.gates) {
    if (!seen.insert(g.a).second || (g.arity() == 2 && !seen.insert(g.b).second))
      throw std::logic_error("schedule step reuses a qubit");
  }
}

/// Cyclic η ⊕_Δ t bucketing: source support positions shift cyclically
/// mod Δ; a pair is emitted only when the shifted position lands inside the
/// target support. Union over t = 0..Δ-1 is the full product, once each.
Schedule round_robin(const HgpCode& code, GateKind kind,
                     const std::vector<std::size_t>& src_qubits,
                     const std::vector<std::size_t>& dst_qubits, std::string targets) {
  const std::size_t delta = std::max(src_qubits.size(), dst_qubits.size());
  Schedule s;
  s.delta = delta;
  s.n_qubits = code.n_qubits();
  s.n_code_qubits = code.n_qubits();
  s.targets = std::move(targets);
  for (std::size_t t = 0; t < delta; ++t) {
    ScheduleStep step;
    step.ec = true;
    for (std::size_t pos = 0; pos < src_qubits.size(); ++pos) {
      std::size_t shifted = (pos + t) % delta;
      if (shifted < dst_qubits.size())
        step.gates.push_back(GateOp::two(kind, src_qubits[pos], dst_qubits[shifted]));
    }
    check_step_disjoint(step);
    s.steps.push_back(std::move(step));
  }
  return s;
}

void require_cross_sector(const CanonicalBasis& basis, const LogicalQubitId& q_left,
                          const LogicalQubitId& q_right) {
  if (q_left.sector != Sector::Left || q_right.sector != Sector::Right)
    throw std::invalid_argument("round robin expects a left and a right logical qubit");
  if (!basis.has(q_left) || !basis.has(q_right))
    throw std::invalid_argument("logical qubit not in basis");
}

}  // namespace

Schedule round_robin_cz(const HgpCode& code, const CanonicalBasis& basis,
                        const LogicalQubitId& q_left, const LogicalQubitId& q_right) {
  if (!is_symmetric(code)) throw std::invalid_argument("round_robin_cz requires a symmetric code");
  require_cross_sector(basis, q_left, q_right);
  // supp(Z̄_L) = supp(a_i) down column h; supp(Z̄_R) = supp(β_l) along row j.
  std::vector<std::size_t> left, right;
  for (std::size_t eta : basis.ker_a.basis_with_pivot(q_left.pivot_row - 1).support())
    left.push_back(code.qubit_index({eta + 1, q_left.pivot_col, Sector::Left}));
  for (std::size_t gamma : basis.ker_b_t.basis_with_pivot(q_right.pivot_col - 1).support())
    right.push_back(code.qubit_index({q_right.pivot_row, gamma + 1, Sector::Right}));
  return round_robin(code, GateKind::CZ, left, right,
                     "CZ " + to_string(q_left) + ", " + to_string(q_right));
}

Schedule round_robin_xcx(const HgpCode& code, const CanonicalBasis& basis,
                         const LogicalQubitId& q_left, const LogicalQubitId& q_right) {
  if (!is_symmetric(code)) throw std::invalid_argument("round_robin_xcx requires a symmetric code");
  require_cross_sector(basis, q_left, q_right);
  // supp(X̄_L) = supp(b_h) along row i; supp(X̄_R) = supp(α_j) down column l.
  std::vector<std::size_t> left, right;
  for (std::size_t eta : basis.ker_b.basis_with_pivot(q_left.pivot_col - 1).support())
    left.push_back(code.qubit_index({q_left.pivot_row, eta + 1, Sector::Left}));
  for (std::size_t gamma : basis.ker_a_t.basis_with_pivot(q_right.pivot_row - 1).support())
    right.push_back(code.qubit_index({gamma + 1, q_right.pivot_col, Sector::Right}));
  return round_robin(code, GateKind::XCX, left, right,
                     "XCX " + to_string(q_left) + ", " + to_string(q_right));
}

Schedule cnot_composite(const HgpCode& code, const CanonicalBasis& basis,
                        const LogicalQubitId& control, const LogicalQubitId& target) {
  if (control.sector != target.sector)
    throw std::invalid_argument("cnot_composite expects same-sector operands; use the "
                                "cross-sector primitives directly otherwise");
  if (control == target) throw std::invalid_argument("control and target must differ");
  if (!basis.has(control) || !basis.has(target))
    throw std::invalid_argument("logical qubit not in basis");

  const Sector other = control.sector == Sector::Left ? Sector::Right : Sector::Left;
  std::set<std::size_t> operand_lines;
  for (const LogicalQubitId& id : {control, target}) {
    const LogicalQubit& q = basis.at(id);
    for (std::size_t i : q.x_op.x.support()) operand_lines.insert(i);
    for (std::size_t i : q.z_op.z.support()) operand_lines.insert(i);
  }
  auto disjoint_from_operands = [&](const LogicalQubit& q) {
    for (std::size_t i : q.x_op.x.support())
      if (operand_lines.count(i)) return false;
    for (std::size_t i : q.z_op.z.support())
      if (operand_lines.count(i)) return false;
    return true;
  };

  const LogicalQubit* mid = nullptr;
  for (const LogicalQubit& q : basis.qubits)  // basis order is lexicographic
    if (q.id.sector == other && disjoint_from_operands(q)) {
      mid = &q;
      break;
    }
  if (!mid) throw std::invalid_argument("no valid intermediary logical qubit in the other sector");

  auto leg_cz = [&](const LogicalQubitId& a, const LogicalQubitId& b) {
    return a.sector == Sector::Left ? round_robin_cz(code, basis, a, b)
                                    : round_robin_cz(code, basis, b, a);
  };
  auto leg_xcx = [&](const LogicalQubitId& a, const LogicalQubitId& b) {
    return a.sector == Sector::Left ? round_robin_xcx(code, basis, a, b)
                                    : round_robin_xcx(code, basis, b, a);
  };

  Schedule out;
  out.n_qubits = code.n_qubits();
  out.n_code_qubits = code.n_qubits();
  out.targets = "CNOT " + to_string(control) + " -> " + to_string(target) + " via " +
                to_string(mid->id);
  for (const Schedule& leg : {leg_cz(control, mid->id), leg_xcx(target, mid->id),
                              leg_cz(control, mid->id), leg_xcx(target, mid->id)}) {
    for (const ScheduleStep& st : leg.steps) out.steps.push_back(st);
    out.delta += leg.delta;
  }
  return out;
}

Schedule injection_cz(const HgpCode& code, const CanonicalBasis& basis, const LogicalQubitId& q,
                      const BitVector& ancilla_logical_z) {
  if (!basis.has(q)) throw std::invalid_argument("logical qubit not in basis");
  if (ancilla_logical_z.is_zero())
    throw std::invalid_argument("ancilla logical Z support is empty");

  std::vector<std::size_t> data;
  if (q.sector == Sector::Left) {
    for (std::size_t eta : basis.ker_a.basis_with_pivot(q.pivot_row - 1).support())
      data.push_back(code.qubit_index({eta + 1, q.pivot_col, Sector::Left}));
  } else {
    for (std::size_t gamma : basis.ker_b_t.basis_with_pivot(q.pivot_col - 1).support())
      data.push_back(code.qubit_index({q.pivot_row, gamma + 1, Sector::Right}));
  }
  std::vector<std::size_t> ancilla;
  for (std::size_t i : ancilla_logical_z.support()) ancilla.push_back(code.n_qubits() + i);

  const std::size_t delta = std::max(data.size(), ancilla.size());
  Schedule s;
  s.delta = delta;
  s.n_qubits = code.n_qubits() + ancilla_logical_z.size();
  s.n_code_qubits = code.n_qubits();
  s.targets = "CZ " + to_string(q) + ", ancilla logical qubit";
  for (std::size_t t = 0; t < delta; ++t) {
    ScheduleStep step;
    step.ec = true;
    for (std::size_t pos = 0; pos < data.size(); ++pos) {
      std::size_t shifted = (pos + t) % delta;
      if (shifted < ancilla.size())
        step.gates.push_back(GateOp::two(GateKind::CZ, data[pos], ancilla[shifted]));
    }
    s.steps.push_back(std::move(step));
  }
  return s;
}

GadgetSpec gadget_circuit(GadgetKind kind, const LogicalQubitId& q) {
  GadgetSpec g;
  g.kind = kind;
  g.data_qubit = q;
  g.cz_slot = "pieceably fault-tolerant CZ between " + to_string(q) +
              " and the ancilla logical qubit (injection_cz schedule)";
  switch (kind) {
    case GadgetKind::H:
      g.ancilla_state = "|+>";
      g.measurement = "transversal X-basis measurement of the data block";
      g.correction = "logical X on the ancilla block when the outcome is -1; "
                     "output moves to the ancilla block";
      break;
    case GadgetKind::S:
      g.ancilla_state = "|-i>";
      g.measurement = "transversal X-basis measurement of the ancilla block";
      g.correction = "logical Z on the data block when the outcome is -1";
      break;
    case GadgetKind::T:
      g.ancilla_state = "|T>";
      g.measurement = "transversal X-basis measurement of the data block";
      g.correction = "classically controlled Clifford correction on the ancilla block";
      g.non_clifford_unverified = true;
      break;
  }
  return g;
}

ParallelGrouping parallel_groups(const HgpCode& code, const CanonicalBasis& basis,
                                 const std::vector<Schedule>& schedules) {
  ParallelGrouping out;
  out.n_schedules = schedules.size();

  std::vector<std::set<std::size_t>> supports;
  for (const Schedule& s : schedules) {
    auto sup = s.support();
    supports.emplace_back(sup.begin(), sup.end());
  }
  std::vector<std::set<std::size_t>> batch_support;
  for (std::size_t i = 0; i < schedules.size(); ++i) {
    bool placed = false;
    for (std::size_t b = 0; b < out.batches.size() && !placed; ++b) {
      bool disjoint = true;
      for (std::size_t q : supports[i])
        if (batch_support[b].count(q)) {
          disjoint = false;
          break;
        }
      if (disjoint) {
        out.batches[b].push_back(i);
        batch_support[b].insert(supports[i].begin(), supports[i].end());
        placed = true;
      }
    }
    if (!placed) {
      out.batches.push_back({i});
      batch_support.push_back(supports[i]);
    }
  }

  for (const auto& batch : out.batches) {
    std::size_t max_delta = 0;
    for (std::size_t i : batch) max_delta = std::max(max_delta, schedules[i].steps.size());
    Schedule merged;
    merged.delta = max_delta;
    merged.n_qubits = code.n_qubits();
    merged.n_code_qubits = code.n_qubits();
    for (std::size_t i : batch)
      merged.targets += (merged.targets.empty() ? "" : " || ") + schedules[i].targets;
    for (std::size_t t = 0; t < max_delta; ++t) {
      ScheduleStep step;
      step.ec = true;
      for (std::size_t i : batch)
        if (t < schedules[i].steps.size())
          for (const GateOp& g : schedules[i].steps[t].gates) step.gates.push_back(g);
      merged.steps.push_back(std::move(step));
    }
    out.total_tau_units += max_delta;
    out.merged.push_back(std::move(merged));
  }

  out.min_batch_size = out.batches.empty() ? 0 : out.batches.front().size();
  for (const auto& batch : out.batches)
    out.min_batch_size = std::min(out.min_batch_size, batch.size());

  for (const TriangularKernel* ker :
       {&basis.ker_a, &basis.ker_a_t, &basis.ker_b, &basis.ker_b_t})
    for (const BitVector& v : ker->kernel_basis)
      out.max_logical_weight = std::max(out.max_logical_weight, v.weight());
  if (out.min_batch_size > 0)
    out.bound_tau_units = (out.max_logical_weight * out.n_schedules + out.min_batch_size - 1) /
                          out.min_batch_size;
  return out;
}

std::vector<std::size_t> transformed_x_weights(const HgpCode& code, const Schedule& s) {
  std::vector<PauliOperator> gens;
  for (std::size_t r = 0; r < code.hx().rows(); ++r) {
    PauliOperator g(s.n_qubits);
    for (std::size_t q : code.hx().row(r).support()) g.x.set(q, true);
    gens.push_back(std::move(g));
  }
  std::vector<std::size_t> out;
  for (const ScheduleStep& st : s.steps) {
    Circuit step(s.n_qubits);
    for (const GateOp& g : st.gates) step.append(g);
    std::size_t worst = 0;
    for (PauliOperator& g : gens) {
      g = conjugate(g, step);
      worst = std::max(worst, g.weight());
    }
    out.push_back(worst);
  }
  return out;
}

ScheduleReport verify_schedule(const HgpCode& code, const CanonicalBasis& basis,
                               const Schedule& s, const LogicalAction& expected) {
  ScheduleReport report;
  if (s.n_qubits != code.n_qubits()) {
    report.message = "schedule spans an ancilla block; logical verification covers "
                     "same-code schedules only";
    return report;
  }
  LogicalAction got;
  try {
    got = verify_gate(code, basis, s.flatten());
  } catch (const VerifyError& e) {
    report.message = e.what();
    return report;
  }
  report.action = got;
  if (!got.same_map(expected)) {
    for (std::size_t col = 0; col < 2 * got.k; ++col) {
      if (!(got.map_columns[col] == expected.map_columns[col])) {
        report.message = "logical action differs from " + expected.description +
                         " at basis operator " + std::to_string(col);
        return report;
      }
    }
  }
  for (std::size_t col = 0; col < 2 * got.k; ++col) {
    std::uint8_t diff = static_cast<std::uint8_t>((got.phases[col] + 4 - expected.phases[col]) % 4);
    if (diff == 2) {
      report.pauli_corrections.push_back(col);
    } else if (diff != 0) {
      report.message = "residual phase i^" + std::to_string(diff) + " at basis operator " +
                       std::to_string(col);
      return report;
    }
  }
  report.pass = true;
  report.message = "logical action matches " + expected.description;
  return report;
}

}  // namespace hgp
