#include "hgp/json_io.hpp"

#include <sstream>

namespace hgp {

namespace {

Json distance_json(const Distance& d) {
  if (d.infinite) return "infinite";
  return d.value;
}

Json support_json(const BitVector& v) {
  Json arr = Json::array();
  for (std::size_t i : v.support()) arr.push_back(i + 1);
  return arr;
}

std::string sector_name(Sector s) { return s == Sector::Left ? "L" : "R"; }

Json gate_json(const GateOp& g) {
  Json j;
  j["kind"] = gate_name(g.kind);
  if (g.arity() == 1)
    j["targets"] = Json::array({g.a + 1});
  else
    j["targets"] = Json::array({g.a + 1, g.b + 1});
  return j;
}

}  // namespace

Json params_json(const CodeParams& params) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["n"] = params.n;
  j["k"] = params.k;
  j["rate"] = static_cast<double>(params.k) / static_cast<double>(params.n);
  if (params.d) j["d"] = distance_json(*params.d);
  j["maxStabWeight"] = params.max_stab_weight;
  return j;
}

Json basis_json(const HgpCode& code, const CanonicalBasis& basis) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["n"] = code.n_qubits();
  j["k"] = basis.k();
  Json qubits = Json::array();
  for (const LogicalQubit& q : basis.qubits) {
    Json e;
    e["sector"] = sector_name(q.id.sector);
    e["pivotRow"] = q.id.pivot_row;
    e["pivotCol"] = q.id.pivot_col;
    e["class"] = q.id.qubit_class() == QubitClass::Diagonal ? "diagonal" : "mirror";
    e["pivotQubit"] = code.qubit_index(pivot_qubit(q.id)) + 1;
    e["xSupport"] = support_json(q.x_op.x);
    e["zSupport"] = support_json(q.z_op.z);
    qubits.push_back(std::move(e));
  }
  j["logicalQubits"] = std::move(qubits);
  return j;
}

Json partition_json(const HgpCode& code, const QubitPartition& p) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["kind"] = to_string(p.kind);
  j["nSubsets"] = p.subsets.size();
  j["sectorTransversal"] = is_sector_transversal(code, p);
  Json subsets = Json::array();
  for (const auto& s : p.subsets) {
    Json one = Json::array();
    for (std::size_t q : s) one.push_back(q + 1);
    subsets.push_back(std::move(one));
  }
  j["subsets"] = std::move(subsets);
  return j;
}

Json partition_distance_json(const PartitionDistance& d) {
  Json j;
  j["exact"] = d.exact;
  if (d.exact)
    j["distance"] = d.value;
  else
    j["distanceLowerBound"] = d.value;
  return j;
}

Json logical_action_json(const LogicalAction& action) {
  Json j;
  j["k"] = action.k;
  j["description"] = action.description;
  Json cols = Json::array();
  for (const BitVector& col : action.map_columns) {
    std::string bits;
    for (std::size_t i = 0; i < col.size(); ++i) bits += col.get(i) ? '1' : '0';
    cols.push_back(bits);
  }
  j["symplecticMapColumns"] = std::move(cols);
  j["phases"] = action.phases;
  j["symplectic"] = action.is_symplectic();
  return j;
}

Json circuit_json(const Circuit& c) {
  Json arr = Json::array();
  for (const GateOp& g : c.gates) arr.push_back(gate_json(g));
  return arr;
}

Json schedule_json(const Schedule& s, const TimeCost& cost) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["targets"] = s.targets;
  j["delta"] = s.delta;
  j["nGates"] = s.n_gates();
  Json steps = Json::array();
  for (const ScheduleStep& st : s.steps) {
    Json e;
    Json gates = Json::array();
    for (const GateOp& g : st.gates) gates.push_back(gate_json(g));
    e["gates"] = std::move(gates);
    e["ec"] = st.ec;
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  j["timeCostTau"] = cost.tau_units;
  return j;
}

Json gadget_json(const GadgetSpec& g) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  switch (g.kind) {
    case GadgetKind::H: j["gate"] = "H"; break;
    case GadgetKind::S: j["gate"] = "S"; break;
    case GadgetKind::T: j["gate"] = "T"; break;
  }
  j["dataQubit"] = to_string(g.data_qubit);
  j["ancillaState"] = g.ancilla_state;
  j["steps"] = Json::array({Json{{"slot", "injection-cz"}, {"detail", g.cz_slot}},
                            Json{{"slot", "measurement"}, {"detail", g.measurement}},
                            Json{{"slot", "correction"}, {"detail", g.correction}}});
  j["nonCliffordUnverified"] = g.non_clifford_unverified;
  return j;
}

std::string render_schedule_text(const HgpCode& code, const Schedule& s) {
  std::ostringstream out;
  out << s.targets << "  (delta = " << s.delta << ")\n";
  for (std::size_t t = 0; t < s.steps.size(); ++t) {
    const ScheduleStep& st = s.steps[t];
    out << "t = " << t << (st.ec ? "  [EC]" : "") << "\n";
    std::vector<char> label(s.n_qubits, '.');
    char next = 'a';
    std::vector<std::size_t> ancilla_cells;
    for (const GateOp& g : st.gates) {
      label[g.a] = next;
      if (g.arity() == 2) label[g.b] = next;
      if (g.a >= code.n_qubits()) ancilla_cells.push_back(g.a);
      if (g.arity() == 2 && g.b >= code.n_qubits()) ancilla_cells.push_back(g.b);
      next = next == 'z' ? 'a' : static_cast<char>(next + 1);
    }
    auto grid = [&](std::size_t rows, std::size_t cols, Sector sector, const char* name) {
      out << "  " << name << "\n";
      for (std::size_t r = 1; r <= rows; ++r) {
        out << "    ";
        for (std::size_t c = 1; c <= cols; ++c)
          out << label[code.qubit_index({r, c, sector})] << ' ';
        out << "\n";
      }
    };
    grid(code.na(), code.nb(), Sector::Left, "left");
    grid(code.ma(), code.mb(), Sector::Right, "right");
    if (s.n_qubits > code.n_qubits()) {
      out << "  ancilla ";
      for (std::size_t q = code.n_qubits(); q < s.n_qubits; ++q) out << label[q] << ' ';
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace hgp
