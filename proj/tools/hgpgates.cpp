// Command-line front end: constructs hypergraph product codes from seed
// matrices, prints code parameters and canonical bases, verifies the
// transversal gates, and emits pieceably fault-tolerant schedules.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgp/json_io.hpp"

namespace {

using hgp::Json;

struct CodeOptions {
  std::string seed_path;
  std::string seed_b_path;
  bool symmetric_square = false;
};

hgp::BinaryMatrix seed_of(const CodeOptions& opt) {
  hgp::BinaryMatrix h = hgp::load_matrix_file(opt.seed_path);
  if (!opt.symmetric_square) return h;
  return hgp::multiply(h.transposed(), h);  // HGP_sy(HᵀH) from the given H
}

hgp::HgpCode code_of(const CodeOptions& opt) {
  hgp::BinaryMatrix ha = seed_of(opt);
  hgp::BinaryMatrix hb = opt.seed_b_path.empty() ? ha : hgp::load_matrix_file(opt.seed_b_path);
  return hgp::build_hgp(ha, hb);
}

void add_code_options(CLI::App* cmd, CodeOptions& opt) {
  cmd->add_option("--code", opt.seed_path, "seed matrix file (code is HGP(H, H))")->required();
  cmd->add_option("--code-b", opt.seed_b_path, "second seed matrix for HGP(Ha, Hb)");
  cmd->add_flag("--symmetric-square", opt.symmetric_square,
                "build the symmetric code HGP_sy(HᵀH) from the given H");
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << j.dump(2) << "\n";
  }
}

std::optional<hgp::LogicalQubitId> parse_qubit(const std::string& text) {
  // "L:3,3" or "R:6,5"
  if (text.size() < 5 || text[1] != ':') return std::nullopt;
  hgp::Sector sector;
  if (text[0] == 'L')
    sector = hgp::Sector::Left;
  else if (text[0] == 'R')
    sector = hgp::Sector::Right;
  else
    return std::nullopt;
  auto comma = text.find(',', 2);
  if (comma == std::string::npos) return std::nullopt;
  try {
    std::size_t row = std::stoul(text.substr(2, comma - 2));
    std::size_t col = std::stoul(text.substr(comma + 1));
    return hgp::LogicalQubitId{sector, row, col};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

struct Table2Row {
  const char* file;
  std::size_t n, k;
  const char* rate;
  std::size_t d, w;
};

// Reference parameters for the nine bundled symmetric-code seeds;
// the table command recomputes and compares all five columns.
constexpr Table2Row kReferenceRows[] = {
    {"row1.txt", 98, 32, "0.33", 3, 8},   {"row2.txt", 242, 98, "0.41", 3, 12},
    {"row3.txt", 450, 242, "0.54", 3, 16}, {"row4.txt", 98, 18, "0.18", 4, 8},
    {"row5.txt", 288, 98, "0.34", 4, 12}, {"row6.txt", 200, 18, "0.09", 5, 8},
    {"row7.txt", 242, 32, "0.13", 5, 16}, {"row8.txt", 392, 32, "0.08", 7, 16},
    {"row9.txt", 722, 32, "0.04", 9, 16},
};

std::string format_rate_2dp(double rate) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", rate);
  return buf;
}

/// The printed table rounds k/n to two decimals (one row via an intermediate
/// three-decimal rounding); accept either reading.
bool rate_matches(std::size_t k, std::size_t n, const std::string& printed) {
  double rate = static_cast<double>(k) / static_cast<double>(n);
  if (format_rate_2dp(rate) == printed) return true;
  double via3 = std::round(rate * 1000.0) / 1000.0;
  return format_rate_2dp(via3) == printed;
}

int run_table(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir) || fs::is_empty(dir)) {
    std::cerr << "table: " << dir << " is not a directory with seed fixtures\n";
    return 2;
  }
  int mismatches = 0;
  Json rows = Json::array();
  for (const Table2Row& ref : kReferenceRows) {
    fs::path p = fs::path(dir) / ref.file;
    if (!fs::exists(p)) {
      std::cerr << "table: missing fixture " << p << "\n";
      return 2;
    }
    CodeOptions opt;
    opt.seed_path = p.string();
    opt.symmetric_square = true;
    hgp::HgpCode code = code_of(opt);
    hgp::CodeParams got = hgp::code_params(code, true);
    bool ok = got.n == ref.n && got.k == ref.k && got.d && !got.d->infinite &&
              got.d->value == ref.d && got.max_stab_weight == ref.w &&
              rate_matches(got.k, got.n, ref.rate);
    Json row;
    row["seed"] = ref.file;
    row["expected"] = {{"n", ref.n}, {"k", ref.k}, {"rate", ref.rate}, {"d", ref.d}, {"w", ref.w}};
    row["computed"] = {{"n", got.n},
                       {"k", got.k},
                       {"rate", format_rate_2dp(static_cast<double>(got.k) / got.n)},
                       {"d", got.d->infinite ? Json("infinite") : Json(got.d->value)},
                       {"w", got.max_stab_weight}};
    row["match"] = ok;
    rows.push_back(std::move(row));
    if (!ok) ++mismatches;
  }
  Json j;
  j["schemaVersion"] = hgp::kSchemaVersion;
  j["rows"] = std::move(rows);
  j["allMatch"] = mismatches == 0;
  std::cout << j.dump(2) << "\n";
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypergraph product code construction, canonical bases, and gate verification"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write JSON to a file instead of stdout");

  // params
  auto* params = app.add_subcommand("params", "code parameters [[n, k, d]] and stabiliser weight");
  CodeOptions params_opt;
  params->add_option("seed", params_opt.seed_path, "seed matrix file")->required();
  params->add_option("--code-b", params_opt.seed_b_path, "second seed matrix for HGP(Ha, Hb)");
  params->add_flag("--symmetric-square", params_opt.symmetric_square,
                   "build HGP_sy(HᵀH) from the given H");
  bool with_distance = false;
  params->add_flag("--distance", with_distance, "compute d by exhaustive enumeration");

  // table
  auto* table = app.add_subcommand("table", "recompute the nine reference symmetric codes");
  std::string table_dir;
  table->add_option("dir", table_dir, "directory with row1.txt .. row9.txt")->required();

  // basis
  auto* basis_cmd = app.add_subcommand("basis", "canonical logical basis as JSON");
  CodeOptions basis_opt;
  add_code_options(basis_cmd, basis_opt);

  // verify-gate
  auto* verify = app.add_subcommand("verify-gate", "synthesise and verify a transversal gate");
  CodeOptions verify_opt;
  add_code_options(verify, verify_opt);
  std::string gate;
  verify->add_option("--gate", gate, "hswap | czs | siblingcz")->required();
  std::string partition_override;
  verify->add_option("--partition", partition_override,
                     "partition for hswap: diagonal-twin | sibling (default: sibling when "
                     "symmetric, else diagonal-twin)");

  // schedule
  auto* sched = app.add_subcommand("schedule", "pieceably fault-tolerant schedules");
  CodeOptions sched_opt;
  add_code_options(sched, sched_opt);
  std::string sched_gate;
  sched->add_option("--gate", sched_gate, "cz | xcx | cnot | inject")->required();
  std::vector<std::string> qubit_args;
  sched->add_option("--qubits", qubit_args, "logical qubits, e.g. --qubits L:3,3 R:6,5")
      ->expected(1, 2);
  std::string ancilla_bits;
  sched->add_option("--ancilla-z", ancilla_bits,
                    "ancilla logical Z support as a 0/1 string (inject only)");
  std::string render;
  sched->add_option("--render", render, "also print per-step grids: text");

  // partition
  auto* part = app.add_subcommand("partition", "qubit partitions and partition-distance search");
  CodeOptions part_opt;
  add_code_options(part, part_opt);
  std::string kind;
  part->add_option("--kind", kind, "diagonal-twin | sibling | singleton")->required();
  std::size_t search_max = 0;
  part->add_option("--search-max", search_max,
                   "exhaustive partition-distance search up to this many subsets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*params) {
      hgp::HgpCode code = code_of(params_opt);
      emit(hgp::params_json(hgp::code_params(code, with_distance)), out_path);
      return 0;
    }
    if (*table) return run_table(table_dir);
    if (*basis_cmd) {
      hgp::HgpCode code = code_of(basis_opt);
      hgp::CanonicalBasis basis = hgp::canonical_basis(code);
      hgp::SymplecticReport rep = hgp::verify_symplectic(code, basis);
      Json j = hgp::basis_json(code, basis);
      j["symplecticCheck"] = rep.pass;
      if (!rep.pass) j["firstViolation"] = rep.first_violation;
      emit(j, out_path);
      return rep.pass ? 0 : 1;
    }
    if (*verify) {
      hgp::HgpCode code = code_of(verify_opt);
      hgp::CanonicalBasis basis = hgp::canonical_basis(code);
      hgp::Circuit circuit(code.n_qubits());
      if (gate == "hswap") {
        bool sibling = partition_override.empty() ? hgp::is_symmetric(code)
                                                  : partition_override == "sibling";
        circuit = hgp::hadamard_swap_circuit(
            code, sibling ? hgp::sibling_partition(code) : hgp::diagonal_twin_partition(code));
      } else if (gate == "czs") {
        circuit = hgp::cz_s_circuit(code);
      } else if (gate == "siblingcz") {
        circuit = hgp::sibling_cz_circuit(code);
      } else {
        std::cerr << "unknown gate: " << gate << "\n";
        return 2;
      }
      Json j;
      j["schemaVersion"] = hgp::kSchemaVersion;
      j["gate"] = gate;
      j["nGates"] = circuit.size();
      try {
        hgp::LogicalAction action = hgp::verify_gate(code, basis, circuit);
        j["pass"] = true;
        j["logicalAction"] = hgp::logical_action_json(action);
        emit(j, out_path);
        return 0;
      } catch (const hgp::VerifyError& e) {
        j["pass"] = false;
        j["error"] = e.what();
        emit(j, out_path);
        return 1;
      }
    }
    if (*sched) {
      hgp::HgpCode code = code_of(sched_opt);
      hgp::CanonicalBasis basis = hgp::canonical_basis(code);
      std::vector<hgp::LogicalQubitId> qubits;
      for (const std::string& text : qubit_args) {
        auto q = parse_qubit(text);
        if (!q) {
          std::cerr << "bad qubit selector: " << text << " (expected L:row,col or R:row,col)\n";
          return 2;
        }
        qubits.push_back(*q);
      }
      hgp::Schedule schedule;
      bool verified = false;
      bool verification_applicable = true;
      if (sched_gate == "cz" || sched_gate == "xcx") {
        if (qubits.size() != 2) {
          std::cerr << sched_gate << " needs --qubits L:i,h R:j,l\n";
          return 2;
        }
        schedule = sched_gate == "cz" ? hgp::round_robin_cz(code, basis, qubits[0], qubits[1])
                                      : hgp::round_robin_xcx(code, basis, qubits[0], qubits[1]);
        auto expected = sched_gate == "cz"
                            ? hgp::expected_cz_action(basis, qubits[0], qubits[1])
                            : hgp::expected_xcx_action(basis, qubits[0], qubits[1]);
        verified = hgp::verify_schedule(code, basis, schedule, expected).pass;
      } else if (sched_gate == "cnot") {
        if (qubits.size() != 2) {
          std::cerr << "cnot needs --qubits <control> <target>\n";
          return 2;
        }
        schedule = hgp::cnot_composite(code, basis, qubits[0], qubits[1]);
        verified =
            hgp::verify_schedule(code, basis, schedule,
                                 hgp::expected_cnot_action(basis, qubits[0], qubits[1]))
                .pass;
      } else if (sched_gate == "inject") {
        if (qubits.size() != 1 || ancilla_bits.empty()) {
          std::cerr << "inject needs --qubits <one qubit> and --ancilla-z <bits>\n";
          return 2;
        }
        hgp::BitVector zeta(ancilla_bits.size());
        for (std::size_t i = 0; i < ancilla_bits.size(); ++i) {
          if (ancilla_bits[i] != '0' && ancilla_bits[i] != '1') {
            std::cerr << "--ancilla-z must be a 0/1 string\n";
            return 2;
          }
          zeta.set(i, ancilla_bits[i] == '1');
        }
        schedule = hgp::injection_cz(code, basis, qubits[0], zeta);
        verification_applicable = false;  // cross-code; structural emission only
      } else {
        std::cerr << "unknown schedule gate: " << sched_gate << "\n";
        return 2;
      }
      Json j = hgp::schedule_json(schedule, hgp::time_cost(schedule));
      j["transformedXWeights"] = hgp::transformed_x_weights(code, schedule);
      j["verified"] = verification_applicable ? Json(verified) : Json(nullptr);
      emit(j, out_path);
      if (render == "text") std::cout << hgp::render_schedule_text(code, schedule);
      return (!verification_applicable || verified) ? 0 : 1;
    }
    if (*part) {
      hgp::HgpCode code = code_of(part_opt);
      hgp::QubitPartition partition;
      if (kind == "diagonal-twin")
        partition = hgp::diagonal_twin_partition(code);
      else if (kind == "sibling")
        partition = hgp::sibling_partition(code);
      else if (kind == "singleton")
        partition = hgp::singleton_partition(code);
      else {
        std::cerr << "unknown partition kind: " << kind << "\n";
        return 2;
      }
      Json j = hgp::partition_json(code, partition);
      if (search_max > 0)
        j["partitionDistance"] =
            hgp::partition_distance_json(hgp::partition_distance_search(code, partition, search_max));
      emit(j, out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
