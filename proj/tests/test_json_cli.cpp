#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "hgp/json_io.hpp"

using namespace hgp;

namespace {

BinaryMatrix load_fixture(const std::string& name) {
  return load_matrix_file(std::string(TESTDATA_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("params JSON carries the schema fields") {
  HgpCode code = build_hgp(load_fixture("h_rep.txt"), load_fixture("h_rep.txt"));
  Json j = params_json(code_params(code, true));
  CHECK(j["schemaVersion"] == kSchemaVersion);
  CHECK(j["n"] == 13);
  CHECK(j["k"] == 1);
  CHECK(j["d"] == 3);
  CHECK(j["maxStabWeight"] == 4);
  CHECK(j.contains("rate"));

  Json no_d = params_json(code_params(code, false));
  CHECK_FALSE(no_d.contains("d"));
}

TEST_CASE("infinite distance serialises as a string") {
  CodeParams p;
  p.n = 4;
  p.k = 0;
  p.d = Distance::inf();
  CHECK(params_json(p)["d"] == "infinite");
}

TEST_CASE("basis JSON uses 1-based sorted supports") {
  BinaryMatrix tilde = load_fixture("tilde_h.txt");
  HgpCode code = build_hgp(tilde, tilde);
  CanonicalBasis basis = canonical_basis(code);
  Json j = basis_json(code, basis);
  CHECK(j["k"] == 17);
  REQUIRE(j["logicalQubits"].size() == 17);
  const Json& first = j["logicalQubits"][0];
  CHECK(first["sector"] == "L");
  CHECK(first["pivotRow"] == 3);
  CHECK(first["pivotCol"] == 3);
  CHECK(first["class"] == "diagonal");
  std::size_t pivot_index = first["pivotQubit"].get<std::size_t>();
  CHECK(pivot_index == code.qubit_index({3, 3, Sector::Left}) + 1);
  const Json& xs = first["xSupport"];
  CHECK(std::is_sorted(xs.begin(), xs.end()));
  for (const Json& q : xs) CHECK(q.get<std::size_t>() >= 1);
}

TEST_CASE("identical inputs give byte-identical JSON") {
  BinaryMatrix tilde = load_fixture("tilde_h.txt");
  std::string a = basis_json(build_hgp(tilde, tilde), canonical_basis(build_hgp(tilde, tilde))).dump();
  std::string b = basis_json(build_hgp(tilde, tilde), canonical_basis(build_hgp(tilde, tilde))).dump();
  CHECK(a == b);
}

TEST_CASE("schedule JSON and text rendering") {
  BinaryMatrix tilde = load_fixture("tilde_h.txt");
  BinaryMatrix m = multiply(tilde.transposed(), tilde);
  HgpCode code = build_hgp(m, m);
  CanonicalBasis basis = canonical_basis(code);
  Schedule s = round_robin_cz(code, basis, {Sector::Left, 3, 3}, {Sector::Right, 6, 5});
  Json j = schedule_json(s, time_cost(s));
  CHECK(j["delta"] == 4);
  CHECK(j["steps"].size() == 4);
  CHECK(j["timeCostTau"] == 4);
  CHECK(j["steps"][0]["ec"] == true);
  for (const Json& g : j["steps"][0]["gates"]) {
    CHECK(g["kind"] == "CZ");
    CHECK(g["targets"].size() == 2);
  }

  std::string text = render_schedule_text(code, s);
  CHECK(text.find("t = 0") != std::string::npos);
  CHECK(text.find("t = 3") != std::string::npos);
  CHECK(text.find("left") != std::string::npos);
}

TEST_CASE("partition JSON flags sector transversality") {
  BinaryMatrix toric = load_fixture("h_toric.txt");
  HgpCode code = build_hgp(toric, toric);
  QubitPartition p = sibling_partition(code);
  Json j = partition_json(code, p);
  CHECK(j["kind"] == "sibling");
  CHECK(j["sectorTransversal"] == true);
  CHECK(j["nSubsets"] == 9);

  PartitionDistance exact{3, true};
  CHECK(partition_distance_json(exact)["distance"] == 3);
  PartitionDistance bound{4, false};
  CHECK(partition_distance_json(bound)["distanceLowerBound"] == 4);
}

TEST_CASE("gadget JSON names the ancilla states") {
  Json j = gadget_json(gadget_circuit(GadgetKind::S, {Sector::Left, 3, 3}));
  CHECK(j["gate"] == "S");
  CHECK(j["ancillaState"] == "|-i>");
  CHECK(j["nonCliffordUnverified"] == false);
  CHECK(gadget_json(gadget_circuit(GadgetKind::T, {Sector::Left, 3, 3}))["nonCliffordUnverified"] ==
        true);
}
