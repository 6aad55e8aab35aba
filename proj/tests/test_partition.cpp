#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "hgp/partition.hpp"

using namespace hgp;

namespace {

BinaryMatrix load_fixture(const std::string& name) {
  return load_matrix_file(std::string(TESTDATA_DIR) + "/" + name);
}

void check_partition_valid(const QubitPartition& p, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (const auto& s : p.subsets) {
    CHECK(!s.empty());
    for (std::size_t q : s) {
      CHECK(q < n);
      CHECK_FALSE(seen[q]);
      seen[q] = true;
    }
  }
  CHECK(std::count(seen.begin(), seen.end(), true) == static_cast<long>(n));
}

}  // namespace

TEST_CASE("diagonal-twin partition of the Hamming square code") {
  BinaryMatrix tilde = load_fixture("tilde_h.txt");
  HgpCode code = build_hgp(tilde, tilde);
  QubitPartition p = diagonal_twin_partition(code);

  std::size_t singles = 0, pairs = 0;
  for (const auto& s : p.subsets) (s.size() == 1 ? singles : pairs) += 1;
  CHECK(singles == 11);
  CHECK(pairs == 27);
  CHECK(p.subsets.size() == 38);
  CHECK(p.max_subset_size() == 2);
  check_partition_valid(p, 65);
  CHECK_FALSE(is_sector_transversal(code, p));  // twin pairs share a sector

  HgpCode rect = build_hgp(tilde, load_fixture("h_rep.txt"));
  CHECK_THROWS_AS(diagonal_twin_partition(rect), std::invalid_argument);
}

TEST_CASE("sibling partition of the symmetric Hamming code") {
  BinaryMatrix h = load_fixture("h_ind.txt");
  BinaryMatrix m = multiply(h.transposed(), h);
  HgpCode sym = build_hgp(m, m);
  QubitPartition p = sibling_partition(sym);

  CHECK(p.subsets.size() == 49);
  CHECK(p.max_subset_size() == 2);
  check_partition_valid(p, 98);
  for (const auto& s : p.subsets) {
    REQUIRE(s.size() == 2);
    CHECK(sym.coord_of(s[0]).sector != sym.coord_of(s[1]).sector);
    CHECK(sym.coord_of(s[0]).row == sym.coord_of(s[1]).row);
    CHECK(sym.coord_of(s[0]).col == sym.coord_of(s[1]).col);
  }
  CHECK(is_sector_transversal(sym, p));

  BinaryMatrix tilde = load_fixture("tilde_h.txt");
  CHECK_THROWS_AS(sibling_partition(build_hgp(tilde, tilde)), std::invalid_argument);
}

TEST_CASE("singleton partition is sector-transversal") {
  HgpCode code = build_hgp(load_fixture("h_rep.txt"), load_fixture("h_rep.txt"));
  QubitPartition p = singleton_partition(code);
  CHECK(p.subsets.size() == 13);
  check_partition_valid(p, 13);
  CHECK(is_sector_transversal(code, p));
}

TEST_CASE("partition distances on the small codes") {
  HgpCode surface = build_hgp(load_fixture("h_rep.txt"), load_fixture("h_rep.txt"));

  PartitionDistance singleton = partition_distance_search(surface, singleton_partition(surface), 4);
  CHECK(singleton.exact);
  CHECK(singleton.value == 3);  // = d

  PartitionDistance twin = partition_distance_search(surface, diagonal_twin_partition(surface), 4);
  CHECK(twin.exact);
  CHECK(twin.value >= 2);  // >= ceil(d/2)

  BinaryMatrix toric = load_fixture("h_toric.txt");
  HgpCode toric_code = build_hgp(toric, toric);
  PartitionDistance sib = partition_distance_search(toric_code, sibling_partition(toric_code), 4);
  CHECK(sib.exact);
  CHECK(sib.value == 3);  // sector-transversal partition reaches d
}

TEST_CASE("search budget reports a lower bound") {
  BinaryMatrix toric = load_fixture("h_toric.txt");
  HgpCode toric_code = build_hgp(toric, toric);
  PartitionDistance d = partition_distance_search(toric_code, sibling_partition(toric_code), 2);
  CHECK_FALSE(d.exact);
  CHECK(d.value == 3);  // "at least 3"
}

TEST_CASE("make_partition validates its input") {
  CHECK_THROWS_AS(make_partition(PartitionKind::Custom, {{0}, {}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(PartitionKind::Custom, {{0}, {0}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(PartitionKind::Custom, {{0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(PartitionKind::Custom, {{0, 5}}, 2), std::invalid_argument);
}

TEST_CASE("supports_logical_operator telling logicals from stabilisers") {
  HgpCode surface = build_hgp(load_fixture("h_rep.txt"), load_fixture("h_rep.txt"));
  // column 3 of the left grid carries a logical Z
  std::vector<std::size_t> column = {surface.qubit_index({1, 3, Sector::Left}),
                                     surface.qubit_index({2, 3, Sector::Left}),
                                     surface.qubit_index({3, 3, Sector::Left})};
  CHECK(supports_logical_operator(surface, column));
  // two qubits cannot support a weight-3-distance logical
  CHECK_FALSE(supports_logical_operator(surface, {column[0], column[1]}));
}
