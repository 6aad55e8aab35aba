#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hgp/code.hpp"

namespace hgp {

enum class PartitionKind { DiagonalTwin, Sibling, Singleton, Custom };

std::string to_string(PartitionKind kind);

/// Non-empty disjoint subsets of 0-based physical qubit indices covering the
/// whole code; construction validates all three properties.
struct QubitPartition {
  PartitionKind kind = PartitionKind::Custom;
  std::vector<std::vector<std::size_t>> subsets;

  std::size_t max_subset_size() const;
};

QubitPartition make_partition(PartitionKind kind, std::vector<std::vector<std::size_t>> subsets,
                              std::size_t n_qubits);

/// Singletons on diagonal qubits, pairs {(i,h),(h,i)} within each sector.
/// Square codes only.
QubitPartition diagonal_twin_partition(const HgpCode& code);

/// Pairs {(i,h,L),(i,h,R)}. Symmetric codes only.
QubitPartition sibling_partition(const HgpCode& code);

QubitPartition singleton_partition(const HgpCode& code);

/// Every subset holds at most one qubit per sector.
bool is_sector_transversal(const HgpCode& code, const QubitPartition& p);

struct PartitionDistance {
  std::size_t value = 0;
  bool exact = false;  // when false, value is a strict lower bound + 1 semantics:
                       // the distance is at least `value`
};

std::string to_string(const PartitionDistance& d);

/// Exhaustive search over combinations of up to max_subsets subsets: the
/// partition-distance is the smallest number of subsets whose union supports
/// a nontrivial logical operator (X-type or Z-type, decided by rank tests
/// against the stabiliser spaces). If no combination within the budget
/// supports one, reports the lower bound max_subsets + 1 with exact = false.
PartitionDistance partition_distance_search(const HgpCode& code, const QubitPartition& p,
                                            std::size_t max_subsets);

/// True iff some vector supported inside the given qubit set is a
/// nontrivial logical operator (of either CSS type).
bool supports_logical_operator(const HgpCode& code, const std::vector<std::size_t>& qubits);

}  // namespace hgp
