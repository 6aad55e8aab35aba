#include "hgp/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgp {

std::string to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::DiagonalTwin: return "diagonal-twin";
    case PartitionKind::Sibling: return "sibling";
    case PartitionKind::Singleton: return "singleton";
    case PartitionKind::Custom: return "custom";
  }
  throw std::logic_error("unknown partition kind");
}

std::size_t QubitPartition::max_subset_size() const {
  std::size_t best = 0;
  for (const auto& s : subsets) best = std::max(best, s.size());
  return best;
}

QubitPartition make_partition(PartitionKind kind, std::vector<std::vector<std::size_t>> subsets,
                              std::size_t n_qubits) {
  std::vector<bool> seen(n_qubits, false);
  std::size_t covered = 0;
  for (auto& s : subsets) {
    if (s.empty()) throw std::invalid_argument("partition subset is empty");
    std::sort(s.begin(), s.end());
    for (std::size_t q : s) {
      if (q >= n_qubits) throw std::invalid_argument("partition qubit index out of range");
      if (seen[q]) throw std::invalid_argument("partition subsets are not disjoint");
      seen[q] = true;
      ++covered;
    }
  }
  if (covered != n_qubits) throw std::invalid_argument("partition does not cover all qubits");
  return {kind, std::move(subsets)};
}

QubitPartition diagonal_twin_partition(const HgpCode& code) {
  if (!code.is_square()) throw std::invalid_argument("diagonal-twin partition requires a square code");
  const std::size_t n = code.na(), m = code.ma();
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t i = 1; i <= n; ++i)
    subsets.push_back({code.qubit_index({i, i, Sector::Left})});
  for (std::size_t j = 1; j <= m; ++j)
    subsets.push_back({code.qubit_index({j, j, Sector::Right})});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t h = i + 1; h <= n; ++h)
      subsets.push_back({code.qubit_index({i, h, Sector::Left}), code.qubit_index({h, i, Sector::Left})});
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t l = j + 1; l <= m; ++l)
      subsets.push_back({code.qubit_index({j, l, Sector::Right}), code.qubit_index({l, j, Sector::Right})});
  return make_partition(PartitionKind::DiagonalTwin, std::move(subsets), code.n_qubits());
}

QubitPartition sibling_partition(const HgpCode& code) {
  if (!is_symmetric(code)) throw std::invalid_argument("sibling partition requires a symmetric code");
  const std::size_t n = code.na();
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t h = 1; h <= n; ++h)
      subsets.push_back({code.qubit_index({i, h, Sector::Left}), code.qubit_index({i, h, Sector::Right})});
  return make_partition(PartitionKind::Sibling, std::move(subsets), code.n_qubits());
}

QubitPartition singleton_partition(const HgpCode& code) {
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t q = 0; q < code.n_qubits(); ++q) subsets.push_back({q});
  return make_partition(PartitionKind::Singleton, std::move(subsets), code.n_qubits());
}

bool is_sector_transversal(const HgpCode& code, const QubitPartition& p) {
  for (const auto& s : p.subsets) {
    std::size_t left = 0, right = 0;
    for (std::size_t q : s)
      (code.coord_of(q).sector == Sector::Left ? left : right) += 1;
    if (left > 1 || right > 1) return false;
  }
  return true;
}

std::string to_string(const PartitionDistance& d) {
  return d.exact ? std::to_string(d.value) : (">= " + std::to_string(d.value));
}

bool supports_logical_operator(const HgpCode& code, const std::vector<std::size_t>& qubits) {
  const std::size_t n = code.n_qubits();
  std::vector<bool> in_set(n, false);
  for (std::size_t q : qubits) in_set[q] = true;
  std::vector<std::size_t> complement;
  for (std::size_t q = 0; q < n; ++q)
    if (!in_set[q]) complement.push_back(q);

  // A vector supported in U is (i) in ker(Hcheck) iff it kills the U-columns
  // of the check matrix, and (ii) a stabiliser iff it extends a row-space
  // element vanishing outside U. Nontrivial logical iff dim(i) > dim(ii).
  auto has_type = [&](const BinaryMatrix& check, const BinaryMatrix& stab) {
    std::size_t ker_dim = qubits.size() - rank(check.select_columns(qubits));
    std::size_t stab_dim = rank(stab) - rank(stab.select_columns(complement));
    return ker_dim > stab_dim;
  };
  return has_type(code.hz(), code.hx()) || has_type(code.hx(), code.hz());
}

namespace {

bool any_combination_supports(const HgpCode& code, const QubitPartition& p, std::size_t size) {
  const std::size_t m = p.subsets.size();
  if (size > m) return false;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    std::vector<std::size_t> qubits;
    for (std::size_t i : idx)
      qubits.insert(qubits.end(), p.subsets[i].begin(), p.subsets[i].end());
    std::sort(qubits.begin(), qubits.end());
    if (supports_logical_operator(code, qubits)) return true;
    // next combination
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == m - size + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

PartitionDistance partition_distance_search(const HgpCode& code, const QubitPartition& p,
                                            std::size_t max_subsets) {
  for (std::size_t size = 1; size <= max_subsets; ++size)
    if (any_combination_supports(code, p, size)) return {size, true};
  return {max_subsets + 1, false};
}

}  // namespace hgp
