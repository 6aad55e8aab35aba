#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hgp/binary_matrix.hpp"
#include "hgp/pauli.hpp"

namespace hgp {

enum class Sector { Left, Right };

/// Grid position of a physical qubit; row and col are 1-based to match the
/// (i,h,L)/(j,l,R) coordinates used throughout.
struct QubitCoord {
  std::size_t row;
  std::size_t col;
  Sector sector;

  bool operator==(const QubitCoord&) const = default;
};

std::string to_string(const QubitCoord& c);

/// Hypergraph product code HGP(Ha, Hb):
///   Hx = (Ha ⊗ I_nb | I_ma ⊗ Hbᵀ),  Hz = (I_na ⊗ Hb | Haᵀ ⊗ I_mb).
/// Physical qubits live on a left na×nb grid followed by a right ma×mb grid.
class HgpCode {
 public:
  HgpCode(BinaryMatrix ha, BinaryMatrix hb);

  const BinaryMatrix& ha() const { return ha_; }
  const BinaryMatrix& hb() const { return hb_; }
  const BinaryMatrix& hx() const { return hx_; }
  const BinaryMatrix& hz() const { return hz_; }

  std::size_t na() const { return na_; }
  std::size_t nb() const { return nb_; }
  std::size_t ma() const { return ma_; }
  std::size_t mb() const { return mb_; }
  std::size_t n_qubits() const { return na_ * nb_ + ma_ * mb_; }

  /// 0-based physical index; left sector first, row-major in both grids.
  std::size_t qubit_index(const QubitCoord& c) const;
  QubitCoord coord_of(std::size_t index) const;

  /// Derived from a single seed matrix (Ha = Hb); both grids square.
  bool is_square() const { return ha_ == hb_; }

 private:
  BinaryMatrix ha_, hb_, hx_, hz_;
  std::size_t na_, nb_, ma_, mb_;
};

HgpCode build_hgp(const BinaryMatrix& ha, const BinaryMatrix& hb);

/// X stabiliser generator S_x(j,h), 1 ≤ j ≤ ma, 1 ≤ h ≤ nb: row (j,h) of Hx.
PauliOperator stabilizer_x(const HgpCode& code, std::size_t j, std::size_t h);
/// Z stabiliser generator S_z(i,l), 1 ≤ i ≤ na, 1 ≤ l ≤ mb: row (i,l) of Hz.
PauliOperator stabilizer_z(const HgpCode& code, std::size_t i, std::size_t l);

/// Ha = Hb, square, and rowspace(Ha) = columnspace(Ha).
bool is_symmetric(const HgpCode& code);

/// Classical minimum distance; infinite when the kernel is trivial.
struct Distance {
  bool infinite = false;
  std::size_t value = 0;

  static Distance inf() { return {true, 0}; }
  static Distance of(std::size_t v) { return {false, v}; }
  bool operator==(const Distance&) const = default;
};

std::string to_string(const Distance& d);

/// Minimum Hamming weight over the nonzero kernel of h, by exhaustive
/// enumeration of the 2^k - 1 basis combinations. Guard: k ≤ 24.
Distance minimum_distance(const BinaryMatrix& h);

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<Distance> d;  // present when computed
  std::size_t max_stab_weight = 0;
};

/// n and k per the product formula (k is cross-checked against
/// n - rank(Hx) - rank(Hz)); when compute_distance is set, d is the minimum
/// of the four seed-code distances, skipping sides that contribute no
/// logical qubits.
CodeParams code_params(const HgpCode& code, bool compute_distance);

}  // namespace hgp
