#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hgp {

/// Dense bit-packed vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  static BitVector unit(std::size_t length, std::size_t index);
  static BitVector from_bits(std::initializer_list<int> bits);

  std::size_t size() const { return length_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  void xor_with(const BitVector& other);
  std::size_t weight() const;
  bool is_zero() const;

  /// Parity of the support overlap (the GF(2) inner product).
  bool dot(const BitVector& other) const;
  /// Size of the support overlap.
  std::size_t overlap(const BitVector& other) const;

  /// 0-based indices of the set bits, ascending.
  std::vector<std::size_t> support() const;
  std::optional<std::size_t> first_set() const;
  std::optional<std::size_t> last_set() const;

  bool operator==(const BitVector& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Concatenation (a | b).
BitVector concat(const BitVector& a, const BitVector& b);
/// Kronecker product of vectors: (u ⊗ v)[(i)*|v| + j] = u[i]·v[j].
BitVector kron(const BitVector& u, const BitVector& v);

/// Dense matrix over GF(2), bit-packed by row.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);

  static BinaryMatrix identity(std::size_t n);
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);
  void xor_row_into(std::size_t src, std::size_t dst);
  std::size_t row_weight(std::size_t r) const;
  std::size_t max_row_weight() const;

  BinaryMatrix transposed() const;
  /// Keeps the given columns, in the given order.
  BinaryMatrix select_columns(const std::vector<std::size_t>& columns) const;

  /// y = this · x over GF(2); x has length cols().
  BitVector apply(const BitVector& x) const;

  bool operator==(const BinaryMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t rank(const BinaryMatrix& m);
BinaryMatrix multiply(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix hstack(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix vstack(const BinaryMatrix& a, const BinaryMatrix& b);

/// Text format: first line "rows cols", then one line of space-separated 0/1
/// entries per row. Rejects ragged rows and non-binary symbols.
BinaryMatrix parse_matrix_text(const std::string& text);
std::string format_matrix_text(const BinaryMatrix& m);
BinaryMatrix load_matrix_file(const std::string& path);

/// Echelonized span of a set of generator vectors, with decomposition
/// tracking: answers membership queries and expresses members as XOR
/// combinations of the original generators.
class Gf2Solver {
 public:
  explicit Gf2Solver(const std::vector<BitVector>& generators);

  std::size_t rank() const { return rows_.size(); }
  bool contains(const BitVector& v) const;
  /// Combination over the original generators, or nullopt if v is outside
  /// the span. When generators are dependent the combination is one valid
  /// choice; coefficients of generators independent modulo the rest are
  /// uniquely determined.
  std::optional<BitVector> decompose(const BitVector& v) const;

 private:
  struct EchelonRow {
    BitVector row;
    BitVector combo;
    std::size_t pivot;
  };
  std::vector<EchelonRow> rows_;
  std::size_t dim_ = 0;
  std::size_t n_generators_ = 0;
};

}  // namespace hgp
