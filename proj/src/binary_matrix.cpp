#include "hgp/binary_matrix.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hgp {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  BitVector v(length);
  v.set(index, true);
  return v;
}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
  BitVector v(bits.size());
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("BitVector entries must be 0 or 1");
    v.set(i++, b != 0);
  }
  return v;
}

bool BitVector::get(std::size_t i) const {
  if (i >= length_) throw std::out_of_range("BitVector index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= length_) throw std::out_of_range("BitVector index out of range");
  std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value)
    words_[i / kWordBits] |= mask;
  else
    words_[i / kWordBits] &= ~mask;
}

void BitVector::flip(std::size_t i) { set(i, !get(i)); }

void BitVector::xor_with(const BitVector& other) {
  if (other.length_ != length_) throw std::invalid_argument("BitVector length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const {
  for (std::uint64_t word : words_)
    if (word != 0) return false;
  return true;
}

bool BitVector::dot(const BitVector& other) const { return overlap(other) % 2 == 1; }

std::size_t BitVector::overlap(const BitVector& other) const {
  if (other.length_ != length_) throw std::invalid_argument("BitVector length mismatch");
  std::size_t w = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    w += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return w;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      unsigned bit = static_cast<unsigned>(std::countr_zero(word));
      out.push_back(w * kWordBits + bit);
      word &= word - 1;
    }
  }
  return out;
}

std::optional<std::size_t> BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * kWordBits + static_cast<unsigned>(std::countr_zero(words_[w]));
  return std::nullopt;
}

std::optional<std::size_t> BitVector::last_set() const {
  for (std::size_t w = words_.size(); w-- > 0;)
    if (words_[w] != 0)
      return w * kWordBits + (kWordBits - 1 - static_cast<unsigned>(std::countl_zero(words_[w])));
  return std::nullopt;
}

bool BitVector::operator==(const BitVector& other) const {
  return length_ == other.length_ && words_ == other.words_;
}

BitVector concat(const BitVector& a, const BitVector& b) {
  BitVector out(a.size() + b.size());
  for (std::size_t i : a.support()) out.set(i, true);
  for (std::size_t i : b.support()) out.set(a.size() + i, true);
  return out;
}

BitVector kron(const BitVector& u, const BitVector& v) {
  BitVector out(u.size() * v.size());
  for (std::size_t i : u.support())
    for (std::size_t j : v.support()) out.set(i * v.size() + j, true);
  return out;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), words_(rows * words_per_row_, 0) {}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return {};
  BinaryMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (rows[r][c] != 0 && rows[r][c] != 1)
        throw std::invalid_argument("matrix entries must be 0 or 1");
      m.set(r, c, rows[r][c] != 0);
    }
  }
  return m;
}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BinaryMatrix index out of range");
  return (words_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BinaryMatrix index out of range");
  std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  std::uint64_t& word = words_[r * words_per_row_ + c / kWordBits];
  if (value)
    word |= mask;
  else
    word &= ~mask;
}

BitVector BinaryMatrix::row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("row index out of range");
  BitVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    if (get(r, c)) v.set(c, true);
  return v;
}

void BinaryMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, v.get(c));
}

void BinaryMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  if (src >= rows_ || dst >= rows_) throw std::out_of_range("row index out of range");
  for (std::size_t w = 0; w < words_per_row_; ++w)
    words_[dst * words_per_row_ + w] ^= words_[src * words_per_row_ + w];
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("row index out of range");
  std::size_t w = 0;
  for (std::size_t i = 0; i < words_per_row_; ++i)
    w += static_cast<std::size_t>(std::popcount(words_[r * words_per_row_ + i]));
  return w;
}

std::size_t BinaryMatrix::max_row_weight() const {
  std::size_t best = 0;
  for (std::size_t r = 0; r < rows_; ++r) best = std::max(best, row_weight(r));
  return best;
}

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BinaryMatrix BinaryMatrix::select_columns(const std::vector<std::size_t>& columns) const {
  BinaryMatrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (get(r, columns[c])) out.set(r, c, true);
  return out;
}

BitVector BinaryMatrix::apply(const BitVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
  BitVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (row(r).dot(x)) y.set(r, true);
  return y;
}

bool BinaryMatrix::operator==(const BinaryMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && words_ == other.words_;
}

std::size_t rank(const BinaryMatrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return Gf2Solver(rows).rank();
}

BinaryMatrix multiply(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  BinaryMatrix bt = b.transposed();
  BinaryMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BitVector ar = a.row(r);
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (ar.dot(bt.row(c))) out.set(r, c, true);
  }
  return out;
}

BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b) {
  BinaryMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.get(i, j)) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (b.get(r, c)) out.set(i * b.rows() + r, j * b.cols() + c, true);
    }
  return out;
}

BinaryMatrix hstack(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
  BinaryMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) out.set(r, c, true);
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (b.get(r, c)) out.set(r, a.cols() + c, true);
  }
  return out;
}

BinaryMatrix vstack(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
  BinaryMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.set_row(r, a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r) out.set_row(a.rows() + r, b.row(r));
  return out;
}

BinaryMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t rows = 0, cols = 0;
  if (!std::getline(in, line)) throw std::invalid_argument("empty matrix file");
  {
    std::istringstream header(line);
    if (!(header >> rows >> cols)) throw std::invalid_argument("bad header, expected \"rows cols\"");
    std::string rest;
    if (header >> rest) throw std::invalid_argument("trailing tokens in header");
  }
  BinaryMatrix m(rows, cols);
  std::size_t r = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (r >= rows) throw std::invalid_argument("more rows than declared");
    std::istringstream row_in(line);
    std::string tok;
    std::size_t c = 0;
    while (row_in >> tok) {
      if (c >= cols) throw std::invalid_argument("ragged row: too many entries");
      if (tok == "0")
        m.set(r, c, false);
      else if (tok == "1")
        m.set(r, c, true);
      else
        throw std::invalid_argument("non-binary symbol: " + tok);
      ++c;
    }
    if (c != cols) throw std::invalid_argument("ragged row: too few entries");
    ++r;
  }
  if (r != rows) throw std::invalid_argument("fewer rows than declared");
  return m;
}

std::string format_matrix_text(const BinaryMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << (m.get(r, c) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

BinaryMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

Gf2Solver::Gf2Solver(const std::vector<BitVector>& generators)
    : n_generators_(generators.size()) {
  dim_ = generators.empty() ? 0 : generators.front().size();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != dim_) throw std::invalid_argument("generator length mismatch");
    BitVector row = generators[g];
    BitVector combo(n_generators_);
    combo.set(g, true);
    for (const EchelonRow& er : rows_) {
      if (row.get(er.pivot)) {
        row.xor_with(er.row);
        combo.xor_with(er.combo);
      }
    }
    if (auto p = row.first_set()) {
      rows_.push_back({std::move(row), std::move(combo), *p});
    }
  }
}

bool Gf2Solver::contains(const BitVector& v) const { return decompose(v).has_value(); }

std::optional<BitVector> Gf2Solver::decompose(const BitVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("query length mismatch");
  BitVector rem = v;
  BitVector combo(n_generators_);
  for (const EchelonRow& er : rows_) {
    if (rem.get(er.pivot)) {
      rem.xor_with(er.row);
      combo.xor_with(er.combo);
    }
  }
  if (!rem.is_zero()) return std::nullopt;
  return combo;
}

}  // namespace hgp
