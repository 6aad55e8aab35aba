#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgp/binary_matrix.hpp"

namespace hgp {

/// Phase-exact n-qubit Pauli operator i^phase · X^x Z^z, with X written
/// before Z qubit-wise. In this convention Y = i·XZ, so S X S† = Y has
/// phase exponent 1 and S† X S has phase exponent 3.
struct PauliOperator {
  BitVector x;
  BitVector z;
  std::uint8_t phase = 0;  // exponent of i, mod 4

  PauliOperator() = default;
  explicit PauliOperator(std::size_t n_qubits) : x(n_qubits), z(n_qubits) {}
  static PauliOperator identity(std::size_t n_qubits) { return PauliOperator(n_qubits); }
  static PauliOperator x_type(const BitVector& support);
  static PauliOperator z_type(const BitVector& support);

  std::size_t size() const { return x.size(); }
  std::size_t weight() const;
  bool commutes_with(const PauliOperator& other) const;
  bool operator==(const PauliOperator& other) const;
};

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

/// "i^k " prefix followed by one letter per qubit from {I,X,Y,Z}; the
/// displayed exponent absorbs the i per Y so that e.g. Y prints as "i^0 Y".
std::string to_string(const PauliOperator& p);
PauliOperator pauli_from_string(const std::string& text);

enum class GateKind { H, S, Sdag, CZ, CNOT, SWAP, XCX };

std::string gate_name(GateKind kind);

struct GateOp {
  GateKind kind;
  std::size_t a = 0;
  std::size_t b = 0;  // unused for single-qubit gates

  static GateOp single(GateKind kind, std::size_t target);
  static GateOp two(GateKind kind, std::size_t a, std::size_t b);
  std::size_t arity() const;
};

/// Ordered gate list over a fixed qubit count; gates[0] acts first.
struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<GateOp> gates;

  explicit Circuit(std::size_t n_qubits = 0) : n_qubits(n_qubits) {}
  void append(const GateOp& gate);
  void append(const Circuit& other);
  std::size_t size() const { return gates.size(); }
};

/// Returns U p U† where U is the circuit (gates applied in list order),
/// with exact i-phase tracking.
PauliOperator conjugate(const PauliOperator& p, const Circuit& c);

/// XCX(a,b) = H⊗H · CZ · H⊗H as an explicit five-gate circuit.
Circuit xcx_expansion(std::size_t n_qubits, std::size_t a, std::size_t b);

}  // namespace hgp
