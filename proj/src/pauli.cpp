#include "hgp/pauli.hpp"

#include <sstream>
#include <stdexcept>

namespace hgp {

PauliOperator PauliOperator::x_type(const BitVector& support) {
  PauliOperator p(support.size());
  p.x = support;
  return p;
}

PauliOperator PauliOperator::z_type(const BitVector& support) {
  PauliOperator p(support.size());
  p.z = support;
  return p;
}

std::size_t PauliOperator::weight() const {
  BitVector either = x;
  either.xor_with(z);
  // x ^ z misses qubits where both act; add the overlap back.
  return either.weight() + x.overlap(z);
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
  return (x.overlap(other.z) + z.overlap(other.x)) % 2 == 0;
}

bool PauliOperator::operator==(const PauliOperator& other) const {
  return phase == other.phase && x == other.x && z == other.z;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.size() != q.size()) throw std::invalid_argument("Pauli length mismatch");
  PauliOperator out(p.size());
  // X^xp Z^zp · X^xq Z^zq reorders Z^zp past X^xq, a (-1) per overlap bit.
  out.phase = static_cast<std::uint8_t>((p.phase + q.phase + 2 * (p.z.overlap(q.x) % 2)) % 4);
  out.x = p.x;
  out.x.xor_with(q.x);
  out.z = p.z;
  out.z.xor_with(q.z);
  return out;
}

std::string to_string(const PauliOperator& p) {
  std::size_t n_y = 0;
  std::ostringstream letters;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool xb = p.x.get(i), zb = p.z.get(i);
    if (xb && zb) {
      letters << 'Y';
      ++n_y;
    } else if (xb) {
      letters << 'X';
    } else if (zb) {
      letters << 'Z';
    } else {
      letters << 'I';
    }
  }
  unsigned shown = (p.phase + 4 - static_cast<unsigned>(n_y % 4)) % 4;
  return "i^" + std::to_string(shown) + " " + letters.str();
}

PauliOperator pauli_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string phase_tok, letters;
  if (!(in >> phase_tok >> letters) || phase_tok.rfind("i^", 0) != 0)
    throw std::invalid_argument("expected \"i^k LETTERS\"");
  unsigned shown = static_cast<unsigned>(std::stoul(phase_tok.substr(2)));
  PauliOperator p(letters.size());
  std::size_t n_y = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    switch (letters[i]) {
      case 'I': break;
      case 'X': p.x.set(i, true); break;
      case 'Z': p.z.set(i, true); break;
      case 'Y':
        p.x.set(i, true);
        p.z.set(i, true);
        ++n_y;
        break;
      default: throw std::invalid_argument("bad Pauli letter");
    }
  }
  p.phase = static_cast<std::uint8_t>((shown + n_y) % 4);
  return p;
}

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdag: return "Sdag";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::XCX: return "XCX";
  }
  throw std::logic_error("unknown gate kind");
}

GateOp GateOp::single(GateKind kind, std::size_t target) {
  if (kind != GateKind::H && kind != GateKind::S && kind != GateKind::Sdag)
    throw std::invalid_argument("not a single-qubit gate kind");
  return GateOp{kind, target, target};
}

GateOp GateOp::two(GateKind kind, std::size_t a, std::size_t b) {
  if (kind != GateKind::CZ && kind != GateKind::CNOT && kind != GateKind::SWAP &&
      kind != GateKind::XCX)
    throw std::invalid_argument("not a two-qubit gate kind");
  if (a == b) throw std::invalid_argument("two-qubit gate targets must be distinct");
  return GateOp{kind, a, b};
}

std::size_t GateOp::arity() const {
  return (kind == GateKind::H || kind == GateKind::S || kind == GateKind::Sdag) ? 1 : 2;
}

void Circuit::append(const GateOp& gate) {
  if (gate.a >= n_qubits || (gate.arity() == 2 && gate.b >= n_qubits))
    throw std::out_of_range("gate target outside circuit");
  gates.push_back(gate);
}

void Circuit::append(const Circuit& other) {
  for (const GateOp& g : other.gates) append(g);
}

namespace {

void apply_gate(PauliOperator& p, const GateOp& g) {
  switch (g.kind) {
    case GateKind::H: {
      bool xb = p.x.get(g.a), zb = p.z.get(g.a);
      if (xb && zb) p.phase = static_cast<std::uint8_t>((p.phase + 2) % 4);
      p.x.set(g.a, zb);
      p.z.set(g.a, xb);
      break;
    }
    case GateKind::S:
      if (p.x.get(g.a)) {
        p.z.flip(g.a);
        p.phase = static_cast<std::uint8_t>((p.phase + 1) % 4);
      }
      break;
    case GateKind::Sdag:
      if (p.x.get(g.a)) {
        p.z.flip(g.a);
        p.phase = static_cast<std::uint8_t>((p.phase + 3) % 4);
      }
      break;
    case GateKind::CZ: {
      bool xa = p.x.get(g.a), xb = p.x.get(g.b);
      if (xa && xb) p.phase = static_cast<std::uint8_t>((p.phase + 2) % 4);
      if (xb) p.z.flip(g.a);
      if (xa) p.z.flip(g.b);
      break;
    }
    case GateKind::CNOT: {
      // control a, target b; phase-free in the i^k X^x Z^z convention
      if (p.x.get(g.a)) p.x.flip(g.b);
      if (p.z.get(g.b)) p.z.flip(g.a);
      break;
    }
    case GateKind::SWAP: {
      bool xa = p.x.get(g.a), xb = p.x.get(g.b);
      bool za = p.z.get(g.a), zb = p.z.get(g.b);
      p.x.set(g.a, xb);
      p.x.set(g.b, xa);
      p.z.set(g.a, zb);
      p.z.set(g.b, za);
      break;
    }
    case GateKind::XCX: {
      bool za = p.z.get(g.a), zb = p.z.get(g.b);
      if (za && zb) p.phase = static_cast<std::uint8_t>((p.phase + 2) % 4);
      if (zb) p.x.flip(g.a);
      if (za) p.x.flip(g.b);
      break;
    }
  }
}

}  // namespace

PauliOperator conjugate(const PauliOperator& p, const Circuit& c) {
  if (p.size() != c.n_qubits) throw std::invalid_argument("Pauli/circuit size mismatch");
  PauliOperator out = p;
  for (const GateOp& g : c.gates) apply_gate(out, g);
  return out;
}

Circuit xcx_expansion(std::size_t n_qubits, std::size_t a, std::size_t b) {
  Circuit c(n_qubits);
  c.append(GateOp::single(GateKind::H, a));
  c.append(GateOp::single(GateKind::H, b));
  c.append(GateOp::two(GateKind::CZ, a, b));
  c.append(GateOp::single(GateKind::H, a));
  c.append(GateOp::single(GateKind::H, b));
  return c;
}

}  // namespace hgp
