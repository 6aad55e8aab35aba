#include "hgp/code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hgp/triangular.hpp"

namespace hgp {

std::string to_string(const QubitCoord& c) {
  return std::string(c.sector == Sector::Left ? "L" : "R") + "(" + std::to_string(c.row) + "," +
         std::to_string(c.col) + ")";
}

HgpCode::HgpCode(BinaryMatrix ha, BinaryMatrix hb)
    : ha_(std::move(ha)),
      hb_(std::move(hb)),
      na_(ha_.cols()),
      nb_(hb_.cols()),
      ma_(ha_.rows()),
      mb_(hb_.rows()) {
  hx_ = hstack(kron(ha_, BinaryMatrix::identity(nb_)), kron(BinaryMatrix::identity(ma_), hb_.transposed()));
  hz_ = hstack(kron(BinaryMatrix::identity(na_), hb_), kron(ha_.transposed(), BinaryMatrix::identity(mb_)));
  for (std::size_t r = 0; r < hx_.rows(); ++r) {
    BitVector xr = hx_.row(r);
    for (std::size_t s = 0; s < hz_.rows(); ++s)
      if (xr.dot(hz_.row(s)))
        throw std::logic_error("Hx·Hzᵀ != 0: hypergraph product construction bug");
  }
}

HgpCode build_hgp(const BinaryMatrix& ha, const BinaryMatrix& hb) { return HgpCode(ha, hb); }

std::size_t HgpCode::qubit_index(const QubitCoord& c) const {
  if (c.row == 0 || c.col == 0) throw std::out_of_range("qubit coordinates are 1-based");
  if (c.sector == Sector::Left) {
    if (c.row > na_ || c.col > nb_) throw std::out_of_range("left-sector coordinate out of range");
    return (c.row - 1) * nb_ + (c.col - 1);
  }
  if (c.row > ma_ || c.col > mb_) throw std::out_of_range("right-sector coordinate out of range");
  return na_ * nb_ + (c.row - 1) * mb_ + (c.col - 1);
}

QubitCoord HgpCode::coord_of(std::size_t index) const {
  if (index < na_ * nb_) return {index / nb_ + 1, index % nb_ + 1, Sector::Left};
  index -= na_ * nb_;
  if (index < ma_ * mb_) return {index / mb_ + 1, index % mb_ + 1, Sector::Right};
  throw std::out_of_range("qubit index out of range");
}

PauliOperator stabilizer_x(const HgpCode& code, std::size_t j, std::size_t h) {
  if (j == 0 || j > code.ma() || h == 0 || h > code.nb())
    throw std::out_of_range("stabilizer_x index out of range");
  return PauliOperator::x_type(code.hx().row((j - 1) * code.nb() + (h - 1)));
}

PauliOperator stabilizer_z(const HgpCode& code, std::size_t i, std::size_t l) {
  if (i == 0 || i > code.na() || l == 0 || l > code.mb())
    throw std::out_of_range("stabilizer_z index out of range");
  return PauliOperator::z_type(code.hz().row((i - 1) * code.mb() + (l - 1)));
}

bool is_symmetric(const HgpCode& code) {
  if (!(code.ha() == code.hb())) return false;
  if (code.ha().rows() != code.ha().cols()) return false;
  // rowspace == columnspace iff stacking the transpose adds no rank
  std::size_t r = rank(code.ha());
  return rank(vstack(code.ha(), code.ha().transposed())) == r;
}

std::string to_string(const Distance& d) {
  return d.infinite ? "infinite" : std::to_string(d.value);
}

Distance minimum_distance(const BinaryMatrix& h) {
  TriangularKernel ker = strong_triangular_reduce(h);
  const std::size_t k = ker.kernel_basis.size();
  if (k == 0) return Distance::inf();
  if (k > 24) throw std::invalid_argument("kernel dimension exceeds enumeration guard (2^24)");
  // Gray-code walk over all nonzero combinations.
  BitVector acc(h.cols());
  std::size_t best = h.cols() + 1;
  std::uint64_t prev = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
    std::uint64_t gray = m ^ (m >> 1);
    std::uint64_t changed = gray ^ prev;
    prev = gray;
    while (changed) {
      acc.xor_with(ker.kernel_basis[static_cast<std::size_t>(std::countr_zero(changed))]);
      changed &= changed - 1;
    }
    best = std::min(best, acc.weight());
    if (best == 1) break;
  }
  return Distance::of(best);
}

CodeParams code_params(const HgpCode& code, bool compute_distance) {
  const BinaryMatrix& ha = code.ha();
  const BinaryMatrix& hb = code.hb();
  const std::size_t ra = rank(ha), rb = rank(hb);
  const std::size_t ka = ha.cols() - ra, kb = hb.cols() - rb;
  const std::size_t ka_t = ha.rows() - ra, kb_t = hb.rows() - rb;

  CodeParams out;
  out.n = code.n_qubits();
  out.k = ka * kb + ka_t * kb_t;
  std::size_t k_check = out.n - rank(code.hx()) - rank(code.hz());
  if (k_check != out.k) throw std::logic_error("k mismatch between product formula and rank count");
  out.max_stab_weight = std::max(code.hx().max_row_weight(), code.hz().max_row_weight());

  if (compute_distance) {
    // d = min(d_a, d_aT, d_b, d_bT); a side with no logical qubits does not
    // contribute (its distance may be infinite).
    Distance d = Distance::inf();
    auto fold = [&d](const Distance& cand) {
      if (cand.infinite) return;
      if (d.infinite || cand.value < d.value) d = cand;
    };
    if (ka * kb > 0) {
      fold(minimum_distance(ha));
      fold(minimum_distance(hb));
    }
    if (ka_t * kb_t > 0) {
      fold(minimum_distance(ha.transposed()));
      fold(minimum_distance(hb.transposed()));
    }
    out.d = d;
  }
  return out;
}

}  // namespace hgp
