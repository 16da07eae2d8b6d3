// The three-qubit fanout unitary and its copying semantics.
//
// The base unitary acts as the identity except on the span of |100> and
// |011> (rows 3 and 4), where it swaps the two states with free phases:
//
//   U|100> = e^{i alpha}|011>,   U|011> = e^{i beta}|100>.
//
// Any unitary mapping span{|1>_I (x) CD} onto the two-or-more-ones subspace
// (and the I=0 inputs onto its complement) does blind fanout: a basis input
// bit ends up duplicated in at least two of I, C, D, with no constraint on
// the initial target states. The checks in this header probe exactly that,
// plus the two no-cloning statements: a fixed |bbb> target is unreachable
// for arbitrary targets, and superposed inputs never yield an exact copy on
// any single qubit.
#pragma once

#include <array>
#include <cstdint>

#include "qfanout/basis.hpp"
#include "qfanout/matrix.hpp"
#include "qfanout/random.hpp"

namespace qfanout {

struct FanoutPhases {
  double alpha = 0.0;
  double beta = 0.0;
};

inline constexpr int kSwapRowHigh = 3;  // |100>
inline constexpr int kSwapRowLow = 4;   // |011>

inline ComplexMatrix build_fanout_unitary(const FanoutPhases& p) {
  ComplexMatrix u = ComplexMatrix::identity(8);
  u(kSwapRowHigh, kSwapRowHigh) = 0.0;
  u(kSwapRowLow, kSwapRowLow) = 0.0;
  u(kSwapRowHigh, kSwapRowLow) = std::polar(1.0, p.beta);
  u(kSwapRowLow, kSwapRowHigh) = std::polar(1.0, p.alpha);
  return u;
}

// Any member of the fanout family: arbitrary unitaries within the two target
// subspaces composed with the base swap. v1 rotates the image of the I=1
// inputs (rows 0,1,2,4), v0 the image of the I=0 inputs (rows 3,5,6,7).
inline ComplexMatrix build_general_fanout(const ComplexMatrix& v1,
                                          const ComplexMatrix& v0) {
  if (v1.dim() != 4 || v0.dim() != 4)
    throw std::invalid_argument("subspace blocks must be 4x4");
  if (unitarity_defect(v1) > 1e-10 || unitarity_defect(v0) > 1e-10)
    throw std::invalid_argument("subspace blocks must be unitary");

  static constexpr std::array<int, 4> t1_rows{0, 1, 2, 4};
  static constexpr std::array<int, 4> t0_rows{3, 5, 6, 7};

  ComplexMatrix block(8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      block(t1_rows[i], t1_rows[j]) = v1(i, j);
      block(t0_rows[i], t0_rows[j]) = v0(i, j);
    }
  return block * build_fanout_unitary(FanoutPhases{0.0, 0.0});
}

struct SubspaceCheckReport {
  double max_leakage = 0.0;
  int trials = 0;
  bool pass = false;
};

// For random target states |phi>_CD, U(|b> (x) |phi>) must stay inside the
// subspace matching b. Pass iff the worst leakage stays below 1e-10.
inline SubspaceCheckReport fanout_subspace_check(const ComplexMatrix& u,
                                                 int trials,
                                                 std::uint64_t seed) {
  if (u.dim() != 8) throw std::invalid_argument("expected an 8x8 unitary");
  SplitMix64 rng(seed);
  SubspaceCheckReport rep;
  rep.trials = trials;
  const Subspace t1 = t1_subspace();
  const Subspace t0 = t0_subspace();
  for (int k = 0; k < trials; ++k) {
    const StateVector phi = random_state(4, rng);
    const double leak1 = subspace_leakage(apply_matrix(u, with_input_bit(1, phi)), t1);
    const double leak0 = subspace_leakage(apply_matrix(u, with_input_bit(0, phi)), t0);
    rep.max_leakage = std::max(rep.max_leakage, std::max(leak1, leak0));
  }
  rep.pass = rep.max_leakage < 1e-10;
  return rep;
}

struct DuplicationReport {
  int trials = 0;
  int min_matching_bits = 3;
  bool pass = false;
};

// Stronger statement, checked per basis state in the support: every output
// component carries the input bit on at least two of the three qubits. The
// support cut of 1e-20 on |amplitude|^2 only guards float noise; the block
// structure produces exact zeros.
inline DuplicationReport duplication_check(const ComplexMatrix& u,
                                           int input_bit, int trials,
                                           std::uint64_t seed) {
  if (u.dim() != 8) throw std::invalid_argument("expected an 8x8 unitary");
  if (input_bit != 0 && input_bit != 1)
    throw std::invalid_argument("input bit must be 0 or 1");
  SplitMix64 rng(seed);
  DuplicationReport rep;
  rep.trials = trials;
  for (int k = 0; k < trials; ++k) {
    const StateVector out =
        apply_matrix(u, with_input_bit(input_bit, random_state(4, rng)));
    for (int r = 0; r < 8; ++r) {
      if (std::norm(out[static_cast<std::size_t>(r)]) <= 1e-20) continue;
      const BasisLabel l = basis_label(r);
      const int matching = (l.i_bit == input_bit) + (l.c_bit == input_bit) +
                           (l.d_bit == input_bit);
      rep.min_matching_bits = std::min(rep.min_matching_bits, matching);
    }
  }
  rep.pass = rep.min_matching_bits >= 2;
  return rep;
}

// How badly inner-product preservation fails for a map sending both
// |1,phi1> and |1,phi2> to the same fixed |111>: |<phi1|phi2> - 1|.
// Strictly positive whenever phi1 and phi2 differ (up to phase), which is
// why strict copying onto fixed targets cannot be unitary.
inline double strict_copy_defect(const StateVector& phi1,
                                 const StateVector& phi2) {
  if (phi1.size() != 4 || phi2.size() != 4)
    throw std::invalid_argument("target states must be 4-dim");
  if (std::abs(norm(phi1) - 1.0) > 1e-12 || std::abs(norm(phi2) - 1.0) > 1e-12)
    throw std::invalid_argument("target states must be normalized");
  return std::abs(inner(phi1, phi2) - cxd{1.0, 0.0});
}

struct CloneFidelities {
  double f_i = 0.0;
  double f_c = 0.0;
  double f_d = 0.0;

  double max() const { return std::max(f_i, std::max(f_c, f_d)); }
};

// Sends (a|1> + b|0>)_I (x) |phi>_CD through u and reports the fidelity of
// each single-qubit reduced state against the input superposition. Per-qubit
// numbers, because the no-cloning claim is about every subsystem.
inline CloneFidelities clone_fidelity(const ComplexMatrix& u, cxd a, cxd b,
                                      const StateVector& phi) {
  if (u.dim() != 8) throw std::invalid_argument("expected an 8x8 unitary");
  if (phi.size() != 4)
    throw std::invalid_argument("target state must be 4-dim");
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12)
    throw std::invalid_argument("|a|^2 + |b|^2 must be 1");
  if (std::abs(norm(phi) - 1.0) > 1e-12)
    throw std::invalid_argument("target state must be normalized");

  StateVector in(8);
  for (std::size_t k = 0; k < 4; ++k) {
    in[k] = a * phi[k];
    in[4 + k] = b * phi[k];
  }
  const StateVector out = apply_matrix(u, in);
  const StateVector ref = qubit_state(a, b);

  CloneFidelities f;
  f.f_i = fidelity(reduce_to(out, {Qubit::I}), ref);
  f.f_c = fidelity(reduce_to(out, {Qubit::C}), ref);
  f.f_d = fidelity(reduce_to(out, {Qubit::D}), ref);
  return f;
}

}  // namespace qfanout
