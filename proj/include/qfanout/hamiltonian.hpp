// Hamiltonian synthesis for the fanout unitary: find H with
// U(alpha, beta) = exp(-i H dt / hbar).
//
// The construction diagonalizes U with a block-Hadamard-like matrix T, takes
// a logarithm branch through the integer-shifted phase matrix A, and forms
// H = -hbar T A T^dag / dt. With the integer gauge fixed below the whole
// family collapses to one real phase gamma = (alpha - beta)/2 and one
// integer N; H then has exactly two nonzero entries,
//
//   H[3][4] = (pi hbar / dt) (N + 1/2) e^{-i gamma},   H[4][3] = conj,
//
// with spectrum {0 x6, +-pi hbar (N + 1/2) / dt}. Both routes (constructive
// and closed-form) are kept and cross-checked; synthesize_hamiltonian refuses
// to return if they disagree.
#pragma once

#include <array>
#include <numbers>

#include "qfanout/fanout.hpp"
#include "qfanout/matrix.hpp"

namespace qfanout {

struct HamiltonianParams {
  double gamma = 0.0;  // the single free phase, radians
  int n_gap = 0;       // integer energy-gap index
  double dt = 1.0;     // evolution window
  double hbar = 1.0;

  // Phase gauge: alpha + beta + pi + 2*pi*N = 0 with alpha - beta = 2*gamma.
  double alpha() const {
    return gamma - std::numbers::pi * (n_gap + 0.5);
  }
  double beta() const {
    return -gamma - std::numbers::pi * (n_gap + 0.5);
  }
  FanoutPhases phases() const { return FanoutPhases{alpha(), beta()}; }

  // Nonzero energy pair is +-gap_energy (sign of N+1/2 included).
  double gap_energy() const {
    return std::numbers::pi * hbar * (n_gap + 0.5) / dt;
  }

  void validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
    if (!std::isfinite(gamma)) throw std::invalid_argument("gamma not finite");
  }
};

// Block diagonalizer: identity outside rows/cols {3,4}; on the swap block
//   (1/sqrt2) [ e^{i beta/2}   e^{i beta/2} ]
//             [ e^{i alpha/2} -e^{i alpha/2} ]
// Half-angles use the principal value of alpha, beta; any branch works since
// T only ever enters as T * A * T^dag.
inline ComplexMatrix build_diagonalizer(double alpha, double beta) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix t = ComplexMatrix::identity(8);
  t(3, 3) = s * std::polar(1.0, beta / 2.0);
  t(3, 4) = s * std::polar(1.0, beta / 2.0);
  t(4, 3) = s * std::polar(1.0, alpha / 2.0);
  t(4, 4) = -s * std::polar(1.0, alpha / 2.0);
  return t;
}

struct PhaseMatrixSpec {
  std::array<int, 8> n{};  // integer shifts N_1..N_8
  double alpha = 0.0;
  double beta = 0.0;
};

// Real diagonal log-phase matrix A: entries 2*pi*N_j except rows 3 and 4,
// which carry (alpha+beta)/2 + 2*pi*N_4 and (alpha+beta)/2 + pi + 2*pi*N_5.
// exp(iA) lists the eigenvalues of U(alpha, beta) in the T eigenbasis.
inline ComplexMatrix build_phase_matrix(const PhaseMatrixSpec& spec) {
  constexpr double pi = std::numbers::pi;
  const double half_sum = 0.5 * (spec.alpha + spec.beta);
  ComplexMatrix a(8);
  for (std::size_t j = 0; j < 8; ++j) a(j, j) = 2.0 * pi * spec.n[j];
  a(3, 3) += half_sum;
  a(4, 4) += half_sum + pi;
  return a;
}

// Integer gauge used throughout: N_1..3 = N_6..8 = 0, N_4 = 0, N_5 = N.
inline PhaseMatrixSpec gauge_phase_spec(const HamiltonianParams& p) {
  PhaseMatrixSpec spec;
  spec.n = {0, 0, 0, 0, p.n_gap, 0, 0, 0};
  spec.alpha = p.alpha();
  spec.beta = p.beta();
  return spec;
}

// Constructive route: H = -hbar T A T^dag / dt.
inline ComplexMatrix hamiltonian_constructive(const HamiltonianParams& p) {
  p.validate();
  const ComplexMatrix t = build_diagonalizer(p.alpha(), p.beta());
  const ComplexMatrix a = build_phase_matrix(gauge_phase_spec(p));
  return cxd{-p.hbar / p.dt, 0.0} * (t * a * dagger(t));
}

// Closed-form route: the two-entry matrix quoted above.
inline ComplexMatrix hamiltonian_closed_form(const HamiltonianParams& p) {
  p.validate();
  const double kappa = std::numbers::pi * p.hbar * (p.n_gap + 0.5) / p.dt;
  ComplexMatrix h(8);
  h(3, 4) = kappa * std::polar(1.0, -p.gamma);
  h(4, 3) = kappa * std::polar(1.0, p.gamma);
  return h;
}

// Builds H both ways and insists the routes agree entrywise before returning
// the constructive matrix.
inline ComplexMatrix synthesize_hamiltonian(const HamiltonianParams& p) {
  const ComplexMatrix hc = hamiltonian_constructive(p);
  const ComplexMatrix hf = hamiltonian_closed_form(p);
  if (frobenius_distance(hc, hf) > 1e-12)
    throw std::logic_error(
        "hamiltonian routes disagree beyond tolerance; gauge inconsistency");
  return hc;
}

// Sorted spectrum. H vanishes outside the Hermitian 2x2 block on rows
// {3,4}, so the eigenvalues come from that block analytically: six zeros
// plus lambda+- = mean +- sqrt(halfdiff^2 + |offdiag|^2).
inline std::array<double, 8> energies(const HamiltonianParams& p) {
  const ComplexMatrix h = synthesize_hamiltonian(p);
  const double mean = 0.5 * (h(3, 3).real() + h(4, 4).real());
  const double halfdiff = 0.5 * (h(3, 3).real() - h(4, 4).real());
  const double rad =
      std::sqrt(halfdiff * halfdiff + std::norm(h(3, 4)));
  std::array<double, 8> e{};
  e.fill(0.0);
  e[0] = mean - rad;
  e[7] = mean + rad;
  std::sort(e.begin(), e.end());
  return e;
}

// || exp(-i H dt / hbar) - U(alpha, beta) ||_F for the synthesized H.
// Contract: below 1e-10 for any finite gamma and integer N.
inline double exponential_residual(const HamiltonianParams& p) {
  const ComplexMatrix h = synthesize_hamiltonian(p);
  const ComplexMatrix exponent = cxd{0.0, -p.dt / p.hbar} * h;
  return frobenius_distance(mat_exp(exponent),
                            build_fanout_unitary(p.phases()));
}

}  // namespace qfanout
