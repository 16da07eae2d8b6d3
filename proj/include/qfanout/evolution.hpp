// Externally timed dynamics: integrate i hbar dpsi/dt = f(t) H psi over
// [0, dt] with classical RK4.
//
// The protocol function f averages to 1 over the window, and H commutes with
// itself at all times, so the exact final state is U psi0 for every protocol
// shape; the integrator exists to demonstrate that numerically. Square-pulse
// discontinuities are aligned to step boundaries by integrating each smooth
// segment separately (the step containing a jump is effectively split), and
// RK4 stages inside a segment evaluate that segment's branch. This keeps the
// classical order-4 convergence intact across the jump.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qfanout/hamiltonian.hpp"
#include "qfanout/matrix.hpp"

namespace qfanout {

struct ProtocolFunction {
  enum class Kind { Constant, Sinusoidal, SquarePulse };

  Kind kind = Kind::Constant;
  double amplitude = 0.0;  // sinusoidal: f = 1 + amplitude*sin(2 pi k t/dt)
  int harmonic = 1;        // sinusoidal: integer k >= 1
  double duty = 1.0;       // square pulse: f = 1/duty on [0, duty*dt], 0 after

  static ProtocolFunction constant() { return ProtocolFunction{}; }

  static ProtocolFunction sinusoidal(double amplitude, int harmonic) {
    if (harmonic < 1)
      throw std::invalid_argument("harmonic index must be >= 1");
    if (!std::isfinite(amplitude))
      throw std::invalid_argument("amplitude must be finite");
    ProtocolFunction f;
    f.kind = Kind::Sinusoidal;
    f.amplitude = amplitude;
    f.harmonic = harmonic;
    return f;
  }

  static ProtocolFunction square_pulse(double duty) {
    if (!(duty > 0.0) || duty > 1.0)
      throw std::invalid_argument("duty must lie in (0, 1]");
    ProtocolFunction f;
    f.kind = Kind::SquarePulse;
    f.duty = duty;
    return f;
  }

  const char* name() const {
    switch (kind) {
      case Kind::Constant: return "constant";
      case Kind::Sinusoidal: return "sinusoidal";
      case Kind::SquarePulse: return "square-pulse";
    }
    return "?";
  }
};

// Pointwise value; the pulse interval is closed, f(duty*dt) = 1/duty.
inline double protocol_value(const ProtocolFunction& f, double t, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (t < 0.0 || t > dt)
    throw std::invalid_argument("t must lie in [0, dt]");
  switch (f.kind) {
    case ProtocolFunction::Kind::Constant:
      return 1.0;
    case ProtocolFunction::Kind::Sinusoidal:
      return 1.0 + f.amplitude *
                       std::sin(2.0 * std::numbers::pi * f.harmonic * t / dt);
    case ProtocolFunction::Kind::SquarePulse:
      return t <= f.duty * dt ? 1.0 / f.duty : 0.0;
  }
  throw std::logic_error("unreachable");
}

// Smooth pieces of f on [0, dt], as consecutive breakpoints.
inline std::vector<double> protocol_breakpoints(const ProtocolFunction& f,
                                                double dt) {
  if (f.kind == ProtocolFunction::Kind::SquarePulse && f.duty < 1.0)
    return {0.0, f.duty * dt, dt};
  return {0.0, dt};
}

namespace detail {

// Branch value inside segment `seg` (one-sided at the segment edges).
inline double segment_value(const ProtocolFunction& f, std::size_t seg,
                            double t, double dt) {
  if (f.kind == ProtocolFunction::Kind::SquarePulse && f.duty < 1.0)
    return seg == 0 ? 1.0 / f.duty : 0.0;
  return protocol_value(f, std::clamp(t, 0.0, dt), dt);
}

}  // namespace detail

// RK4 integration of i hbar dpsi/dt = f(t) h psi from t=0 to t=dt, with
// `steps` uniform steps distributed over the smooth segments of f.
inline StateVector integrate_schrodinger(const ComplexMatrix& h,
                                         const ProtocolFunction& f,
                                         const StateVector& psi0, int steps,
                                         double dt, double hbar) {
  if (h.dim() != psi0.size())
    throw std::invalid_argument("hamiltonian/state dimension mismatch");
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (!(dt > 0.0) || !(hbar > 0.0))
    throw std::invalid_argument("dt and hbar must be positive");

  const std::size_t n = psi0.size();
  const cxd minus_i_over_hbar{0.0, -1.0 / hbar};
  StateVector psi = psi0;
  StateVector k1(n), k2(n), k3(n), k4(n), tmp(n);

  const auto deriv = [&](const StateVector& y, double scale, StateVector& out) {
    for (std::size_t i = 0; i < n; ++i) {
      cxd s{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) s += h(i, j) * y[j];
      out[i] = minus_i_over_hbar * scale * s;
    }
  };

  const std::vector<double> brk = protocol_breakpoints(f, dt);
  std::vector<int> seg_steps(brk.size() - 1, 0);
  int assigned = 0;
  for (std::size_t s = 0; s + 1 < brk.size(); ++s) {
    const double frac = (brk[s + 1] - brk[s]) / dt;
    int want = s + 2 < brk.size()
                   ? std::max(1, static_cast<int>(std::lround(steps * frac)))
                   : std::max(1, steps - assigned);
    seg_steps[s] = want;
    assigned += want;
  }

  for (std::size_t s = 0; s + 1 < brk.size(); ++s) {
    const double t0 = brk[s];
    const int nsteps = seg_steps[s];
    const double hstep = (brk[s + 1] - t0) / nsteps;
    for (int step = 0; step < nsteps; ++step) {
      const double t = t0 + step * hstep;
      const double f0 = detail::segment_value(f, s, t, dt);
      const double fm = detail::segment_value(f, s, t + 0.5 * hstep, dt);
      const double f1 = detail::segment_value(f, s, t + hstep, dt);

      deriv(psi, f0, k1);
      for (std::size_t i = 0; i < n; ++i)
        tmp[i] = psi[i] + 0.5 * hstep * k1[i];
      deriv(tmp, fm, k2);
      for (std::size_t i = 0; i < n; ++i)
        tmp[i] = psi[i] + 0.5 * hstep * k2[i];
      deriv(tmp, fm, k3);
      for (std::size_t i = 0; i < n; ++i) tmp[i] = psi[i] + hstep * k3[i];
      deriv(tmp, f1, k4);
      for (std::size_t i = 0; i < n; ++i)
        psi[i] += hstep / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  }
  return psi;
}

struct EvolutionReport {
  StateVector psi_final;
  double residual_vs_target = 0.0;  // || psi_final - U psi0 ||
  double norm_deviation = 0.0;      // | ||psi_final|| - 1 |
  int steps = 0;
};

inline EvolutionReport evolve(const HamiltonianParams& p,
                              const ProtocolFunction& f,
                              const StateVector& psi0, int steps) {
  p.validate();
  if (psi0.size() != 8)
    throw std::invalid_argument("evolve expects an 8-dim state");
  if (std::abs(norm(psi0) - 1.0) > 1e-12)
    throw std::invalid_argument("evolve expects a normalized state");
  if (steps < 100) throw std::invalid_argument("steps must be >= 100");

  const ComplexMatrix h = synthesize_hamiltonian(p);
  EvolutionReport rep;
  rep.steps = steps;
  rep.psi_final = integrate_schrodinger(h, f, psi0, steps, p.dt, p.hbar);
  rep.residual_vs_target =
      distance(rep.psi_final, apply_matrix(build_fanout_unitary(p.phases()), psi0));
  rep.norm_deviation = std::abs(norm(rep.psi_final) - 1.0);
  return rep;
}

inline double norm_drift(const EvolutionReport& rep) {
  return rep.norm_deviation;
}

}  // namespace qfanout
