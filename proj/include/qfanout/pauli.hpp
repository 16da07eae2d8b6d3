// Expansion of 8x8 operators over the 64 three-fold Pauli tensor products.
//
// Axis codes are 1, x, y, z per qubit in (I, C, D) order; the associated
// matrix is kron3 of the standard 2x2 forms read in the (|1>,|0>) basis
// ordering. The strings are trace-orthogonal, Tr(P*Q)/8 = [P==Q], so
// coefficients are c_P = Tr(P*M)/8 and Hermitian inputs give real tables.
//
// Under this convention the synthesized two-entry Hamiltonian expands into
// exactly eight three-spin xy-terms; see predicted_pauli_terms. The signs of
// the sin-gamma group flip under the reversed qubit ordering (conjugation by
// sigma_x^{(x)3} negates strings with an odd y count), which is why reports
// carry the convention string.
#pragma once

#include <array>
#include <string>
#include <utility>

#include "qfanout/hamiltonian.hpp"
#include "qfanout/matrix.hpp"

namespace qfanout {

inline constexpr const char* kBasisConvention =
    "single-qubit basis ordered (|1>,|0>); rows |111>..|000>";

enum class PauliAxis : int { One = 0, X = 1, Y = 2, Z = 3 };

inline char axis_char(PauliAxis a) {
  switch (a) {
    case PauliAxis::One: return '1';
    case PauliAxis::X: return 'x';
    case PauliAxis::Y: return 'y';
    case PauliAxis::Z: return 'z';
  }
  throw std::invalid_argument("bad axis");
}

inline PauliAxis axis_from_char(char c) {
  switch (c) {
    case '1': return PauliAxis::One;
    case 'x': return PauliAxis::X;
    case 'y': return PauliAxis::Y;
    case 'z': return PauliAxis::Z;
    default: throw std::invalid_argument("axis must be one of 1,x,y,z");
  }
}

struct PauliString {
  PauliAxis i = PauliAxis::One;
  PauliAxis c = PauliAxis::One;
  PauliAxis d = PauliAxis::One;

  std::string text() const {
    return std::string{axis_char(i), axis_char(c), axis_char(d)};
  }
};

inline int pauli_index(const PauliString& s) {
  return 16 * static_cast<int>(s.i) + 4 * static_cast<int>(s.c) +
         static_cast<int>(s.d);
}

inline PauliString pauli_string_at(int index) {
  if (index < 0 || index > 63)
    throw std::invalid_argument("pauli index must be in 0..63");
  return PauliString{static_cast<PauliAxis>(index / 16),
                     static_cast<PauliAxis>((index / 4) % 4),
                     static_cast<PauliAxis>(index % 4)};
}

inline PauliString pauli_string_from_text(const std::string& text) {
  if (text.size() != 3)
    throw std::invalid_argument("axes string must have 3 characters");
  return PauliString{axis_from_char(text[0]), axis_from_char(text[1]),
                     axis_from_char(text[2])};
}

inline const ComplexMatrix& single_qubit_pauli(PauliAxis a) {
  static const std::array<ComplexMatrix, 4> basis = [] {
    std::array<ComplexMatrix, 4> m{ComplexMatrix(2), ComplexMatrix(2),
                                   ComplexMatrix(2), ComplexMatrix(2)};
    m[0](0, 0) = 1.0;
    m[0](1, 1) = 1.0;
    m[1](0, 1) = 1.0;
    m[1](1, 0) = 1.0;
    m[2](0, 1) = cxd{0.0, -1.0};
    m[2](1, 0) = cxd{0.0, 1.0};
    m[3](0, 0) = 1.0;
    m[3](1, 1) = -1.0;
    return m;
  }();
  return basis[static_cast<std::size_t>(a)];
}

inline ComplexMatrix pauli_matrix(const PauliString& s) {
  return kron3(single_qubit_pauli(s.i), single_qubit_pauli(s.c),
               single_qubit_pauli(s.d));
}

struct PauliExpansion {
  std::array<cxd, 64> coeff{};

  cxd operator[](const PauliString& s) const {
    return coeff[static_cast<std::size_t>(pauli_index(s))];
  }
};

inline PauliExpansion expand(const ComplexMatrix& m) {
  if (m.dim() != 8) throw std::invalid_argument("expand expects an 8x8 matrix");
  PauliExpansion e;
  for (int idx = 0; idx < 64; ++idx) {
    const ComplexMatrix p = pauli_matrix(pauli_string_at(idx));
    cxd tr{0.0, 0.0};
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t k = 0; k < 8; ++k) tr += p(i, k) * m(k, i);
    e.coeff[static_cast<std::size_t>(idx)] = tr / 8.0;
  }
  return e;
}

inline ComplexMatrix reconstruct(const PauliExpansion& e) {
  ComplexMatrix m(8);
  for (int idx = 0; idx < 64; ++idx) {
    const cxd c = e.coeff[static_cast<std::size_t>(idx)];
    if (c == cxd{0.0, 0.0}) continue;
    const ComplexMatrix p = pauli_matrix(pauli_string_at(idx));
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) m(i, j) += c * p(i, j);
  }
  return m;
}

// The analytic expansion of the synthesized Hamiltonian: with
// K = (pi hbar / 4 dt)(N + 1/2),
//   cos-gamma group:  +K xxx, -K xyy, +K yxy, +K yyx
//   sin-gamma group:  -K yyy, +K yxx, -K xyx, -K xxy
inline std::array<std::pair<PauliString, double>, 8> predicted_pauli_terms(
    const HamiltonianParams& p) {
  p.validate();
  const double k =
      std::numbers::pi * p.hbar * (p.n_gap + 0.5) / (4.0 * p.dt);
  const double kc = k * std::cos(p.gamma);
  const double ks = k * std::sin(p.gamma);
  using PA = PauliAxis;
  return {{{PauliString{PA::X, PA::X, PA::X}, kc},
           {PauliString{PA::X, PA::Y, PA::Y}, -kc},
           {PauliString{PA::Y, PA::X, PA::Y}, kc},
           {PauliString{PA::Y, PA::Y, PA::X}, kc},
           {PauliString{PA::Y, PA::Y, PA::Y}, -ks},
           {PauliString{PA::Y, PA::X, PA::X}, ks},
           {PauliString{PA::X, PA::Y, PA::X}, -ks},
           {PauliString{PA::X, PA::X, PA::Y}, -ks}}};
}

struct ExpansionCheck {
  bool pass = false;
  double max_term_error = 0.0;   // worst |c_P - predicted| over the 8 terms
  double max_extraneous = 0.0;   // worst |c_P| over the other 56 strings
  double max_imaginary = 0.0;    // worst |Im c_P| anywhere
  PauliExpansion expansion;
  std::string basis_convention = kBasisConvention;
};

// Expands the synthesized H and checks it against predicted_pauli_terms:
// the eight stated coefficients within 1e-12 and nothing else above 1e-12.
inline ExpansionCheck verify_pauli_terms(const HamiltonianParams& p) {
  ExpansionCheck chk;
  chk.expansion = expand(synthesize_hamiltonian(p));

  std::array<bool, 64> predicted{};
  for (const auto& [s, value] : predicted_pauli_terms(p)) {
    const std::size_t idx = static_cast<std::size_t>(pauli_index(s));
    predicted[idx] = true;
    chk.max_term_error =
        std::max(chk.max_term_error,
                 std::abs(chk.expansion.coeff[idx] - cxd{value, 0.0}));
  }
  for (int idx = 0; idx < 64; ++idx) {
    const cxd c = chk.expansion.coeff[static_cast<std::size_t>(idx)];
    chk.max_imaginary = std::max(chk.max_imaginary, std::abs(c.imag()));
    if (!predicted[static_cast<std::size_t>(idx)])
      chk.max_extraneous = std::max(chk.max_extraneous, std::abs(c));
  }
  chk.pass = chk.max_term_error < 1e-12 && chk.max_extraneous < 1e-12;
  return chk;
}

}  // namespace qfanout
