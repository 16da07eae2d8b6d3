// Basis conventions for the three-qubit register |ICD>.
//
// Row order is |111>, |110>, |101>, |100>, |011>, |010>, |001>, |000>:
// row = 4*(1-i) + 2*(1-c) + (1-d). Equivalently, each single qubit is ordered
// (|1>, |0>), so plain Kronecker products land in this row order and
// sigma_z|1> = +|1>. Many simulators order (|0>, |1>); everything in this
// library assumes the convention above.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "qfanout/matrix.hpp"

namespace qfanout {

enum class Qubit : int { I = 0, C = 1, D = 2 };

inline constexpr int position(Qubit q) { return static_cast<int>(q); }

inline const char* qubit_name(Qubit q) {
  switch (q) {
    case Qubit::I: return "I";
    case Qubit::C: return "C";
    case Qubit::D: return "D";
  }
  throw std::invalid_argument("bad qubit");
}

struct BasisLabel {
  int i_bit;
  int c_bit;
  int d_bit;
};

inline int basis_index(const BasisLabel& l) {
  for (int b : {l.i_bit, l.c_bit, l.d_bit})
    if (b != 0 && b != 1)
      throw std::invalid_argument("basis bits must be 0 or 1");
  return 4 * (1 - l.i_bit) + 2 * (1 - l.c_bit) + (1 - l.d_bit);
}

inline BasisLabel basis_label(int row) {
  if (row < 0 || row > 7) throw std::invalid_argument("row must be in 0..7");
  return BasisLabel{1 - ((row >> 2) & 1), 1 - ((row >> 1) & 1),
                    1 - (row & 1)};
}

inline StateVector basis_state(const BasisLabel& l) {
  StateVector v(8, cxd{0.0, 0.0});
  v[static_cast<std::size_t>(basis_index(l))] = 1.0;
  return v;
}

// Single-qubit state a|1> + b|0> in the (|1>,|0>) component order.
inline StateVector qubit_state(cxd a, cxd b) { return StateVector{a, b}; }

struct Subspace {
  std::uint8_t row_mask = 0;  // bit r set iff basis row r is a member

  bool contains(int row) const { return (row_mask >> row) & 1; }
};

// Images of the I=1 inputs: basis states with at least two 1-bits.
inline Subspace t1_subspace() { return Subspace{0b00010111}; }

// Images of the I=0 inputs: basis states with at least two 0-bits.
inline Subspace t0_subspace() { return Subspace{0b11101000}; }

// Probability weight of a normalized state outside the subspace.
inline double subspace_leakage(const StateVector& state, const Subspace& s) {
  if (state.size() != 8)
    throw std::invalid_argument("subspace_leakage expects an 8-dim state");
  double leak = 0.0;
  for (int r = 0; r < 8; ++r)
    if (!s.contains(r)) leak += std::norm(state[static_cast<std::size_t>(r)]);
  return leak;
}

// |b>_I tensor |phi>_CD as a full register state. phi is 4-dim with CD rows
// ordered |11>, |10>, |01>, |00>.
inline StateVector with_input_bit(int b, const StateVector& phi) {
  if (b != 0 && b != 1) throw std::invalid_argument("input bit must be 0 or 1");
  if (phi.size() != 4)
    throw std::invalid_argument("target state must be 4-dim");
  StateVector v(8, cxd{0.0, 0.0});
  const std::size_t off = (b == 1) ? 0 : 4;
  for (std::size_t k = 0; k < 4; ++k) v[off + k] = phi[k];
  return v;
}

// Reduced state of a register state over named qubits (ascending I, C, D).
inline DensityMatrix reduce_to(const StateVector& state,
                               const std::vector<Qubit>& keep) {
  std::vector<int> positions;
  positions.reserve(keep.size());
  for (Qubit q : keep) positions.push_back(position(q));
  return partial_trace(state, positions);
}

}  // namespace qfanout
