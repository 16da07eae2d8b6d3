// Reversible NOT/CNOT/CCNOT circuits on the qubits I, C, D, and the search
// for a gate realization of the fanout swap U(0,0).
//
// Circuits over these gates are basis permutations, so everything graded is
// done in integer permutation arithmetic; matrices enter only for the
// controlled-sqrt-NOT decomposition. Gates apply first-listed first, and the
// serialized format carries that order explicitly.
//
// The synthesis is breadth-first search over the subgroup of S_8 generated
// by the chosen alphabet (at most 8! = 40320 elements), so minimal length is
// exact. Ties break lexicographically in the fixed generator order
// NOT(I) < NOT(C) < NOT(D) < CNOTs by (control, target) < CCNOTs by
// (controls, target), which makes the result deterministic.
#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "qfanout/basis.hpp"
#include "qfanout/fanout.hpp"
#include "qfanout/matrix.hpp"

namespace qfanout {

enum class GateKind { Not, Cnot, Ccnot };

inline const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::Not: return "NOT";
    case GateKind::Cnot: return "CNOT";
    case GateKind::Ccnot: return "CCNOT";
  }
  throw std::invalid_argument("bad gate kind");
}

struct Gate {
  GateKind kind = GateKind::Not;
  std::vector<Qubit> controls;  // empty / one / two, distinct from target
  Qubit target = Qubit::I;
};

inline Gate make_not(Qubit target) { return Gate{GateKind::Not, {}, target}; }

inline Gate make_cnot(Qubit control, Qubit target) {
  if (control == target)
    throw std::invalid_argument("CNOT control must differ from target");
  return Gate{GateKind::Cnot, {control}, target};
}

inline Gate make_ccnot(Qubit c1, Qubit c2, Qubit target) {
  if (c1 == c2 || c1 == target || c2 == target)
    throw std::invalid_argument("CCNOT qubits must be distinct");
  if (position(c1) > position(c2)) std::swap(c1, c2);
  return Gate{GateKind::Ccnot, {c1, c2}, target};
}

inline void validate_gate(const Gate& g) {
  const std::size_t want =
      g.kind == GateKind::Not ? 0 : g.kind == GateKind::Cnot ? 1 : 2;
  if (g.controls.size() != want)
    throw std::invalid_argument("gate arity does not match kind");
  std::array<bool, 3> seen{};
  seen[static_cast<std::size_t>(position(g.target))] = true;
  for (Qubit q : g.controls) {
    auto& slot = seen[static_cast<std::size_t>(position(q))];
    if (slot) throw std::invalid_argument("gate qubits must be distinct");
    slot = true;
  }
}

inline std::string gate_text(const Gate& g) {
  std::string s = gate_kind_name(g.kind);
  s += '(';
  for (Qubit q : g.controls) {
    s += qubit_name(q);
    s += ',';
  }
  if (!g.controls.empty()) {
    s.back() = '-';
    s += '>';
  }
  s += qubit_name(g.target);
  s += ')';
  return s;
}

struct Circuit {
  std::vector<Gate> gates;  // applied first-listed first
};

using Perm = std::array<std::uint8_t, 8>;

inline Perm identity_perm() { return Perm{0, 1, 2, 3, 4, 5, 6, 7}; }

// Basis-state action: row r maps to perm[r].
inline Perm gate_permutation(const Gate& g) {
  validate_gate(g);
  Perm p{};
  for (int r = 0; r < 8; ++r) {
    BasisLabel l = basis_label(r);
    const auto bit = [&l](Qubit q) -> int& {
      switch (q) {
        case Qubit::I: return l.i_bit;
        case Qubit::C: return l.c_bit;
        default: return l.d_bit;
      }
    };
    bool fire = true;
    for (Qubit q : g.controls) fire = fire && (bit(q) == 1);
    if (fire) bit(g.target) ^= 1;
    p[static_cast<std::size_t>(r)] =
        static_cast<std::uint8_t>(basis_index(l));
  }
  return p;
}

inline Perm compose(const Perm& after, const Perm& before) {
  Perm p{};
  for (int r = 0; r < 8; ++r)
    p[static_cast<std::size_t>(r)] = after[before[static_cast<std::size_t>(r)]];
  return p;
}

inline Perm circuit_permutation(const Circuit& c) {
  Perm p = identity_perm();
  for (const Gate& g : c.gates) p = compose(gate_permutation(g), p);
  return p;
}

inline ComplexMatrix permutation_matrix(const Perm& p) {
  ComplexMatrix m(8);
  for (std::size_t r = 0; r < 8; ++r) m(p[r], r) = 1.0;
  return m;
}

inline ComplexMatrix gate_matrix(const Gate& g) {
  return permutation_matrix(gate_permutation(g));
}

inline ComplexMatrix circuit_unitary(const Circuit& c) {
  return permutation_matrix(circuit_permutation(c));
}

// The fanout swap as a permutation: transpose rows 3 and 4, fix the rest.
inline Perm fanout_swap_permutation() {
  Perm p = identity_perm();
  std::swap(p[3], p[4]);
  return p;
}

inline int permutation_sign(const Perm& p) {
  std::array<bool, 8> seen{};
  int sign = 1;
  for (int i = 0; i < 8; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

struct PhaseEquivalence {
  bool equal = false;
  cxd phase{1.0, 0.0};
};

// u1 == e^{i theta} u2 within tol? The reference entry is u2's largest,
// which is at least 1/sqrt(dim) in magnitude for a unitary.
inline PhaseEquivalence equivalent_up_to_phase(const ComplexMatrix& u1,
                                               const ComplexMatrix& u2,
                                               double tol) {
  require_same_dim(u1, u2);
  std::size_t bi = 0, bj = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < u2.dim(); ++i)
    for (std::size_t j = 0; j < u2.dim(); ++j)
      if (std::abs(u2(i, j)) > best) {
        best = std::abs(u2(i, j));
        bi = i;
        bj = j;
      }
  PhaseEquivalence r;
  if (best <= 0.0) {
    r.equal = frobenius_distance(u1, u2) <= tol;
    return r;
  }
  const cxd ratio = u1(bi, bj) / u2(bi, bj);
  const double mag = std::abs(ratio);
  r.phase = mag > 0.0 ? ratio / mag : cxd{1.0, 0.0};
  r.equal = frobenius_distance(u1, r.phase * u2) <= tol;
  return r;
}

enum class GateAlphabet { NotCcnot, NotCnotCcnot };

// Generators in the tie-break order documented above.
inline std::vector<Gate> alphabet_gates(GateAlphabet a) {
  std::vector<Gate> gates;
  for (Qubit q : {Qubit::I, Qubit::C, Qubit::D}) gates.push_back(make_not(q));
  if (a == GateAlphabet::NotCnotCcnot) {
    for (Qubit c : {Qubit::I, Qubit::C, Qubit::D})
      for (Qubit t : {Qubit::I, Qubit::C, Qubit::D})
        if (c != t) gates.push_back(make_cnot(c, t));
  }
  gates.push_back(make_ccnot(Qubit::I, Qubit::C, Qubit::D));
  gates.push_back(make_ccnot(Qubit::I, Qubit::D, Qubit::C));
  gates.push_back(make_ccnot(Qubit::C, Qubit::D, Qubit::I));
  return gates;
}

struct SynthesisNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Lehmer rank of an 8-permutation, 0..40319.
inline std::uint32_t perm_rank(const Perm& p) {
  static constexpr std::array<std::uint32_t, 8> fact{5040, 720, 120, 24,
                                                     6,    2,   1,   1};
  std::uint32_t rank = 0;
  for (int i = 0; i < 7; ++i) {
    std::uint32_t smaller = 0;
    for (int j = i + 1; j < 8; ++j)
      if (p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)])
        ++smaller;
    rank += smaller * fact[static_cast<std::size_t>(i)];
  }
  return rank;
}

}  // namespace detail

struct SynthesisResult {
  Circuit circuit;
  std::uint32_t explored = 0;  // distinct permutations reached
};

// Shortest circuit over the alphabet whose permutation equals the fanout
// swap, by BFS with a visited set over the generated subgroup. Throws
// SynthesisNotFound if no word of length <= max_gates reaches the target.
inline SynthesisResult synthesize_swap_circuit_detailed(GateAlphabet alphabet,
                                                        int max_gates) {
  if (max_gates < 1) throw std::invalid_argument("max_gates must be >= 1");
  const std::vector<Gate> gens = alphabet_gates(alphabet);
  std::vector<Perm> gen_perms;
  gen_perms.reserve(gens.size());
  for (const Gate& g : gens) gen_perms.push_back(gate_permutation(g));

  const Perm target = fanout_swap_permutation();
  const std::uint32_t target_rank = detail::perm_rank(target);

  constexpr std::uint32_t kGroupBound = 40320;
  constexpr std::uint32_t kUnseen = 0xffffffff;
  std::vector<std::uint32_t> parent(kGroupBound, kUnseen);
  std::vector<std::int8_t> via(kGroupBound, -1);
  std::vector<std::uint16_t> depth(kGroupBound, 0xffff);

  std::deque<std::pair<Perm, std::uint32_t>> queue;
  const Perm start = identity_perm();
  const std::uint32_t start_rank = detail::perm_rank(start);
  depth[start_rank] = 0;
  queue.emplace_back(start, start_rank);
  std::uint32_t explored = 1;

  bool found = start_rank == target_rank;
  while (!queue.empty() && !found) {
    const auto [perm, rank] = queue.front();
    queue.pop_front();
    if (depth[rank] >= static_cast<std::uint16_t>(max_gates)) continue;
    for (std::size_t gi = 0; gi < gen_perms.size(); ++gi) {
      const Perm next = compose(gen_perms[gi], perm);
      const std::uint32_t nrank = detail::perm_rank(next);
      if (depth[nrank] != 0xffff) continue;
      depth[nrank] = static_cast<std::uint16_t>(depth[rank] + 1);
      parent[nrank] = rank;
      via[nrank] = static_cast<std::int8_t>(gi);
      ++explored;
      if (nrank == target_rank) {
        found = true;
        break;
      }
      queue.emplace_back(next, nrank);
    }
  }

  if (!found)
    throw SynthesisNotFound("no circuit of length <= " +
                            std::to_string(max_gates) +
                            " realizes the fanout swap");

  std::vector<std::size_t> word;
  for (std::uint32_t r = target_rank; r != start_rank; r = parent[r])
    word.push_back(static_cast<std::size_t>(via[r]));

  SynthesisResult res;
  res.explored = explored;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    res.circuit.gates.push_back(gens[*it]);
  return res;
}

inline Circuit synthesize_swap_circuit(GateAlphabet alphabet, int max_gates) {
  return synthesize_swap_circuit_detailed(alphabet, max_gates).circuit;
}

// The hand-checkable nine-gate NOT+CCNOT realization of the swap; traced on
// all eight basis states in the tests.
inline Circuit swap_certificate_circuit() {
  Circuit c;
  c.gates = {make_not(Qubit::C),
             make_ccnot(Qubit::I, Qubit::C, Qubit::D),
             make_not(Qubit::C),
             make_ccnot(Qubit::I, Qubit::D, Qubit::C),
             make_ccnot(Qubit::C, Qubit::D, Qubit::I),
             make_ccnot(Qubit::I, Qubit::D, Qubit::C),
             make_not(Qubit::C),
             make_ccnot(Qubit::I, Qubit::C, Qubit::D),
             make_not(Qubit::C)};
  return c;
}

// --- CCNOT via CNOT and single-qubit factors --------------------------------

// V = sqrt(NOT): V^2 equals the bit flip exactly.
inline ComplexMatrix sqrt_not() {
  ComplexMatrix v(2);
  v(0, 0) = cxd{0.5, 0.5};
  v(0, 1) = cxd{0.5, -0.5};
  v(1, 0) = cxd{0.5, -0.5};
  v(1, 1) = cxd{0.5, 0.5};
  return v;
}

// 8x8 embedding of "apply v on target when control is |1>".
inline ComplexMatrix controlled_single_qubit(Qubit control, Qubit target,
                                             const ComplexMatrix& v) {
  if (v.dim() != 2) throw std::invalid_argument("factor must be 2x2");
  if (control == target)
    throw std::invalid_argument("control must differ from target");
  ComplexMatrix m = ComplexMatrix::identity(8);
  const int cpos = 2 - position(control);
  const int tpos = 2 - position(target);
  for (int r = 0; r < 8; ++r) {
    // Rows store (1 - bit) per qubit, so a qubit is |1> when its row bit is 0.
    const int cbit = 1 - ((r >> cpos) & 1);
    if (cbit != 1) continue;
    const int tbit = 1 - ((r >> tpos) & 1);
    const int r_flip = r ^ (1 << tpos);
    // Column r is the image of basis state r; |1> is component 0 of v.
    const std::size_t vin = tbit == 1 ? 0 : 1;
    m(static_cast<std::size_t>(r), static_cast<std::size_t>(r)) = v(vin, vin);
    m(static_cast<std::size_t>(r_flip), static_cast<std::size_t>(r)) =
        v(1 - vin, vin);
  }
  return m;
}

struct DecompositionFactor {
  std::string name;
  ComplexMatrix matrix;
};

struct CcnotDecomposition {
  std::vector<DecompositionFactor> factors;  // applied first-listed first

  ComplexMatrix product() const {
    ComplexMatrix p = ComplexMatrix::identity(8);
    for (const DecompositionFactor& f : factors) p = f.matrix * p;
    return p;
  }
};

// The controlled-sqrt-NOT construction for CCNOT(I,C -> D):
//   CV(C->D), CNOT(I->C), CV+(C->D), CNOT(I->C), CV(I->D).
// Case check: both controls 1 gives V*V = NOT on D; a single control gives
// V+V or VV+ = identity; no controls, nothing fires.
inline CcnotDecomposition ccnot_to_cnot_circuit() {
  const ComplexMatrix v = sqrt_not();
  const ComplexMatrix vd = dagger(v);
  const ComplexMatrix cnot_ic = gate_matrix(make_cnot(Qubit::I, Qubit::C));
  CcnotDecomposition d;
  d.factors = {
      {"CV(C->D)", controlled_single_qubit(Qubit::C, Qubit::D, v)},
      {"CNOT(I->C)", cnot_ic},
      {"CVdag(C->D)", controlled_single_qubit(Qubit::C, Qubit::D, vd)},
      {"CNOT(I->C)", cnot_ic},
      {"CV(I->D)", controlled_single_qubit(Qubit::I, Qubit::D, v)},
  };
  return d;
}

}  // namespace qfanout
