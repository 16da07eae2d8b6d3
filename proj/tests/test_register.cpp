#include <catch2/catch_amalgamated.hpp>

#include "qfanout/basis.hpp"
#include "qfanout/random.hpp"

using namespace qfanout;

TEST_CASE("basis rows run from |111> down to |000>") {
  CHECK(basis_index({1, 1, 1}) == 0);
  CHECK(basis_index({1, 1, 0}) == 1);
  CHECK(basis_index({1, 0, 1}) == 2);
  CHECK(basis_index({1, 0, 0}) == 3);
  CHECK(basis_index({0, 1, 1}) == 4);
  CHECK(basis_index({0, 1, 0}) == 5);
  CHECK(basis_index({0, 0, 1}) == 6);
  CHECK(basis_index({0, 0, 0}) == 7);
  for (int r = 0; r < 8; ++r) CHECK(basis_index(basis_label(r)) == r);
}

TEST_CASE("basis labels reject out-of-range bits and rows") {
  CHECK_THROWS_AS(basis_index({2, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(basis_index({0, -1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(basis_label(8), std::invalid_argument);
  CHECK_THROWS_AS(basis_label(-1), std::invalid_argument);
}

TEST_CASE("basis_state places a single unit amplitude") {
  const StateVector s = basis_state({1, 0, 0});
  for (int r = 0; r < 8; ++r)
    CHECK(s[static_cast<std::size_t>(r)] == (r == 3 ? cxd(1.0, 0.0) : cxd(0.0, 0.0)));
}

TEST_CASE("T1 holds exactly the rows with at least two 1-bits") {
  const Subspace t1 = t1_subspace(), t0 = t0_subspace();
  for (int r = 0; r < 8; ++r) {
    const BasisLabel l = basis_label(r);
    const int ones = l.i_bit + l.c_bit + l.d_bit;
    CHECK(t1.contains(r) == (ones >= 2));
    CHECK(t0.contains(r) == (ones <= 1));
    CHECK(t1.contains(r) != t0.contains(r));
  }
}

TEST_CASE("subspace_leakage sums the probability outside the subspace") {
  StateVector s(8, cxd(0.0, 0.0));
  s[0] = std::sqrt(0.7);  // |111> in T1
  s[7] = std::sqrt(0.3);  // |000> in T0
  CHECK(subspace_leakage(s, t1_subspace()) == Catch::Approx(0.3).margin(1e-15));
  CHECK(subspace_leakage(s, t0_subspace()) == Catch::Approx(0.7).margin(1e-15));
  CHECK_THROWS_AS(subspace_leakage(StateVector(4), t1_subspace()),
                  std::invalid_argument);
}

TEST_CASE("with_input_bit embeds the target block at the right rows") {
  const StateVector phi = random_state(4, 31);
  const StateVector top = with_input_bit(1, phi);
  const StateVector bottom = with_input_bit(0, phi);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(top[k] == phi[k]);
    CHECK(top[4 + k] == cxd(0.0, 0.0));
    CHECK(bottom[k] == cxd(0.0, 0.0));
    CHECK(bottom[4 + k] == phi[k]);
  }
  CHECK(std::abs(norm(top) - 1.0) < 1e-14);
  CHECK_THROWS_AS(with_input_bit(2, phi), std::invalid_argument);
  CHECK_THROWS_AS(with_input_bit(1, StateVector(8)), std::invalid_argument);
}

TEST_CASE("with_input_bit composes to a product with the qubit basis state") {
  // |1,phi> amplitudes must equal kron(|1>, phi) under the row convention.
  const StateVector phi = random_state(4, 8);
  const StateVector s = with_input_bit(1, phi);
  for (int r = 0; r < 8; ++r) {
    const BasisLabel l = basis_label(r);
    const cxd want = (l.i_bit == 1)
                         ? phi[static_cast<std::size_t>(2 * (1 - l.c_bit) +
                                                        (1 - l.d_bit))]
                         : cxd(0.0, 0.0);
    CHECK(s[static_cast<std::size_t>(r)] == want);
  }
}

TEST_CASE("reduce_to recovers per-qubit states of product inputs") {
  // |ICD> = |0>|1>|0>: qubit C reduces to |1><1|, I and D to |0><0|.
  const StateVector s = basis_state({0, 1, 0});
  CHECK(fidelity(reduce_to(s, {Qubit::C}), qubit_state(1.0, 0.0)) ==
        Catch::Approx(1.0).margin(1e-15));
  CHECK(fidelity(reduce_to(s, {Qubit::I}), qubit_state(0.0, 1.0)) ==
        Catch::Approx(1.0).margin(1e-15));
  CHECK(fidelity(reduce_to(s, {Qubit::D}), qubit_state(0.0, 1.0)) ==
        Catch::Approx(1.0).margin(1e-15));

  // Two-qubit reduction keeps the (|11>,|10>,|01>,|00>) order on (C, D).
  const DensityMatrix rho_cd = reduce_to(basis_state({1, 1, 0}), {Qubit::C, Qubit::D});
  CHECK(std::abs(rho_cd(1, 1) - 1.0) < 1e-15);  // |10> slot
}

TEST_CASE("qubit names and positions stay in I, C, D order") {
  CHECK(position(Qubit::I) == 0);
  CHECK(position(Qubit::C) == 1);
  CHECK(position(Qubit::D) == 2);
  CHECK(std::string(qubit_name(Qubit::I)) == "I");
  CHECK(std::string(qubit_name(Qubit::C)) == "C");
  CHECK(std::string(qubit_name(Qubit::D)) == "D");
}
