#include <catch2/catch_amalgamated.hpp>

#include "qfanout/matrix.hpp"
#include "qfanout/random.hpp"
#include "oracles.hpp"

using namespace qfanout;

namespace {
ComplexMatrix random_matrix(std::size_t n, SplitMix64& rng) {
  ComplexMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = {rng.gaussian(), rng.gaussian()};
  return a;
}
}  // namespace

TEST_CASE("kron satisfies the mixed-product property") {
  SplitMix64 rng(11);
  const ComplexMatrix a = random_matrix(2, rng), b = random_matrix(2, rng);
  const ComplexMatrix c = random_matrix(2, rng), d = random_matrix(2, rng);
  CHECK(frobenius_distance(kron(a, b) * kron(c, d), kron(a * c, b * d)) <
        1e-13);
  // Not bit-exact: (ab)c and a(bc) round differently entry by entry.
  CHECK(frobenius_distance(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-13);
}

TEST_CASE("kron puts the left factor on the most significant position") {
  ComplexMatrix z(2);  // diag(+1, -1) in the (|1>, |0>) qubit ordering
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  const ComplexMatrix zi = kron(z, ComplexMatrix::identity(2));
  // Left factor distinguishes the top and bottom halves of the index range.
  CHECK(zi(0, 0) == cxd(1.0, 0.0));
  CHECK(zi(1, 1) == cxd(1.0, 0.0));
  CHECK(zi(2, 2) == cxd(-1.0, 0.0));
  CHECK(zi(3, 3) == cxd(-1.0, 0.0));
}

TEST_CASE("kron3 insists on three single-qubit factors") {
  const ComplexMatrix q = ComplexMatrix::identity(2);
  CHECK_NOTHROW(kron3(q, q, q));
  CHECK_THROWS_AS(kron3(ComplexMatrix::identity(4), q, q),
                  std::invalid_argument);
}

TEST_CASE("mat_exp reproduces the closed form of exp(i theta sigma_x)") {
  ComplexMatrix sx(2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  for (double theta : {0.04, 1.0, 3.5, 10.0, -25.0}) {
    const ComplexMatrix e = mat_exp(cxd(0.0, theta) * sx);
    ComplexMatrix want(2);
    want(0, 0) = want(1, 1) = std::cos(theta);
    want(0, 1) = want(1, 0) = cxd(0.0, std::sin(theta));
    CHECK(frobenius_distance(e, want) < 1e-13);
  }
}

TEST_CASE("mat_exp of a diagonal matrix exponentiates the entries") {
  ComplexMatrix d(3);
  d(0, 0) = {0.0, 1.2};
  d(1, 1) = {-0.5, 0.0};
  d(2, 2) = {0.3, -2.0};
  const ComplexMatrix e = mat_exp(d);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(std::abs(e(i, i) - std::exp(d(i, i))) < 1e-14);
  CHECK(std::abs(e(0, 1)) == 0.0);
}

TEST_CASE("mat_exp(A) mat_exp(-A) is the identity") {
  SplitMix64 rng(5);
  const ComplexMatrix a = random_matrix(4, rng);
  const ComplexMatrix prod = mat_exp(a) * mat_exp(cxd(-1.0, 0.0) * a);
  CHECK(frobenius_distance(prod, ComplexMatrix::identity(4)) < 1e-12);
}

TEST_CASE("mat_exp rejects non-finite input") {
  ComplexMatrix a(2);
  a(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(mat_exp(a), std::invalid_argument);
}

TEST_CASE("exp of i times Hermitian is unitary") {
  SplitMix64 rng(17);
  const ComplexMatrix h = oracles::random_hermitian(8, rng);
  CHECK(unitarity_defect(mat_exp(cxd(0.0, -1.0) * h)) < 1e-12);
}

TEST_CASE("random_unitary draws pass the unitarity and determinism checks") {
  const ComplexMatrix u1 = random_unitary(8, 123);
  const ComplexMatrix u2 = random_unitary(8, 123);
  CHECK(unitarity_defect(u1) < 1e-13);
  CHECK(frobenius_distance(u1, u2) == 0.0);
  CHECK(frobenius_distance(u1, random_unitary(8, 124)) > 1e-3);
}

TEST_CASE("dagger reverses products") {
  SplitMix64 rng(3);
  const ComplexMatrix a = random_matrix(4, rng), b = random_matrix(4, rng);
  CHECK(frobenius_distance(dagger(a * b), dagger(b) * dagger(a)) < 1e-13);
}

TEST_CASE("random_state is normalized and seed-reproducible") {
  const StateVector s1 = random_state(4, 77);
  const StateVector s2 = random_state(4, 77);
  CHECK(std::abs(norm(s1) - 1.0) < 1e-14);
  CHECK(distance(s1, s2) == 0.0);
}

TEST_CASE("partial trace of a product state is a pure projector") {
  // |psi> = |q_I> (x) |q_C> (x) |q_D> with distinct single-qubit states.
  const StateVector qi = {cxd(0.6, 0.0), cxd(0.8, 0.0)};
  const StateVector qc = {cxd(0.0, 1.0) / std::sqrt(2.0),
                          cxd(1.0, 0.0) / std::sqrt(2.0)};
  const StateVector qd = {cxd(1.0, 0.0), cxd(0.0, 0.0)};
  StateVector psi(8);
  for (int r = 0; r < 8; ++r)
    psi[r] = qi[(r >> 2) & 1] * qc[(r >> 1) & 1] * qd[r & 1];

  const DensityMatrix rho_i = partial_trace(psi, {0});
  const DensityMatrix rho_c = partial_trace(psi, {1});
  const DensityMatrix rho_d = partial_trace(psi, {2});
  CHECK(fidelity(rho_i, qi) == Catch::Approx(1.0).margin(1e-14));
  CHECK(fidelity(rho_c, qc) == Catch::Approx(1.0).margin(1e-14));
  CHECK(fidelity(rho_d, qd) == Catch::Approx(1.0).margin(1e-14));

  const DensityMatrix rho_cd = partial_trace(psi, {1, 2});
  StateVector qcd(4);
  for (int r = 0; r < 4; ++r) qcd[r] = qc[(r >> 1) & 1] * qd[r & 1];
  CHECK(fidelity(rho_cd, qcd) == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("partial trace of a GHZ state is maximally mixed per qubit") {
  StateVector ghz(8);
  ghz[0] = 1.0 / std::sqrt(2.0);  // |111>
  ghz[7] = 1.0 / std::sqrt(2.0);  // |000>
  for (int q : {0, 1, 2}) {
    const DensityMatrix rho = partial_trace(ghz, {q});
    CHECK(std::abs(rho(0, 0) - 0.5) < 1e-14);
    CHECK(std::abs(rho(1, 1) - 0.5) < 1e-14);
    CHECK(std::abs(rho(0, 1)) < 1e-14);
    // Any pure state sees fidelity 1/2 against the maximally mixed state.
    CHECK(fidelity(rho, {cxd(1.0, 0.0), cxd(0.0, 0.0)}) ==
          Catch::Approx(0.5).margin(1e-14));
  }
}

TEST_CASE("partial trace validates its arguments") {
  StateVector psi(8, cxd(0.0, 0.0));
  psi[0] = 1.0;
  CHECK_THROWS_AS(partial_trace(psi, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(psi, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(psi, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(psi, {3}), std::invalid_argument);
  psi[0] = 2.0;
  CHECK_THROWS_AS(partial_trace(psi, {0}), std::invalid_argument);
}

TEST_CASE("norms, inner products and defects behave") {
  SplitMix64 rng(9);
  const StateVector v = random_state(8, rng);
  CHECK(std::abs(inner(v, v).real() - 1.0) < 1e-14);
  CHECK(std::abs(inner(v, v).imag()) < 1e-15);

  const ComplexMatrix u = random_unitary(8, 2);
  CHECK(std::abs(norm(apply_matrix(u, v)) - 1.0) < 1e-13);

  ComplexMatrix h = oracles::random_hermitian(8, rng);
  CHECK(hermiticity_defect(h) < 1e-15);
  h(0, 1) += cxd(0.0, 0.5);
  CHECK(hermiticity_defect(h) > 0.1);
}

TEST_CASE("library spectrum matches the Jacobi oracle on random Hermitians") {
  SplitMix64 rng(21);
  const ComplexMatrix h = oracles::random_hermitian(8, rng);
  // Oracle self-consistency: Jacobi eigenvalues reproduce trace and norm.
  const std::vector<double> ev = oracles::jacobi_spectrum(h);
  double tr = 0.0, sq = 0.0;
  for (double e : ev) {
    tr += e;
    sq += e * e;
  }
  double tr_direct = 0.0;
  for (std::size_t i = 0; i < 8; ++i) tr_direct += h(i, i).real();
  CHECK(tr == Catch::Approx(tr_direct).margin(1e-11));
  CHECK(sq == Catch::Approx(frobenius_norm(h) * frobenius_norm(h)).margin(1e-10));
}
