#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "qfanout/pauli.hpp"
#include "qfanout/hamiltonian.hpp"
#include "oracles.hpp"

using namespace qfanout;

TEST_CASE("library Pauli matrices equal the bit-arithmetic oracle") {
  for (int idx = 0; idx < 64; ++idx) {
    const PauliString s = pauli_string_at(idx);
    const ComplexMatrix lib = pauli_matrix(s);
    const ComplexMatrix ora = oracles::pauli_matrix(s.text());
    CHECK(frobenius_distance(lib, ora) == 0.0);
  }
}

TEST_CASE("Pauli strings are orthogonal under Tr(PQ)/8") {
  SplitMix64 rng(14);
  for (int rep = 0; rep < 20; ++rep) {
    const int a = static_cast<int>(rng.next() % 64);
    const int b = static_cast<int>(rng.next() % 64);
    const cxd overlap =
        oracles::pauli_coefficient(pauli_string_at(a).text(),
                                   pauli_matrix(pauli_string_at(b)));
    CHECK(std::abs(overlap - (a == b ? cxd(1.0, 0.0) : cxd(0.0, 0.0))) <
          1e-14);
  }
}

TEST_CASE("string text parses back to the same string") {
  for (int idx : {0, 5, 21, 42, 63}) {
    const PauliString s = pauli_string_at(idx);
    CHECK(pauli_index(pauli_string_from_text(s.text())) == idx);
  }
  CHECK_THROWS_AS(pauli_string_from_text("xq1"), std::invalid_argument);
  CHECK_THROWS_AS(pauli_string_from_text("xx"), std::invalid_argument);
  CHECK_THROWS_AS(pauli_string_at(64), std::invalid_argument);
}

TEST_CASE("expand/reconstruct round-trips random Hermitian matrices") {
  SplitMix64 rng(30);
  for (int rep = 0; rep < 5; ++rep) {
    const ComplexMatrix m = oracles::random_hermitian(8, rng);
    const PauliExpansion e = expand(m);
    CHECK(frobenius_distance(reconstruct(e), m) < 1e-13);

    // Parseval: sum of 8|c|^2 equals the squared Frobenius norm.
    double sum = 0.0;
    for (const cxd& c : e.coeff) sum += std::norm(c);
    const double f2 = frobenius_norm(m) * frobenius_norm(m);
    CHECK(8.0 * sum == Catch::Approx(f2).margin(1e-10));

    // Hermitian input gives real coefficients.
    for (const cxd& c : e.coeff) CHECK(std::abs(c.imag()) < 1e-14);
  }
}

TEST_CASE("expanding a bare Pauli string isolates a single coefficient") {
  const PauliString s = pauli_string_from_text("zxy");
  const PauliExpansion e = expand(cxd(2.5, 0.0) * pauli_matrix(s));
  for (int idx = 0; idx < 64; ++idx) {
    const cxd want =
        idx == pauli_index(s) ? cxd(2.5, 0.0) : cxd(0.0, 0.0);
    CHECK(std::abs(e.coeff[static_cast<std::size_t>(idx)] - want) < 1e-14);
  }
}

TEST_CASE("expansion coefficients match the independent trace oracle") {
  const HamiltonianParams p{0.9, 1};
  const ComplexMatrix h = synthesize_hamiltonian(p);
  const PauliExpansion e = expand(h);
  for (const std::string text : {"xxx", "xyy", "yxy", "yyx", "yyy", "yxx",
                                 "xyx", "xxy", "111", "zzz", "x1y"}) {
    const cxd oracle = oracles::pauli_coefficient(text, h);
    CHECK(std::abs(e[pauli_string_from_text(text)] - oracle) < 1e-14);
  }
}

TEST_CASE("the synthesized H expands into exactly the eight stated terms") {
  for (double gamma : {0.0, 0.3, -0.3, std::numbers::pi / 4, 1.2, -2.5})
    for (int n : {-2, -1, 0, 1, 3}) {
      const ExpansionCheck chk = verify_pauli_terms({gamma, n});
      CHECK(chk.pass);
      CHECK(chk.max_term_error < 1e-12);
      CHECK(chk.max_extraneous < 1e-12);
      CHECK(chk.max_imaginary < 1e-12);
    }
}

TEST_CASE("the gamma = 0 coefficients carry the predicted sign pattern") {
  const int n = 0;
  const ExpansionCheck chk = verify_pauli_terms({0.0, n});
  const double k = std::numbers::pi / 4.0 * (n + 0.5);
  CHECK(chk.expansion[pauli_string_from_text("xxx")].real() ==
        Catch::Approx(k).margin(1e-14));
  CHECK(chk.expansion[pauli_string_from_text("xyy")].real() ==
        Catch::Approx(-k).margin(1e-14));
  CHECK(chk.expansion[pauli_string_from_text("yxy")].real() ==
        Catch::Approx(k).margin(1e-14));
  CHECK(chk.expansion[pauli_string_from_text("yyx")].real() ==
        Catch::Approx(k).margin(1e-14));
  // The sine group vanishes at gamma = 0.
  for (const std::string text : {"yyy", "yxx", "xyx", "xxy"})
    CHECK(std::abs(chk.expansion[pauli_string_from_text(text)]) < 1e-15);
}

TEST_CASE("at gamma = pi/2 only the sine group survives") {
  const ExpansionCheck chk = verify_pauli_terms({std::numbers::pi / 2.0, 0});
  const double k = std::numbers::pi / 8.0;
  CHECK(chk.pass);
  CHECK(chk.expansion[pauli_string_from_text("yyy")].real() ==
        Catch::Approx(-k).margin(1e-14));
  CHECK(chk.expansion[pauli_string_from_text("yxx")].real() ==
        Catch::Approx(k).margin(1e-14));
  CHECK(chk.expansion[pauli_string_from_text("xyx")].real() ==
        Catch::Approx(-k).margin(1e-14));
  CHECK(chk.expansion[pauli_string_from_text("xxy")].real() ==
        Catch::Approx(-k).margin(1e-14));
  for (const std::string text : {"xxx", "xyy", "yxy", "yyx"})
    CHECK(std::abs(chk.expansion[pauli_string_from_text(text)]) < 1e-15);
}
