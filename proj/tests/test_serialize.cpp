#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <string>

#include "qfanout/serialize.hpp"
#include "qfanout/circuit.hpp"
#include "qfanout/random.hpp"

using namespace qfanout;

TEST_CASE("round_sig keeps 12 significant digits and kills negative zero") {
  CHECK(round_sig(0.0) == 0.0);
  CHECK(!std::signbit(round_sig(-0.0)));
  CHECK(round_sig(1.0000000000001) == 1.0);
  CHECK(round_sig(3.14159265358979) == 3.14159265359);
  CHECK(round_sig(-1.23456789012345e-7) == -1.23456789012e-7);
  CHECK(round_sig(123456789012345.0) == 123456789012000.0);
  CHECK_THROWS_AS(round_sig(std::nan("")), std::invalid_argument);
}

TEST_CASE("format_sig emits text that parses back to the rounded value") {
  for (double x : {0.0, 1.0, -0.5, 3.14159265358979, 1e-300, -2.75e17}) {
    const std::string s = format_sig(x);
    CHECK(std::strtod(s.c_str(), nullptr) == round_sig(x));
  }
  CHECK(format_sig(-0.0) == "0");
  CHECK(format_sig(1.0) == "1");
}

TEST_CASE("matrix serialization round-trips to 12 digits and is idempotent") {
  const ComplexMatrix u = random_unitary(8, 19);
  const ComplexMatrix back = matrix_from_json(matrix_to_json(u));
  double worst = 0.0;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c)
      worst = std::max(worst, std::abs(back(r, c) - u(r, c)));
  CHECK(worst < 1e-11);

  const ComplexMatrix twice = matrix_from_json(matrix_to_json(back));
  CHECK(frobenius_distance(twice, back) == 0.0);
}

TEST_CASE("matrix parsing rejects malformed documents") {
  CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json::parse("42")), std::invalid_argument);
  // Ragged rows.
  CHECK_THROWS_AS(
      matrix_from_json(json::parse("[[[1,0],[0,0]],[[0,0]]]")),
      std::invalid_argument);
  // Rectangular but not square.
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(
          "[[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]]]")),
      std::invalid_argument);
  // Entry is not a [re, im] pair.
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1]]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1]]]")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1,\"x\"]]]")),
                  std::invalid_argument);
}

TEST_CASE("state serialization enforces the eight-pair layout") {
  const StateVector psi = random_state(8, 23);
  const StateVector back = state_from_json(state_to_json(psi));
  CHECK(distance(back, psi) < 1e-11);

  CHECK_THROWS_AS(state_from_json(json::parse("[[1,0]]")),
                  std::invalid_argument);
  json seven = json::array();
  for (int k = 0; k < 7; ++k) seven.push_back(json::array({0.0, 0.0}));
  CHECK_THROWS_AS(state_from_json(seven), std::invalid_argument);
}

TEST_CASE("circuit serialization round-trips the certificate") {
  const Circuit cert = swap_certificate_circuit();
  const json doc = circuit_to_json(cert);
  CHECK(doc.at("order") == "first-acts-first");

  const Circuit back = circuit_from_json(doc);
  REQUIRE(back.gates.size() == cert.gates.size());
  for (std::size_t k = 0; k < cert.gates.size(); ++k)
    CHECK(gate_text(back.gates[k]) == gate_text(cert.gates[k]));
  CHECK(circuit_permutation(back) == circuit_permutation(cert));
}

TEST_CASE("circuit parsing rejects unknown kinds and bad shapes") {
  const auto parse = [](const char* text) {
    return circuit_from_json(json::parse(text));
  };
  // Unknown gate kind.
  CHECK_THROWS_AS(
      parse(R"({"order":"first-acts-first",
                "gates":[{"kind":"HADAMARD","controls":[],"target":"C"}]})"),
      std::invalid_argument);
  // Wrong or missing order field.
  CHECK_THROWS_AS(
      parse(R"({"order":"last-acts-first","gates":[]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"gates":[]})"), std::invalid_argument);
  // Control arity mismatches.
  CHECK_THROWS_AS(
      parse(R"({"order":"first-acts-first",
                "gates":[{"kind":"NOT","controls":["I"],"target":"C"}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse(R"({"order":"first-acts-first",
                "gates":[{"kind":"CNOT","controls":[],"target":"C"}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse(R"({"order":"first-acts-first",
                "gates":[{"kind":"CCNOT","controls":["I","I"],"target":"C"}]})"),
      std::invalid_argument);
  // Bad qubit name.
  CHECK_THROWS_AS(
      parse(R"({"order":"first-acts-first",
                "gates":[{"kind":"NOT","controls":[],"target":"Q"}]})"),
      std::invalid_argument);
  // Target missing.
  CHECK_THROWS_AS(
      parse(R"({"order":"first-acts-first","gates":[{"kind":"NOT"}]})"),
      std::invalid_argument);
}

TEST_CASE("serializing non-finite values is refused") {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(matrix_to_json(m), std::invalid_argument);
}
