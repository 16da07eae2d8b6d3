// JSON interchange for matrices, states and circuits, plus the fixed-width
// numeric formatting used to keep tool output byte-stable across runs.
//
// Matrix files: array of rows, each entry a two-element [re, im] array;
// rejected unless square with finite entries. State files: eight [re, im]
// pairs in the fixed basis order |111>, |110>, ..., |000>. Circuit files:
// {"order": "first-acts-first", "gates": [{"kind", "controls", "target"}]}
// with qubit names "I", "C", "D".
#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "qfanout/circuit.hpp"
#include "qfanout/matrix.hpp"

namespace qfanout {

using json = nlohmann::json;

// Round to `digits` significant decimal digits (default 12). Used before
// serialization so emitted numbers do not carry platform noise; also folds
// negative zero into zero.
inline double round_sig(double x, int digits = 12) {
  if (x == 0.0) return 0.0;
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  return std::strtod(buf, nullptr);
}

// Shortest stable text form at `digits` significant digits.
inline std::string format_sig(double x, int digits = 12) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, round_sig(x, digits));
  return buf;
}

namespace detail {

inline json pair_json(cxd z) {
  return json::array({round_sig(z.real()), round_sig(z.imag())});
}

inline cxd pair_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument(std::string(what) +
                                ": entries must be [re, im] number pairs");
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im))
    throw std::invalid_argument(std::string(what) + ": non-finite entry");
  return {re, im};
}

}  // namespace detail

inline json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c)
      row.push_back(detail::pair_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix: expected a nonempty array of rows");
  const std::size_t n = j.size();
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n)
      throw std::invalid_argument("matrix: rows must all have length " +
                                  std::to_string(n) + " (square, rectangular)");
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = detail::pair_from_json(j[r][c], "matrix");
  }
  return m;
}

inline json state_to_json(const StateVector& psi) {
  json arr = json::array();
  for (cxd z : psi) arr.push_back(detail::pair_json(z));
  return arr;
}

inline StateVector state_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8)
    throw std::invalid_argument(
        "state: expected 8 amplitude pairs (|111> first, |000> last)");
  StateVector psi(8);
  for (std::size_t i = 0; i < 8; ++i)
    psi[i] = detail::pair_from_json(j[i], "state");
  return psi;
}

inline Qubit qubit_from_name(const std::string& s) {
  if (s == "I") return Qubit::I;
  if (s == "C") return Qubit::C;
  if (s == "D") return Qubit::D;
  throw std::invalid_argument("unknown qubit name '" + s +
                              "' (expected I, C or D)");
}

inline json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates) {
    json controls = json::array();
    for (Qubit q : g.controls) controls.push_back(qubit_name(q));
    gates.push_back({{"kind", gate_kind_name(g.kind)},
                     {"controls", std::move(controls)},
                     {"target", qubit_name(g.target)}});
  }
  return {{"order", "first-acts-first"}, {"gates", std::move(gates)}};
}

inline Circuit circuit_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("circuit: expected object");
  if (!j.contains("order") || j.at("order") != "first-acts-first")
    throw std::invalid_argument(
        "circuit: field \"order\" must be \"first-acts-first\"");
  if (!j.contains("gates") || !j.at("gates").is_array())
    throw std::invalid_argument("circuit: field \"gates\" must be an array");

  Circuit c;
  for (const json& gj : j.at("gates")) {
    if (!gj.is_object() || !gj.contains("kind") || !gj.contains("target"))
      throw std::invalid_argument("circuit: gate needs \"kind\" and \"target\"");
    const std::string kind = gj.at("kind").get<std::string>();
    std::vector<Qubit> controls;
    if (gj.contains("controls"))
      for (const json& cj : gj.at("controls"))
        controls.push_back(qubit_from_name(cj.get<std::string>()));
    const Qubit target = qubit_from_name(gj.at("target").get<std::string>());

    if (kind == "NOT") {
      if (!controls.empty())
        throw std::invalid_argument("circuit: NOT takes no controls");
      c.gates.push_back(make_not(target));
    } else if (kind == "CNOT") {
      if (controls.size() != 1)
        throw std::invalid_argument("circuit: CNOT takes one control");
      c.gates.push_back(make_cnot(controls[0], target));
    } else if (kind == "CCNOT") {
      if (controls.size() != 2)
        throw std::invalid_argument("circuit: CCNOT takes two controls");
      c.gates.push_back(make_ccnot(controls[0], controls[1], target));
    } else {
      throw std::invalid_argument("circuit: unknown gate kind '" + kind + "'");
    }
  }
  return c;
}

}  // namespace qfanout
