// Command-line front end: every verification in the library as a subcommand.
//
// Exit codes: 0 when the report passes, 1 on verification failure, 2 on
// usage errors or invalid input. Output is byte-stable for fixed inputs and
// seeds: every floating-point value is rounded to 12 significant digits
// before printing, in both text and --json modes.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfanout/qfanout.hpp"

namespace qf = qfanout;
using ojson = nlohmann::ordered_json;

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::string fmt(double x) { return qf::format_sig(x); }

std::string fmt_cxd(qf::cxd z) {
  const double re = qf::round_sig(z.real());
  const double im = qf::round_sig(z.imag());
  std::string s = qf::format_sig(re);
  s += im < 0 ? '-' : '+';
  s += qf::format_sig(std::abs(im));
  s += 'i';
  return s;
}

constexpr const char* kBasisOrder =
    "|111>,|110>,|101>,|100>,|011>,|010>,|001>,|000>";

void print_matrix(const char* name, const qf::ComplexMatrix& m) {
  std::cout << name << " (rows/cols " << kBasisOrder << "):\n";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    std::cout << "  [ ";
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) std::cout << "  ";
      std::cout << fmt_cxd(m(r, c));
    }
    std::cout << " ]\n";
  }
}

ojson matrix_report(const qf::ComplexMatrix& m) {
  return ojson::parse(qf::matrix_to_json(m).dump());
}

void emit(bool as_json, const std::string& command, const ojson& parameters,
          const ojson& results, double tolerance, bool pass,
          const std::function<void()>& text_body) {
  if (as_json) {
    ojson doc;
    doc["command"] = command;
    doc["parameters"] = parameters;
    doc["results"] = results;
    doc["tolerance"] = qf::round_sig(tolerance);
    doc["pass"] = pass;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << "command: " << command << "\n";
  for (const auto& [k, v] : parameters.items()) {
    std::cout << k << ": ";
    if (v.is_number_float())
      std::cout << fmt(v.get<double>());
    else
      std::cout << (v.is_string() ? v.get<std::string>() : v.dump());
    std::cout << "\n";
  }
  text_body();
  std::cout << "tolerance: " << fmt(tolerance) << "\n";
  std::cout << "pass: " << (pass ? "true" : "false") << "\n";
}

// --- unitary ---------------------------------------------------------------

struct UnitaryArgs {
  double alpha = 0.0, beta = 0.0;
  bool degrees = false, json = false;
};

bool run_unitary(const UnitaryArgs& a) {
  const double alpha = a.degrees ? a.alpha * kDegToRad : a.alpha;
  const double beta = a.degrees ? a.beta * kDegToRad : a.beta;
  const qf::ComplexMatrix u = qf::build_fanout_unitary({alpha, beta});
  const double residual = qf::unitarity_defect(u);
  const double tol = 1e-12;
  const bool pass = residual < tol;

  ojson params{{"alpha", qf::round_sig(alpha)}, {"beta", qf::round_sig(beta)}};
  ojson results{{"unitarity_residual", qf::round_sig(residual)},
                {"matrix", matrix_report(u)}};
  emit(a.json, "unitary", params, results, tol, pass, [&] {
    std::cout << "unitarity_residual: " << fmt(residual) << "\n";
    print_matrix("matrix", u);
  });
  return pass;
}

// --- hamiltonian -----------------------------------------------------------

struct HamiltonianArgs {
  double gamma = 0.0;
  int n = 0;
  double dt = 1.0, hbar = 1.0;
  bool degrees = false, json = false;
};

bool run_hamiltonian(const HamiltonianArgs& a) {
  const qf::HamiltonianParams p{a.degrees ? a.gamma * kDegToRad : a.gamma, a.n,
                                a.dt, a.hbar};
  const qf::ComplexMatrix h = qf::synthesize_hamiltonian(p);
  const std::array<double, 8> spec = qf::energies(p);
  const double residual = qf::exponential_residual(p);
  const double tol = 1e-10;
  const bool pass = residual < tol;

  ojson params{{"gamma", qf::round_sig(p.gamma)},
               {"n", p.n_gap},
               {"dt", qf::round_sig(p.dt)},
               {"hbar", qf::round_sig(p.hbar)}};
  ojson spec_j = ojson::array();
  for (double e : spec) spec_j.push_back(qf::round_sig(e));
  ojson results{{"alpha", qf::round_sig(p.alpha())},
                {"beta", qf::round_sig(p.beta())},
                {"gap_energy", qf::round_sig(p.gap_energy())},
                {"spectrum", spec_j},
                {"exponential_residual", qf::round_sig(residual)},
                {"matrix", matrix_report(h)}};
  emit(a.json, "hamiltonian", params, results, tol, pass, [&] {
    std::cout << "alpha: " << fmt(p.alpha()) << "\n";
    std::cout << "beta: " << fmt(p.beta()) << "\n";
    std::cout << "gap_energy: " << fmt(p.gap_energy()) << "\n";
    std::cout << "spectrum:";
    for (double e : spec) std::cout << " " << fmt(e);
    std::cout << "\n";
    std::cout << "exponential_residual: " << fmt(residual) << "\n";
    print_matrix("matrix", h);
  });
  return pass;
}

// --- pauli -----------------------------------------------------------------

struct PauliArgs {
  double gamma = 0.0;
  int n = 0;
  double dt = 1.0, hbar = 1.0;
  bool all = false, degrees = false, json = false;
};

bool run_pauli(const PauliArgs& a) {
  const qf::HamiltonianParams p{a.degrees ? a.gamma * kDegToRad : a.gamma, a.n,
                                a.dt, a.hbar};
  const qf::ExpansionCheck check = qf::verify_pauli_terms(p);
  const double tol = 1e-12;

  ojson table = ojson::array();
  std::vector<std::pair<std::string, double>> rows;
  for (int idx = 0; idx < 64; ++idx) {
    const qf::PauliString s = qf::pauli_string_at(idx);
    const qf::cxd c = check.expansion[s];
    if (!a.all && std::abs(c) <= tol) continue;
    rows.emplace_back(s.text(), qf::round_sig(c.real()));
    table.push_back({{"pauli", s.text()}, {"value", qf::round_sig(c.real())}});
  }

  ojson params{{"gamma", qf::round_sig(p.gamma)},
               {"n", p.n_gap},
               {"dt", qf::round_sig(p.dt)},
               {"hbar", qf::round_sig(p.hbar)},
               {"all", a.all}};
  ojson results{{"basis_convention", check.basis_convention},
                {"coefficient_count", rows.size()},
                {"max_term_error", qf::round_sig(check.max_term_error)},
                {"max_extraneous", qf::round_sig(check.max_extraneous)},
                {"max_imaginary", qf::round_sig(check.max_imaginary)},
                {"coefficients", table}};
  emit(a.json, "pauli", params, results, tol, check.pass, [&] {
    std::cout << "basis_convention: " << check.basis_convention << "\n";
    std::cout << "coefficients (1 = identity factor; order I,C,D):\n";
    for (const auto& [text, value] : rows)
      std::cout << "  " << text << "  " << fmt(value) << "\n";
    std::cout << "coefficient_count: " << rows.size() << "\n";
    std::cout << "max_term_error: " << fmt(check.max_term_error) << "\n";
    std::cout << "max_extraneous: " << fmt(check.max_extraneous) << "\n";
    std::cout << "max_imaginary: " << fmt(check.max_imaginary) << "\n";
  });
  return check.pass;
}

// --- circuit / verify-circuit ----------------------------------------------

struct CircuitChecks {
  int gate_count = 0;
  int ccnot_count = 0;
  bool matches_swap = false;
  bool matrix_exact = false;
};

CircuitChecks check_circuit(const qf::Circuit& c) {
  CircuitChecks r;
  r.gate_count = static_cast<int>(c.gates.size());
  for (const qf::Gate& g : c.gates)
    if (g.kind == qf::GateKind::Ccnot) ++r.ccnot_count;
  r.matches_swap = qf::circuit_permutation(c) == qf::fanout_swap_permutation();
  r.matrix_exact = qf::frobenius_distance(qf::circuit_unitary(c),
                                          qf::build_fanout_unitary({0, 0})) ==
                   0.0;
  return r;
}

void circuit_body(const qf::Circuit& c, const CircuitChecks& k) {
  std::cout << "gates (first listed acts first):\n";
  for (const qf::Gate& g : c.gates) std::cout << "  " << qf::gate_text(g) << "\n";
  std::cout << "gate_count: " << k.gate_count << "\n";
  std::cout << "ccnot_count: " << k.ccnot_count << "\n";
  std::cout << "ccnot_count_odd: " << (k.ccnot_count % 2 ? "true" : "false")
            << "\n";
  std::cout << "matches_fanout_swap: " << (k.matches_swap ? "true" : "false")
            << "\n";
  std::cout << "matrix_exact: " << (k.matrix_exact ? "true" : "false") << "\n";
}

ojson circuit_results(const qf::Circuit& c, const CircuitChecks& k) {
  ojson gates = ojson::array();
  for (const qf::Gate& g : c.gates) gates.push_back(qf::gate_text(g));
  return ojson{{"gates", gates},
               {"gate_count", k.gate_count},
               {"ccnot_count", k.ccnot_count},
               {"ccnot_count_odd", k.ccnot_count % 2 == 1},
               {"matches_fanout_swap", k.matches_swap},
               {"matrix_exact", k.matrix_exact},
               {"circuit", ojson::parse(qf::circuit_to_json(c).dump())}};
}

struct CircuitArgs {
  std::string alphabet = "not+ccnot";
  int max_gates = 9;
  bool json = false;
};

bool run_circuit(const CircuitArgs& a) {
  const qf::GateAlphabet alphabet = a.alphabet == "not+ccnot"
                                        ? qf::GateAlphabet::NotCcnot
                                        : qf::GateAlphabet::NotCnotCcnot;
  ojson params{{"alphabet", a.alphabet}, {"max_gates", a.max_gates}};
  qf::SynthesisResult res;
  try {
    res = qf::synthesize_swap_circuit_detailed(alphabet, a.max_gates);
  } catch (const qf::SynthesisNotFound& e) {
    ojson results{{"found", false}, {"explored", 0}};
    emit(a.json, "circuit", params, results, 0.0, false, [&] {
      std::cout << "found: false\n";
      std::cout << "note: " << e.what() << "\n";
    });
    return false;
  }
  const CircuitChecks k = check_circuit(res.circuit);
  const bool pass = k.matches_swap && k.matrix_exact && k.ccnot_count % 2 == 1;
  ojson results = circuit_results(res.circuit, k);
  results["found"] = true;
  results["explored"] = res.explored;
  emit(a.json, "circuit", params, results, 0.0, pass, [&] {
    std::cout << "found: true\n";
    std::cout << "explored: " << res.explored << "\n";
    circuit_body(res.circuit, k);
  });
  return pass;
}

struct VerifyCircuitArgs {
  std::string file;
  bool json = false;
};

bool run_verify_circuit(const VerifyCircuitArgs& a) {
  std::ifstream in(a.file);
  if (!in) throw std::invalid_argument("cannot open file '" + a.file + "'");
  qf::json doc = qf::json::parse(in);
  const qf::Circuit c = qf::circuit_from_json(doc);
  const CircuitChecks k = check_circuit(c);
  const bool pass = k.matches_swap && k.matrix_exact;
  ojson params{{"file", a.file}};
  emit(a.json, "verify-circuit", params, circuit_results(c, k), 0.0, pass,
       [&] { circuit_body(c, k); });
  return pass;
}

// --- evolve ----------------------------------------------------------------

struct EvolveArgs {
  double gamma = 0.0;
  int n = 0;
  double dt = 1.0, hbar = 1.0;
  std::string protocol = "const";
  int steps = 10000;
  std::string input = "100";
  double amplitude = 0.5;
  int harmonic = 2;
  double duty = 0.5;
  bool degrees = false, json = false;
};

bool run_evolve(const EvolveArgs& a) {
  const qf::HamiltonianParams p{a.degrees ? a.gamma * kDegToRad : a.gamma, a.n,
                                a.dt, a.hbar};
  if (a.input.size() != 3 ||
      a.input.find_first_not_of("01") != std::string::npos)
    throw std::invalid_argument("--input must be three bits, e.g. 100");
  const qf::BasisLabel label{a.input[0] - '0', a.input[1] - '0',
                             a.input[2] - '0'};

  qf::ProtocolFunction f;
  ojson params{{"gamma", qf::round_sig(p.gamma)}, {"n", p.n_gap},
               {"dt", qf::round_sig(p.dt)},       {"hbar", qf::round_sig(p.hbar)},
               {"protocol", a.protocol},          {"steps", a.steps},
               {"input", a.input}};
  if (a.protocol == "sin") {
    f = qf::ProtocolFunction::sinusoidal(a.amplitude, a.harmonic);
    params["amplitude"] = qf::round_sig(a.amplitude);
    params["harmonic"] = a.harmonic;
  } else if (a.protocol == "square") {
    f = qf::ProtocolFunction::square_pulse(a.duty);
    params["duty"] = qf::round_sig(a.duty);
  } else {
    f = qf::ProtocolFunction::constant();
  }

  const qf::EvolutionReport rep =
      qf::evolve(p, f, qf::basis_state(label), a.steps);
  const double tol = 1e-7;
  const bool pass = rep.residual_vs_target < tol;

  ojson amps = ojson::array();
  for (int r = 0; r < 8; ++r) {
    const qf::BasisLabel l = qf::basis_label(r);
    amps.push_back({{"basis", std::to_string(l.i_bit) + std::to_string(l.c_bit) +
                                  std::to_string(l.d_bit)},
                    {"re", qf::round_sig(rep.psi_final[r].real())},
                    {"im", qf::round_sig(rep.psi_final[r].imag())}});
  }
  ojson results{{"residual_vs_target", qf::round_sig(rep.residual_vs_target)},
                {"norm_drift", qf::round_sig(qf::norm_drift(rep))},
                {"amplitudes", amps}};
  emit(a.json, "evolve", params, results, tol, pass, [&] {
    std::cout << "residual_vs_target: " << fmt(rep.residual_vs_target) << "\n";
    std::cout << "norm_drift: " << fmt(qf::norm_drift(rep)) << "\n";
    std::cout << "final state (|ICD> amplitudes):\n";
    for (int r = 0; r < 8; ++r) {
      const qf::BasisLabel l = qf::basis_label(r);
      std::cout << "  |" << l.i_bit << l.c_bit << l.d_bit << ">  "
                << fmt_cxd(rep.psi_final[r]) << "\n";
    }
  });
  return pass;
}

// --- fanout-check ----------------------------------------------------------

struct FanoutCheckArgs {
  int trials = 1000;
  std::uint64_t seed = 0;
  double alpha = 0.0, beta = 0.0;
  int general = 0;
  bool degrees = false, json = false;
};

bool run_fanout_check(const FanoutCheckArgs& a) {
  const double alpha = a.degrees ? a.alpha * kDegToRad : a.alpha;
  const double beta = a.degrees ? a.beta * kDegToRad : a.beta;

  std::vector<qf::ComplexMatrix> members;
  members.push_back(qf::build_fanout_unitary({alpha, beta}));
  qf::SplitMix64 gen(a.seed ^ 0x517cc1b727220a95ULL);
  for (int g = 0; g < a.general; ++g)
    members.push_back(qf::build_general_fanout(qf::random_unitary(4, gen),
                                               qf::random_unitary(4, gen)));

  double max_leakage = 0.0;
  int min_matching_bits = 3;
  for (const qf::ComplexMatrix& u : members) {
    const qf::SubspaceCheckReport sub =
        qf::fanout_subspace_check(u, a.trials, a.seed);
    max_leakage = std::max(max_leakage, sub.max_leakage);
    for (int bit : {0, 1}) {
      const qf::DuplicationReport dup =
          qf::duplication_check(u, bit, a.trials, a.seed);
      min_matching_bits = std::min(min_matching_bits, dup.min_matching_bits);
    }
  }
  const double tol = 1e-10;
  const bool pass = max_leakage < tol && min_matching_bits >= 2;

  ojson params{{"alpha", qf::round_sig(alpha)},
               {"beta", qf::round_sig(beta)},
               {"trials", a.trials},
               {"seed", a.seed},
               {"general", a.general}};
  ojson results{{"unitaries_checked", members.size()},
                {"max_leakage", qf::round_sig(max_leakage)},
                {"min_matching_bits", min_matching_bits}};
  emit(a.json, "fanout-check", params, results, tol, pass, [&] {
    std::cout << "unitaries_checked: " << members.size() << "\n";
    std::cout << "max_leakage: " << fmt(max_leakage) << "\n";
    std::cout << "min_matching_bits: " << min_matching_bits << "\n";
  });
  return pass;
}

// --- noclone ---------------------------------------------------------------

struct NocloneArgs {
  double a = 1.0, b = 1.0;
  double alpha = 0.0, beta = 0.0;
  int trials = 1000;
  std::uint64_t seed = 0;
  bool degrees = false, json = false;
};

bool run_noclone(const NocloneArgs& args) {
  const double n = std::hypot(args.a, args.b);
  if (n == 0.0)
    throw std::invalid_argument("(a, b) must not both be zero");
  // Inputs are normalized so approximate flag values like 0.7071 work.
  const double a = args.a / n;
  const double b = args.b / n;
  const double alpha = args.degrees ? args.alpha * kDegToRad : args.alpha;
  const double beta = args.degrees ? args.beta * kDegToRad : args.beta;

  const qf::ComplexMatrix u = qf::build_fanout_unitary({alpha, beta});
  qf::SplitMix64 rng(args.seed);
  double max_fidelity = 0.0;
  for (int k = 0; k < args.trials; ++k) {
    const qf::CloneFidelities f =
        qf::clone_fidelity(u, a, b, qf::random_state(4, rng));
    max_fidelity = std::max(max_fidelity, f.max());
  }
  const qf::StateVector e1{1, 0, 0, 0}, e2{0, 1, 0, 0};
  const double defect_orthogonal = qf::strict_copy_defect(e1, e2);
  const double defect_identical = qf::strict_copy_defect(e1, e1);

  const double tol = 1e-6;
  const double bound = 1.0 - tol;
  const bool pass = max_fidelity < bound &&
                    std::abs(defect_orthogonal - 1.0) < 1e-15 &&
                    defect_identical < 1e-15;

  ojson params{{"a", qf::round_sig(a)},        {"b", qf::round_sig(b)},
               {"alpha", qf::round_sig(alpha)}, {"beta", qf::round_sig(beta)},
               {"trials", args.trials},        {"seed", args.seed}};
  ojson results{{"max_fidelity", qf::round_sig(max_fidelity)},
                {"fidelity_bound", qf::round_sig(bound)},
                {"strict_copy_defect_orthogonal", qf::round_sig(defect_orthogonal)},
                {"strict_copy_defect_identical", qf::round_sig(defect_identical)}};
  emit(args.json, "noclone", params, results, tol, pass, [&] {
    std::cout << "max_fidelity: " << fmt(max_fidelity) << "\n";
    std::cout << "fidelity_bound: " << fmt(bound) << "\n";
    std::cout << "strict_copy_defect_orthogonal: " << fmt(defect_orthogonal)
              << "\n";
    std::cout << "strict_copy_defect_identical: " << fmt(defect_identical)
              << "\n";
  });
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verification toolkit for blind three-qubit fanout: the copying "
      "unitary, its synthesized Hamiltonian, the Pauli expansion, gate "
      "circuits, and externally timed evolution.\n"
      "Seeded commands read the default seed from QFANOUT_SEED."};
  app.require_subcommand(1);

  UnitaryArgs ua;
  CLI::App* unitary = app.add_subcommand("unitary", "Print U(alpha, beta) and its unitarity residual");
  unitary->add_option("--alpha", ua.alpha, "phase alpha (radians)")->required();
  unitary->add_option("--beta", ua.beta, "phase beta (radians)")->required();
  unitary->add_flag("--degrees", ua.degrees, "interpret angles in degrees");
  unitary->add_flag("--json", ua.json, "emit the structured report");

  HamiltonianArgs ha;
  CLI::App* hamiltonian = app.add_subcommand("hamiltonian", "Synthesize H for (gamma, N) and verify exp(-iH dt/hbar) = U");
  hamiltonian->add_option("--gamma", ha.gamma, "phase gamma (radians)")->required();
  hamiltonian->add_option("--n", ha.n, "integer gap index N")->required();
  hamiltonian->add_option("--dt", ha.dt, "evolution window")->check(CLI::PositiveNumber);
  hamiltonian->add_option("--hbar", ha.hbar, "Planck constant")->check(CLI::PositiveNumber);
  hamiltonian->add_flag("--degrees", ha.degrees, "interpret gamma in degrees");
  hamiltonian->add_flag("--json", ha.json, "emit the structured report");

  PauliArgs pa;
  CLI::App* pauli = app.add_subcommand("pauli", "Expand H over the 64 Pauli strings and verify the 8-term form");
  pauli->add_option("--gamma", pa.gamma, "phase gamma (radians)")->required();
  pauli->add_option("--n", pa.n, "integer gap index N")->required();
  pauli->add_option("--dt", pa.dt, "evolution window")->check(CLI::PositiveNumber);
  pauli->add_option("--hbar", pa.hbar, "Planck constant")->check(CLI::PositiveNumber);
  pauli->add_flag("--all", pa.all, "emit all 64 coefficients");
  pauli->add_flag("--degrees", pa.degrees, "interpret gamma in degrees");
  pauli->add_flag("--json", pa.json, "emit the structured report");

  CircuitArgs ca;
  CLI::App* circuit = app.add_subcommand("circuit", "Find a shortest gate circuit equal to U(0,0) by breadth-first search");
  circuit->add_option("--alphabet", ca.alphabet, "gate alphabet")
      ->check(CLI::IsMember({"not+ccnot", "not+cnot+ccnot"}));
  circuit->add_option("--max-gates", ca.max_gates, "search depth limit")
      ->check(CLI::Range(1, 20));
  circuit->add_flag("--json", ca.json, "emit the structured report");

  VerifyCircuitArgs va;
  CLI::App* verify = app.add_subcommand("verify-circuit", "Check a circuit file against U(0,0)");
  verify->add_option("--file", va.file, "circuit file (JSON)")->required();
  verify->add_flag("--json", va.json, "emit the structured report");

  EvolveArgs ea;
  CLI::App* evolve = app.add_subcommand("evolve", "Integrate i hbar dpsi/dt = f(t) H psi over [0, dt] and compare with U psi0");
  evolve->add_option("--gamma", ea.gamma, "phase gamma (radians)")->required();
  evolve->add_option("--n", ea.n, "integer gap index N")->required();
  evolve->add_option("--dt", ea.dt, "evolution window")->check(CLI::PositiveNumber);
  evolve->add_option("--hbar", ea.hbar, "Planck constant")->check(CLI::PositiveNumber);
  evolve->add_option("--protocol", ea.protocol, "protocol function")
      ->check(CLI::IsMember({"const", "sin", "square"}));
  evolve->add_option("--steps", ea.steps, "RK4 step count")
      ->check(CLI::Range(100, 100000000));
  evolve->add_option("--input", ea.input, "initial basis state as bits I,C,D");
  evolve->add_option("--amplitude", ea.amplitude, "sinusoidal amplitude A");
  evolve->add_option("--harmonic", ea.harmonic, "sinusoidal harmonic k")
      ->check(CLI::PositiveNumber);
  evolve->add_option("--duty", ea.duty, "square-pulse duty in (0, 1]");
  evolve->add_flag("--degrees", ea.degrees, "interpret gamma in degrees");
  evolve->add_flag("--json", ea.json, "emit the structured report");

  FanoutCheckArgs fa;
  CLI::App* fanout_check = app.add_subcommand("fanout-check", "Random-state verification of the fanout subspace and duplication laws");
  fanout_check->add_option("--trials", fa.trials, "random target states")
      ->check(CLI::Range(1, 10000000));
  fanout_check->add_option("--seed", fa.seed, "random seed")
      ->envname("QFANOUT_SEED");
  fanout_check->add_option("--alpha", fa.alpha, "phase alpha (radians)");
  fanout_check->add_option("--beta", fa.beta, "phase beta (radians)");
  fanout_check->add_option("--general", fa.general,
                           "also check this many random general-family members");
  fanout_check->add_flag("--degrees", fa.degrees, "interpret angles in degrees");
  fanout_check->add_flag("--json", fa.json, "emit the structured report");

  NocloneArgs na;
  CLI::App* noclone = app.add_subcommand("noclone", "Show the fanout does not clone superpositions: per-qubit fidelities stay below 1");
  noclone->add_option("--a", na.a, "amplitude of |1> in the input qubit")->required();
  noclone->add_option("--b", na.b, "amplitude of |0> in the input qubit")->required();
  noclone->add_option("--alpha", na.alpha, "phase alpha (radians)");
  noclone->add_option("--beta", na.beta, "phase beta (radians)");
  noclone->add_option("--trials", na.trials, "random target states")
      ->check(CLI::Range(1, 10000000));
  noclone->add_option("--seed", na.seed, "random seed")->envname("QFANOUT_SEED");
  noclone->add_flag("--degrees", na.degrees, "interpret angles in degrees");
  noclone->add_flag("--json", na.json, "emit the structured report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    bool pass = false;
    if (unitary->parsed()) pass = run_unitary(ua);
    else if (hamiltonian->parsed()) pass = run_hamiltonian(ha);
    else if (pauli->parsed()) pass = run_pauli(pa);
    else if (circuit->parsed()) pass = run_circuit(ca);
    else if (verify->parsed()) pass = run_verify_circuit(va);
    else if (evolve->parsed()) pass = run_evolve(ea);
    else if (fanout_check->parsed()) pass = run_fanout_check(fa);
    else if (noclone->parsed()) pass = run_noclone(na);
    return pass ? 0 : 1;
  } catch (const qf::json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
