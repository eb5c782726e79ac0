// Copyright 2026 The qlab authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qlab command-line driver.  Every subcommand prints one JSON document to
// stdout (top-level "schema": 1) and a short human summary to stderr.
// Exit codes: 0 ok, 2 circuit parse error, 3 resource cap, 4 uncorrectable
// syndrome, 1 anything else.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlab/algorithms.hpp"
#include "qlab/bloch.hpp"
#include "qlab/css.hpp"
#include "qlab/dsl.hpp"
#include "qlab/errors.hpp"
#include "qlab/report.hpp"

namespace {

using nlohmann::json;
using qlab::Complex;

// Accepts "1", "-0.5", "2i", "-i", "1+2i", "0.6-0.8j", "1e-3+2e-4i".
Complex parse_complex(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw qlab::DimensionError("empty complex literal");

  auto to_double = [&](std::string part, bool imag_unit_ok) -> double {
    if (imag_unit_ok && (part.empty() || part == "+")) return 1.0;
    if (imag_unit_ok && part == "-") return -1.0;
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(part, &used);
    } catch (const std::exception&) {
      throw qlab::DimensionError("cannot parse complex literal '" + raw + "'");
    }
    if (used != part.size())
      throw qlab::DimensionError("cannot parse complex literal '" + raw + "'");
    return value;
  };

  // Split at the last +/- that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E')
      split = i;
  }
  char tail = text.back();
  bool imaginary_tail = (tail == 'i' || tail == 'j');
  if (split != std::string::npos && imaginary_tail) {
    double re = to_double(text.substr(0, split), false);
    double im = to_double(text.substr(split, text.size() - split - 1), true);
    return {re, im};
  }
  if (imaginary_tail) return {0.0, to_double(text.substr(0, text.size() - 1), true)};
  if (split != std::string::npos)
    throw qlab::DimensionError("cannot parse complex literal '" + raw + "'");
  return {to_double(text, false), 0.0};
}

// "a,b" -> normalized spinor (a, b).
std::pair<Complex, Complex> parse_spinor(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw qlab::DimensionError("state needs two comma-separated amplitudes, e.g. \"0.6,0.8i\"");
  Complex a = parse_complex(text.substr(0, comma));
  Complex b = parse_complex(text.substr(comma + 1));
  double norm = std::sqrt(std::norm(a) + std::norm(b));
  if (norm < 1e-12) throw qlab::NumericError("state amplitudes are numerically zero");
  return {a / norm, b / norm};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Sparse amplitude map; keys absent from "amplitudes" are exactly zero.
json state_json(const qlab::StateVector& state) {
  json amps = json::object();
  for (std::uint64_t i = 0; i < state.size(); ++i) {
    Complex a = state.amp(i);
    if (a.real() == 0.0 && a.imag() == 0.0) continue;
    amps[qlab::F2Vector::from_index(state.num_qubits(), i).str()] = qlab::format_amplitude(a);
  }
  return json{{"num_qubits", state.num_qubits()}, {"amplitudes", std::move(amps)}};
}

json syndrome_json(const qlab::F2Vector& s) {
  json out = json::array();
  for (int r = 1; r <= s.length(); ++r) out.push_back(s.get(r) ? 1 : 0);
  return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void cmd_run(const std::string& file, int shots, std::uint64_t seed, bool dump_state) {
  qlab::Circuit circuit = qlab::parse_circuit(read_file(file));
  qlab::RunReport report = qlab::run(circuit, shots, seed, {dump_state});
  json doc{{"schema", 1},
           {"command", "run"},
           {"file", file},
           {"num_qubits", report.num_qubits},
           {"shots", report.shots},
           {"seed", report.seed},
           {"outcomes", report.outcomes},
           {"counts", report.counts},
           {"frequencies", report.frequencies}};
  if (report.final_state) doc["state"] = state_json(*report.final_state);
  emit(doc);
  std::cerr << file << ": " << report.shots << " shot(s) on " << report.num_qubits
            << " qubit(s), " << report.counts.size() << " distinct outcome(s)\n";
  for (const auto& [bits, count] : report.counts)
    std::cerr << "  " << (bits.empty() ? "(no measurement)" : bits) << "  " << count << "  "
              << report.frequencies.at(bits) << "\n";
}

void cmd_correlations(const std::string& table, std::optional<int> n) {
  qlab::BooleanFunction f = qlab::BooleanFunction::from_text_auto(table, n);
  qlab::CorrelationSpectrum classical = qlab::correlation_spectrum_classical(f);
  qlab::StateVector quantum = qlab::qdft_state(f);
  json spectrum = json::array();
  double max_diff = 0, max_imag = 0, parseval = 0;
  for (std::uint64_t w = 0; w < (1ULL << f.arity()); ++w) {
    Complex amp = quantum.amp((w << 1) | 1);
    double c = classical.c[w];
    max_diff = std::max(max_diff, std::abs(amp - Complex(c, 0)));
    max_imag = std::max(max_imag, std::abs(amp.imag()));
    parseval += c * c;
    spectrum.push_back(json{{"w", qlab::F2Vector::from_index(f.arity(), w).str()},
                            {"classical", c},
                            {"quantum", amp.real()}});
  }
  emit(json{{"schema", 1},
            {"command", "correlations"},
            {"n", f.arity()},
            {"table", f.to_text()},
            {"spectrum", spectrum},
            {"max_abs_diff", max_diff},
            {"max_quantum_imag", max_imag},
            {"parseval_sum", parseval}});
  std::cerr << "n=" << f.arity() << " table=" << f.to_text()
            << ": max |quantum - classical| = " << max_diff << ", sum c^2 = " << parseval << "\n";
}

void cmd_dj(const std::string& table, std::optional<int> n, std::uint64_t seed) {
  qlab::BooleanFunction f = qlab::BooleanFunction::from_text_auto(table, n);
  qlab::Rng rng(seed);
  qlab::DeutschJozsaResult result = qlab::deutsch_jozsa(f, rng);
  emit(json{{"schema", 1},
            {"command", "dj"},
            {"n", f.arity()},
            {"table", f.to_text()},
            {"w", result.w.str()},
            {"verdict", result.constant ? "constant" : "balanced"},
            {"output_bit", result.output_bit ? 1 : 0},
            {"seed", seed}});
  std::cerr << "f is " << (result.constant ? "constant" : "balanced") << " (w = " << result.w.str()
            << ")\n";
}

void cmd_steane_demo(const std::string& error, const std::string& alpha, const std::string& beta,
                     std::uint64_t seed) {
  qlab::CssCode code = qlab::steane_code();
  Complex a = parse_complex(alpha), b = parse_complex(beta);
  qlab::StateVector ideal = qlab::encode(code, a, b);
  qlab::StateVector state = ideal;
  qlab::PauliOperator injected = qlab::PauliOperator::parse(error, code.n());
  qlab::apply_pauli(state, injected);
  qlab::Rng rng(seed);
  qlab::EcReport report = qlab::ec_round(state, code, rng);
  if (!report.corrected) {
    std::string x = report.syndromes.x_syndrome.str(), z = report.syndromes.z_syndrome.str();
    throw qlab::UncorrectableSyndromeError("syndrome x=" + x + " z=" + z +
                                           " matches no error of weight <= 1");
  }
  double fid = qlab::fidelity(state, ideal);
  emit(json{{"schema", 1},
            {"command", "steane demo"},
            {"error", injected.compact_str()},
            {"alpha", qlab::format_amplitude(a)},
            {"beta", qlab::format_amplitude(b)},
            {"seed", seed},
            {"x_syndrome", syndrome_json(report.syndromes.x_syndrome)},
            {"z_syndrome", syndrome_json(report.syndromes.z_syndrome)},
            {"correction", report.correction->compact_str()},
            {"fidelity", fid}});
  std::cerr << "injected " << injected.compact_str() << ", corrected with "
            << report.correction->compact_str() << ", fidelity " << fid << "\n";
}

void cmd_steane_encode(const std::string& alpha, const std::string& beta, bool dump_state) {
  qlab::CssCode code = qlab::steane_code();
  Complex a = parse_complex(alpha), b = parse_complex(beta);
  qlab::StateVector state = qlab::encode(code, a, b);
  bool fixed = true;
  auto check = [&](const qlab::PauliOperator& g) {
    Complex ev = qlab::inner_product(state, qlab::pauli_applied(state, g));
    if (std::abs(ev - Complex(1, 0)) > 1e-10) fixed = false;
  };
  for (const auto& g : code.x_stabilisers()) check(g);
  for (const auto& g : code.z_stabilisers()) check(g);
  int support = 0;
  for (std::uint64_t i = 0; i < state.size(); ++i)
    if (std::abs(state.amp(i)) > 0) ++support;
  json doc{{"schema", 1},
           {"command", "steane encode"},
           {"alpha", qlab::format_amplitude(a)},
           {"beta", qlab::format_amplitude(b)},
           {"num_qubits", code.n()},
           {"support_size", support},
           {"stabilisers_fixed", fixed}};
  if (dump_state) doc["state"] = state_json(state);
  emit(doc);
  std::cerr << "encoded on " << code.n() << " qubits, " << support
            << " basis states in support, stabilisers " << (fixed ? "fixed" : "NOT fixed") << "\n";
}

void cmd_propagate(const std::string& file, const std::vector<std::string>& extra_faults) {
  qlab::Circuit circuit = qlab::parse_circuit(read_file(file));
  const int n = circuit.num_qubits;

  auto label_position = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < circuit.steps.size(); ++i)
      if (const auto* l = std::get_if<qlab::LabelStep>(&circuit.steps[i]))
        if (l->name == name) return i;
    throw qlab::DimensionError("label '" + name + "' not found in " + file);
  };

  struct Job {
    qlab::PauliOperator fault;
    std::string label;
    std::size_t from_step;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < circuit.steps.size(); ++i) {
    if (const auto* fs = std::get_if<qlab::FaultStep>(&circuit.steps[i])) {
      std::size_t from = fs->label.empty() ? i + 1 : label_position(fs->label) + 1;
      jobs.push_back({fs->fault, fs->label, from});
    }
  }
  for (const std::string& text : extra_faults) {
    std::size_t at = text.find('@');
    if (at == std::string::npos || at == 0 || at + 1 == text.size())
      throw qlab::DimensionError("--fault expects <pauli>@<label>, e.g. Z8@mark, got '" + text +
                                 "'");
    std::string label = text.substr(at + 1);
    jobs.push_back({qlab::PauliOperator::parse(text.substr(0, at), n), label,
                    label_position(label) + 1});
  }

  json results = json::array();
  for (const Job& job : jobs) {
    qlab::PauliOperator out = qlab::propagate(job.fault, circuit, job.from_step);
    results.push_back(json{{"pauli", job.fault.compact_str()},
                           {"label", job.label.empty() ? json() : json(job.label)},
                           {"from_step", job.from_step},
                           {"result", out.compact_str()},
                           {"result_mask", out.mask_str()}});
    std::cerr << job.fault.compact_str()
              << (job.label.empty() ? "" : " @" + job.label) << "  ->  " << out.compact_str()
              << "\n";
  }
  if (jobs.empty()) std::cerr << file << ": no faults to propagate\n";
  emit(json{{"schema", 1},
            {"command", "propagate"},
            {"file", file},
            {"num_qubits", n},
            {"faults", results}});
}

void cmd_bloch(const std::string& state) {
  auto [a, b] = parse_spinor(state);
  qlab::BlochPoint p = qlab::bloch_point(a, b);
  emit(json{{"schema", 1},
            {"command", "bloch"},
            {"alpha", qlab::format_amplitude(a)},
            {"beta", qlab::format_amplitude(b)},
            {"z", p.z},
            {"x", p.x},
            {"y", p.y}});
  std::cerr << "(z, x, y) = (" << p.z << ", " << p.x << ", " << p.y << ")\n";
}

void cmd_superdense(const std::string& bits, std::uint64_t seed) {
  if (bits.size() != 2 || (bits[0] != '0' && bits[0] != '1') || (bits[1] != '0' && bits[1] != '1'))
    throw qlab::DimensionError("--bits expects two binary digits, e.g. 10");
  qlab::Rng rng(seed);
  qlab::SuperdenseResult r = qlab::superdense(bits[0] - '0', bits[1] - '0', rng);
  std::string received = {static_cast<char>('0' + r.received_b1),
                          static_cast<char>('0' + r.received_b2)};
  emit(json{{"schema", 1},
            {"command", "superdense"},
            {"sent", bits},
            {"received", received},
            {"ok", received == bits},
            {"seed", seed}});
  std::cerr << "sent " << bits << ", received " << received << "\n";
}

void cmd_teleport(const std::string& state, std::uint64_t seed) {
  auto [a, b] = parse_spinor(state);
  qlab::StateVector psi = qlab::StateVector::from_amplitudes(1, {a, b});
  qlab::Rng rng(seed);
  qlab::TeleportResult r = qlab::teleport(psi, rng);
  qlab::StateVector fixed = qlab::pauli_applied(r.receiver, r.correction);
  double fid = qlab::fidelity(fixed, psi);
  emit(json{{"schema", 1},
            {"command", "teleport"},
            {"alpha", qlab::format_amplitude(a)},
            {"beta", qlab::format_amplitude(b)},
            {"seed", seed},
            {"outcome", r.outcome},
            {"correction", r.correction.compact_str()},
            {"receiver_before", state_json(r.receiver)},
            {"receiver_after", state_json(fixed)},
            {"fidelity_after_correction", fid}});
  std::cerr << "Bell outcome " << r.outcome << ", correction " << r.correction.compact_str()
            << ", fidelity " << fid << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlab: dense quantum-circuit simulation, Pauli fault tracking and CSS code error correction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qlab 0.1.0");

  std::string file, table, error = "X2,Z5", alpha = "1", beta = "0", state_text, bits;
  std::vector<std::string> fault_args;
  int shots = 1;
  std::uint64_t seed = 0;
  bool dump_state = false;
  std::optional<int> arity;

  auto* run = app.add_subcommand("run", "Parse a circuit file and sample measurement shots");
  run->add_option("file", file, "circuit source")->required();
  run->add_option("--shots", shots, "number of shots")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "RNG seed; shot k uses the derived stream k");
  run->add_flag("--dump-state", dump_state, "include the last shot's final state");
  run->callback([&] { cmd_run(file, shots, seed, dump_state); });

  auto* correlations =
      app.add_subcommand("correlations", "Correlation spectrum of a Boolean function, quantum vs classical");
  correlations->add_option("--table", table, "truth table, hex or a 2^n bit string")->required();
  correlations->add_option("--n", arity, "number of inputs (inferred when omitted)");
  correlations->callback([&] { cmd_correlations(table, arity); });

  auto* dj = app.add_subcommand("dj", "One-query constant-vs-balanced decision");
  dj->add_option("--table", table, "truth table, hex or a 2^n bit string")->required();
  dj->add_option("--n", arity, "number of inputs (inferred when omitted)");
  dj->add_option("--seed", seed, "RNG seed");
  dj->callback([&] { cmd_dj(table, arity, seed); });

  auto* steane = app.add_subcommand("steane", "Seven-qubit code demos");
  steane->require_subcommand(1);
  auto* demo = steane->add_subcommand("demo", "Encode, inject an error, run one correction round");
  demo->add_option("--error", error, "Pauli error to inject, e.g. X2,Z5");
  demo->add_option("--alpha", alpha, "logical amplitude of |0>");
  demo->add_option("--beta", beta, "logical amplitude of |1>");
  demo->add_option("--seed", seed, "RNG seed");
  demo->callback([&] { cmd_steane_demo(error, alpha, beta, seed); });
  auto* enc = steane->add_subcommand("encode", "Encode a logical qubit and check the stabilisers");
  enc->add_option("--alpha", alpha, "logical amplitude of |0>");
  enc->add_option("--beta", beta, "logical amplitude of |1>");
  enc->add_flag("--dump-state", dump_state, "include the exact encoded amplitudes");
  enc->callback([&] { cmd_steane_encode(alpha, beta, dump_state); });

  auto* propagate = app.add_subcommand("propagate", "Push circuit faults to the end of the circuit");
  propagate->add_option("file", file, "circuit source")->required();
  propagate
      ->add_option("--fault", fault_args,
                   "extra fault <pauli>@<label>, e.g. Z8@mark (repeatable)")
      ->take_all();
  propagate->callback([&] { cmd_propagate(file, fault_args); });

  auto* bloch = app.add_subcommand("bloch", "Sphere point of a one-qubit state");
  bloch->add_option("--state", state_text, "amplitudes \"a,b\", e.g. \"0.6,0.8i\"")->required();
  bloch->callback([&] { cmd_bloch(state_text); });

  auto* superdense = app.add_subcommand("superdense", "Two classical bits through one entangled pair");
  superdense->add_option("--bits", bits, "bit pair to send, e.g. 10")->required();
  superdense->add_option("--seed", seed, "RNG seed");
  superdense->callback([&] { cmd_superdense(bits, seed); });

  auto* teleport = app.add_subcommand("teleport", "Teleport a one-qubit state over a Bell pair");
  teleport->add_option("--state", state_text, "amplitudes \"a,b\"")->required();
  teleport->add_option("--seed", seed, "RNG seed");
  teleport->callback([&] { cmd_teleport(state_text, seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const qlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qlab::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qlab::UncorrectableSyndromeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
