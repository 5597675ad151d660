// graphcord command-line tool: enumeration, state construction, concurrence,
// classification, LC orbit analysis, self-verification, and table export for
// graph states on up to six qubits.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphcord/concurrence.hpp"
#include "graphcord/graph.hpp"
#include "graphcord/lc.hpp"
#include "graphcord/report.hpp"
#include "graphcord/state.hpp"
#include "graphcord/verify.hpp"

namespace {

using namespace graphcord;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

void emit(const std::string& data, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::runtime_error("cannot open output file '" + output_path + "'");
  out << data;
}

int run_enumerate(int n, const std::string& format, const std::string& output_path) {
  const auto graphs = enumerate_labeled_graphs(n);
  const auto iso = isomorphism_classes(n);
  if (format == "json") {
    nlohmann::json codes = nlohmann::json::array();
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& g : graphs) codes.push_back(g.code());
    for (const auto& c : iso.classes) reps.push_back(c.representative.code());
    const nlohmann::json out = {{"n", n},
                                {"labeled_count", graphs.size()},
                                {"codes", codes},
                                {"non_isomorphic_count", iso.classes.size()},
                                {"representative_codes", reps}};
    emit(out.dump(2) + "\n", output_path);
  } else {
    std::ostringstream os;
    for (const auto& g : graphs) os << g.code() << ' ' << g.to_text() << '\n';
    os << "labeled=" << graphs.size() << " non_isomorphic=" << iso.classes.size() << '\n';
    emit(os.str(), output_path);
  }
  return kExitOk;
}

int run_state(const std::string& graph_text, int lc_vertex, const std::string& format,
              const std::string& output_path) {
  const Graph g = Graph::parse(graph_text);
  if (lc_vertex == 0) {
    const GraphState s = build_state_phase(g);
    if (format == "json") {
      nlohmann::json signs = nlohmann::json::array();
      for (std::size_t b = 0; b < s.dimension(); ++b) signs.push_back(s.sign(b));
      emit(nlohmann::json{{"n", s.qubit_count()}, {"kind", "graph_state"}, {"signs", signs}}
               .dump(2) +
           "\n",
           output_path);
    } else {
      emit(graph_state_dump(s), output_path);
    }
    return kExitOk;
  }

  if (lc_vertex < 1 || lc_vertex > g.vertex_count()) {
    throw std::domain_error("state: --lc vertex out of range");
  }
  const DenseState s = lc_unitary_apply(g, lc_vertex - 1);
  if (format == "json") {
    nlohmann::json amps = nlohmann::json::array();
    for (std::size_t b = 0; b < s.dimension(); ++b) {
      amps.push_back({s.amplitude(b).real(), s.amplitude(b).imag()});
    }
    emit(nlohmann::json{{"n", s.qubit_count()}, {"kind", "dense_state"}, {"amplitudes", amps}}
             .dump(2) +
         "\n",
         output_path);
  } else {
    emit(dense_state_dump(s), output_path);
  }
  return kExitOk;
}

int run_concurrence(const std::string& graph_text, const std::string& format,
                    const std::string& output_path) {
  const Graph g = Graph::parse(graph_text);
  const ConcurrenceValue c = generalized_concurrence(build_state_phase(g));
  if (format == "json") {
    const nlohmann::json out = {{"graph", g.to_text()},
                                {"n", c.n},
                                {"radicand_num", c.radicand.numerator()},
                                {"radicand_den", c.radicand.denominator()},
                                {"concurrence", std::stod(format_concurrence(c.value))}};
    emit(out.dump(2) + "\n", output_path);
  } else {
    std::ostringstream os;
    os << "graph=" << g.to_text() << " radicand=" << c.radicand.to_string()
       << " concurrence=" << format_concurrence(c.value) << '\n';
    emit(os.str(), output_path);
  }
  return kExitOk;
}

int run_classify(int n, const std::string& format, const std::string& output_path) {
  const auto classification = classify_by_concurrence(n);
  if (classification.beyond_validated_range) {
    std::cerr << "note: n=" << n << " output is beyond the validated n<=5 range\n";
  }
  if (format == "csv") {
    emit(classification_csv(classification_rows(classification)), output_path);
  } else if (format == "json") {
    emit(classification_json(classification_rows(classification)), output_path);
  } else {
    emit(classification_text(classification), output_path);
  }
  return kExitOk;
}

int run_orbits(int n, bool quotient, const std::string& format,
               const std::string& output_path) {
  const auto report = lc_orbits(n, quotient);
  if (n == 6) std::cerr << "note: n=6 output is beyond the validated n<=5 range\n";
  if (format == "csv") {
    emit(orbit_csv(orbit_rows(report)), output_path);
  } else if (format == "json") {
    emit(orbit_json(orbit_rows(report)), output_path);
  } else {
    emit(orbit_text(report), output_path);
  }
  return kExitOk;
}

int run_verify(int n) {
  const auto results = run_verification(n);
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
  }
  return all_passed(results) ? kExitOk : kExitVerifyFailed;
}

int run_export(const std::vector<int>& ns, const std::string& format,
               const std::string& output_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(output_dir);
  const std::string ext = format == "json" ? ".json" : ".csv";
  for (int n : ns) {
    const auto classification = classify_by_concurrence(n);
    const auto orbits = lc_orbits(n, true);
    const auto class_path = fs::path(output_dir) / ("classification_n" + std::to_string(n) + ext);
    const auto orbit_path = fs::path(output_dir) / ("orbits_n" + std::to_string(n) + ext);
    if (format == "json") {
      emit(classification_json(classification_rows(classification)), class_path.string());
      emit(orbit_json(orbit_rows(orbits)), orbit_path.string());
    } else {
      emit(classification_csv(classification_rows(classification)), class_path.string());
      emit(orbit_csv(orbit_rows(orbits)), orbit_path.string());
    }
    std::cout << "wrote " << class_path.string() << '\n';
    std::cout << "wrote " << orbit_path.string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph states, generalized concurrence, and LC classification (n <= 6)"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output_path;
  std::string graph_text;
  int n = 0;
  int lc_vertex = 0;
  bool quotient = false;
  std::vector<int> export_ns;
  std::string export_dir;

  auto* enumerate = app.add_subcommand("enumerate", "list all labeled graphs on n vertices");
  enumerate->add_option("-n", n, "vertex count")->required()->check(CLI::Range(1, 6));
  enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  enumerate->add_option("-o,--output", output_path, "write to file instead of stdout");

  auto* state = app.add_subcommand("state", "print the state vector of a graph");
  state->add_option("-g", graph_text, "graph text, e.g. \"n=3;edges=1-3\"")->required();
  state->add_option("--lc", lc_vertex,
                    "apply the LC unitary at this vertex (1-based) and print the dense state");
  state->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  state->add_option("-o,--output", output_path);

  auto* concurrence = app.add_subcommand("concurrence", "generalized concurrence of one graph");
  concurrence->add_option("-g", graph_text)->required();
  concurrence->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  concurrence->add_option("-o,--output", output_path);

  auto* classify = app.add_subcommand("classify", "partition all graphs by exact concurrence");
  classify->add_option("-n", n)->required()->check(CLI::Range(3, 6));
  classify->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
  classify->add_option("-o,--output", output_path);

  auto* orbits = app.add_subcommand("orbits", "partition all graphs into LC orbits");
  orbits->add_option("-n", n)->required()->check(CLI::Range(3, 6));
  orbits->add_flag("--quotient", quotient, "additionally close orbits under vertex permutations");
  orbits->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
  orbits->add_option("-o,--output", output_path);

  auto* verify = app.add_subcommand("verify", "run the self-check suites");
  verify->add_option("-n", n)->required()->check(CLI::Range(3, 6));

  auto* exporter = app.add_subcommand("export", "write classification and orbit tables");
  exporter->add_option("-n", export_ns, "vertex count (repeatable)")
      ->required()
      ->check(CLI::Range(3, 6));
  exporter->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  exporter->add_option("-o,--output", export_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return run_enumerate(n, format, output_path);
    if (*state) return run_state(graph_text, lc_vertex, format, output_path);
    if (*concurrence) return run_concurrence(graph_text, format, output_path);
    if (*classify) return run_classify(n, format, output_path);
    if (*orbits) return run_orbits(n, quotient, format, output_path);
    if (*verify) return run_verify(n);
    if (*exporter) return run_export(export_ns, format == "json" ? "json" : "csv", export_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
