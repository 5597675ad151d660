// Acceptance suite: drives every reference claim end to end and prints one
// pass/fail line per criterion. Exhaustive wherever the claim is exhaustive;
// sampled checks use fixed seeds so the gate stays deterministic.
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphcord/concurrence.hpp"
#include "graphcord/graph.hpp"
#include "graphcord/lc.hpp"
#include "graphcord/report.hpp"
#include "graphcord/state.hpp"

namespace {

using namespace graphcord;

struct Criterion {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<Criterion> g_results;

void record(int id, const std::string& name, bool passed, const std::string& detail = "") {
  g_results.push_back({id, name, passed, detail});
}

std::uint32_t code_limit(int n) { return 1u << Graph::pair_count(n); }

void criterion_1_enumeration_counts() {
  const std::size_t c3 = enumerate_labeled_graphs(3).size();
  const std::size_t c4 = enumerate_labeled_graphs(4).size();
  const std::size_t c5 = enumerate_labeled_graphs(5).size();
  std::ostringstream detail;
  detail << "got " << c3 << "/" << c4 << "/" << c5;
  record(1, "labeled graph counts are 8/64/1024", c3 == 8 && c4 == 64 && c5 == 1024,
         detail.str());
}

void criterion_2_isomorphism_counts() {
  const std::size_t c3 = isomorphism_classes(3).classes.size();
  const std::size_t c4 = isomorphism_classes(4).classes.size();
  const std::size_t c5 = isomorphism_classes(5).classes.size();
  std::ostringstream detail;
  detail << "got " << c3 << "/" << c4 << "/" << c5;
  record(2, "non-isomorphic representatives are 4/11/34", c3 == 4 && c4 == 11 && c5 == 34,
         detail.str());
}

void criterion_3_concurrence_class_counts() {
  const std::size_t c3 = classify_by_concurrence(3).classes.size();
  const std::size_t c4 = classify_by_concurrence(4).classes.size();
  const std::size_t c5 = classify_by_concurrence(5).classes.size();
  std::ostringstream detail;
  detail << "got " << c3 << "/" << c4 << "/" << c5 << " (exact radicand keys)";
  record(3, "concurrence class counts are 3/5/10", c3 == 3 && c4 == 5 && c5 == 10, detail.str());
}

bool table_matches(int n, const std::vector<std::string>& expected_values,
                   const std::vector<std::size_t>& expected_rep_sizes, std::string* detail) {
  const auto classification = classify_by_concurrence(n);
  std::vector<std::string> values;
  std::vector<std::size_t> rep_sizes;
  for (const auto& cls : classification.classes) {
    values.push_back(format_concurrence(cls.value.value));
    rep_sizes.push_back(cls.representative_codes.size());
  }
  std::ostringstream os;
  os << "n=" << n << " values {";
  for (const auto& v : values) os << v << ' ';
  os << "} rep sizes {";
  for (auto s : rep_sizes) os << s << ' ';
  os << "}";
  *detail += (detail->empty() ? "" : "; ") + os.str();
  const bool values_ok = expected_values.empty() || values == expected_values;
  return values_ok && rep_sizes == expected_rep_sizes;
}

void criterion_4_table_values() {
  std::string detail;
  const bool ok5 = table_matches(
      5,
      {"0.0000", "1.0000", "1.2247", "1.3229", "1.3693", "1.4142", "1.4577", "1.5000", "1.5411",
       "1.5811"},
      {1, 1, 2, 3, 2, 4, 2, 6, 10, 3}, &detail);
  const bool ok4 = table_matches(4, {"0.0000", "1.0000", "1.2247", "1.3229", "1.4142"},
                                 {1, 1, 2, 3, 4}, &detail);
  const bool ok3 = table_matches(3, {}, {1, 1, 2}, &detail);
  record(4, "reference value table reproduced to 4 decimals with class sizes", ok5 && ok4 && ok3,
         detail);
}

void criterion_5_worked_example() {
  const Graph g2 = Graph::parse("n=3;edges=1-3");
  const GraphState s = build_state_phase(g2);

  const std::vector<std::int8_t> expected_signs{1, 1, 1, 1, 1, -1, 1, -1};
  bool ok = s.signs() == expected_signs;

  const auto rho2 = reduced_density_matrix(s, std::vector<int>{1});
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      ok = ok && rho2.entry(x, y) == Dyadic::ratio(1, 1);
    }
  }
  const auto rho1 = reduced_density_matrix(s, std::vector<int>{0});
  const auto rho3 = reduced_density_matrix(s, std::vector<int>{2});
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      const Dyadic expected = x == y ? Dyadic::ratio(1, 1) : Dyadic(0);
      ok = ok && rho1.entry(x, y) == expected && rho3.entry(x, y) == expected;
    }
  }

  const auto spectrum = purity_spectrum(s);
  ok = ok && spectrum.total() == Dyadic(4);

  const ConcurrenceValue c = generalized_concurrence(s);
  ok = ok && c.radicand == Dyadic(2) && std::abs(c.value - 1.0) < 1e-12;

  record(5, "single-edge worked example: signs, reduced matrices, sum 4, C == 1", ok,
         "radicand " + c.radicand.to_string());
}

void criterion_6_dual_construction() {
  bool ok = true;
  std::size_t checked = 0;
  for (int n = 3; n <= 6 && ok; ++n) {
    for (std::uint32_t code = 0; code < code_limit(n) && ok; ++code) {
      const Graph g(n, code);
      ok = build_state_phase(g) == build_state_cz(g);
      ++checked;
    }
  }
  record(6, "phase and CZ constructions are bit-identical for every graph, n=3..6", ok,
         std::to_string(checked) + " graphs");
}

void criterion_7_complement_purity() {
  bool ok = true;
  std::size_t checked = 0;
  for (int n = 3; n <= 5 && ok; ++n) {
    for (std::uint32_t code = 0; code < code_limit(n) && ok; ++code) {
      ok = verify_complement_relations(build_state_phase(Graph(n, code)));
      ++checked;
    }
  }
  record(7, "purity(subset) == purity(complement) exactly, exhaustive n=3..5", ok,
         std::to_string(checked) + " graphs, every nonempty proper subset");
}

bool lc_pair_consistent(const Graph& g, int a) {
  return states_equal_up_to_global_phase(
      lc_unitary_apply(g, a),
      DenseState::from_graph_state(build_state_phase(local_complement(g, a))), 1e-10);
}

void criterion_8_lc_unitary() {
  bool ok = true;
  std::size_t checked = 0;
  for (int n = 3; n <= 4 && ok; ++n) {
    for (std::uint32_t code = 0; code < code_limit(n) && ok; ++code) {
      for (int a = 0; a < n && ok; ++a) {
        ok = lc_pair_consistent(Graph(n, code), a);
        ++checked;
      }
    }
  }
  std::mt19937_64 rng(0x6772636f);
  std::uniform_int_distribution<std::uint32_t> code_dist(0, code_limit(5) - 1);
  std::uniform_int_distribution<int> vertex_dist(0, 4);
  for (int trial = 0; trial < 200 && ok; ++trial) {
    ok = lc_pair_consistent(Graph(5, code_dist(rng)), vertex_dist(rng));
    ++checked;
  }
  record(8, "LC unitary equals the graph rewrite up to phase (1e-10)", ok,
         std::to_string(checked) + " pairs: exhaustive n=3,4 plus 200 sampled at n=5");
}

void criterion_9_lc_class_counts() {
  const std::size_t c3 = lc_orbits(3, true).classes.size();
  const std::size_t c4 = lc_orbits(4, true).classes.size();
  const std::size_t c5 = lc_orbits(5, true).classes.size();
  const bool ok = c3 == 3 && c4 == 6 && c5 == 11;
  std::ostringstream detail;
  detail << "got " << c3 << "/" << c4 << "/" << c5;
  if (!ok) {
    detail << " FLAGGED: differs from the reference 3/6/11 (all graphs incl. disconnected)";
  }
  record(9, "LC classes with isomorphism quotient are 3/6/11", ok, detail.str());
}

void criterion_10_refinement() {
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= 5; ++n) {
    const RefinementTable table = refinement_check(n);  // throws if an orbit splits
    for (const auto& cls : table.orbits.classes) {
      for (std::uint32_t code : cls.members) {
        ok = ok && generalized_concurrence(build_state_phase(Graph(n, code))).radicand ==
                       cls.concurrence.radicand;
      }
    }
    std::size_t merged_values = 0;
    std::string merged_at;
    for (std::size_t c = 0; c < table.concurrence_to_lc.size(); ++c) {
      if (table.concurrence_to_lc[c].size() > 1) {
        ++merged_values;
        merged_at = format_concurrence(table.classification.classes[c].value.value) + " (" +
                    std::to_string(table.concurrence_to_lc[c].size()) + " LC classes)";
      }
    }
    if (n == 3) ok = ok && merged_values == 0;
    if (n == 4 || n == 5) ok = ok && merged_values == 1;
    detail += (detail.empty() ? "" : "; ") + ("n=" + std::to_string(n)) + ": " +
              (merged_values == 0 ? "one-to-one" : "merge at " + merged_at);
  }
  record(10, "each LC orbit has one radicand; the n=4 and n=5 merges are single and localized",
         ok, detail);
}

void criterion_11_involution() {
  std::mt19937_64 rng(0x6772636f);
  bool ok = true;
  std::size_t checked = 0;
  for (int n = 3; n <= 6; ++n) {
    std::uniform_int_distribution<std::uint32_t> code_dist(0, code_limit(n) - 1);
    std::uniform_int_distribution<int> vertex_dist(0, n - 1);
    for (int trial = 0; trial < 250 && ok; ++trial) {
      const Graph g(n, code_dist(rng));
      const int a = vertex_dist(rng);
      ok = local_complement(local_complement(g, a), a) == g;
      ++checked;
    }
  }
  record(11, "local complementation is an involution", ok,
         std::to_string(checked) + " random (graph, vertex) pairs across n=3..6");
}

}  // namespace

int main() {
  criterion_1_enumeration_counts();
  criterion_2_isomorphism_counts();
  criterion_3_concurrence_class_counts();
  criterion_4_table_values();
  criterion_5_worked_example();
  criterion_6_dual_construction();
  criterion_7_complement_purity();
  criterion_8_lc_unitary();
  criterion_9_lc_class_counts();
  criterion_10_refinement();
  criterion_11_involution();

  int failures = 0;
  for (const auto& c : g_results) {
    std::printf("[%s] criterion %2d: %s%s%s\n", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
    failures += !c.passed;
  }
  std::printf("%zu/%zu criteria passed\n", g_results.size() - failures, g_results.size());
  return failures == 0 ? 0 : 1;
}
