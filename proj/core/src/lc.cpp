#include "graphcord/lc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

#include "graphcord/parallel.hpp"

namespace graphcord {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

Matrix2 exp_minus_i_quarter_pi_x() {
  const double r = 1.0 / std::numbers::sqrt2;
  return Matrix2{{{r, -kI * r}, {-kI * r, r}}};
}

Matrix2 exp_plus_i_quarter_pi_z() {
  const std::complex<double> w = std::polar(1.0, std::numbers::pi / 4);
  return Matrix2{{{w, 0.0}, {0.0, std::conj(w)}}};
}

}  // namespace

Graph local_complement(const Graph& g, int a) {
  const std::uint32_t nbrs = g.neighborhood(a);  // validates a
  Graph out = g;
  for (int b = 0; b < g.vertex_count(); ++b) {
    if (!(nbrs >> b & 1u)) continue;
    for (int c = b + 1; c < g.vertex_count(); ++c) {
      if (nbrs >> c & 1u) out.toggle_edge(b, c);
    }
  }
  return out;
}

LcUnitary lc_unitary(const Graph& g, int a) {
  return LcUnitary{a, g.neighborhood(a), exp_minus_i_quarter_pi_x(),
                   exp_plus_i_quarter_pi_z()};
}

DenseState apply(const LcUnitary& u, const DenseState& s) {
  DenseState out = apply_single_qubit_unitary(s, u.vertex, u.vertex_factor);
  for (int b = 0; b < s.qubit_count(); ++b) {
    if (u.neighborhood >> b & 1u) out = apply_single_qubit_unitary(out, b, u.neighbor_factor);
  }
  return out;
}

DenseState lc_unitary_apply(const Graph& g, int a) {
  return apply(lc_unitary(g, a), DenseState::from_graph_state(build_state_phase(g)));
}

Partition OrbitReport::to_partition() const {
  Partition part{quotient_by_isomorphism ? PartitionKind::lc_orbit_mod_isomorphism
                                         : PartitionKind::lc_orbit,
                 n,
                 {}};
  for (const auto& c : classes) part.classes.push_back({c.representative, c.members});
  return part;
}

OrbitReport lc_orbits(int n, bool quotient_by_isomorphism) {
  if (n < 3 || n > Graph::kMaxVertices) {
    throw std::domain_error("lc_orbits: vertex count must be in 3..6");
  }
  const std::size_t total = std::size_t{1} << Graph::pair_count(n);

  std::vector<Dyadic> radicands(total);
  parallel_for(total, [&](std::size_t code) {
    radicands[code] =
        generalized_concurrence(build_state_phase(Graph(n, static_cast<std::uint32_t>(code))))
            .radicand;
  });

  // Transpositions generate S_n; together with the n complementation moves
  // they close each seed into its (optionally isomorphism-quotiented) orbit.
  std::vector<Permutation> swaps;
  if (quotient_by_isomorphism) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        auto map = Permutation::identity(n).mapping();
        std::swap(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]);
        swaps.emplace_back(std::move(map));
      }
    }
  }

  std::vector<bool> visited(total, false);
  OrbitReport report{n, quotient_by_isomorphism, {}};
  for (std::size_t seed = 0; seed < total; ++seed) {
    if (visited[seed]) continue;
    std::vector<std::uint32_t> members{static_cast<std::uint32_t>(seed)};
    visited[seed] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Graph g(n, members[head]);
      const auto push = [&](const Graph& next) {
        if (!visited[next.code()]) {
          visited[next.code()] = true;
          members.push_back(next.code());
        }
      };
      for (int a = 0; a < n; ++a) push(local_complement(g, a));
      for (const auto& p : swaps) push(permute(g, p));
    }
    std::sort(members.begin(), members.end());

    const Dyadic radicand = radicands[members.front()];
    std::unordered_set<std::uint32_t> canon;
    for (std::uint32_t code : members) {
      if (radicands[code] != radicand) {
        throw std::logic_error("lc_orbits: orbit spans two concurrence radicands");
      }
      canon.insert(canonical_form(Graph(n, code)).code());
    }
    report.classes.push_back({concurrence_from_radicand(n, radicand),
                              Graph(n, members.front()), std::move(members), canon.size()});
  }

  std::sort(report.classes.begin(), report.classes.end(),
            [](const LcOrbitClass& a, const LcOrbitClass& b) {
              if (a.concurrence.radicand != b.concurrence.radicand) {
                return a.concurrence.radicand < b.concurrence.radicand;
              }
              return a.representative.code() < b.representative.code();
            });
  return report;
}

RefinementTable refinement_check(int n) {
  if (n < 3 || n > 5) {
    throw std::domain_error("refinement_check: vertex count must be in 3..5");
  }
  RefinementTable table{n, lc_orbits(n, true), classify_by_concurrence(n), {}, {}};
  table.concurrence_to_lc.resize(table.classification.classes.size());

  for (std::size_t k = 0; k < table.orbits.classes.size(); ++k) {
    const Dyadic radicand = table.orbits.classes[k].concurrence.radicand;
    std::size_t target = table.classification.classes.size();
    for (std::size_t c = 0; c < table.classification.classes.size(); ++c) {
      if (table.classification.classes[c].value.radicand == radicand) {
        target = c;
        break;
      }
    }
    if (target == table.classification.classes.size()) {
      throw std::logic_error("refinement_check: LC class radicand missing from classification");
    }
    table.lc_to_concurrence.push_back(target);
    table.concurrence_to_lc[target].push_back(k);
  }

  for (const auto& lcs : table.concurrence_to_lc) {
    if (lcs.empty()) {
      throw std::logic_error("refinement_check: concurrence class not hit by any LC class");
    }
  }
  return table;
}

}  // namespace graphcord
