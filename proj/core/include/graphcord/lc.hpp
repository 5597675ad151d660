#pragma once

#include <cstdint>
#include <vector>

#include "graphcord/concurrence.hpp"
#include "graphcord/graph.hpp"
#include "graphcord/state.hpp"

namespace graphcord {

// Local complementation at vertex a: toggles every edge between two
// neighbors of a; edges incident to a are untouched.
Graph local_complement(const Graph& g, int a);

// The local Clifford realization of local complementation: exp(-i pi/4 X) on
// the complemented vertex and exp(+i pi/4 Z) on each of its neighbors. The
// factors act on distinct qubits and commute.
struct LcUnitary {
  int vertex;
  std::uint32_t neighborhood;  // vertex bitmask at application time
  Matrix2 vertex_factor;
  Matrix2 neighbor_factor;
};

LcUnitary lc_unitary(const Graph& g, int a);
DenseState apply(const LcUnitary& u, const DenseState& s);

// Applies the unitary to |g>; the result equals the graph state of
// local_complement(g, a) up to a global phase.
DenseState lc_unitary_apply(const Graph& g, int a);

struct LcOrbitClass {
  ConcurrenceValue concurrence;              // shared by every member, exactly
  Graph representative;                      // lowest member code
  std::vector<std::uint32_t> members;        // labeled codes, ascending
  std::size_t representative_count;          // distinct canonical forms
};

// Partition of all labeled graphs under closure by local complementations,
// optionally also under vertex permutations (the quotient that yields the
// reference class counts 3/6/11 for n = 3/4/5). Classes are ordered by
// concurrence ascending, then representative code.
struct OrbitReport {
  int n;
  bool quotient_by_isomorphism;
  std::vector<LcOrbitClass> classes;

  Partition to_partition() const;
};

OrbitReport lc_orbits(int n, bool quotient_by_isomorphism);

// Maps each LC class (quotiented by isomorphism) to the unique concurrence
// class containing it. Throws std::logic_error if an LC class spans two
// concurrence values; that would contradict local-unitary invariance.
struct RefinementTable {
  int n;
  OrbitReport orbits;                                   // quotient = true
  ConcurrenceClassification classification;
  std::vector<std::size_t> lc_to_concurrence;           // per LC class
  std::vector<std::vector<std::size_t>> concurrence_to_lc;  // merge view
};

RefinementTable refinement_check(int n);

}  // namespace graphcord
