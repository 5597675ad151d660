#pragma once

#include <cstdint>
#include <vector>

#include "graphcord/dyadic.hpp"
#include "graphcord/graph.hpp"
#include "graphcord/state.hpp"

namespace graphcord {

// Tr rho_alpha^2 for every nonempty proper qubit subset alpha, keyed by the
// subset bitmask (bit q set iff qubit q retained). 2^n - 2 entries; every
// entry is computed independently so the complement symmetry stays a real
// cross-check rather than a construction artifact.
class PuritySpectrum {
 public:
  PuritySpectrum(int n, std::vector<Dyadic> by_mask);

  int qubit_count() const { return n_; }
  std::uint32_t full_mask() const { return (1u << n_) - 1; }
  std::size_t subset_count() const { return (std::size_t{1} << n_) - 2; }

  Dyadic value(std::uint32_t subset_mask) const;
  Dyadic total() const;

 private:
  int n_;
  std::vector<Dyadic> by_mask_;  // indices 0 and full unused
};

PuritySpectrum purity_spectrum(const GraphState& s);

// C = 2^(1-n/2) * sqrt(radicand) with radicand = 2^n - 2 - sum_alpha Tr rho_alpha^2.
// Classification compares exact radicands at equal n; `value` is a display
// approximation only.
struct ConcurrenceValue {
  int n;
  Dyadic radicand;
  double value;

  friend bool operator==(const ConcurrenceValue& a, const ConcurrenceValue& b) {
    return a.n == b.n && a.radicand == b.radicand;
  }
};

ConcurrenceValue concurrence_from_radicand(int n, Dyadic radicand);
ConcurrenceValue generalized_concurrence(const GraphState& s);

// True iff Tr rho_alpha^2 == Tr rho_complement(alpha)^2 exactly for every
// subset; Schmidt symmetry of pure states, so false signals an engine bug.
bool verify_complement_relations(const GraphState& s);

struct ConcurrenceClass {
  ConcurrenceValue value;
  Graph representative;                          // lowest member code
  std::vector<std::uint32_t> members;            // labeled codes, ascending
  std::vector<std::uint32_t> representative_codes;  // distinct canonical forms, ascending
};

// All labeled graphs on n vertices grouped by exact radicand, classes in
// ascending concurrence order. `representative_codes` restricts each class to
// its non-isomorphic representatives.
struct ConcurrenceClassification {
  int n;
  bool beyond_validated_range;  // n == 6: one size past the verified tables
  std::vector<ConcurrenceClass> classes;

  Partition to_partition() const;
};

ConcurrenceClassification classify_by_concurrence(int n);

// Isomorphism-invariant purity fingerprint: for each subset size 1..n-1, the
// sorted multiset of subsystem purities. Relabeling-independent, unlike the
// raw subset-keyed spectrum.
using PurityPattern = std::vector<std::vector<Dyadic>>;

PurityPattern purity_pattern(const GraphState& s);

// Groups of canonical representatives on n vertices that share a purity
// pattern despite being non-isomorphic; only groups of two or more are
// returned, ordered by first member. Sharing a pattern forces an equal
// radicand, so every group sits inside one concurrence class.
std::vector<std::vector<std::uint32_t>> shared_purity_patterns(int n);

}  // namespace graphcord
