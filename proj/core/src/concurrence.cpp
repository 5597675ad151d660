#include "graphcord/concurrence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "graphcord/parallel.hpp"

namespace graphcord {

namespace {

std::vector<int> mask_to_subset(std::uint32_t mask, int n) {
  std::vector<int> subset;
  for (int q = 0; q < n; ++q) {
    if (mask >> q & 1u) subset.push_back(q);
  }
  return subset;
}

}  // namespace

PuritySpectrum::PuritySpectrum(int n, std::vector<Dyadic> by_mask)
    : n_(n), by_mask_(std::move(by_mask)) {
  if (by_mask_.size() != std::size_t{1} << n) {
    throw std::domain_error("PuritySpectrum: value table has wrong size");
  }
}

Dyadic PuritySpectrum::value(std::uint32_t subset_mask) const {
  if (subset_mask == 0 || subset_mask >= full_mask()) {
    throw std::domain_error("PuritySpectrum: subset must be nonempty and proper");
  }
  return by_mask_[subset_mask];
}

Dyadic PuritySpectrum::total() const {
  Dyadic sum;
  for (std::uint32_t mask = 1; mask < full_mask(); ++mask) sum += by_mask_[mask];
  return sum;
}

PuritySpectrum purity_spectrum(const GraphState& s) {
  const int n = s.qubit_count();
  const std::uint32_t full = (1u << n) - 1;
  std::vector<Dyadic> by_mask(std::size_t{1} << n);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const auto subset = mask_to_subset(mask, n);
    by_mask[mask] = purity(reduced_density_matrix(s, subset));
  }
  return PuritySpectrum(n, std::move(by_mask));
}

ConcurrenceValue concurrence_from_radicand(int n, Dyadic radicand) {
  if (radicand < Dyadic(0)) {
    throw std::logic_error("concurrence: negative radicand (engine inconsistency)");
  }
  const double value = std::exp2(1.0 - n / 2.0) * std::sqrt(radicand.to_double());
  return ConcurrenceValue{n, radicand, value};
}

ConcurrenceValue generalized_concurrence(const GraphState& s) {
  const int n = s.qubit_count();
  const Dyadic radicand = Dyadic((std::int64_t{1} << n) - 2) - purity_spectrum(s).total();
  return concurrence_from_radicand(n, radicand);
}

bool verify_complement_relations(const GraphState& s) {
  const auto spectrum = purity_spectrum(s);
  const std::uint32_t full = spectrum.full_mask();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (spectrum.value(mask) != spectrum.value(full ^ mask)) return false;
  }
  return true;
}

Partition ConcurrenceClassification::to_partition() const {
  Partition part{PartitionKind::concurrence, n, {}};
  for (const auto& c : classes) part.classes.push_back({c.representative, c.members});
  return part;
}

ConcurrenceClassification classify_by_concurrence(int n) {
  if (n < 3 || n > Graph::kMaxVertices) {
    throw std::domain_error("classify_by_concurrence: vertex count must be in 3..6");
  }
  const std::size_t total = std::size_t{1} << Graph::pair_count(n);

  std::vector<Dyadic> radicands(total);
  std::vector<std::uint32_t> canon(total);
  parallel_for(total, [&](std::size_t code) {
    const Graph g(n, static_cast<std::uint32_t>(code));
    radicands[code] = generalized_concurrence(build_state_phase(g)).radicand;
    canon[code] = canonical_form(g).code();
  });

  std::map<Dyadic, std::vector<std::uint32_t>> by_radicand;
  for (std::size_t code = 0; code < total; ++code) {
    by_radicand[radicands[code]].push_back(static_cast<std::uint32_t>(code));
  }

  ConcurrenceClassification result{n, n == 6, {}};
  for (auto& [radicand, members] : by_radicand) {
    std::vector<std::uint32_t> reps;
    for (std::uint32_t code : members) reps.push_back(canon[code]);
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    result.classes.push_back({concurrence_from_radicand(n, radicand),
                              Graph(n, members.front()), std::move(members), std::move(reps)});
  }
  return result;
}

PurityPattern purity_pattern(const GraphState& s) {
  const int n = s.qubit_count();
  const auto spectrum = purity_spectrum(s);
  PurityPattern pattern(static_cast<std::size_t>(n - 1));
  for (std::uint32_t mask = 1; mask < spectrum.full_mask(); ++mask) {
    pattern[static_cast<std::size_t>(std::popcount(mask)) - 1].push_back(spectrum.value(mask));
  }
  for (auto& sizes : pattern) std::sort(sizes.begin(), sizes.end());
  return pattern;
}

std::vector<std::vector<std::uint32_t>> shared_purity_patterns(int n) {
  std::map<PurityPattern, std::vector<std::uint32_t>> by_pattern;
  for (const auto& cls : isomorphism_classes(n).classes) {
    by_pattern[purity_pattern(build_state_phase(cls.representative))].push_back(
        cls.representative.code());
  }
  std::vector<std::vector<std::uint32_t>> shared;
  for (auto& [pattern, reps] : by_pattern) {
    if (reps.size() > 1) shared.push_back(std::move(reps));
  }
  std::sort(shared.begin(), shared.end());
  return shared;
}

}  // namespace graphcord
