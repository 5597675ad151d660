#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "graphcord/dyadic.hpp"
#include "graphcord/graph.hpp"

namespace graphcord {

// Basis labels read qubit 1 as the most significant bit, so the label of
// |b1 b2 ... bn> is the integer b1 b2 ... bn. Qubit q (0-based) therefore
// occupies bit (n-1-q).
constexpr int basis_bit(int n, std::size_t basis, int q) {
  return static_cast<int>(basis >> (n - 1 - q)) & 1;
}

// Graph-state vector stored exactly: the amplitude of basis label b is
// sign(b) * 2^(-n/2) with sign(b) in {+1, -1}.
class GraphState {
 public:
  GraphState(int n, std::vector<std::int8_t> signs);

  int qubit_count() const { return n_; }
  std::size_t dimension() const { return signs_.size(); }
  int sign(std::size_t basis) const { return signs_[basis]; }
  const std::vector<std::int8_t>& signs() const { return signs_; }

  friend bool operator==(const GraphState&, const GraphState&) = default;

 private:
  int n_;
  std::vector<std::int8_t> signs_;
};

// sign(b) = (-1)^(number of edges {i,j} with b_i = b_j = 1); the symmetric
// adjacency matrix counts every edge twice, so this integer equals the
// quadratic-form exponent of the phase construction.
GraphState build_state_phase(const Graph& g);

// Flips the sign of every label with both endpoint bits set.
GraphState apply_cz(const GraphState& s, int i, int j);

// |+>^n followed by one CZ per edge; bit-identical to build_state_phase.
GraphState build_state_cz(const Graph& g);

// Reduced density matrix on a retained qubit subset. Entries are exact
// dyadic rationals num/2^n; subset[0] is the most significant bit of the
// reduced basis label.
class ReducedDensityMatrix {
 public:
  ReducedDensityMatrix(int n, std::vector<int> subset, std::vector<std::int64_t> numerators);

  int qubit_count() const { return n_; }
  const std::vector<int>& subset() const { return subset_; }
  std::size_t dimension() const { return dim_; }

  std::int64_t numerator(std::size_t row, std::size_t col) const {
    return num_[row * dim_ + col];
  }
  int denominator_exponent() const { return n_; }
  Dyadic entry(std::size_t row, std::size_t col) const {
    return Dyadic::ratio(numerator(row, col), n_);
  }
  Dyadic trace() const;

 private:
  int n_;
  std::vector<int> subset_;
  std::size_t dim_;
  std::vector<std::int64_t> num_;
};

// Partial trace of |s><s| over the complement of `subset` (sorted 0-based
// qubit indices, nonempty strict subset). Computed directly from the sign
// vector; the full 2^n x 2^n density matrix is never materialized.
ReducedDensityMatrix reduced_density_matrix(const GraphState& s, std::span<const int> subset);

// Tr(r^2), exact.
Dyadic purity(const ReducedDensityMatrix& r);

// Complex state vector; used only where local-Clifford phases leave the
// +-sign family.
class DenseState {
 public:
  DenseState(int n, std::vector<std::complex<double>> amplitudes);
  static DenseState from_graph_state(const GraphState& s);

  int qubit_count() const { return n_; }
  std::size_t dimension() const { return amp_.size(); }
  std::complex<double> amplitude(std::size_t basis) const { return amp_[basis]; }
  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }
  double norm() const;

 private:
  int n_;
  std::vector<std::complex<double>> amp_;
};

// Row-major 2x2 complex matrix.
using Matrix2 = std::array<std::array<std::complex<double>, 2>, 2>;

bool is_unitary(const Matrix2& u, double tol = 1e-12);

// One-qubit gate on qubit q; throws std::domain_error unless u is unitary
// within 1e-12.
DenseState apply_single_qubit_unitary(const DenseState& s, int q, const Matrix2& u);

// True iff a = c*b elementwise within tol for some unit complex c; c is read
// off the largest-magnitude amplitude of b (ties: lowest basis index).
bool states_equal_up_to_global_phase(const DenseState& a, const DenseState& b,
                                     double tol = 1e-10);

}  // namespace graphcord
