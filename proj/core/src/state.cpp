#include "graphcord/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace graphcord {

namespace {

// Label mask with the bits of both edge endpoints set.
std::uint32_t edge_label_mask(int n, int i, int j) {
  return (1u << (n - 1 - i)) | (1u << (n - 1 - j));
}

}  // namespace

GraphState::GraphState(int n, std::vector<std::int8_t> signs)
    : n_(n), signs_(std::move(signs)) {
  if (n < 1 || n > Graph::kMaxVertices) {
    throw std::domain_error("GraphState: qubit count must be in 1..6");
  }
  if (signs_.size() != std::size_t{1} << n) {
    throw std::domain_error("GraphState: sign vector has wrong length");
  }
  for (std::int8_t s : signs_) {
    if (s != 1 && s != -1) throw std::domain_error("GraphState: signs must be +1 or -1");
  }
}

GraphState build_state_phase(const Graph& g) {
  const int n = g.vertex_count();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::uint32_t> edge_masks;
  for (const auto& [i, j] : g.edges()) edge_masks.push_back(edge_label_mask(n, i, j));

  std::vector<std::int8_t> signs(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    int inside = 0;
    for (std::uint32_t m : edge_masks) inside += (b & m) == m;
    signs[b] = (inside & 1) ? -1 : 1;
  }
  return GraphState(n, std::move(signs));
}

GraphState apply_cz(const GraphState& s, int i, int j) {
  const int n = s.qubit_count();
  if (i < 0 || i >= n || j < 0 || j >= n || i == j) {
    throw std::domain_error("apply_cz: bad qubit pair");
  }
  const std::uint32_t m = edge_label_mask(n, i, j);
  std::vector<std::int8_t> signs = s.signs();
  for (std::size_t b = 0; b < signs.size(); ++b) {
    if ((b & m) == m) signs[b] = static_cast<std::int8_t>(-signs[b]);
  }
  return GraphState(n, std::move(signs));
}

GraphState build_state_cz(const Graph& g) {
  const int n = g.vertex_count();
  GraphState s(n, std::vector<std::int8_t>(std::size_t{1} << n, 1));
  for (const auto& [i, j] : g.edges()) s = apply_cz(s, i, j);
  return s;
}

ReducedDensityMatrix::ReducedDensityMatrix(int n, std::vector<int> subset,
                                           std::vector<std::int64_t> numerators)
    : n_(n),
      subset_(std::move(subset)),
      dim_(std::size_t{1} << subset_.size()),
      num_(std::move(numerators)) {
  if (num_.size() != dim_ * dim_) {
    throw std::domain_error("ReducedDensityMatrix: numerator grid has wrong size");
  }
}

Dyadic ReducedDensityMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t x = 0; x < dim_; ++x) t += numerator(x, x);
  return Dyadic::ratio(t, n_);
}

ReducedDensityMatrix reduced_density_matrix(const GraphState& s, std::span<const int> subset) {
  const int n = s.qubit_count();
  const int k = static_cast<int>(subset.size());
  if (k == 0 || k >= n) {
    throw std::domain_error("reduced_density_matrix: subset must be a nonempty strict subset");
  }
  std::uint32_t seen = 0;
  for (int t = 0; t < k; ++t) {
    const int q = subset[static_cast<std::size_t>(t)];
    if (q < 0 || q >= n) throw std::domain_error("reduced_density_matrix: qubit out of range");
    if (t > 0 && subset[static_cast<std::size_t>(t - 1)] >= q) {
      throw std::domain_error("reduced_density_matrix: subset must be sorted and duplicate-free");
    }
    seen |= 1u << q;
  }

  std::vector<int> complement;
  for (int q = 0; q < n; ++q) {
    if (!(seen >> q & 1u)) complement.push_back(q);
  }
  const int m = n - k;

  // Label fragments: kept bits placed from x, complement bits placed from z.
  const std::size_t kept_dim = std::size_t{1} << k;
  const std::size_t comp_dim = std::size_t{1} << m;
  std::vector<std::uint32_t> kept_map(kept_dim, 0);
  std::vector<std::uint32_t> comp_map(comp_dim, 0);
  for (std::size_t x = 0; x < kept_dim; ++x) {
    for (int t = 0; t < k; ++t) {
      if (x >> (k - 1 - t) & 1u) {
        kept_map[x] |= 1u << (n - 1 - subset[static_cast<std::size_t>(t)]);
      }
    }
  }
  for (std::size_t z = 0; z < comp_dim; ++z) {
    for (int t = 0; t < m; ++t) {
      if (z >> (m - 1 - t) & 1u) {
        comp_map[z] |= 1u << (n - 1 - complement[static_cast<std::size_t>(t)]);
      }
    }
  }

  // rho[x, y] = 2^(-n) sum_z sign(x:z) sign(y:z)
  const auto& signs = s.signs();
  std::vector<std::int64_t> num(kept_dim * kept_dim);
  for (std::size_t x = 0; x < kept_dim; ++x) {
    for (std::size_t y = x; y < kept_dim; ++y) {
      std::int64_t sum = 0;
      for (std::size_t z = 0; z < comp_dim; ++z) {
        sum += signs[kept_map[x] | comp_map[z]] * signs[kept_map[y] | comp_map[z]];
      }
      num[x * kept_dim + y] = sum;
      num[y * kept_dim + x] = sum;
    }
  }
  return ReducedDensityMatrix(n, std::vector<int>(subset.begin(), subset.end()),
                              std::move(num));
}

Dyadic purity(const ReducedDensityMatrix& r) {
  const std::size_t dim = r.dimension();
  std::int64_t sum = 0;
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      const std::int64_t v = r.numerator(x, y);
      sum += v * v;
    }
  }
  return Dyadic::ratio(sum, 2 * r.qubit_count());
}

DenseState::DenseState(int n, std::vector<std::complex<double>> amplitudes)
    : n_(n), amp_(std::move(amplitudes)) {
  if (n < 1 || n > Graph::kMaxVertices) {
    throw std::domain_error("DenseState: qubit count must be in 1..6");
  }
  if (amp_.size() != std::size_t{1} << n) {
    throw std::domain_error("DenseState: amplitude vector has wrong length");
  }
}

DenseState DenseState::from_graph_state(const GraphState& s) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(s.dimension()));
  std::vector<std::complex<double>> amp(s.dimension());
  for (std::size_t b = 0; b < amp.size(); ++b) amp[b] = s.sign(b) * scale;
  return DenseState(s.qubit_count(), std::move(amp));
}

double DenseState::norm() const {
  double sum = 0;
  for (const auto& a : amp_) sum += std::norm(a);
  return std::sqrt(sum);
}

bool is_unitary(const Matrix2& u, double tol) {
  // u * u^dagger == I
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      std::complex<double> dot =
          u[r][0] * std::conj(u[c][0]) + u[r][1] * std::conj(u[c][1]);
      if (std::abs(dot - (r == c ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

DenseState apply_single_qubit_unitary(const DenseState& s, int q, const Matrix2& u) {
  const int n = s.qubit_count();
  if (q < 0 || q >= n) throw std::domain_error("apply_single_qubit_unitary: qubit out of range");
  if (!is_unitary(u)) {
    throw std::domain_error("apply_single_qubit_unitary: matrix is not unitary within 1e-12");
  }
  const std::size_t bit = std::size_t{1} << (n - 1 - q);
  std::vector<std::complex<double>> amp = s.amplitudes();
  for (std::size_t b = 0; b < amp.size(); ++b) {
    if (b & bit) continue;
    const std::complex<double> a0 = amp[b];
    const std::complex<double> a1 = amp[b | bit];
    amp[b] = u[0][0] * a0 + u[0][1] * a1;
    amp[b | bit] = u[1][0] * a0 + u[1][1] * a1;
  }
  return DenseState(n, std::move(amp));
}

bool states_equal_up_to_global_phase(const DenseState& a, const DenseState& b, double tol) {
  if (a.qubit_count() != b.qubit_count()) {
    throw std::domain_error("states_equal_up_to_global_phase: qubit counts differ");
  }
  std::size_t ref = 0;
  double best = -1;
  for (std::size_t i = 0; i < b.dimension(); ++i) {
    const double mag = std::abs(b.amplitude(i));
    if (mag > best + 1e-15) {
      best = mag;
      ref = i;
    }
  }
  if (best <= 0) return a.norm() <= tol;
  std::complex<double> phase = a.amplitude(ref) / b.amplitude(ref);
  const double mag = std::abs(phase);
  if (std::abs(mag - 1.0) > tol) return false;
  phase /= mag;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (std::abs(a.amplitude(i) - phase * b.amplitude(i)) > tol) return false;
  }
  return true;
}

}  // namespace graphcord
