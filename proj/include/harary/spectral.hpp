#ifndef HARARY_SPECTRAL_HPP
#define HARARY_SPECTRAL_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "harary/families.hpp"
#include "harary/graph.hpp"

namespace harary {

// Symmetric reciprocal-distance matrix: entry (i, j) is 1/d(i, j) off the
// diagonal and 0 on it. All off-diagonal entries are positive for a
// connected source graph, so the matrix is irreducible.
class HararyMatrix {
 public:
  HararyMatrix() = default;
  explicit HararyMatrix(const DistanceMatrix& d);

  int size() const noexcept { return n_; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double row_sum(int i) const;
  double max_row_sum() const;

  // y = A x
  void matvec(std::span<const double> x, std::span<double> y) const;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

HararyMatrix harary_matrix(const DistanceMatrix& d);

struct SpectralResult {
  double radius = 0.0;
  std::vector<double> vector;  // positive, unit Euclidean norm
  int iterations = 0;
  double residual = 0.0;  // inf-norm of A x - radius x
};

struct PowerIterationOptions {
  double tolerance = 1e-12;
  int max_iterations = 200000;
};

struct NonConvergenceError : std::runtime_error {
  NonConvergenceError(const std::string& msg, double residual)
      : std::runtime_error(msg), last_residual(residual) {}
  double last_residual;
};

// Largest eigenvalue and positive unit eigenvector via power iteration from
// the all-ones vector; falls back to a diagonal shift when convergence
// stalls. Certified by the returned residual.
SpectralResult spectral_radius(const HararyMatrix& h,
                               const PowerIterationOptions& opts = {});
SpectralResult spectral_radius(const Graph& g,
                               const PowerIterationOptions& opts = {});

// All eigenvalues in descending order, by cyclic Jacobi rotations.
// Independent of the power-iteration path.
std::vector<double> full_spectrum(const HararyMatrix& h);
std::vector<double> full_spectrum(const Graph& g);

// Exact closed forms: complete(n) -> n-1,
// bipartite(n1,n2) -> (n - 2 + sqrt(n^2 + 12 n1 n2)) / 4.
// Other family variants are rejected.
double rho_closed_form(const FamilySpec& spec);

}  // namespace harary

#endif  // HARARY_SPECTRAL_HPP
