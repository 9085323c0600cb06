#include "harary/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace harary {

HararyMatrix::HararyMatrix(const DistanceMatrix& d) : n_(d.size()) {
  a_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j) a_[static_cast<std::size_t>(i) * n_ + j] = 1.0 / d.at(i, j);
    }
  }
}

double HararyMatrix::row_sum(int i) const {
  double s = 0.0;
  for (int j = 0; j < n_; ++j) s += at(i, j);
  return s;
}

double HararyMatrix::max_row_sum() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) best = std::max(best, row_sum(i));
  return best;
}

void HararyMatrix::matvec(std::span<const double> x, std::span<double> y) const {
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    const double* row = a_.data() + static_cast<std::size_t>(i) * n_;
    for (int j = 0; j < n_; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

HararyMatrix harary_matrix(const DistanceMatrix& d) { return HararyMatrix(d); }

namespace {

void normalize(std::vector<double>& x) {
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  double inv = 1.0 / std::sqrt(norm2);
  for (double& v : x) v *= inv;
}

}  // namespace

SpectralResult spectral_radius(const HararyMatrix& h,
                               const PowerIterationOptions& opts) {
  int n = h.size();
  SpectralResult result;
  if (n == 1) {
    result.vector = {1.0};
    return result;
  }

  std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(double(n)));
  std::vector<double> y(static_cast<std::size_t>(n), 0.0);

  // Stall threshold after which the iteration switches to A + I; the shift
  // leaves eigenvectors alone and widens the dominance gap when the most
  // negative eigenvalue rivals the largest one.
  const int shift_after = std::min(opts.max_iterations / 2, 5000);
  double shift = 0.0;
  double rho = 0.0;
  double residual = 0.0;

  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    h.matvec(x, y);
    double rayleigh = 0.0;
    for (int i = 0; i < n; ++i) rayleigh += x[i] * y[i];
    residual = 0.0;
    for (int i = 0; i < n; ++i) {
      residual = std::max(residual, std::abs(y[i] - rayleigh * x[i]));
    }
    rho = rayleigh;
    if (residual <= opts.tolerance) break;
    if (it == shift_after) shift = 1.0;
    if (shift != 0.0) {
      for (int i = 0; i < n; ++i) y[i] += shift * x[i];
    }
    x.swap(y);
    normalize(x);
  }
  if (residual > opts.tolerance) {
    throw NonConvergenceError(
        "power iteration did not reach residual " + std::to_string(opts.tolerance) +
            " after " + std::to_string(opts.max_iterations) + " iterations",
        residual);
  }
  result.radius = rho;
  result.vector = std::move(x);
  result.iterations = it;
  result.residual = residual;
  return result;
}

SpectralResult spectral_radius(const Graph& g, const PowerIterationOptions& opts) {
  return spectral_radius(harary_matrix(apsp(g)), opts);
}

std::vector<double> full_spectrum(const HararyMatrix& h) {
  int n = h.size();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = h.at(i, j);

  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  // Cyclic Jacobi sweeps; every rotation zeroes one off-diagonal pair.
  const double threshold = 1e-14;
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
    if (off <= threshold) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (std::abs(apq) <= threshold) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p);
          double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k);
          double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return eig;
}

std::vector<double> full_spectrum(const Graph& g) {
  return full_spectrum(harary_matrix(apsp(g)));
}

double rho_closed_form(const FamilySpec& spec) {
  if (const auto* c = std::get_if<family::Complete>(&spec)) {
    if (c->n < 1) throw std::invalid_argument("complete(n) needs n >= 1");
    return c->n - 1.0;
  }
  if (const auto* b = std::get_if<family::CompleteBipartite>(&spec)) {
    if (b->n1 < 1 || b->n2 < 1) {
      throw std::invalid_argument("bipartite(n1,n2) needs n1,n2 >= 1");
    }
    double n = b->n1 + b->n2;
    return (n - 2.0 + std::sqrt(n * n + 12.0 * b->n1 * b->n2)) / 4.0;
  }
  throw std::invalid_argument("closed form known only for complete and bipartite");
}

}  // namespace harary
