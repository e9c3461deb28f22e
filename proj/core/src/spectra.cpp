#include "algconn/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace algconn {

namespace {

class Jacobi {
 public:
  Jacobi(std::size_t n, std::span<const double> m) : n_(n), a_(m.begin(), m.end()), v_(n * n, 0.0) {
    for (std::size_t i = 0; i < n; ++i) v_[i * n + i] = 1.0;
  }

  int run() {
    for (int sweep = 1; sweep <= kJacobiMaxSweeps; ++sweep) {
      if (off_diagonal() == 0.0) return sweep - 1;
      for (std::size_t p = 0; p + 1 < n_; ++p)
        for (std::size_t q = p + 1; q < n_; ++q) rotate(p, q, sweep);
    }
    if (off_diagonal() == 0.0) return kJacobiMaxSweeps;
    throw Error(Errc::NonConvergence, "Jacobi did not converge for n=" + std::to_string(n_) + " after " +
                                          std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  double diag(std::size_t i) const { return a_[i * n_ + i]; }
  double vec(std::size_t row, std::size_t col) const { return v_[row * n_ + col]; }

 private:
  double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  double off_diagonal() const {
    double s = 0.0;
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = p + 1; q < n_; ++q) s += a_[p * n_ + q] * a_[p * n_ + q];
    return s;
  }

  void rotate(std::size_t p, std::size_t q, int sweep) {
    const double apq = at(p, q);
    if (apq == 0.0) return;
    const double app = at(p, p), aqq = at(q, q);
    const double guard = 100.0 * std::abs(apq);
    // Once an element is negligible next to both diagonal entries it is
    // dropped outright; this is what makes the sweep loop terminate.
    if (sweep > 3 && std::abs(app) + guard == std::abs(app) && std::abs(aqq) + guard == std::abs(aqq)) {
      at(p, q) = at(q, p) = 0.0;
      return;
    }
    const double theta = (aqq - app) / (2.0 * apq);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    for (std::size_t k = 0; k < n_; ++k) {
      const double akp = at(k, p), akq = at(k, q);
      at(k, p) = c * akp - s * akq;
      at(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n_; ++k) {
      const double apk = at(p, k), aqk = at(q, k);
      at(p, k) = c * apk - s * aqk;
      at(q, k) = s * apk + c * aqk;
    }
    at(p, q) = at(q, p) = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
      const double vkp = v_[k * n_ + p], vkq = v_[k * n_ + q];
      v_[k * n_ + p] = c * vkp - s * vkq;
      v_[k * n_ + q] = s * vkp + c * vkq;
    }
  }

  std::size_t n_;
  std::vector<double> a_, v_;
};

double residual_inf(std::size_t n, std::span<const double> m, std::span<const double> x, double lambda) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += m[i * n + j] * x[j];
    worst = std::max(worst, std::abs(row - lambda * x[i]));
  }
  return worst;
}

}  // namespace

SpectralDecomposition eigen_symmetric(std::size_t n, std::span<const double> m) {
  if (n == 0 || m.size() != n * n) throw Error(Errc::InvalidArgument, "expected a non-empty square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i * n + j] != m[j * n + i]) throw Error(Errc::InvalidArgument, "matrix is not symmetric");

  Jacobi solver(n, m);
  SpectralDecomposition out;
  out.sweeps = solver.run();

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return solver.diag(a) < solver.diag(b); });

  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t k : idx) {
    out.eigenvalues.push_back(solver.diag(k));
    std::vector<double> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = solver.vec(r, k);
    out.residual = std::max(out.residual, residual_inf(n, m, x, solver.diag(k)));
    out.eigenvectors.push_back(std::move(x));
  }
  return out;
}

SpectralDecomposition eigen_symmetric(const LaplacianMatrix& l) {
  const std::vector<double> dense = l.to_dense();
  return eigen_symmetric(l.order(), dense);
}

SpectralDecomposition laplacian_spectrum(const Graph& g) { return eigen_symmetric(laplacian(g)); }

double algebraic_connectivity(const Graph& g) {
  if (g.order() < 2) throw Error(Errc::InvalidArgument, "algebraic connectivity needs n >= 2");
  return laplacian_spectrum(g).eigenvalues[1];
}

double multiplicity_tolerance(std::size_t n) { return std::max(1e-8, 1e-10 * static_cast<double>(n)); }

FiedlerResult fiedler_vector(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw Error(Errc::InvalidArgument, "Fiedler vector needs n >= 2");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "Fiedler vector of a disconnected graph is ill-posed");

  const LaplacianMatrix lap = laplacian(g);
  const std::vector<double> dense = lap.to_dense();
  const SpectralDecomposition sd = eigen_symmetric(n, dense);

  FiedlerResult out;
  out.alpha = sd.eigenvalues[1];
  const double tol = multiplicity_tolerance(n);
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(sd.eigenvalues[i] - out.alpha) <= tol) ++out.multiplicity;

  std::vector<double> x = sd.eigenvectors[1];
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  for (double& xi : x) xi -= mean;
  const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
  for (double& xi : x) xi /= norm;

  double biggest = 0.0;
  for (double xi : x) biggest = std::max(biggest, std::abs(xi));
  const auto lead = std::find_if(x.begin(), x.end(), [&](double xi) { return std::abs(xi) >= biggest * (1.0 - 1e-9); });
  if (*lead < 0.0)
    for (double& xi : x) xi = -xi;

  out.residual = residual_inf(n, dense, x, out.alpha);
  out.vector = std::move(x);
  return out;
}

double rayleigh_quotient(const Graph& g, std::span<const double> x) {
  if (x.size() != g.order()) throw Error(Errc::InvalidArgument, "vector length does not match graph order");
  const double sq = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
  if (sq == 0.0) throw Error(Errc::InvalidArgument, "zero vector");
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  const double cosine = std::abs(sum) / std::sqrt(sq * static_cast<double>(x.size()));
  if (cosine > 1e-9) throw Error(Errc::InvalidArgument, "vector is not orthogonal to all-ones");
  return quadratic_form(g, x) / sq;
}

double alpha_cycle_closed_form(std::size_t n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "cycle needs n >= 3");
  return 2.0 * (1.0 - std::cos(2.0 * std::numbers::pi / static_cast<double>(n)));
}

}  // namespace algconn
