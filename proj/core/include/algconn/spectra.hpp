#pragma once

#include <span>
#include <vector>

#include "algconn/graph.hpp"

namespace algconn {

/// Full eigendecomposition of a real symmetric matrix.
struct SpectralDecomposition {
  /// Ascending. For a Laplacian, eigenvalues[0] is the zero eigenvalue and
  /// eigenvalues[1] is the algebraic connectivity.
  std::vector<double> eigenvalues;
  /// eigenvectors[i] belongs to eigenvalues[i]; orthonormal.
  std::vector<std::vector<double>> eigenvectors;
  /// max_i ||M x_i - lambda_i x_i||_inf against the input matrix.
  double residual = 0.0;
  int sweeps = 0;
};

inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi rotations on a dense row-major n x n symmetric matrix.
/// Fixed sweep order, no randomness: identical input gives bit-identical
/// output. Throws Errc::InvalidArgument for a non-square or asymmetric
/// input and Errc::NonConvergence after kJacobiMaxSweeps sweeps.
SpectralDecomposition eigen_symmetric(std::size_t n, std::span<const double> row_major);
SpectralDecomposition eigen_symmetric(const LaplacianMatrix& l);

SpectralDecomposition laplacian_spectrum(const Graph& g);

/// Second-smallest Laplacian eigenvalue. Throws Errc::InvalidArgument for n < 2.
double algebraic_connectivity(const Graph& g);

struct FiedlerResult {
  double alpha = 0.0;
  /// Unit norm, orthogonal to the all-ones vector, and re-signed so the
  /// first coordinate of largest magnitude is positive.
  std::vector<double> vector;
  /// Eigenvalues within multiplicity_tolerance(n) of alpha.
  std::size_t multiplicity = 0;
  /// ||L x - alpha x||_inf for the returned vector.
  double residual = 0.0;
};

/// Width of the eigenvalue cluster counted toward Fiedler multiplicity.
double multiplicity_tolerance(std::size_t n);

/// Fiedler vector of a connected graph. Under multiplicity > 1 the vector
/// is the solver's eigenvector at ascending index 1, so it is one valid
/// choice among many. Throws Errc::Disconnected or Errc::InvalidArgument.
FiedlerResult fiedler_vector(const Graph& g);

/// sum over edges (x_u - x_v)^2 / sum x_j^2 for x orthogonal to all-ones.
/// Throws Errc::InvalidArgument for a zero vector or one whose normalized
/// inner product with all-ones exceeds 1e-9.
double rayleigh_quotient(const Graph& g, std::span<const double> x);

/// 2 (1 - cos(2 pi / n)), the algebraic connectivity of the n-cycle.
double alpha_cycle_closed_form(std::size_t n);

}  // namespace algconn
