#pragma once

#include <optional>
#include <vector>

#include "sfc/graph.hpp"

namespace sfc {

inline constexpr int kDefaultSpectrumCap = 2000;
inline constexpr double kDefaultSpectralTol = 1e-10;

/// Returns d when every vertex has degree d; throws NotRegular naming two
/// vertices whose degrees differ.
int check_regular(const Graph& g);

/// Dense symmetric matrix stored row-major.
struct SymmetricMatrix {
  int n = 0;
  std::vector<double> data;

  double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }
};

SymmetricMatrix adjacency_matrix(const Graph& g);

struct EigenDecomposition {
  std::vector<double> values;                 // descending
  std::vector<std::vector<double>> vectors;   // vectors[i] pairs with values[i]; empty unless requested
  int sweeps = 0;
  double off_norm = 0.0;                      // final off-diagonal Frobenius norm
};

/// Cyclic Jacobi rotations until the off-diagonal norm is below tol * ||A||_F.
/// Throws NoConvergence once max_sweeps is exhausted.
EigenDecomposition jacobi_eigen(SymmetricMatrix a, double tol, bool want_vectors = false, int max_sweeps = 100);

struct SpectralProfile {
  int n = 0;
  std::optional<int> d;
  std::vector<double> eigenvalues;  // descending
  double lambda = 0.0;              // max(lambda_2, |lambda_n|)
  std::optional<double> ratio;      // d / lambda when regular and lambda > 0
  double tol = kDefaultSpectralTol;
  int sweeps = 0;
};

/// Throws TooLarge when n exceeds cap.
SpectralProfile spectrum(const Graph& g, double tol = kDefaultSpectralTol, int cap = kDefaultSpectrumCap);

struct NdLambdaVerdict {
  bool verdict = false;
  SpectralProfile profile;
};

/// Regular, d >= d0 and d / lambda >= C, where the ratio test is applied as
/// d >= (C - tol) * lambda. Propagates NotRegular and TooLarge.
NdLambdaVerdict is_ndlambda(const Graph& g, double C, int d0, double tol = kDefaultSpectralTol,
                            int cap = kDefaultSpectrumCap);

}  // namespace sfc
