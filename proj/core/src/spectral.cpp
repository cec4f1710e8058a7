#include "sfc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sfc/error.hpp"

namespace sfc {

int check_regular(const Graph& g) {
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.size(); ++v) {
    if (g.degree(v) != d) {
      throw Error(ErrorKind::NotRegular, "vertex 0 has degree " + std::to_string(d) + " but vertex " +
                                             std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  return d;
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix a;
  a.n = g.size();
  a.data.assign(static_cast<std::size_t>(a.n) * a.n, 0.0);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

namespace {

double off_diagonal_norm(const SymmetricMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.n; ++i) {
    for (int j = i + 1; j < a.n; ++j) s += a(i, j) * a(i, j);
  }
  return std::sqrt(2.0 * s);
}

double frobenius_norm(const SymmetricMatrix& a) {
  double s = 0.0;
  for (double x : a.data) s += x * x;
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(SymmetricMatrix a, double tol, bool want_vectors, int max_sweeps) {
  const int n = a.n;
  EigenDecomposition out;
  std::vector<double> v;
  if (want_vectors) {
    v.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  const double target = tol * std::max(frobenius_norm(a), 1.0);
  double off = off_diagonal_norm(a);
  int sweep = 0;
  while (off > target) {
    if (sweep == max_sweeps) {
      throw Error(ErrorKind::NoConvergence, "off-diagonal norm " + std::to_string(off) + " after " +
                                                std::to_string(sweep) + " sweeps (target " + std::to_string(target) +
                                                ")");
    }
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Rotation angle zeroing a(p, q), tan computed in the stable form.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          const double np = c * akp - s * akq;
          const double nq = s * akp + c * akq;
          a(k, p) = np;
          a(p, k) = np;
          a(k, q) = nq;
          a(q, k) = nq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            double& vkp = v[static_cast<std::size_t>(k) * n + p];
            double& vkq = v[static_cast<std::size_t>(k) * n + q];
            const double np = c * vkp - s * vkq;
            const double nq = s * vkp + c * vkq;
            vkp = np;
            vkq = nq;
          }
        }
      }
    }
    off = off_diagonal_norm(a);
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });
  out.values.reserve(static_cast<std::size_t>(n));
  for (int i : order) out.values.push_back(a(i, i));
  if (want_vectors) {
    for (int i : order) {
      std::vector<double> col(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) col[k] = v[static_cast<std::size_t>(k) * n + i];
      out.vectors.push_back(std::move(col));
    }
  }
  out.sweeps = sweep;
  out.off_norm = off;
  return out;
}

SpectralProfile spectrum(const Graph& g, double tol, int cap) {
  if (!(tol > 0.0)) throw Error(ErrorKind::BadParameters, "tolerance must be positive");
  if (g.size() > cap) {
    throw Error(ErrorKind::TooLarge,
                "n=" + std::to_string(g.size()) + " exceeds the dense eigensolver cap " + std::to_string(cap));
  }
  EigenDecomposition eig = jacobi_eigen(adjacency_matrix(g), tol);
  SpectralProfile prof;
  prof.n = g.size();
  prof.tol = tol;
  prof.sweeps = eig.sweeps;
  prof.eigenvalues = std::move(eig.values);
  if (prof.n >= 2) prof.lambda = std::max(prof.eigenvalues[1], std::fabs(prof.eigenvalues.back()));
  try {
    prof.d = check_regular(g);
  } catch (const Error&) {
    prof.d.reset();
  }
  if (prof.d && prof.lambda > tol) prof.ratio = *prof.d / prof.lambda;
  return prof;
}

NdLambdaVerdict is_ndlambda(const Graph& g, double C, int d0, double tol, int cap) {
  const int d = check_regular(g);
  NdLambdaVerdict out;
  out.profile = spectrum(g, tol, cap);
  const double lambda = out.profile.lambda;
  out.verdict = d >= d0 && static_cast<double>(d) >= (C - tol) * lambda;
  return out;
}

}  // namespace sfc
