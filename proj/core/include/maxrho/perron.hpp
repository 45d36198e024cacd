#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "maxrho/graph.hpp"

namespace maxrho {

/// Dominant eigenpair of a connected graph's adjacency matrix.
struct PerronPair {
  double rho = 0.0;
  std::vector<double> vector;  ///< positive, unit 2-norm
  double residual = 0.0;       ///< ||A x - rho x||_inf at exit
  std::size_t iterations = 0;
};

inline constexpr double kDefaultPerronTol = 1e-12;
inline constexpr std::size_t kPerronIterationCap = 1'000'000;

/// Shifted power iteration on A + I from the normalised all-ones vector, with
/// the Rayleigh quotient as the eigenvalue estimate. Stops once the infinity
/// norm residual is at most tol. Loops contribute 2 on the diagonal.
PerronPair perron(const Graph& g, double tol = kDefaultPerronTol);

/// Largest rho over the components; single vertices contribute 0 (or 2 with a loop).
double spectral_radius(const Graph& g, double tol = kDefaultPerronTol);

/// y^T A y / y^T y.
double rayleigh_quotient(const Graph& g, std::span<const double> y);

struct ComponentBound {
  double lhs = 0.0;  ///< rho * max component
  double rhs = 0.0;  ///< sqrt(max degree)
  bool holds = false;
};

/// Compares rho(G) times the largest Perron component against sqrt(Delta).
ComponentBound perron_component_bound(const Graph& g);

}  // namespace maxrho
