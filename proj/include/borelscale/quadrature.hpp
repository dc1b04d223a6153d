#pragma once

#include <functional>
#include <vector>

namespace borelscale {

/// Tolerances and mesh parameters shared by every integral in the toolkit.
struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdiv = 4000;        // panel cap for adaptive Gauss-Kronrod
  double refine_factor = 2.0;   // mesh ratio between the coarse and fine passes
  int angular_panels = 8;       // base panel count for sweeps over [0,2π)
  int tanh_sinh_level = 7;      // dyadic refinement depth for endpoint-singular pieces
  double far_field_factor = 4.0;  // exterior partition radius, in units of R(D)

  void validate() const;    // throws std::invalid_argument
  QuadratureSpec refined() const;  // one mesh-refinement step (factor applied)
};

/// A computed integral with a refinement-based error estimate.
struct NormValue {
  double value = 0.0;
  double error_estimate = 0.0;  // |value_fine - value_coarse| plus truncation slack
  int mesh_coarse = 0;
  int mesh_fine = 0;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. Worst-panel-first subdivision,
/// stops when the summed error estimate is below max(abs_tol, rel_tol*|I|).
QuadResult integrate_adaptive(const Integrand& f, double a, double b, double rel_tol,
                              double abs_tol, int max_subdiv);

/// Same, with mandatory initial split points (e.g. piecewise-analytic breaks).
QuadResult integrate_adaptive_split(const Integrand& f, double a, double b,
                                    const std::vector<double>& splits, double rel_tol,
                                    double abs_tol, int max_subdiv);

/// Fixed-depth tanh-sinh rule on (a,b); integrable endpoint singularities are
/// fine. Nodes near `a`/`b` are evaluated through their distance to the
/// endpoint, so the integrand sees exact offsets even at 1e-300 scale.
/// Returns the level-`level` value; `error` is the difference to level-1.
QuadResult integrate_tanh_sinh(const Integrand& f, double a, double b, int level);

/// Single non-adaptive G7/K15 panel; error = |K15 - G7|.
QuadResult gk15_panel(const Integrand& f, double a, double b);

}  // namespace borelscale
