#pragma once

namespace ldpcbound {

// A numerically computed quantity together with a rigorous estimate of
// |value - exact| accumulated from quadrature error and series truncation.
struct BoundResult {
  double value = 0.0;
  double error_bound = 0.0;
  // Set when a series argument of the check-degree polynomial exceeded 1
  // (possible with rounded input coefficients) and was clamped.
  bool gamma_arg_clamped = false;
};

}  // namespace ldpcbound
