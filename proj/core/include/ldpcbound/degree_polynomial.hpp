#pragma once

#include <vector>

namespace ldpcbound {

enum class Perspective { edge, node };
enum class Side { variable, check };

struct DegreeTerm {
  int degree;          // node degree i >= 1
  double coefficient;  // > 0
};

// Sparse degree distribution polynomial. Degrees are always node degrees i;
// the edge perspective evaluates sum_i c_i x^(i-1), the node perspective
// sum_i c_i x^i. Coefficients are positive and sum to 1 (inputs within 1e-12
// of 1 are renormalized, anything further off is rejected).
class DegreePolynomial {
 public:
  DegreePolynomial(std::vector<DegreeTerm> terms, Perspective perspective, Side side);

  const std::vector<DegreeTerm>& terms() const { return terms_; }
  Perspective perspective() const { return perspective_; }
  Side side() const { return side_; }

  int min_degree() const { return terms_.front().degree; }
  int max_degree() const { return terms_.back().degree; }
  double coefficient(int degree) const;  // 0 when the degree is absent

  // Polynomial value at x in [0, 1].
  double evaluate(double x) const;
  // d/dx at x = 1, i.e. the coefficient-weighted sum of exponents. Bounds the
  // slope on [0, 1] since all coefficients are positive.
  double derivative_at_one() const;
  // Edge perspective only: integral over [0, 1], which is sum_i c_i / i.
  double integral() const;

 private:
  std::vector<DegreeTerm> terms_;
  Perspective perspective_;
  Side side_;
};

// Edge <-> node perspective conversions (the d_i/i reweighting).
DegreePolynomial edge_to_node(const DegreePolynomial& d);
DegreePolynomial node_to_edge(const DegreePolynomial& d);

// An LDPC ensemble given by its edge-perspective pair (lambda, rho). The
// block-length sequence is asymptotic only and not represented.
class EnsembleSpec {
 public:
  EnsembleSpec(DegreePolynomial lambda, DegreePolynomial rho);

  const DegreePolynomial& lambda() const { return lambda_; }
  const DegreePolynomial& rho() const { return rho_; }
  double design_rate() const { return design_rate_; }

 private:
  DegreePolynomial lambda_;
  DegreePolynomial rho_;
  double design_rate_;
};

// 1 - int(rho)/int(lambda); throws invalid_input when outside (0, 1).
double design_rate(const EnsembleSpec& e);
// Edges per check node, 1/int(rho).
double average_right_degree(const DegreePolynomial& rho);

}  // namespace ldpcbound
