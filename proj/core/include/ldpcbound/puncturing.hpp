#pragma once

#include <vector>

#include "ldpcbound/degree_polynomial.hpp"
#include "ldpcbound/parallel_assignment.hpp"

namespace ldpcbound {

struct PuncturingTerm {
  int degree;  // variable-node degree j
  double pi;   // puncturing rate in [0, 1]
};

// Degree-indexed puncturing rates pi_j. Degrees without an entry are
// unpunctured (pi = 0).
class PuncturingPattern {
 public:
  PuncturingPattern() = default;  // empty pattern, nothing punctured
  explicit PuncturingPattern(std::vector<PuncturingTerm> terms);

  const std::vector<PuncturingTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  double rate_for(int degree) const;  // 0 when absent

 private:
  std::vector<PuncturingTerm> terms_;
};

// p^(0) = sum_j Lambda_j pi_j, the average puncturing rate of the code bits.
// lambda_node is the node-perspective variable degree distribution; the
// pattern degrees must be contained in its support.
double average_puncturing_rate(const PuncturingPattern& pattern,
                               const DegreePolynomial& lambda_node);

// Equivalent parallel-channel view of intentional puncturing: one entry per
// variable degree j with p_j = Lambda_j, q_j = lambda_j and the base channel
// preceded by an erasure stage of probability pi_j.
ParallelAssignment ip_decomposition(const EnsembleSpec& e, const ChannelModel& ch,
                                    const PuncturingPattern& pattern);

// Equivalent parallel-channel view of random puncturing of an a-priori
// selected fraction alpha of the bits at rate p_pct. The selected subset's
// edge fraction is chosen as q_sel = 1 - xi/p_pct (q_sel = alpha when
// p_pct = 0) with xi = 2 (1 - alpha) p_pct Int lambda, which makes the
// mixture moment (1 - q_sel p_pct) g_p equal the worst-case series argument
// (1 - p_pct + xi) g_p of the random-puncturing rate bound.
ParallelAssignment rp_decomposition(const EnsembleSpec& e, const ChannelModel& ch,
                                    double alpha, double p_pct);

}  // namespace ldpcbound
