#pragma once

#include <memory>
#include <vector>

#include "ldpcbound/bound_result.hpp"

namespace ldpcbound {

enum class ChannelKind { bec, bsc, biawgn };

struct PointMass {
  double llr;     // may be +infinity (perfect observation)
  double weight;  // probability
};

// Memoryless binary-input output-symmetric channel, optionally preceded by an
// erasure stage: with probability pi the output is erased (LLR 0) before the
// channel observation. Values are immutable; all operations are pure.
//
// LLR densities are conditioned on the transmitted bit 0 <-> symbol +1.
class ChannelModel {
 public:
  static ChannelModel bec(double epsilon, double erasure_prefix = 0.0);
  static ChannelModel bsc(double delta, double erasure_prefix = 0.0);
  static ChannelModel biawgn(double sigma, double erasure_prefix = 0.0);
  // Same base channel with a different erasure stage.
  ChannelModel with_erasure_prefix(double pi) const;

  ChannelKind kind() const { return kind_; }
  // epsilon for BEC (erasure prefix already folded in), delta for BSC,
  // sigma for BIAWGN.
  double parameter() const { return param_; }
  double erasure_prefix() const { return prefix_; }

  // Channel capacity in bits per use: (1 - pi) * C_base. BEC/BSC are exact,
  // BIAWGN is adaptive quadrature with error_bound <= 1e-10.
  BoundResult capacity() const;

  // g_p = (1 - pi) * Int_0^inf a(l) (1 + e^-l) tanh^(2p)(l/2) dl, p >= 1.
  // BEC: 1 - epsilon. BSC: (1 - 2 delta)^(2p). BIAWGN: quadrature with
  // error_bound <= 1e-12. The (1 - pi) factor is exact (erased mass sits at
  // l = 0 where the integrand vanishes).
  BoundResult g_moment(int p) const;

  // Continuous part of the LLR density at l (zero for BEC/BSC).
  double llr_density_at(double l) const;
  // Discrete part: point masses (including any erased mass at l = 0).
  std::vector<PointMass> llr_point_masses() const;

  // True when the underlying plain channel (ignoring the erasure stage)
  // is identical.
  bool same_base(const ChannelModel& other) const;

 private:
  ChannelModel(ChannelKind kind, double param, double prefix);
  friend class GMomentSeries;

  ChannelKind kind_;
  double param_;
  double prefix_;
  // Lazily built quadrature grid shared by all moment evaluations (BIAWGN).
  struct MomentGrid;
  std::shared_ptr<MomentGrid> grid() const;
  mutable std::shared_ptr<MomentGrid> grid_;
};

// Streaming evaluator of the moment sequence g_1, g_2, ... for one channel.
// All moments share a single quadrature partition, so advancing by one term
// costs O(nodes). Moments produced this way are exactly nonincreasing in p.
class GMomentSeries {
 public:
  explicit GMomentSeries(const ChannelModel& ch);

  struct Term {
    double value;
    double error;
  };
  // g_p for p = terms_emitted() + 1; advances the internal state.
  Term next();
  int terms_emitted() const { return emitted_; }

  // lim_{p -> inf} g_p: (1 - pi)(1 - epsilon) for a BEC, 0 otherwise.
  double limit() const { return limit_; }

 private:
  ChannelKind kind_;
  double factor_;    // 1 - pi
  double constant_;  // BEC: 1 - epsilon (prefix folded); else unused
  double ratio_;     // BSC: (1 - 2 delta)^2
  double state_;     // BSC: running power
  double limit_;
  int emitted_ = 0;
  std::shared_ptr<const void> grid_keepalive_;
  const double* node_base_ = nullptr;  // weight * a(l) (1 + e^-l), Kronrod
  const double* node_gauss_ = nullptr; // same with embedded Gauss weights
  const double* node_t_ = nullptr;     // tanh^2(l/2)
  std::vector<double> tpow_;
  int nodes_ = 0;
  double tail_bound_ = 0.0;
};

}  // namespace ldpcbound
