#pragma once

#include <vector>

#include "ldpcbound/channel.hpp"

namespace ldpcbound {

struct AssignmentEntry {
  double bit_fraction;   // p_j, fraction of code bits on this channel
  double edge_fraction;  // q_j, fraction of edges on this channel
  ChannelModel channel;
};

// How code bits and edges split across J parallel channels. Both fraction
// vectors must be positive and sum to 1 within 1e-10.
class ParallelAssignment {
 public:
  explicit ParallelAssignment(std::vector<AssignmentEntry> entries);

  const std::vector<AssignmentEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<AssignmentEntry> entries_;
};

}  // namespace ldpcbound
