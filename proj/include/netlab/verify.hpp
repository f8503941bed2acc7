#pragma once

#include <string>
#include <vector>

#include "netlab/finite_top.hpp"

namespace netlab::verify {

struct VerdictBlock {
  std::string claim_id;
  bool pass = false;
  std::string witness;
  long long elapsed_ms = 0;
};

struct Report {
  std::vector<VerdictBlock> blocks;

  bool all_pass() const {
    for (const VerdictBlock& b : blocks)
      if (!b.pass) return false;
    return true;
  }
};

/// Claim tags accepted by run_tag, in fixed order.
const std::vector<std::string>& known_tags();

/// Largest size bound a tag accepts (the heavy sweeps are cubic in the
/// topology count).
unsigned max_bound(const std::string& tag);

/// Runs the exhaustive checks for one claim tag up to the carrier size
/// bound. Throws std::invalid_argument for unknown tags or excessive bounds.
Report run_tag(const std::string& tag, unsigned size_bound);

// Individual checks; each emits one block per carrier size (or size pair).
Report check_openseqopen(unsigned bound);
Report check_firstcountableseq(unsigned bound);
Report check_lemmaseq(unsigned bound);
Report check_seq_continuity(unsigned bound);
Report check_quotientseq(unsigned bound);
Report check_franklin(unsigned bound);
Report check_netsopen(unsigned bound);
Report check_netscontinuous(unsigned bound);
Report check_hausdorff_nets(unsigned bound);
Report check_compact_subnets(unsigned bound);
Report check_filter_net_limits(unsigned bound);
Report check_ultrafilter_refine(unsigned bound);
Report check_tychonoff_finite(unsigned bound);

}  // namespace netlab::verify
