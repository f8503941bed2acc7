#pragma once

#include <string>
#include <vector>

#include "netlab/finite_top.hpp"
#include "netlab/ordinal.hpp"
#include "netlab/sequences.hpp"
#include "netlab/symbolic.hpp"

namespace netlab::cli {

/// Human-readable certificate plus the machine verdict block.
struct Certificate {
  std::vector<std::string> lines;  // the human-readable part
  std::string name;
  std::string claim;
  std::string witness;
  bool checked = false;
};

/// Certificate text followed by the line-oriented verdict block.
std::string render(const Certificate& c);

/// Countable-complement topology: a finite nonempty set is sequentially open
/// but not open.
Certificate counterexample_cc(const std::string& atom);

/// The interval covering of the countable ordinals has no finite subcover,
/// and eventually periodic ordinal sequences keep their suprema countable.
Certificate counterexample_ordinal(const std::vector<symbolic::CnfOrdinal>& alphas);

/// Pointwise limits of finite-set sequences are finite sets inside the union
/// of terms.
Certificate counterexample_product(
    const sequences::BasicEpSequence<std::vector<std::string>>& s);

/// The digit-alternating rational defeating a candidate subsequence of the
/// binary-digit sequence.
Certificate counterexample_binary_digits(const std::vector<unsigned>& indices);

/// No finite list of apex neighborhoods is a basis at the fan apex.
Certificate counterexample_fan(unsigned candidate_count);

/// Open reflection along the quotient from a sum of convergent-sequence
/// spaces, over every subset of the base.
Certificate counterexample_franklin(const finite_top::FiniteSpace& base);

}  // namespace netlab::cli
