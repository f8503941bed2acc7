#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "netlab/finite_top.hpp"

namespace netlab::sequences {

// Eventually periodic sequences: a finite prefix followed by a repeating
// nonempty cycle. This is the decidable fragment of ω-indexed sequences used
// everywhere in the project; in every space we model, convergence depends
// only on the tail value set, which an eventually periodic tail realizes.

template <typename T>
struct BasicEpSequence {
  std::vector<T> prefix;
  std::vector<T> cycle;  // nonempty

  const T& eval(std::size_t n) const {
    if (cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
    if (n < prefix.size()) return prefix[n];
    return cycle[(n - prefix.size()) % cycle.size()];
  }

  bool operator==(const BasicEpSequence&) const = default;
};

using EpSequence = BasicEpSequence<unsigned>;

/// The tail x_{k}, x_{k+1}, ... as a presentation; tails are subsequences.
template <typename T>
BasicEpSequence<T> drop_leading(const BasicEpSequence<T>& s, std::size_t k) {
  if (s.cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  BasicEpSequence<T> out;
  if (k < s.prefix.size()) {
    out.prefix.assign(s.prefix.begin() + static_cast<std::ptrdiff_t>(k), s.prefix.end());
    out.cycle = s.cycle;
  } else {
    const std::size_t r = (k - s.prefix.size()) % s.cycle.size();
    out.cycle.assign(s.cycle.begin() + static_cast<std::ptrdiff_t>(r), s.cycle.end());
    out.cycle.insert(out.cycle.end(), s.cycle.begin(), s.cycle.begin() + static_cast<std::ptrdiff_t>(r));
  }
  return out;
}

void validate(const EpSequence& s, unsigned carrier);

/// Limits in a finite space: y is a limit iff every neighborhood of y
/// contains every cycle value.
finite_top::PointSet seq_limits(const EpSequence& s, const finite_top::FiniteSpace& space);

struct SeqOpenResult {
  bool sequentially_open = false;
  std::optional<EpSequence> witness;      // sequence in the complement ...
  std::optional<unsigned> witness_limit;  // ... with this limit inside a
};

/// No sequence in the complement converges into a. Decided by the finite
/// criterion (minimal opens) and cross-checked by enumerating eventually
/// periodic sequences valued in the complement.
SeqOpenResult is_sequentially_open(const finite_top::FiniteSpace& space,
                                   const finite_top::PointSet& a);

/// open <=> sequentially open for every subset; true on every finite space.
bool is_sequential(const finite_top::FiniteSpace& space);

/// a sequentially open <=> every sequence with a limit in a has all cycle
/// values in a ("all but finitely many terms", in decidable form).
bool check_lemma_seq(const finite_top::FiniteSpace& space, const finite_top::PointSet& a);

/// The topology whose opens are the sequentially open sets. Equals the input
/// on finite spaces.
finite_top::FiniteSpace seq_coreflection(const finite_top::FiniteSpace& space);

struct CountableBasisCandidate {
  std::vector<finite_top::PointSet> sets;
};

/// One-element basis at x: {minimal_open(x)}, checked against every
/// neighborhood of x.
CountableBasisCandidate first_countable_witness(const finite_top::FiniteSpace& space,
                                                unsigned x);

/// All eventually periodic sequences valued inside `allowed`, with prefix
/// length <= max_prefix and cycle length in [1, max_cycle]. Deterministic
/// order.
std::vector<EpSequence> ep_catalog(unsigned carrier, finite_top::Mask allowed,
                                   unsigned max_prefix = 2, unsigned max_cycle = 2);

}  // namespace netlab::sequences
