#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "netlab/finite_top.hpp"
#include "netlab/ordinal.hpp"
#include "netlab/rational.hpp"
#include "netlab/sequences.hpp"

namespace netlab::symbolic {

// Finitely presented infinite spaces. Sets are descriptors with exact
// openness oracles per family; uncountability is a cardinality class, never
// an enumeration. Unsupported descriptor combinations raise
// descriptor_closure_error instead of approximating.

struct descriptor_closure_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- countable-complement topology on an uncountable carrier --------------

/// Named sample points and named countable subsets of the abstract carrier.
struct CcRegistry {
  std::vector<std::string> atoms;
  std::vector<std::string> tags;

  bool has_atom(const std::string& a) const;
  bool has_tag(const std::string& t) const;
};

struct SetDescriptor {
  enum class Kind { Empty, Full, Finite, Cofinite, CountableTag, CoCountableTag };
  Kind kind = Kind::Empty;
  std::vector<std::string> atoms;  // Finite / Cofinite
  std::string tag;                 // CountableTag / CoCountableTag

  static SetDescriptor empty() { return {Kind::Empty, {}, {}}; }
  static SetDescriptor full() { return {Kind::Full, {}, {}}; }
  static SetDescriptor finite(std::vector<std::string> atoms);
  static SetDescriptor cofinite(std::vector<std::string> atoms);
  static SetDescriptor countable_tag(std::string tag);
  static SetDescriptor co_countable_tag(std::string tag);

  bool operator==(const SetDescriptor&) const = default;
};

std::string to_string(const SetDescriptor& d);

/// Open iff empty or co-countable.
bool cc_is_open(const CcRegistry& reg, const SetDescriptor& d);

/// Limits of an atom-valued sequence: the constant cycle value or nothing,
/// by the punctured co-countable neighborhood.
SetDescriptor cc_seq_limits(const CcRegistry& reg,
                            const sequences::BasicEpSequence<std::string>& s);

/// Every descriptor is sequentially open here: a convergent sequence is
/// eventually constant, so its limit stays in its own value set.
bool cc_sequentially_open(const CcRegistry& reg, const SetDescriptor& d);

SetDescriptor cc_complement(const SetDescriptor& d);

// ---- finite-or-cofinite sets of naturals -----------------------------------

struct NatSet {
  bool cofinite = false;
  std::vector<std::uint64_t> atoms;  // members, or exclusions when cofinite

  static NatSet finite(std::vector<std::uint64_t> atoms);
  static NatSet cofinite_excluding(std::vector<std::uint64_t> atoms);
  static NatSet all() { return cofinite_excluding({}); }
  static NatSet none() { return finite({}); }

  bool contains(std::uint64_t n) const;
  bool subset_of(const NatSet& o) const;
  /// Smallest member; nullopt only for the empty finite set.
  std::optional<std::uint64_t> smallest_member() const;

  bool operator==(const NatSet&) const = default;
};

std::string to_string(const NatSet& s);

// ---- the convergent-sequence space ω+1 -------------------------------------

/// A subset of ℕ ∪ {∞}.
struct OmegaPlusOneSet {
  NatSet naturals;
  bool has_inf = false;
};

/// Naturals are isolated; a set containing ∞ is open iff it is cofinite.
bool omega_plus_one_is_open(const OmegaPlusOneSet& d);

// ---- the sequential fan -----------------------------------------------------

/// Subset of the fan: countably many spokes of naturals glued at one apex.
/// Finitely many spokes carry exceptional traces, the rest follow the
/// default rule.
struct FanSetDescriptor {
  bool apex = false;
  std::map<std::uint64_t, NatSet> exceptional;
  NatSet default_rule;

  const NatSet& spoke_trace(std::uint64_t spoke) const;
  bool contains(std::uint64_t spoke, std::uint64_t n) const;

  bool operator==(const FanSetDescriptor&) const = default;
};

/// Spoke points are isolated; a set containing the apex is open iff every
/// spoke trace is cofinite.
bool fan_is_open(const FanSetDescriptor& d);

bool fan_subset(const FanSetDescriptor& inner, const FanSetDescriptor& outer);

/// A point of inner outside outer: (spoke, natural).
std::optional<std::pair<std::uint64_t, std::uint64_t>> fan_not_subset_witness(
    const FanSetDescriptor& inner, const FanSetDescriptor& outer);

/// Open apex neighborhood W containing no candidate: on spoke i the trace of
/// W omits the least natural retained by candidate i there. No finite list
/// is a basis at the apex.
FanSetDescriptor fan_defeat_basis(const std::vector<FanSetDescriptor>& candidates);

// ---- pointwise limits of finite-set sequences -------------------------------

struct Diverges {
  std::string unstable_atom;  // in some cycle sets but not all

  bool operator==(const Diverges&) const = default;
};

using PointwiseLimit = std::variant<std::vector<std::string>, Diverges>;

/// Pointwise limit of a sequence of explicit finite sets: an atom belongs
/// iff it lies in every cycle set. Always a finite set, contained in the
/// union of terms.
PointwiseLimit product_pointwise_limit(
    const sequences::BasicEpSequence<std::vector<std::string>>& s);

// ---- the tagged family of symbolic spaces ------------------------------------

struct RationalInterval {
  Rational lo;
  Rational hi;  // the half-open index interval [lo, hi)
};

/// The finitely presented infinite spaces as one tagged value. Each family
/// carries its own descriptor type and openness oracle (cc_is_open,
/// ord_is_isolated / interval membership, omega_plus_one_is_open,
/// fan_is_open, and the binary-digit operations for the product).
struct SymbolicSpace {
  struct CountableComplement {
    CcRegistry registry;
  };
  struct OrdinalIntervalSpace {
    OrdinalInterval interval;
  };
  struct OmegaPlusOne {};
  struct SequentialFan {};
  struct BinaryProduct {
    RationalInterval index;
  };

  std::variant<CountableComplement, OrdinalIntervalSpace, OmegaPlusOne, SequentialFan,
               BinaryProduct>
      family;
};

std::string to_string(const SymbolicSpace& s);

// ---- the Franklin construction ----------------------------------------------

/// A base space plus sequences converging to their first term. Must include
/// every constant sequence.
struct FranklinPresentation {
  finite_top::FiniteSpace base;
  std::vector<sequences::EpSequence> samples;
};

struct FranklinSpace {
  std::size_t copies = 0;  // disjoint sum of this many ω+1 copies
};

struct OmegaPlusOnePoint {
  bool is_inf = false;
  std::uint64_t n = 0;
};

/// Validates the presentation and returns the disjoint sum of one ω+1 copy
/// per sample; the quotient map is franklin_map.
FranklinSpace franklin_build(const FranklinPresentation& p);

/// ∞ of copy k maps to the sample's first term, natural n maps to its n-th.
unsigned franklin_map(const FranklinPresentation& p, std::size_t copy,
                      const OmegaPlusOnePoint& pt);

/// a open in the base <=> every copy trace of its preimage is open in ω+1.
bool franklin_check_open_reflection(const FranklinPresentation& p,
                                    const finite_top::PointSet& a);

/// Constants plus, for every non-open subset, a witness sequence converging
/// to a point of the subset from its complement.
FranklinPresentation franklin_witness_presentation(const finite_top::FiniteSpace& base);

}  // namespace netlab::symbolic
