#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "netlab/finite_top.hpp"
#include "netlab/sequences.hpp"

namespace netlab::nets {

using finite_top::FiniteSpace;
using finite_top::Mask;
using finite_top::PointSet;
using sequences::EpSequence;

/// Preorder on {0..size-1} given by a full relation matrix. Directedness is
/// not enforced on construction; check_directed reports violations.
class DirectedSet {
 public:
  DirectedSet(unsigned size, std::vector<bool> leq);

  static DirectedSet chain(unsigned n);
  static DirectedSet singleton() { return chain(1); }

  unsigned size() const { return size_; }
  bool leq(unsigned a, unsigned b) const { return leq_[a * size_ + b]; }

  /// Elements above every element (nonempty on finite directed sets).
  std::vector<unsigned> top_class() const;

  bool operator==(const DirectedSet&) const = default;

 private:
  unsigned size_;
  std::vector<bool> leq_;  // row-major
};

struct DirectedCheck {
  enum class Failure { None, NotReflexive, NotTransitive, NoUpperBound };
  bool ok = false;
  Failure failure = Failure::None;
  unsigned a = 0, b = 0, c = 0;  // witnesses; meaning depends on failure
};

DirectedCheck check_directed(const DirectedSet& d);

/// Componentwise order on pairs (i,j) encoded as i*|e|+j.
DirectedSet product_directed(const DirectedSet& d, const DirectedSet& e);

struct NeighborhoodSystem {
  DirectedSet order;               // reverse inclusion
  std::vector<Mask> element_open;  // the open set labelling each element
};

/// All neighborhoods of x ordered by reverse inclusion; directed because the
/// open family is intersection-closed.
NeighborhoodSystem neighborhood_directed(const FiniteSpace& space, unsigned x);

struct FiniteNet {
  DirectedSet index;
  std::vector<unsigned> values;
};

/// A net is either finitely indexed or ω-indexed (an eventually periodic
/// sequence).
struct Net {
  unsigned carrier = 0;
  std::variant<FiniteNet, EpSequence> body;

  static Net finite(unsigned carrier, DirectedSet index, std::vector<unsigned> values);
  static Net omega(unsigned carrier, EpSequence s);

  bool is_omega() const { return std::holds_alternative<EpSequence>(body); }
  const FiniteNet& as_finite() const { return std::get<FiniteNet>(body); }
  const EpSequence& as_omega() const { return std::get<EpSequence>(body); }
};

/// Image of a net under a point map.
Net map_net(const finite_top::PointMap& f, const Net& net);

/// y is a limit iff the net is eventually inside every neighborhood of y.
PointSet net_limits(const Net& net, const FiniteSpace& space);

/// y is a cluster point iff every neighborhood of y is hit arbitrarily late.
PointSet cluster_points(const Net& net, const FiniteSpace& space);

/// Reindexing map. Finite sources list every value; ω sources use a finite
/// prefix followed by the integer-division tail e |-> mul*e/div + add
/// (div = 1 recovers the plain affine tail; div = 2 with mul = 1 presents
/// e |-> floor(e/2)).
struct SubnetMap {
  bool source_omega = false;
  bool target_omega = false;
  std::vector<std::uint64_t> prefix;
  std::uint64_t mul = 0;
  std::uint64_t div = 1;
  std::uint64_t add = 0;

  std::uint64_t apply(std::uint64_t e) const;
};

/// candidate = outer ∘ map, map order preserving, image cofinal.
bool is_subnet(const SubnetMap& map, const Net& outer, const Net& candidate);

struct SubnetConstruction {
  SubnetMap map;
  Net subnet;
  // finite case: the element (d, U) behind each index of the new directed set
  std::vector<std::pair<unsigned, Mask>> element_labels;
};

/// The convergent subnet through a cluster point y: for finite nets the
/// index is E = {(d,U) : x_d ∈ U} with the projection map; for ω nets an
/// arithmetic subsequence that is constantly the first cycle value lying in
/// the minimal open of y.
SubnetConstruction subnet_from_cluster(const Net& net, const FiniteSpace& space, unsigned y);

// ---- catalogs --------------------------------------------------------------

/// Directed sets up to order isomorphism, sizes 1..max_size, deterministic.
std::vector<DirectedSet> directed_catalog(unsigned max_size);

/// Finite nets over the catalog directed sets plus eventually periodic
/// nets, all valued inside `allowed`.
std::vector<Net> net_catalog(unsigned carrier, Mask allowed,
                             unsigned max_directed_size = 3,
                             unsigned max_prefix = 2, unsigned max_cycle = 2);

// ---- whole-space checks ----------------------------------------------------

struct OpennessWitness {
  PointSet a;          // the non-open subset
  unsigned limit = 0;  // the point of a the witness converges to
  Net witness;         // valued in the complement of a
};

struct OpennessReport {
  bool ok = false;
  std::vector<OpennessWitness> witnesses;
  std::uint64_t nets_checked = 0;
};

/// For every open subset no catalog net in the complement converges in; for
/// every non-open subset the neighborhood-indexed witness net does.
OpennessReport verify_net_openness(const FiniteSpace& space);

struct ContinuityCheck {
  bool by_preimage = false;
  bool by_nets = false;
  bool agree() const { return by_preimage == by_nets; }
};

/// Continuity by preimages vs preservation of convergence over the openness
/// witness nets and the eventually periodic catalog.
ContinuityCheck verify_net_continuity(const finite_top::PointMap& f, const FiniteSpace& s1,
                                      const FiniteSpace& s2);

struct HausdorffReport {
  bool hausdorff = false;
  bool ok = false;
  std::optional<Net> witness;  // doubly convergent net when not Hausdorff
  unsigned x = 0, y = 0;
};

/// Hausdorff iff no net has two distinct limits; the negative direction
/// builds the net over N(x) x N(y).
HausdorffReport verify_hausdorff_net(const FiniteSpace& space);

struct CompactReport {
  bool ok = false;
  std::uint64_t nets_checked = 0;
};

/// Every catalog net has a cluster point and subnet_from_cluster yields a
/// genuine convergent subnet.
CompactReport verify_compact_subnets(const FiniteSpace& space);

}  // namespace netlab::nets
