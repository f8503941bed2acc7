#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace netlab::finite_top {

// Finite topological spaces over a carrier {0..n-1}. Subsets are bitmasks,
// open families are explicit sorted lists of masks. Every value here is
// immutable after construction and every operation is a pure function.

using Mask = std::uint32_t;

// Explicit-family representations are exponential in the carrier; this bound
// keeps every exhaustive sweep (2^n subsets, |opens|^2 closure checks) cheap.
inline constexpr unsigned kMaxCarrier = 20;

Mask full_mask(unsigned carrier);

/// A subset of {0..carrier-1}.
struct PointSet {
  unsigned carrier = 0;
  Mask bits = 0;

  static PointSet empty(unsigned carrier);
  static PointSet full(unsigned carrier);
  static PointSet of(unsigned carrier, std::initializer_list<unsigned> pts);
  static PointSet from_points(unsigned carrier, const std::vector<unsigned>& pts);
  static PointSet from_mask(unsigned carrier, Mask bits);

  bool contains(unsigned p) const { return p < carrier && ((bits >> p) & 1u); }
  bool is_empty() const { return bits == 0; }
  unsigned size() const;
  bool subset_of(const PointSet& o) const;
  PointSet complement() const;
  PointSet intersect(const PointSet& o) const;
  PointSet unite(const PointSet& o) const;
  PointSet minus(const PointSet& o) const;
  std::vector<unsigned> points() const;
  std::optional<unsigned> smallest() const;

  bool operator==(const PointSet&) const = default;
};

std::string to_string(const PointSet& s);

/// A topology given by its full open-set family. The constructor
/// canonicalizes (sorts, deduplicates) and rejects families that miss the
/// empty set or the carrier or are not closed under pairwise intersection
/// and union.
class FiniteSpace {
 public:
  FiniteSpace(unsigned carrier, std::vector<Mask> opens);

  static FiniteSpace discrete(unsigned n);
  static FiniteSpace indiscrete(unsigned n);
  static FiniteSpace sierpinski();  // carrier {0,1}, opens {∅, {0}, {0,1}}

  unsigned carrier() const { return carrier_; }
  const std::vector<Mask>& opens() const { return opens_; }

  bool is_open_mask(Mask m) const;
  Mask minimal_open_mask(unsigned x) const;
  Mask closure_mask(Mask a) const;
  Mask interior_mask(Mask a) const;
  std::vector<Mask> opens_containing(unsigned x) const;

  bool operator==(const FiniteSpace&) const = default;

 private:
  unsigned carrier_;
  std::vector<Mask> opens_;  // ascending, unique
};

/// Total function between carriers, values[p] is the image of p.
struct PointMap {
  unsigned domain_size = 0;
  unsigned codomain_size = 0;
  std::vector<unsigned> values;

  unsigned operator()(unsigned p) const { return values.at(p); }
};

void validate_point_map(const PointMap& f);

/// Disjoint nonempty blocks covering the carrier.
struct Partition {
  unsigned carrier = 0;
  std::vector<PointSet> blocks;
};

bool is_valid_partition(const Partition& p);

/// All partitions of {0..n-1}, blocks ordered by first occurrence.
std::vector<Partition> all_partitions(unsigned n);

// ---- operations -----------------------------------------------------------

/// Membership in the open family, cross-checked against the neighborhood
/// criterion (every point of a has its minimal open inside a).
bool is_open(const FiniteSpace& s, const PointSet& a);

/// Intersection of all opens containing x; the one-element basis at x.
PointSet minimal_open(const FiniteSpace& s, unsigned x);

PointSet closure(const FiniteSpace& s, const PointSet& a);
PointSet interior(const FiniteSpace& s, const PointSet& a);

/// Smallest y in a whose minimal open leaks outside a, i.e. the point
/// witnessing that a is not open. nullopt iff a is open.
std::optional<unsigned> open_defect(const FiniteSpace& s, Mask a);

/// Product space on pairs encoded as i*|s2|+j; opens are the unions of open
/// rectangles.
FiniteSpace product(const FiniteSpace& s1, const FiniteSpace& s2);

struct QuotientResult {
  FiniteSpace space;
  PointMap projection;
};

/// Quotient by a partition: a block set is open iff its preimage is open,
/// decided exhaustively over all block subsets.
QuotientResult quotient(const FiniteSpace& s, const Partition& p);

FiniteSpace subspace(const FiniteSpace& s, const PointSet& a);
FiniteSpace disjoint_sum(const std::vector<FiniteSpace>& parts);

/// All open-set families on {0..n-1} satisfying the axioms, n <= 4,
/// deduplicated as families and sorted. The naive axiom filter is the whole
/// algorithm on purpose.
std::vector<FiniteSpace> enumerate_topologies(unsigned n);

bool is_hausdorff(const FiniteSpace& s);

struct CoverCertificate {
  bool compact = false;
  std::vector<PointSet> subcover;  // greedy subcover of the full family
  std::uint64_t coverings_checked = 0;
};

/// Checks that every covering drawn from the basis (default: all opens) has
/// a finite subcover. Trivially true on finite spaces; the point is the
/// exhaustive sweep and the returned certificate.
CoverCertificate is_compact_by_covers(
    const FiniteSpace& s,
    const std::optional<std::vector<PointSet>>& basis = std::nullopt);

/// Compactness by covers agrees with "every closed family with the finite
/// intersection property has nonempty intersection", by enumerating all
/// closed families and all their subfamilies.
bool check_fip_equivalence(const FiniteSpace& s);

}  // namespace netlab::finite_top
