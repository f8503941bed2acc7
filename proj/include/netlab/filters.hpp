#pragma once

#include <optional>
#include <vector>

#include "netlab/finite_top.hpp"
#include "netlab/nets.hpp"

namespace netlab::filters {

using finite_top::FiniteSpace;
using finite_top::Mask;
using finite_top::PointSet;

/// Filter on a finite carrier as an explicit family: nonempty, no empty set,
/// closed under pairwise intersection and supersets.
class Filter {
 public:
  Filter(unsigned carrier, std::vector<Mask> sets);

  static Filter principal(unsigned carrier, unsigned point);
  /// Close a nonempty base under intersections and supersets.
  static Filter from_base(unsigned carrier, const std::vector<Mask>& base);
  static std::optional<Filter> try_make(unsigned carrier, std::vector<Mask> sets);

  unsigned carrier() const { return carrier_; }
  const std::vector<Mask>& sets() const { return sets_; }
  bool contains(Mask m) const;

  /// Intersection of all members; nonempty and itself a member.
  Mask kernel() const;

  /// Exactly one of A, complement(A) belongs, for every subset A.
  bool is_ultrafilter() const;

  bool operator==(const Filter&) const = default;

 private:
  struct Unchecked {};
  Filter(unsigned carrier, std::vector<Mask> sets, Unchecked);
  static std::optional<std::vector<Mask>> normalize(unsigned carrier,
                                                    std::vector<Mask> sets);
  unsigned carrier_;
  std::vector<Mask> sets_;  // ascending, unique
};

/// Sets the net is eventually inside. For ω nets membership is decided from
/// the cycle value set.
Filter eventuality_filter(const nets::Net& net);

/// x is a limit iff every neighborhood of x belongs to the filter.
PointSet filter_limits(const Filter& f, const FiniteSpace& space);

/// Net indexed by the member sets under reverse inclusion, with value
/// choice[i] inside the i-th member.
nets::Net filter_to_net(const Filter& f, const std::vector<unsigned>& choice);

/// Intersection of net limits over every admissible choice: the filter
/// converges to x iff every choice net does, so this equals filter_limits.
PointSet filter_limits_via_nets(const Filter& f, const FiniteSpace& space);

/// Principal ultrafilter at the smallest point of the kernel.
Filter ultrafilter_refine(const Filter& f);

/// Limit set of an ultrafilter on a product via the two projection
/// pushforwards; coincides with the direct limit computation on the product.
PointSet tychonoff_limit(const Filter& u, const FiniteSpace& s1, const FiniteSpace& s2);

/// Every filter on the carrier, exhaustively (small carriers only).
std::vector<Filter> enumerate_filters(unsigned carrier);

}  // namespace netlab::filters
