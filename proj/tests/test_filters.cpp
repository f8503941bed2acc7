#include "netlab/filters.hpp"

#include <bit>

#include "doctest.h"

using namespace netlab::filters;
using netlab::finite_top::FiniteSpace;
using netlab::finite_top::Mask;
using netlab::finite_top::PointSet;
using netlab::nets::DirectedSet;
using netlab::nets::Net;
using netlab::sequences::EpSequence;

namespace {
const FiniteSpace kSierp = FiniteSpace::sierpinski();
}

TEST_CASE("filter axioms are enforced") {
  CHECK_THROWS_AS(Filter(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(Filter(2, {0b00, 0b11}), std::invalid_argument);  // holds the empty set
  CHECK_THROWS_AS(Filter(2, {0b01}), std::invalid_argument);        // misses a superset
  CHECK_NOTHROW(Filter(2, {0b01, 0b11}));
  CHECK_NOTHROW(Filter(2, {0b11}));
  CHECK(Filter::from_base(3, {0b011, 0b110}).kernel() == 0b010);
  CHECK_THROWS_AS(Filter::from_base(2, {0b01, 0b10}), std::invalid_argument);
}

TEST_CASE("eventuality filters") {
  const Net constant = Net::finite(2, DirectedSet::chain(1), {0});
  CHECK(eventuality_filter(constant) == Filter::principal(2, 0));

  const Net ab = Net::finite(2, DirectedSet::chain(2), {0, 1});
  const Filter f = eventuality_filter(ab);
  CHECK(f.sets() == std::vector<Mask>{0b10, 0b11});  // exactly the sets holding b

  const Net osc = Net::omega(2, EpSequence{{}, {0, 1}});
  CHECK(eventuality_filter(osc).sets() == std::vector<Mask>{0b11});
}

TEST_CASE("filter limits") {
  CHECK(filter_limits(Filter::principal(2, 0), FiniteSpace::discrete(2)) ==
        PointSet::of(2, {0}));
  CHECK(filter_limits(Filter::principal(2, 0), kSierp) == PointSet::full(2));
  CHECK(filter_limits(Filter(2, {0b11}), FiniteSpace::indiscrete(2)) == PointSet::full(2));
}

TEST_CASE("filters to nets, over every choice") {
  // the filter converges to x iff every choice net does: each choice net
  // converges wherever the filter does, and the intersection over all
  // choices gives back exactly the filter limits
  for (unsigned n = 1; n <= 3; ++n)
    for (const Filter& f : enumerate_filters(n))
      for (const FiniteSpace& s : netlab::finite_top::enumerate_topologies(n)) {
        const PointSet expected = filter_limits(f, s);
        CHECK(filter_limits_via_nets(f, s) == expected);
        std::vector<std::vector<unsigned>> members;
        for (Mask m : f.sets()) {
          std::vector<unsigned> pts;
          for (unsigned p = 0; p < n; ++p)
            if ((m >> p) & 1u) pts.push_back(p);
          members.push_back(std::move(pts));
        }
        std::vector<std::size_t> idx(members.size(), 0);
        while (true) {
          std::vector<unsigned> choice;
          for (std::size_t i = 0; i < members.size(); ++i)
            choice.push_back(members[i][idx[i]]);
          CHECK(expected.subset_of(netlab::nets::net_limits(filter_to_net(f, choice), s)));
          std::size_t i = idx.size();
          bool done = true;
          while (i > 0) {
            --i;
            if (++idx[i] < members[i].size()) {
              done = false;
              break;
            }
            idx[i] = 0;
          }
          if (done) break;
        }
      }
}

TEST_CASE("a single choice net can converge strictly beyond its filter") {
  // the whole-space filter on the discrete pair converges nowhere, yet the
  // one-element choice net at a converges to a
  const Filter whole(2, {0b11});
  const FiniteSpace d2 = FiniteSpace::discrete(2);
  CHECK(filter_limits(whole, d2) == PointSet::empty(2));
  CHECK(netlab::nets::net_limits(filter_to_net(whole, {0}), d2) == PointSet::of(2, {0}));
  CHECK(filter_limits_via_nets(whole, d2) == PointSet::empty(2));
}

TEST_CASE("principal ultrafilter choice nets hit the filter limits exactly") {
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned p = 0; p < n; ++p) {
      const Filter u = Filter::principal(n, p);
      for (const FiniteSpace& s : netlab::finite_top::enumerate_topologies(n)) {
        // the choice at the kernel is forced, and the kernel is the top of
        // the reverse-inclusion order, so every choice net has the same limits
        std::vector<unsigned> choice(u.sets().size(), p);
        CHECK(netlab::nets::net_limits(filter_to_net(u, choice), s) == filter_limits(u, s));
      }
    }
}

TEST_CASE("choice validation") {
  const Filter f = Filter::principal(2, 1);
  CHECK_THROWS_AS(filter_to_net(f, {0}), std::invalid_argument);      // wrong length
  CHECK_THROWS_AS(filter_to_net(f, {0, 0}), std::invalid_argument);   // 0 not in {1}
}

TEST_CASE("ultrafilter refinement") {
  CHECK(ultrafilter_refine(Filter(2, {0b11})) == Filter::principal(2, 0));
  const Filter u = Filter::principal(2, 1);
  CHECK(ultrafilter_refine(u) == u);

  const Filter ab_core = Filter::from_base(3, {0b011});
  CHECK(ultrafilter_refine(ab_core) == Filter::principal(3, 0));

  for (unsigned n = 1; n <= 3; ++n)
    for (const Filter& f : enumerate_filters(n)) {
      const Filter r = ultrafilter_refine(f);
      CHECK(r.is_ultrafilter());
      for (Mask m : f.sets()) CHECK(r.contains(m));
    }
}

TEST_CASE("ultrafilters on finite carriers are principal") {
  for (unsigned n = 1; n <= 3; ++n)
    for (const Filter& f : enumerate_filters(n))
      if (f.is_ultrafilter()) {
        CHECK(std::popcount(f.kernel()) == 1);
        CHECK(f == Filter::principal(n, static_cast<unsigned>(std::countr_zero(f.kernel()))));
      }
}

TEST_CASE("product limits via projections") {
  const FiniteSpace d2 = FiniteSpace::discrete(2);
  const Filter at_ab = Filter::principal(4, 0 * 2 + 1);  // the pair (a=0, b=1)
  CHECK(tychonoff_limit(at_ab, d2, d2) == PointSet::of(4, {1}));

  // principal at (a,a) in the double Sierpinski space: every point converges
  const Filter at_aa = Filter::principal(4, 0);
  const PointSet all = tychonoff_limit(at_aa, kSierp, kSierp);
  CHECK(all == PointSet::full(4));
  CHECK(all == filter_limits(at_aa, netlab::finite_top::product(kSierp, kSierp)));

  for (const FiniteSpace& s1 : netlab::finite_top::enumerate_topologies(2))
    for (const FiniteSpace& s2 : netlab::finite_top::enumerate_topologies(2)) {
      const FiniteSpace prod = netlab::finite_top::product(s1, s2);
      for (const Filter& u : enumerate_filters(4))
        if (u.is_ultrafilter())
          CHECK(tychonoff_limit(u, s1, s2) == filter_limits(u, prod));
    }
}

TEST_CASE("net limits equal eventuality filter limits over the catalog") {
  for (unsigned n = 1; n <= 2; ++n)
    for (const FiniteSpace& s : netlab::finite_top::enumerate_topologies(n))
      for (const Net& net : netlab::nets::net_catalog(n, netlab::finite_top::full_mask(n)))
        CHECK(netlab::nets::net_limits(net, s) ==
              filter_limits(eventuality_filter(net), s));
}

TEST_CASE("compact iff every ultrafilter converges") {
  for (unsigned n = 1; n <= 3; ++n)
    for (const FiniteSpace& s : netlab::finite_top::enumerate_topologies(n)) {
      bool all_converge = true;
      for (const Filter& f : enumerate_filters(n))
        if (f.is_ultrafilter() && filter_limits(f, s).is_empty()) all_converge = false;
      CHECK(netlab::finite_top::is_compact_by_covers(s).compact == all_converge);
    }
}
