#include "netlab/nets.hpp"

#include "doctest.h"

using namespace netlab::nets;
using netlab::finite_top::FiniteSpace;
using netlab::finite_top::Mask;
using netlab::finite_top::PointMap;
using netlab::finite_top::PointSet;
using netlab::sequences::EpSequence;

namespace {

const FiniteSpace kSierp = FiniteSpace::sierpinski();

DirectedSet antichain2() {
  return DirectedSet(2, {true, false, false, true});
}

// subsets of {0,1} ordered by reverse inclusion
DirectedSet powerset_reverse_inclusion() {
  const unsigned n = 4;
  std::vector<bool> leq(n * n, false);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) leq[a * n + b] = (b & ~a) == 0;
  return DirectedSet(n, leq);
}

}  // namespace

TEST_CASE("directedness checks") {
  CHECK(check_directed(DirectedSet::chain(3)).ok);
  const DirectedCheck bad = check_directed(antichain2());
  CHECK_FALSE(bad.ok);
  CHECK(bad.failure == DirectedCheck::Failure::NoUpperBound);
  CHECK(((bad.a == 0 && bad.b == 1) || (bad.a == 1 && bad.b == 0)));
  CHECK(check_directed(powerset_reverse_inclusion()).ok);
}

TEST_CASE("products of directed sets") {
  const DirectedSet p = product_directed(DirectedSet::chain(2), DirectedSet::chain(2));
  CHECK(p.size() == 4);
  CHECK(check_directed(p).ok);
  CHECK(p.top_class() == std::vector<unsigned>{3});

  const DirectedSet q = product_directed(DirectedSet::chain(1), DirectedSet::chain(3));
  CHECK(q.size() == 3);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) CHECK(q.leq(i, j) == DirectedSet::chain(3).leq(i, j));

  // neighborhood systems of the two Sierpinski points multiply to a 2-chain
  const NeighborhoodSystem na = neighborhood_directed(kSierp, 0);
  const NeighborhoodSystem nb = neighborhood_directed(kSierp, 1);
  CHECK(na.order.size() == 2);
  CHECK(nb.order.size() == 1);
  const DirectedSet prod = product_directed(na.order, nb.order);
  CHECK(prod.size() == 2);
  CHECK(check_directed(prod).ok);
  CHECK((prod.leq(1, 0) != prod.leq(0, 1)));  // a genuine chain, not a cluster

  CHECK_THROWS_AS(product_directed(antichain2(), DirectedSet::chain(1)),
                  std::invalid_argument);
}

TEST_CASE("neighborhood systems") {
  const NeighborhoodSystem n0 = neighborhood_directed(FiniteSpace::discrete(2), 0);
  CHECK(n0.element_open == std::vector<Mask>{0b01, 0b11});
  CHECK(n0.order.leq(1, 0));  // the smaller set is higher
  CHECK_FALSE(n0.order.leq(0, 1));
  CHECK(neighborhood_directed(FiniteSpace::indiscrete(3), 2).order.size() == 1);
}

TEST_CASE("net limits") {
  const Net constant = Net::finite(2, DirectedSet::chain(1), {0});
  CHECK(net_limits(constant, kSierp).contains(0));
  CHECK(net_limits(constant, FiniteSpace::indiscrete(2)) == PointSet::full(2));

  const Net seq = Net::omega(2, EpSequence{{0}, {1}});
  CHECK(net_limits(seq, kSierp) == PointSet::of(2, {1}));

  CHECK_THROWS_AS(Net::finite(2, DirectedSet::chain(1), {5}), std::invalid_argument);
  CHECK_THROWS_AS(Net::finite(2, DirectedSet::chain(2), {0}), std::invalid_argument);
  CHECK_THROWS_AS(Net::finite(2, antichain2(), {0, 1}), std::invalid_argument);
}

TEST_CASE("cluster points") {
  const Net osc = Net::omega(2, EpSequence{{}, {0, 1}});
  CHECK(cluster_points(osc, FiniteSpace::discrete(2)) == PointSet::full(2));
  CHECK(net_limits(osc, FiniteSpace::discrete(2)) == PointSet::empty(2));

  const Net constant = Net::finite(2, DirectedSet::chain(1), {1});
  CHECK(cluster_points(constant, kSierp) == net_limits(constant, kSierp));

  CHECK(cluster_points(osc, FiniteSpace::indiscrete(2)) == PointSet::full(2));
}

TEST_CASE("subnet recognition") {
  const Net outer = Net::omega(2, EpSequence{{}, {0, 1}});

  SubnetMap identity;
  identity.source_omega = identity.target_omega = true;
  identity.mul = identity.div = 1;
  CHECK(is_subnet(identity, outer, outer));

  // e -> floor(e/2) is order preserving, cofinal, and not injective
  SubnetMap halved;
  halved.source_omega = halved.target_omega = true;
  halved.mul = 1;
  halved.div = 2;
  CHECK(halved.apply(0) == halved.apply(1));  // not injective
  const Net cand = Net::omega(2, EpSequence{{}, {0, 0, 1, 1}});
  CHECK(is_subnet(halved, outer, cand));
  CHECK_FALSE(is_subnet(halved, outer, outer));  // values must follow the map

  SubnetMap constant;
  constant.source_omega = constant.target_omega = true;
  constant.mul = 0;
  constant.add = 0;
  CHECK_FALSE(is_subnet(constant, outer, Net::omega(2, EpSequence{{}, {0}})));  // not cofinal

  // finite into finite: identity works, a non-cofinal restriction does not
  const Net fin = Net::finite(2, DirectedSet::chain(2), {1, 0});
  SubnetMap fid;
  fid.prefix = {0, 1};
  CHECK(is_subnet(fid, fin, fin));
  SubnetMap first_only;
  first_only.prefix = {0};
  const Net head = Net::finite(2, DirectedSet::chain(1), {1});
  CHECK_FALSE(is_subnet(first_only, fin, head));
}

TEST_CASE("subnet maps with prefixes and finite targets") {
  // ω into ω with a repeated prefix before the affine tail
  const Net outer = Net::omega(2, EpSequence{{}, {0, 1}});
  SubnetMap stall;
  stall.source_omega = stall.target_omega = true;
  stall.prefix = {0, 0};
  stall.mul = stall.div = 1;
  const Net stalled = Net::omega(2, EpSequence{{0, 0}, {0, 1}});
  CHECK(is_subnet(stall, outer, stalled));

  // a prefix value above the tail start breaks order preservation
  SubnetMap backwards = stall;
  backwards.prefix = {2};
  CHECK_FALSE(is_subnet(backwards, outer, Net::omega(2, EpSequence{{0}, {0, 1}})));

  // halving tail composed past the outer prefix
  const Net shifted = Net::omega(2, EpSequence{{1}, {0, 1}});
  SubnetMap halved;
  halved.source_omega = halved.target_omega = true;
  halved.prefix = {0};
  halved.mul = 1;
  halved.div = 2;
  const Net composed = Net::omega(2, EpSequence{{1, 1}, {0, 0, 1, 1}});
  CHECK(is_subnet(halved, shifted, composed));

  // ω into a finite chain: eventually constant at the top is a subnet
  const Net fin = Net::finite(2, DirectedSet::chain(2), {1, 0});
  SubnetMap settle;
  settle.source_omega = true;
  settle.prefix = {0};
  settle.mul = 0;
  settle.add = 1;
  const Net tail_net = Net::omega(2, EpSequence{{1}, {0}});
  CHECK(is_subnet(settle, fin, tail_net));
  for (const FiniteSpace& s : netlab::finite_top::enumerate_topologies(2))
    CHECK(net_limits(fin, s).subset_of(net_limits(tail_net, s)));

  // an unbounded map cannot land in a finite index
  SubnetMap runaway = settle;
  runaway.mul = 1;
  CHECK_THROWS_AS(is_subnet(runaway, fin, tail_net), std::invalid_argument);

  // settling below the top is order preserving but not cofinal
  SubnetMap low;
  low.source_omega = true;
  low.mul = 0;
  low.add = 0;
  CHECK_FALSE(is_subnet(low, fin, Net::omega(2, EpSequence{{}, {1}})));
}

TEST_CASE("subnets through cluster points") {
  // constant net: E is the whole product with the neighborhood system
  const Net constant = Net::finite(2, DirectedSet::chain(2), {1, 1});
  const SubnetConstruction sc = subnet_from_cluster(constant, kSierp, 1);
  CHECK(is_subnet(sc.map, constant, sc.subnet));
  CHECK(net_limits(sc.subnet, kSierp).contains(1));
  CHECK(sc.element_labels.size() == 2);  // one neighborhood of b, two indices

  const Net aba = Net::finite(2, DirectedSet::chain(3), {0, 1, 0});
  const SubnetConstruction sc2 = subnet_from_cluster(aba, FiniteSpace::indiscrete(2), 0);
  CHECK(is_subnet(sc2.map, aba, sc2.subnet));
  CHECK(net_limits(sc2.subnet, FiniteSpace::indiscrete(2)).contains(0));

  const Net ba = Net::finite(2, DirectedSet::chain(2), {1, 0});
  const SubnetConstruction sc3 = subnet_from_cluster(ba, kSierp, 0);
  CHECK_FALSE(sc3.element_labels.empty());
  CHECK(net_limits(sc3.subnet, kSierp).contains(0));

  const Net osc = Net::omega(2, EpSequence{{}, {0, 1}});
  const SubnetConstruction sc4 = subnet_from_cluster(osc, FiniteSpace::discrete(2), 0);
  CHECK(is_subnet(sc4.map, osc, sc4.subnet));
  CHECK(net_limits(sc4.subnet, FiniteSpace::discrete(2)).contains(0));

  CHECK_THROWS_AS(subnet_from_cluster(osc, FiniteSpace::discrete(2), 2),
                  std::invalid_argument);
  const Net just_a = Net::omega(2, EpSequence{{}, {0}});
  CHECK_THROWS_AS(subnet_from_cluster(just_a, FiniteSpace::discrete(2), 1),
                  std::invalid_argument);
}

TEST_CASE("directed catalog") {
  const auto catalog = directed_catalog(3);
  for (const DirectedSet& d : catalog) CHECK(check_directed(d).ok);
  // sizes 1 and 2 contribute the singleton, the chain, and the two-cluster
  unsigned size1 = 0, size2 = 0;
  for (const DirectedSet& d : catalog) {
    if (d.size() == 1) ++size1;
    if (d.size() == 2) ++size2;
  }
  CHECK(size1 == 1);
  CHECK(size2 == 2);
  // every finite directed set has a nonempty top class
  for (const DirectedSet& d : directed_catalog(4)) CHECK_FALSE(d.top_class().empty());
}

TEST_CASE("finite-index convergence is membership of the top class values") {
  for (const FiniteSpace& s : netlab::finite_top::enumerate_topologies(2)) {
    for (const Net& net : net_catalog(2, 0b11, 4, 0, 1)) {
      if (net.is_omega()) continue;
      const FiniteNet& fn = net.as_finite();
      for (unsigned y = 0; y < 2; ++y) {
        bool by_top = true;
        for (Mask u : s.opens_containing(y))
          for (unsigned m : fn.index.top_class())
            if (!((u >> fn.values[m]) & 1u)) by_top = false;
        CHECK(net_limits(net, s).contains(y) == by_top);
      }
    }
  }
}

TEST_CASE("openness via nets") {
  const OpennessReport sierp_report = verify_net_openness(kSierp);
  CHECK(sierp_report.ok);
  REQUIRE(sierp_report.witnesses.size() == 1);  // only {b} is not open
  CHECK(sierp_report.witnesses[0].a == PointSet::of(2, {1}));
  CHECK(sierp_report.witnesses[0].limit == 1);
  CHECK(net_limits(sierp_report.witnesses[0].witness, kSierp).contains(1));

  CHECK(verify_net_openness(FiniteSpace::discrete(2)).witnesses.empty());

  const OpennessReport ind = verify_net_openness(FiniteSpace::indiscrete(2));
  CHECK(ind.ok);
  CHECK(ind.witnesses.size() == 2);  // {a} and {b}
}

TEST_CASE("continuity via nets") {
  const PointMap id{2, 2, {0, 1}};
  CHECK(verify_net_continuity(id, kSierp, kSierp).by_preimage);
  CHECK(verify_net_continuity(id, kSierp, kSierp).agree());

  const PointMap swap{2, 2, {1, 0}};
  const ContinuityCheck sw = verify_net_continuity(swap, kSierp, kSierp);
  CHECK_FALSE(sw.by_preimage);
  CHECK_FALSE(sw.by_nets);
  CHECK(sw.agree());

  const PointMap constant{2, 2, {0, 0}};
  CHECK(verify_net_continuity(constant, kSierp, kSierp).by_preimage);
  CHECK(verify_net_continuity(constant, kSierp, kSierp).agree());
}

TEST_CASE("hausdorff via nets") {
  const HausdorffReport disc = verify_hausdorff_net(FiniteSpace::discrete(2));
  CHECK(disc.hausdorff);
  CHECK(disc.ok);
  CHECK_FALSE(disc.witness.has_value());

  const HausdorffReport ind = verify_hausdorff_net(FiniteSpace::indiscrete(2));
  CHECK_FALSE(ind.hausdorff);
  CHECK(ind.ok);
  REQUIRE(ind.witness.has_value());
  CHECK(net_limits(*ind.witness, FiniteSpace::indiscrete(2)) == PointSet::full(2));

  const HausdorffReport sp = verify_hausdorff_net(kSierp);
  CHECK_FALSE(sp.hausdorff);
  CHECK(sp.ok);
  REQUIRE(sp.witness.has_value());
  const PointSet limits = net_limits(*sp.witness, kSierp);
  CHECK(limits.contains(0));
  CHECK(limits.contains(1));
}

TEST_CASE("compactness via subnets, exhaustively at 2 points") {
  for (const FiniteSpace& s : netlab::finite_top::enumerate_topologies(2))
    CHECK(verify_compact_subnets(s).ok);
}

TEST_CASE("limits only grow along subnets") {
  for (unsigned n = 1; n <= 3; ++n)
    for (const FiniteSpace& s : netlab::finite_top::enumerate_topologies(n))
      for (const Net& net : net_catalog(n, netlab::finite_top::full_mask(n))) {
        const PointSet clusters = cluster_points(net, s);
        CHECK(net_limits(net, s).subset_of(clusters));
        if (clusters.is_empty()) continue;
        const SubnetConstruction sc = subnet_from_cluster(net, s, *clusters.smallest());
        CHECK(net_limits(net, s).subset_of(net_limits(sc.subnet, s)));
      }
}

TEST_CASE("product projections are continuous") {
  for (unsigned n1 = 0; n1 <= 2; ++n1)
    for (unsigned n2 = 0; n2 <= 2; ++n2)
      for (const FiniteSpace& s1 : netlab::finite_top::enumerate_topologies(n1))
        for (const FiniteSpace& s2 : netlab::finite_top::enumerate_topologies(n2)) {
          const FiniteSpace prod = netlab::finite_top::product(s1, s2);
          PointMap proj1{n1 * n2, n1, {}};
          PointMap proj2{n1 * n2, n2, {}};
          for (unsigned p = 0; p < n1 * n2; ++p) {
            proj1.values.push_back(p / n2);
            proj2.values.push_back(p % n2);
          }
          const ContinuityCheck c1 = verify_net_continuity(proj1, prod, s1);
          CHECK(c1.by_preimage);
          CHECK(c1.agree());
          const ContinuityCheck c2 = verify_net_continuity(proj2, prod, s2);
          CHECK(c2.by_preimage);
          CHECK(c2.agree());
        }
}

TEST_CASE("mapping nets") {
  const PointMap f{2, 3, {2, 0}};
  const Net fin = Net::finite(2, DirectedSet::chain(2), {0, 1});
  const Net mapped = map_net(f, fin);
  CHECK(mapped.carrier == 3);
  CHECK(mapped.as_finite().values == std::vector<unsigned>{2, 0});
  const Net om = map_net(f, Net::omega(2, EpSequence{{1}, {0}}));
  CHECK(om.as_omega().prefix == std::vector<unsigned>{0});
  CHECK(om.as_omega().cycle == std::vector<unsigned>{2});
}
