#include "netlab/nets.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netlab::nets {

DirectedSet::DirectedSet(unsigned size, std::vector<bool> leq)
    : size_(size), leq_(std::move(leq)) {
  if (leq_.size() != static_cast<std::size_t>(size_) * size_)
    throw std::invalid_argument("relation matrix has wrong size");
}

DirectedSet DirectedSet::chain(unsigned n) {
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) leq[i * n + j] = true;
  return DirectedSet(n, std::move(leq));
}

std::vector<unsigned> DirectedSet::top_class() const {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < size_; ++m) {
    bool top = true;
    for (unsigned d = 0; d < size_; ++d)
      if (!leq(d, m)) top = false;
    if (top) out.push_back(m);
  }
  return out;
}

DirectedCheck check_directed(const DirectedSet& d) {
  const unsigned n = d.size();
  for (unsigned a = 0; a < n; ++a)
    if (!d.leq(a, a)) return {false, DirectedCheck::Failure::NotReflexive, a, a, 0};
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (d.leq(a, b) && d.leq(b, c) && !d.leq(a, c))
          return {false, DirectedCheck::Failure::NotTransitive, a, b, c};
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      bool bounded = false;
      for (unsigned c = 0; c < n; ++c)
        if (d.leq(a, c) && d.leq(b, c)) {
          bounded = true;
          break;
        }
      if (!bounded) return {false, DirectedCheck::Failure::NoUpperBound, a, b, 0};
    }
  return {true, DirectedCheck::Failure::None, 0, 0, 0};
}

DirectedSet product_directed(const DirectedSet& d, const DirectedSet& e) {
  if (!check_directed(d).ok || !check_directed(e).ok)
    throw std::invalid_argument("inputs not directed");
  const unsigned nd = d.size(), ne = e.size();
  const unsigned n = nd * ne;
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      leq[a * n + b] = d.leq(a / ne, b / ne) && e.leq(a % ne, b % ne);
  return DirectedSet(n, std::move(leq));
}

NeighborhoodSystem neighborhood_directed(const FiniteSpace& space, unsigned x) {
  const std::vector<Mask> elems = space.opens_containing(x);  // ascending
  const unsigned n = static_cast<unsigned>(elems.size());
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) leq[i * n + j] = (elems[j] & ~elems[i]) == 0;
  return {DirectedSet(n, std::move(leq)), elems};
}

Net Net::finite(unsigned carrier, DirectedSet index, std::vector<unsigned> values) {
  if (values.size() != index.size())
    throw std::invalid_argument("net value list does not match index size");
  if (!check_directed(index).ok)
    throw std::invalid_argument("net index must be directed");
  for (unsigned v : values)
    if (v >= carrier) throw std::invalid_argument("net value outside carrier");
  return Net{carrier, FiniteNet{std::move(index), std::move(values)}};
}

Net Net::omega(unsigned carrier, EpSequence s) {
  sequences::validate(s, carrier);
  return Net{carrier, std::move(s)};
}

Net map_net(const finite_top::PointMap& f, const Net& net) {
  validate_point_map(f);
  if (f.domain_size != net.carrier) throw std::invalid_argument("carrier mismatch");
  if (net.is_omega()) {
    EpSequence s = net.as_omega();
    for (unsigned& v : s.prefix) v = f(v);
    for (unsigned& v : s.cycle) v = f(v);
    return Net::omega(f.codomain_size, std::move(s));
  }
  FiniteNet fn = net.as_finite();
  for (unsigned& v : fn.values) v = f(v);
  return Net::finite(f.codomain_size, std::move(fn.index), std::move(fn.values));
}

namespace {

Mask cycle_mask(const EpSequence& s) {
  Mask m = 0;
  for (unsigned v : s.cycle) m |= Mask{1} << v;
  return m;
}

bool eventually_inside(const FiniteNet& net, Mask u) {
  const unsigned n = net.index.size();
  for (unsigned d = 0; d < n; ++d) {
    bool all_in = true;
    for (unsigned e = 0; e < n; ++e)
      if (net.index.leq(d, e) && !((u >> net.values[e]) & 1u)) {
        all_in = false;
        break;
      }
    if (all_in) return true;
  }
  return false;
}

bool frequently_inside(const FiniteNet& net, Mask u) {
  const unsigned n = net.index.size();
  for (unsigned d = 0; d < n; ++d) {
    bool hit = false;
    for (unsigned e = 0; e < n; ++e)
      if (net.index.leq(d, e) && ((u >> net.values[e]) & 1u)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

PointSet net_limits(const Net& net, const FiniteSpace& space) {
  if (net.carrier != space.carrier()) throw std::invalid_argument("carrier mismatch");
  PointSet out = PointSet::empty(space.carrier());
  for (unsigned y = 0; y < space.carrier(); ++y) {
    bool limit = true;
    for (Mask u : space.opens_containing(y)) {
      const bool ok = net.is_omega() ? (cycle_mask(net.as_omega()) & ~u) == 0
                                     : eventually_inside(net.as_finite(), u);
      if (!ok) {
        limit = false;
        break;
      }
    }
    if (limit) out.bits |= Mask{1} << y;
  }
  return out;
}

PointSet cluster_points(const Net& net, const FiniteSpace& space) {
  if (net.carrier != space.carrier()) throw std::invalid_argument("carrier mismatch");
  PointSet out = PointSet::empty(space.carrier());
  for (unsigned y = 0; y < space.carrier(); ++y) {
    bool cluster = true;
    for (Mask u : space.opens_containing(y)) {
      const bool ok = net.is_omega() ? (cycle_mask(net.as_omega()) & u) != 0
                                     : frequently_inside(net.as_finite(), u);
      if (!ok) {
        cluster = false;
        break;
      }
    }
    if (cluster) out.bits |= Mask{1} << y;
  }
  return out;
}

std::uint64_t SubnetMap::apply(std::uint64_t e) const {
  if (e < prefix.size()) return prefix[e];
  if (div == 0) throw std::invalid_argument("subnet map divisor must be positive");
  return mul * e / div + add;
}

namespace {

// smallest e >= map prefix with map(e) >= bound; requires mul >= 1
std::uint64_t first_tail_index_reaching(const SubnetMap& m, std::uint64_t bound) {
  std::uint64_t e = m.prefix.size();
  while (m.apply(e) < bound) ++e;
  return e;
}

}  // namespace

bool is_subnet(const SubnetMap& map, const Net& outer, const Net& candidate) {
  if (map.source_omega != candidate.is_omega() || map.target_omega != outer.is_omega())
    throw std::invalid_argument("subnet map kinds do not match the nets");
  if (candidate.carrier != outer.carrier) throw std::invalid_argument("carrier mismatch");
  if (map.div == 0) throw std::invalid_argument("subnet map divisor must be positive");

  if (!map.source_omega) {
    const FiniteNet& cand = candidate.as_finite();
    const unsigned ne = cand.index.size();
    if (map.prefix.size() != ne)
      throw std::invalid_argument("subnet map does not cover the source index");

    if (!map.target_omega) {
      const FiniteNet& out = outer.as_finite();
      const unsigned nd = out.index.size();
      for (std::uint64_t v : map.prefix)
        if (v >= nd) throw std::invalid_argument("subnet map value outside target index");
      for (unsigned e = 0; e < ne; ++e)
        if (cand.values[e] != out.values[map.prefix[e]]) return false;
      for (unsigned e1 = 0; e1 < ne; ++e1)
        for (unsigned e2 = 0; e2 < ne; ++e2)
          if (cand.index.leq(e1, e2) &&
              !out.index.leq(static_cast<unsigned>(map.prefix[e1]),
                             static_cast<unsigned>(map.prefix[e2])))
            return false;
      for (unsigned d = 0; d < nd; ++d) {
        bool reached = false;
        for (unsigned e = 0; e < ne; ++e)
          if (out.index.leq(d, static_cast<unsigned>(map.prefix[e]))) {
            reached = true;
            break;
          }
        if (!reached) return false;
      }
      return true;
    }
    // finite source into ω: a finite image is never cofinal
    return false;
  }

  const EpSequence& cand = candidate.as_omega();

  if (map.target_omega) {
    const EpSequence& out = outer.as_omega();
    // order preservation: nondecreasing prefix, then the tail is monotone
    for (std::size_t i = 1; i < map.prefix.size(); ++i)
      if (map.prefix[i - 1] > map.prefix[i]) return false;
    if (!map.prefix.empty() && map.prefix.back() > map.apply(map.prefix.size()))
      return false;
    if (map.mul == 0) return false;  // bounded image, not cofinal in ω
    // value agreement over a bound covering both eventual periods
    const std::uint64_t k = first_tail_index_reaching(map, out.prefix.size());
    const std::uint64_t start = std::max<std::uint64_t>(cand.prefix.size(), k);
    const std::uint64_t period =
        std::lcm<std::uint64_t>(cand.cycle.size(), map.div * out.cycle.size());
    for (std::uint64_t e = 0; e < start + period; ++e)
      if (cand.eval(e) != out.eval(map.apply(e))) return false;
    return true;
  }

  // ω source into a finite directed set: the tail must be constant
  const FiniteNet& out = outer.as_finite();
  const unsigned nd = out.index.size();
  if (map.mul != 0)
    throw std::invalid_argument("unbounded map into a finite index");
  for (std::uint64_t v : map.prefix)
    if (v >= nd) throw std::invalid_argument("subnet map value outside target index");
  if (map.add >= nd) throw std::invalid_argument("subnet map value outside target index");
  auto at = [&](std::uint64_t e) { return static_cast<unsigned>(map.apply(e)); };
  // consecutive comparisons suffice by transitivity
  for (std::uint64_t e = 0; e + 1 <= map.prefix.size(); ++e)
    if (!out.index.leq(at(e), at(e + 1))) return false;
  std::vector<unsigned> image;
  for (std::uint64_t v : map.prefix) image.push_back(static_cast<unsigned>(v));
  image.push_back(static_cast<unsigned>(map.add));
  for (unsigned d = 0; d < nd; ++d) {
    bool reached = false;
    for (unsigned i : image)
      if (out.index.leq(d, i)) {
        reached = true;
        break;
      }
    if (!reached) return false;
  }
  const std::uint64_t bound =
      std::max<std::uint64_t>(cand.prefix.size(), map.prefix.size() + 1) + cand.cycle.size();
  for (std::uint64_t e = 0; e < bound; ++e)
    if (cand.eval(e) != out.values[at(e)]) return false;
  return true;
}

SubnetConstruction subnet_from_cluster(const Net& net, const FiniteSpace& space, unsigned y) {
  if (y >= space.carrier()) throw std::invalid_argument("point outside carrier");
  if (!cluster_points(net, space).contains(y))
    throw std::invalid_argument("not a cluster point of the net");

  if (net.is_omega()) {
    const EpSequence& s = net.as_omega();
    const Mask min_open = space.minimal_open_mask(y);
    std::size_t offset = s.cycle.size();
    for (std::size_t o = 0; o < s.cycle.size(); ++o)
      if ((min_open >> s.cycle[o]) & 1u) {
        offset = o;
        break;
      }
    // y is a cluster point, so the minimal neighborhood meets the cycle
    if (offset == s.cycle.size())
      throw std::logic_error("cluster point misses every cycle value");
    SubnetMap map;
    map.source_omega = map.target_omega = true;
    map.mul = s.cycle.size();
    map.div = 1;
    map.add = s.prefix.size() + offset;
    Net sub = Net::omega(net.carrier, EpSequence{{}, {s.cycle[offset]}});
    return {std::move(map), std::move(sub), {}};
  }

  const FiniteNet& fn = net.as_finite();
  const std::vector<Mask> nbhd = space.opens_containing(y);
  std::vector<std::pair<unsigned, Mask>> labels;
  for (unsigned d = 0; d < fn.index.size(); ++d)
    for (Mask u : nbhd)
      if ((u >> fn.values[d]) & 1u) labels.emplace_back(d, u);
  const unsigned n = static_cast<unsigned>(labels.size());
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      leq[i * n + j] = fn.index.leq(labels[i].first, labels[j].first) &&
                       (labels[j].second & ~labels[i].second) == 0;
  DirectedSet e(n, std::move(leq));
  if (!check_directed(e).ok)
    throw std::logic_error("cluster construction produced a non-directed index");

  SubnetMap map;
  map.source_omega = map.target_omega = false;
  std::vector<unsigned> values;
  for (const auto& [d, u] : labels) {
    map.prefix.push_back(d);
    values.push_back(fn.values[d]);
  }
  Net sub = Net::finite(net.carrier, e, std::move(values));
  return {std::move(map), std::move(sub), std::move(labels)};
}

std::vector<DirectedSet> directed_catalog(unsigned max_size) {
  std::vector<DirectedSet> out;
  for (unsigned n = 1; n <= max_size; ++n) {
    const unsigned offdiag = n * (n - 1);
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::string, DirectedSet> canon;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << offdiag); ++bits) {
      std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
      unsigned k = 0;
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
          if (i == j)
            leq[i * n + j] = true;
          else
            leq[i * n + j] = (bits >> k++) & 1;
        }
      DirectedSet d(n, leq);
      if (!check_directed(d).ok) continue;
      std::string best;
      std::vector<unsigned> p(perm);
      std::sort(p.begin(), p.end());
      do {
        std::string key(static_cast<std::size_t>(n) * n, '0');
        for (unsigned i = 0; i < n; ++i)
          for (unsigned j = 0; j < n; ++j)
            if (d.leq(p[i], p[j])) key[i * n + j] = '1';
        if (best.empty() || key < best) best = std::move(key);
      } while (std::next_permutation(p.begin(), p.end()));
      if (!canon.contains(best)) {
        std::vector<bool> m(static_cast<std::size_t>(n) * n, false);
        for (unsigned i = 0; i < n; ++i)
          for (unsigned j = 0; j < n; ++j) m[i * n + j] = best[i * n + j] == '1';
        canon.emplace(best, DirectedSet(n, std::move(m)));
      }
    }
    for (auto& [key, d] : canon) out.push_back(std::move(d));
  }
  return out;
}

std::vector<Net> net_catalog(unsigned carrier, Mask allowed, unsigned max_directed_size,
                             unsigned max_prefix, unsigned max_cycle) {
  std::vector<unsigned> pts;
  for (unsigned p = 0; p < carrier; ++p)
    if ((allowed >> p) & 1u) pts.push_back(p);
  std::vector<Net> out;
  if (pts.empty()) return out;

  for (const DirectedSet& d : directed_catalog(max_directed_size)) {
    std::vector<std::size_t> idx(d.size(), 0);
    while (true) {
      std::vector<unsigned> values;
      values.reserve(d.size());
      for (std::size_t i : idx) values.push_back(pts[i]);
      out.push_back(Net::finite(carrier, d, std::move(values)));
      std::size_t i = idx.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++idx[i] < pts.size()) {
          done = false;
          break;
        }
        idx[i] = 0;
      }
      if (done) break;
    }
  }
  for (const EpSequence& s : sequences::ep_catalog(carrier, allowed, max_prefix, max_cycle))
    out.push_back(Net::omega(carrier, s));
  return out;
}

OpennessReport verify_net_openness(const FiniteSpace& space) {
  OpennessReport report;
  report.ok = true;
  const Mask full = finite_top::full_mask(space.carrier());
  for (std::uint64_t a = 0; a <= full; ++a) {
    const Mask bits = static_cast<Mask>(a);
    const Mask comp = full & ~bits;
    if (space.is_open_mask(bits)) {
      for (const Net& net : net_catalog(space.carrier(), comp)) {
        ++report.nets_checked;
        if (net_limits(net, space).bits & bits) report.ok = false;
      }
    } else {
      const unsigned y = *finite_top::open_defect(space, bits);
      const NeighborhoodSystem ns = neighborhood_directed(space, y);
      std::vector<unsigned> values;
      for (Mask u : ns.element_open) {
        const Mask pick = u & comp;  // nonempty: the minimal open of y leaks
        values.push_back(static_cast<unsigned>(std::countr_zero(pick)));
      }
      Net witness = Net::finite(space.carrier(), ns.order, std::move(values));
      ++report.nets_checked;
      const bool converges = net_limits(witness, space).contains(y);
      if (!converges) report.ok = false;
      report.witnesses.push_back(
          {PointSet::from_mask(space.carrier(), bits), y, std::move(witness)});
    }
    if (a == full) break;
  }
  return report;
}

ContinuityCheck verify_net_continuity(const finite_top::PointMap& f, const FiniteSpace& s1,
                                      const FiniteSpace& s2) {
  validate_point_map(f);
  if (f.domain_size != s1.carrier() || f.codomain_size != s2.carrier())
    throw std::invalid_argument("map does not match the spaces");

  bool by_preimage = true;
  for (Mask u : s2.opens()) {
    Mask pre = 0;
    for (unsigned x = 0; x < s1.carrier(); ++x)
      if ((u >> f(x)) & 1u) pre |= Mask{1} << x;
    if (!s1.is_open_mask(pre)) by_preimage = false;
  }

  bool by_nets = true;
  auto preserved = [&](const Net& net) {
    const PointSet limits = net_limits(net, s1);
    if (limits.is_empty()) return true;
    const PointSet image_limits = net_limits(map_net(f, net), s2);
    for (unsigned y : limits.points())
      if (!image_limits.contains(f(y))) return false;
    return true;
  };
  for (const OpennessWitness& w : verify_net_openness(s1).witnesses)
    if (!preserved(w.witness)) by_nets = false;
  const Mask full = finite_top::full_mask(s1.carrier());
  for (const EpSequence& s : sequences::ep_catalog(s1.carrier(), full))
    if (!preserved(Net::omega(s1.carrier(), s))) by_nets = false;

  return {by_preimage, by_nets};
}

HausdorffReport verify_hausdorff_net(const FiniteSpace& space) {
  HausdorffReport report;
  report.hausdorff = is_hausdorff(space);
  if (report.hausdorff) {
    report.ok = true;
    const Mask full = finite_top::full_mask(space.carrier());
    for (const Net& net : net_catalog(space.carrier(), full))
      if (net_limits(net, space).size() > 1) report.ok = false;
    return report;
  }
  // find the first inseparable pair and converge to both of its points
  for (unsigned x = 0; x < space.carrier() && !report.witness; ++x)
    for (unsigned y = x + 1; y < space.carrier() && !report.witness; ++y) {
      bool separable = false;
      for (Mask u : space.opens_containing(x))
        for (Mask v : space.opens_containing(y))
          if ((u & v) == 0) separable = true;
      if (separable) continue;
      const NeighborhoodSystem nx = neighborhood_directed(space, x);
      const NeighborhoodSystem ny = neighborhood_directed(space, y);
      const DirectedSet idx = product_directed(nx.order, ny.order);
      std::vector<unsigned> values;
      for (unsigned i = 0; i < nx.order.size(); ++i)
        for (unsigned j = 0; j < ny.order.size(); ++j) {
          const Mask meet = nx.element_open[i] & ny.element_open[j];
          values.push_back(static_cast<unsigned>(std::countr_zero(meet)));
        }
      Net net = Net::finite(space.carrier(), idx, std::move(values));
      const PointSet limits = net_limits(net, space);
      report.ok = limits.contains(x) && limits.contains(y);
      report.witness = std::move(net);
      report.x = x;
      report.y = y;
    }
  return report;
}

CompactReport verify_compact_subnets(const FiniteSpace& space) {
  CompactReport report;
  report.ok = true;
  const Mask full = finite_top::full_mask(space.carrier());
  for (const Net& net : net_catalog(space.carrier(), full)) {
    ++report.nets_checked;
    const PointSet clusters = cluster_points(net, space);
    if (clusters.is_empty()) {
      report.ok = false;
      continue;
    }
    const unsigned y = *clusters.smallest();
    const SubnetConstruction sc = subnet_from_cluster(net, space, y);
    if (!is_subnet(sc.map, net, sc.subnet)) report.ok = false;
    if (!net_limits(sc.subnet, space).contains(y)) report.ok = false;
  }
  return report;
}

}  // namespace netlab::nets
