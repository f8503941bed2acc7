#include "netlab/filters.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace netlab::filters {

std::optional<std::vector<Mask>> Filter::normalize(unsigned carrier,
                                                   std::vector<Mask> sets) {
  const Mask full = finite_top::full_mask(carrier);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  if (sets.empty()) return std::nullopt;
  for (Mask m : sets)
    if (m == 0 || (m & ~full)) return std::nullopt;
  auto member = [&](Mask m) { return std::binary_search(sets.begin(), sets.end(), m); };
  for (Mask a : sets)
    for (Mask b : sets)
      if (!member(a & b)) return std::nullopt;
  for (Mask a : sets) {
    // supersets of a: a | s for s ranging over subsets of the complement
    const Mask comp = full & ~a;
    for (Mask s = comp;; s = (s - 1) & comp) {
      if (!member(a | s)) return std::nullopt;
      if (s == 0) break;
    }
  }
  return sets;
}

Filter::Filter(unsigned carrier, std::vector<Mask> sets, Unchecked)
    : carrier_(carrier), sets_(std::move(sets)) {}

Filter::Filter(unsigned carrier, std::vector<Mask> sets) : carrier_(carrier) {
  auto norm = normalize(carrier, std::move(sets));
  if (!norm) throw std::invalid_argument("not a filter");
  sets_ = std::move(*norm);
}

std::optional<Filter> Filter::try_make(unsigned carrier, std::vector<Mask> sets) {
  auto norm = normalize(carrier, std::move(sets));
  if (!norm) return std::nullopt;
  return Filter(carrier, std::move(*norm), Unchecked{});
}

Filter Filter::principal(unsigned carrier, unsigned point) {
  if (point >= carrier) throw std::invalid_argument("point outside carrier");
  const Mask full = finite_top::full_mask(carrier);
  std::vector<Mask> sets;
  for (std::uint64_t m = 0; m <= full; ++m) {
    if ((m >> point) & 1u) sets.push_back(static_cast<Mask>(m));
    if (m == full) break;
  }
  return Filter(carrier, std::move(sets));
}

Filter Filter::from_base(unsigned carrier, const std::vector<Mask>& base) {
  if (base.empty()) throw std::invalid_argument("filter base must be nonempty");
  const Mask full = finite_top::full_mask(carrier);
  // close under intersections, then take all supersets
  std::vector<Mask> kernels = base;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Mask> snapshot = kernels;
    for (Mask a : snapshot)
      for (Mask b : snapshot) {
        const Mask c = a & b;
        if (std::find(kernels.begin(), kernels.end(), c) == kernels.end()) {
          kernels.push_back(c);
          changed = true;
        }
      }
  }
  std::vector<Mask> sets;
  for (std::uint64_t m = 0; m <= full; ++m) {
    for (Mask k : kernels)
      if ((k & ~static_cast<Mask>(m)) == 0) {
        sets.push_back(static_cast<Mask>(m));
        break;
      }
    if (m == full) break;
  }
  return Filter(carrier, std::move(sets));  // rejects bases generating the empty set
}

bool Filter::contains(Mask m) const {
  return std::binary_search(sets_.begin(), sets_.end(), m);
}

Mask Filter::kernel() const {
  Mask k = finite_top::full_mask(carrier_);
  for (Mask m : sets_) k &= m;
  return k;
}

bool Filter::is_ultrafilter() const {
  const Mask full = finite_top::full_mask(carrier_);
  for (std::uint64_t m = 0; m <= full; ++m) {
    const Mask a = static_cast<Mask>(m);
    if (contains(a) == contains(full & ~a)) return false;
    if (m == full) break;
  }
  return true;
}

Filter eventuality_filter(const nets::Net& net) {
  const unsigned carrier = net.carrier;
  const Mask full = finite_top::full_mask(carrier);
  std::vector<Mask> sets;
  if (net.is_omega()) {
    Mask tail = 0;
    for (unsigned v : net.as_omega().cycle) tail |= Mask{1} << v;
    for (std::uint64_t m = 0; m <= full; ++m) {
      if ((tail & ~static_cast<Mask>(m)) == 0) sets.push_back(static_cast<Mask>(m));
      if (m == full) break;
    }
  } else {
    const nets::FiniteNet& fn = net.as_finite();
    const unsigned n = fn.index.size();
    for (std::uint64_t m = 0; m <= full; ++m) {
      bool eventually = false;
      for (unsigned d = 0; d < n && !eventually; ++d) {
        bool all_in = true;
        for (unsigned e = 0; e < n; ++e)
          if (fn.index.leq(d, e) && !((m >> fn.values[e]) & 1u)) {
            all_in = false;
            break;
          }
        eventually = all_in;
      }
      if (eventually) sets.push_back(static_cast<Mask>(m));
      if (m == full) break;
    }
  }
  return Filter(carrier, std::move(sets));
}

PointSet filter_limits(const Filter& f, const FiniteSpace& space) {
  if (f.carrier() != space.carrier()) throw std::invalid_argument("carrier mismatch");
  PointSet out = PointSet::empty(space.carrier());
  for (unsigned x = 0; x < space.carrier(); ++x) {
    bool limit = true;
    for (Mask u : space.opens_containing(x))
      if (!f.contains(u)) limit = false;
    if (limit) out.bits |= Mask{1} << x;
  }
  return out;
}

nets::Net filter_to_net(const Filter& f, const std::vector<unsigned>& choice) {
  const std::vector<Mask>& members = f.sets();
  if (choice.size() != members.size())
    throw std::invalid_argument("one choice per member set required");
  for (std::size_t i = 0; i < members.size(); ++i)
    if (choice[i] >= f.carrier() || !((members[i] >> choice[i]) & 1u))
      throw std::invalid_argument("choice outside its member set");
  const unsigned n = static_cast<unsigned>(members.size());
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) leq[i * n + j] = (members[j] & ~members[i]) == 0;
  return nets::Net::finite(f.carrier(), nets::DirectedSet(n, std::move(leq)), choice);
}

PointSet filter_limits_via_nets(const Filter& f, const FiniteSpace& space) {
  if (f.carrier() != space.carrier()) throw std::invalid_argument("carrier mismatch");
  std::vector<std::vector<unsigned>> members;
  for (Mask m : f.sets()) {
    std::vector<unsigned> pts;
    for (unsigned p = 0; p < f.carrier(); ++p)
      if ((m >> p) & 1u) pts.push_back(p);
    members.push_back(std::move(pts));
  }
  PointSet inter = PointSet::full(space.carrier());
  std::vector<std::size_t> idx(members.size(), 0);
  while (true) {
    std::vector<unsigned> choice;
    choice.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) choice.push_back(members[i][idx[i]]);
    inter = inter.intersect(nets::net_limits(filter_to_net(f, choice), space));
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
  return inter;
}

Filter ultrafilter_refine(const Filter& f) {
  const Mask k = f.kernel();
  // the kernel is a member (finite intersection closure), hence nonempty
  const unsigned p = static_cast<unsigned>(std::countr_zero(k));
  return Filter::principal(f.carrier(), p);
}

PointSet tychonoff_limit(const Filter& u, const FiniteSpace& s1, const FiniteSpace& s2) {
  const unsigned n1 = s1.carrier(), n2 = s2.carrier();
  if (u.carrier() != n1 * n2) throw std::invalid_argument("filter not on the product carrier");

  auto pushforward = [&](bool first) {
    const unsigned n = first ? n1 : n2;
    const Mask full = finite_top::full_mask(n);
    std::vector<Mask> sets;
    for (std::uint64_t m = 0; m <= full && n > 0; ++m) {
      Mask pre = 0;
      for (unsigned i = 0; i < n1; ++i)
        for (unsigned j = 0; j < n2; ++j)
          if ((m >> (first ? i : j)) & 1u) pre |= Mask{1} << (i * n2 + j);
      if (u.contains(pre)) sets.push_back(static_cast<Mask>(m));
      if (m == full) break;
    }
    return Filter(n, std::move(sets));
  };

  const PointSet l1 = filter_limits(pushforward(true), s1);
  const PointSet l2 = filter_limits(pushforward(false), s2);
  PointSet combined = PointSet::empty(n1 * n2);
  for (unsigned i : l1.points())
    for (unsigned j : l2.points()) combined.bits |= Mask{1} << (i * n2 + j);

  const PointSet direct = filter_limits(u, finite_top::product(s1, s2));
  if (combined != direct)
    throw std::logic_error("projection limits disagree with the product limits");
  return combined;
}

std::vector<Filter> enumerate_filters(unsigned carrier) {
  if (carrier > 4) throw std::invalid_argument("filter enumeration limited to carriers <= 4");
  const Mask full = finite_top::full_mask(carrier);
  std::vector<Mask> nonempty;
  for (Mask m = 1; m <= full && full != 0; ++m) {
    nonempty.push_back(m);
    if (m == full) break;
  }
  std::vector<Filter> out;
  const std::uint64_t count = std::uint64_t{1} << nonempty.size();
  for (std::uint64_t fam = 0; fam < count; ++fam) {
    std::vector<Mask> sets;
    for (std::size_t i = 0; i < nonempty.size(); ++i)
      if ((fam >> i) & 1) sets.push_back(nonempty[i]);
    if (auto f = Filter::try_make(carrier, std::move(sets))) out.push_back(std::move(*f));
  }
  return out;
}

}  // namespace netlab::filters
