#include "netlab/finite_top.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace netlab::finite_top {

Mask full_mask(unsigned carrier) {
  if (carrier >= 32) return ~Mask{0};
  return (Mask{1} << carrier) - 1;
}

PointSet PointSet::empty(unsigned carrier) { return {carrier, 0}; }

PointSet PointSet::full(unsigned carrier) { return {carrier, full_mask(carrier)}; }

PointSet PointSet::of(unsigned carrier, std::initializer_list<unsigned> pts) {
  PointSet s{carrier, 0};
  for (unsigned p : pts) {
    if (p >= carrier) throw std::invalid_argument("point outside carrier");
    s.bits |= Mask{1} << p;
  }
  return s;
}

PointSet PointSet::from_points(unsigned carrier, const std::vector<unsigned>& pts) {
  PointSet s{carrier, 0};
  for (unsigned p : pts) {
    if (p >= carrier) throw std::invalid_argument("point outside carrier");
    s.bits |= Mask{1} << p;
  }
  return s;
}

PointSet PointSet::from_mask(unsigned carrier, Mask bits) {
  if (bits & ~full_mask(carrier)) throw std::invalid_argument("mask outside carrier");
  return {carrier, bits};
}

unsigned PointSet::size() const { return static_cast<unsigned>(std::popcount(bits)); }

bool PointSet::subset_of(const PointSet& o) const { return (bits & ~o.bits) == 0; }

PointSet PointSet::complement() const { return {carrier, Mask(full_mask(carrier) & ~bits)}; }

PointSet PointSet::intersect(const PointSet& o) const { return {carrier, bits & o.bits}; }

PointSet PointSet::unite(const PointSet& o) const { return {carrier, bits | o.bits}; }

PointSet PointSet::minus(const PointSet& o) const { return {carrier, bits & ~o.bits}; }

std::vector<unsigned> PointSet::points() const {
  std::vector<unsigned> out;
  for (unsigned p = 0; p < carrier; ++p)
    if (contains(p)) out.push_back(p);
  return out;
}

std::optional<unsigned> PointSet::smallest() const {
  if (bits == 0) return std::nullopt;
  return static_cast<unsigned>(std::countr_zero(bits));
}

std::string to_string(const PointSet& s) {
  if (s.is_empty()) return "-";
  std::string out;
  for (unsigned p : s.points()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

FiniteSpace::FiniteSpace(unsigned carrier, std::vector<Mask> opens)
    : carrier_(carrier), opens_(std::move(opens)) {
  if (carrier_ > kMaxCarrier) throw std::invalid_argument("carrier too large");
  const Mask full = full_mask(carrier_);
  for (Mask m : opens_)
    if (m & ~full) throw std::invalid_argument("open set outside carrier");
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  if (opens_.empty() || opens_.front() != 0 || opens_.back() != full)
    throw std::invalid_argument("open family must contain the empty set and the carrier");
  for (std::size_t i = 0; i < opens_.size(); ++i)
    for (std::size_t j = i; j < opens_.size(); ++j) {
      if (!is_open_mask(opens_[i] & opens_[j]))
        throw std::invalid_argument("open family not closed under intersection");
      if (!is_open_mask(opens_[i] | opens_[j]))
        throw std::invalid_argument("open family not closed under union");
    }
}

FiniteSpace FiniteSpace::discrete(unsigned n) {
  std::vector<Mask> opens;
  for (Mask m = 0;; ++m) {
    opens.push_back(m);
    if (m == full_mask(n)) break;
  }
  return FiniteSpace(n, std::move(opens));
}

FiniteSpace FiniteSpace::indiscrete(unsigned n) {
  return FiniteSpace(n, {0, full_mask(n)});
}

FiniteSpace FiniteSpace::sierpinski() { return FiniteSpace(2, {0b00, 0b01, 0b11}); }

bool FiniteSpace::is_open_mask(Mask m) const {
  return std::binary_search(opens_.begin(), opens_.end(), m);
}

Mask FiniteSpace::minimal_open_mask(unsigned x) const {
  if (x >= carrier_) throw std::invalid_argument("point outside carrier");
  Mask m = full_mask(carrier_);
  for (Mask u : opens_)
    if ((u >> x) & 1u) m &= u;
  return m;
}

Mask FiniteSpace::closure_mask(Mask a) const {
  const Mask full = full_mask(carrier_);
  Mask c = full;
  for (Mask u : opens_) {
    const Mask closed = full & ~u;
    if ((a & ~closed) == 0) c &= closed;
  }
  return c;
}

Mask FiniteSpace::interior_mask(Mask a) const {
  Mask i = 0;
  for (Mask u : opens_)
    if ((u & ~a) == 0) i |= u;
  return i;
}

std::vector<Mask> FiniteSpace::opens_containing(unsigned x) const {
  if (x >= carrier_) throw std::invalid_argument("point outside carrier");
  std::vector<Mask> out;
  for (Mask u : opens_)
    if ((u >> x) & 1u) out.push_back(u);
  return out;
}

void validate_point_map(const PointMap& f) {
  if (f.values.size() != f.domain_size)
    throw std::invalid_argument("point map value list has wrong length");
  for (unsigned v : f.values)
    if (v >= f.codomain_size) throw std::invalid_argument("point map value outside codomain");
}

bool is_valid_partition(const Partition& p) {
  Mask seen = 0;
  for (const PointSet& b : p.blocks) {
    if (b.carrier != p.carrier || b.is_empty()) return false;
    if (b.bits & seen) return false;
    seen |= b.bits;
  }
  return seen == full_mask(p.carrier);
}

std::vector<Partition> all_partitions(unsigned n) {
  // restricted growth strings keep the order canonical
  std::vector<Partition> out;
  std::vector<unsigned> label(n, 0);
  auto emit = [&] {
    unsigned blocks = n == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    Partition p{n, {}};
    for (unsigned b = 0; b < blocks; ++b) {
      PointSet block{n, 0};
      for (unsigned i = 0; i < n; ++i)
        if (label[i] == b) block.bits |= Mask{1} << i;
      p.blocks.push_back(block);
    }
    out.push_back(std::move(p));
  };
  auto rec = [&](auto&& self, unsigned i, unsigned maxUsed) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (unsigned v = 0; v <= maxUsed + 1 && v <= i; ++v) {
      label[i] = v;
      self(self, i + 1, std::max(maxUsed, v));
    }
  };
  if (n == 0) {
    emit();
  } else {
    label[0] = 0;
    rec(rec, 1, 0);
  }
  return out;
}

bool is_open(const FiniteSpace& s, const PointSet& a) {
  if (a.carrier != s.carrier()) throw std::invalid_argument("carrier mismatch");
  const bool listed = s.is_open_mask(a.bits);
  bool neighborhood = true;
  for (unsigned x : a.points())
    if (s.minimal_open_mask(x) & ~a.bits) neighborhood = false;
  if (listed != neighborhood)
    throw std::logic_error("open family violates the neighborhood criterion");
  return listed;
}

PointSet minimal_open(const FiniteSpace& s, unsigned x) {
  return PointSet::from_mask(s.carrier(), s.minimal_open_mask(x));
}

PointSet closure(const FiniteSpace& s, const PointSet& a) {
  if (a.carrier != s.carrier()) throw std::invalid_argument("carrier mismatch");
  return PointSet::from_mask(s.carrier(), s.closure_mask(a.bits));
}

PointSet interior(const FiniteSpace& s, const PointSet& a) {
  if (a.carrier != s.carrier()) throw std::invalid_argument("carrier mismatch");
  return PointSet::from_mask(s.carrier(), s.interior_mask(a.bits));
}

std::optional<unsigned> open_defect(const FiniteSpace& s, Mask a) {
  for (unsigned y = 0; y < s.carrier(); ++y)
    if ((a >> y) & 1u)
      if (s.minimal_open_mask(y) & ~a) return y;
  return std::nullopt;
}

FiniteSpace product(const FiniteSpace& s1, const FiniteSpace& s2) {
  const unsigned n1 = s1.carrier(), n2 = s2.carrier();
  const unsigned n = n1 * n2;
  if (n > kMaxCarrier) throw std::invalid_argument("product carrier too large");
  // minimal open of (i,j) is the rectangle of the factor minimal opens; a set
  // is a union of open rectangles iff it absorbs these
  std::vector<Mask> minrect(n, 0);
  for (unsigned i = 0; i < n1; ++i) {
    const Mask mi = s1.minimal_open_mask(i);
    for (unsigned j = 0; j < n2; ++j) {
      const Mask mj = s2.minimal_open_mask(j);
      Mask r = 0;
      for (unsigned ii = 0; ii < n1; ++ii)
        if ((mi >> ii) & 1u)
          for (unsigned jj = 0; jj < n2; ++jj)
            if ((mj >> jj) & 1u) r |= Mask{1} << (ii * n2 + jj);
      minrect[i * n2 + j] = r;
    }
  }
  std::vector<Mask> opens;
  const Mask full = full_mask(n);
  for (std::uint64_t w = 0; w <= full; ++w) {
    bool ok = true;
    for (unsigned p = 0; p < n && ok; ++p)
      if ((w >> p) & 1u)
        if (minrect[p] & ~w) ok = false;
    if (ok) opens.push_back(static_cast<Mask>(w));
    if (w == full) break;
  }
  return FiniteSpace(n, std::move(opens));
}

QuotientResult quotient(const FiniteSpace& s, const Partition& p) {
  if (p.carrier != s.carrier() || !is_valid_partition(p))
    throw std::invalid_argument("invalid partition");
  const unsigned k = static_cast<unsigned>(p.blocks.size());
  PointMap proj{s.carrier(), k, std::vector<unsigned>(s.carrier(), 0)};
  for (unsigned b = 0; b < k; ++b)
    for (unsigned x : p.blocks[b].points()) proj.values[x] = b;
  std::vector<Mask> opens;
  const Mask limit = Mask{1} << k;
  for (Mask a = 0; a < limit; ++a) {
    Mask pre = 0;
    for (unsigned b = 0; b < k; ++b)
      if ((a >> b) & 1u) pre |= p.blocks[b].bits;
    if (s.is_open_mask(pre)) opens.push_back(a);
  }
  return {FiniteSpace(k, std::move(opens)), std::move(proj)};
}

FiniteSpace subspace(const FiniteSpace& s, const PointSet& a) {
  if (a.carrier != s.carrier()) throw std::invalid_argument("carrier mismatch");
  if (a.is_empty()) throw std::invalid_argument("empty subspace carrier");
  const std::vector<unsigned> pts = a.points();
  const unsigned k = static_cast<unsigned>(pts.size());
  std::vector<Mask> opens;
  for (Mask u : s.opens()) {
    Mask t = 0;
    for (unsigned i = 0; i < k; ++i)
      if ((u >> pts[i]) & 1u) t |= Mask{1} << i;
    opens.push_back(t);
  }
  return FiniteSpace(k, std::move(opens));
}

FiniteSpace disjoint_sum(const std::vector<FiniteSpace>& parts) {
  unsigned total = 0;
  std::vector<unsigned> offset;
  for (const FiniteSpace& p : parts) {
    offset.push_back(total);
    total += p.carrier();
  }
  if (total > kMaxCarrier) throw std::invalid_argument("sum carrier too large");
  // a set is open iff its trace on each summand is open: all combinations
  std::vector<Mask> opens{0};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Mask> next;
    for (Mask acc : opens)
      for (Mask u : parts[i].opens()) next.push_back(acc | (u << offset[i]));
    opens = std::move(next);
  }
  return FiniteSpace(total, std::move(opens));
}

std::vector<FiniteSpace> enumerate_topologies(unsigned n) {
  if (n > 4) throw std::invalid_argument("enumerate_topologies: n must be <= 4");
  const unsigned nsub = 1u << n;
  std::vector<FiniteSpace> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << nsub); ++fam) {
    if (!(fam & 1)) continue;                    // empty set
    if (!((fam >> (nsub - 1)) & 1)) continue;    // full carrier
    std::vector<Mask> members;
    for (unsigned s = 0; s < nsub; ++s)
      if ((fam >> s) & 1) members.push_back(s);
    bool closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i)
      for (std::size_t j = i; j < members.size() && closed; ++j) {
        if (!((fam >> (members[i] & members[j])) & 1)) closed = false;
        if (!((fam >> (members[i] | members[j])) & 1)) closed = false;
      }
    if (closed) out.emplace_back(n, std::move(members));
  }
  return out;
}

bool is_hausdorff(const FiniteSpace& s) {
  for (unsigned x = 0; x < s.carrier(); ++x)
    for (unsigned y = x + 1; y < s.carrier(); ++y) {
      bool separated = false;
      for (Mask u : s.opens_containing(x)) {
        for (Mask v : s.opens_containing(y))
          if ((u & v) == 0) {
            separated = true;
            break;
          }
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

CoverCertificate is_compact_by_covers(
    const FiniteSpace& s, const std::optional<std::vector<PointSet>>& basis) {
  const Mask full = full_mask(s.carrier());
  std::vector<Mask> family;
  if (basis) {
    for (const PointSet& b : *basis) {
      if (b.carrier != s.carrier() || !s.is_open_mask(b.bits))
        throw std::invalid_argument("basis does not generate topology");
      family.push_back(b.bits);
    }
    // every open must be a union of basis members below it
    for (Mask u : s.opens()) {
      Mask covered = 0;
      for (Mask b : family)
        if ((b & ~u) == 0) covered |= b;
      if (covered != u) throw std::invalid_argument("basis does not generate topology");
    }
  } else {
    family = s.opens();
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (family.size() > 24)
    throw std::invalid_argument("covering family too large for exhaustive sweep");

  auto greedy_subcover = [&](const std::vector<Mask>& cover) {
    std::vector<Mask> chosen;
    Mask uncovered = full;
    while (uncovered) {
      Mask best = 0;
      int best_gain = -1;
      for (Mask c : cover) {
        const int gain = std::popcount(c & uncovered);
        if (gain > best_gain || (gain == best_gain && c < best)) {
          best_gain = gain;
          best = c;
        }
      }
      if (best_gain <= 0) break;  // cannot happen for a genuine cover
      chosen.push_back(best);
      uncovered &= ~best;
    }
    return chosen;
  };

  CoverCertificate cert;
  cert.compact = true;
  const std::uint64_t count = std::uint64_t{1} << family.size();
  for (std::uint64_t c = 0; c < count; ++c) {
    Mask u = 0;
    std::vector<Mask> cover;
    for (std::size_t i = 0; i < family.size(); ++i)
      if ((c >> i) & 1) {
        u |= family[i];
        cover.push_back(family[i]);
      }
    if (u != full) continue;
    ++cert.coverings_checked;
    std::vector<Mask> sub = greedy_subcover(cover);
    Mask covered = 0;
    for (Mask m : sub) covered |= m;
    if (covered != full) cert.compact = false;
  }
  // certificate for the full family (always a covering: the carrier is open)
  for (Mask m : greedy_subcover(family))
    cert.subcover.push_back(PointSet::from_mask(s.carrier(), m));
  return cert;
}

bool check_fip_equivalence(const FiniteSpace& s) {
  const Mask full = full_mask(s.carrier());
  std::vector<Mask> closeds;
  for (Mask u : s.opens()) closeds.push_back(full & ~u);
  std::sort(closeds.begin(), closeds.end());
  closeds.erase(std::unique(closeds.begin(), closeds.end()), closeds.end());

  const bool compact = is_compact_by_covers(s).compact;
  bool fip_implies_nonempty = true;
  const std::uint64_t count = std::uint64_t{1} << closeds.size();
  for (std::uint64_t f = 0; f < count; ++f) {
    std::vector<Mask> fam;
    for (std::size_t i = 0; i < closeds.size(); ++i)
      if ((f >> i) & 1) fam.push_back(closeds[i]);
    // finite intersection property: every subfamily meets
    bool fip = true;
    const std::uint64_t subs = std::uint64_t{1} << fam.size();
    for (std::uint64_t g = 0; g < subs && fip; ++g) {
      Mask inter = full;
      for (std::size_t i = 0; i < fam.size(); ++i)
        if ((g >> i) & 1) inter &= fam[i];
      if (inter == 0 && s.carrier() > 0) fip = false;
      if (s.carrier() == 0) fip = false;  // no family meets in an empty carrier
    }
    if (fip) {
      Mask inter = full;
      for (Mask m : fam) inter &= m;
      if (inter == 0) fip_implies_nonempty = false;
    }
  }
  return compact == fip_implies_nonempty;
}

}  // namespace netlab::finite_top
