#include "netlab/sequences.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace netlab::sequences {

using finite_top::FiniteSpace;
using finite_top::Mask;
using finite_top::PointSet;

void validate(const EpSequence& s, unsigned carrier) {
  if (s.cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  for (unsigned v : s.prefix)
    if (v >= carrier) throw std::invalid_argument("sequence value outside carrier");
  for (unsigned v : s.cycle)
    if (v >= carrier) throw std::invalid_argument("sequence value outside carrier");
}

namespace {

Mask cycle_mask(const EpSequence& s) {
  Mask m = 0;
  for (unsigned v : s.cycle) m |= Mask{1} << v;
  return m;
}

}  // namespace

PointSet seq_limits(const EpSequence& s, const FiniteSpace& space) {
  validate(s, space.carrier());
  const Mask tail = cycle_mask(s);
  PointSet out = PointSet::empty(space.carrier());
  for (unsigned y = 0; y < space.carrier(); ++y) {
    bool limit = true;
    for (Mask u : space.opens_containing(y))
      if (tail & ~u) limit = false;
    if (limit) out.bits |= Mask{1} << y;
  }
  return out;
}

SeqOpenResult is_sequentially_open(const FiniteSpace& space, const PointSet& a) {
  if (a.carrier != space.carrier()) throw std::invalid_argument("carrier mismatch");
  const std::optional<unsigned> defect = finite_top::open_defect(space, a.bits);

  // independent route: sweep sequences valued in the complement
  const Mask comp = finite_top::full_mask(space.carrier()) & ~a.bits;
  bool sweep_found = false;
  for (const EpSequence& s : ep_catalog(space.carrier(), comp)) {
    if (seq_limits(s, space).bits & a.bits) {
      sweep_found = true;
      break;
    }
  }
  if (defect.has_value() != sweep_found)
    throw std::logic_error("sequential openness routes disagree");

  if (!defect) return {true, std::nullopt, std::nullopt};
  const unsigned y = *defect;
  const Mask leak = space.minimal_open_mask(y) & comp;
  const unsigned z = static_cast<unsigned>(std::countr_zero(leak));
  // constant sequence at z stays in the complement and converges to y
  EpSequence witness{{}, {z}};
  if (!seq_limits(witness, space).contains(y))
    throw std::logic_error("sequential openness witness fails to converge");
  return {false, witness, y};
}

bool is_sequential(const FiniteSpace& space) {
  const Mask full = finite_top::full_mask(space.carrier());
  for (std::uint64_t a = 0; a <= full; ++a) {
    const PointSet set = PointSet::from_mask(space.carrier(), static_cast<Mask>(a));
    if (finite_top::is_open(space, set) != is_sequentially_open(space, set).sequentially_open)
      return false;
    if (a == full) break;
  }
  return true;
}

bool check_lemma_seq(const FiniteSpace& space, const PointSet& a) {
  if (a.carrier != space.carrier()) throw std::invalid_argument("carrier mismatch");
  const bool lhs = is_sequentially_open(space, a).sequentially_open;
  bool rhs = true;
  const Mask full = finite_top::full_mask(space.carrier());
  for (const EpSequence& s : ep_catalog(space.carrier(), full)) {
    if ((seq_limits(s, space).bits & a.bits) == 0) continue;
    if (cycle_mask(s) & ~a.bits) {
      rhs = false;
      break;
    }
  }
  return lhs == rhs;
}

FiniteSpace seq_coreflection(const FiniteSpace& space) {
  const Mask full = finite_top::full_mask(space.carrier());
  std::vector<Mask> opens;
  for (std::uint64_t a = 0; a <= full; ++a) {
    const PointSet set = PointSet::from_mask(space.carrier(), static_cast<Mask>(a));
    if (is_sequentially_open(space, set).sequentially_open)
      opens.push_back(static_cast<Mask>(a));
    if (a == full) break;
  }
  // the constructor asserts the union/intersection closure
  return FiniteSpace(space.carrier(), std::move(opens));
}

CountableBasisCandidate first_countable_witness(const FiniteSpace& space, unsigned x) {
  const PointSet base = minimal_open(space, x);
  for (Mask v : space.opens_containing(x))
    if (base.bits & ~v) throw std::logic_error("minimal open is not below a neighborhood");
  return {{base}};
}

std::vector<EpSequence> ep_catalog(unsigned carrier, Mask allowed,
                                   unsigned max_prefix, unsigned max_cycle) {
  std::vector<unsigned> pts;
  for (unsigned p = 0; p < carrier; ++p)
    if ((allowed >> p) & 1u) pts.push_back(p);
  std::vector<EpSequence> out;
  if (pts.empty()) return out;

  auto fill = [&](unsigned p_len, unsigned c_len) {
    std::vector<std::size_t> idx(p_len + c_len, 0);
    while (true) {
      EpSequence s;
      for (unsigned i = 0; i < p_len; ++i) s.prefix.push_back(pts[idx[i]]);
      for (unsigned i = 0; i < c_len; ++i) s.cycle.push_back(pts[idx[p_len + i]]);
      out.push_back(std::move(s));
      std::size_t i = idx.size();
      while (i > 0) {
        --i;
        if (++idx[i] < pts.size()) break;
        idx[i] = 0;
        if (i == 0) return;
      }
      if (idx.empty()) return;
    }
  };
  for (unsigned p_len = 0; p_len <= max_prefix; ++p_len)
    for (unsigned c_len = 1; c_len <= max_cycle; ++c_len) fill(p_len, c_len);
  return out;
}

}  // namespace netlab::sequences
