#include "netlab/symbolic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace netlab::symbolic {

bool CcRegistry::has_atom(const std::string& a) const {
  return std::find(atoms.begin(), atoms.end(), a) != atoms.end();
}

bool CcRegistry::has_tag(const std::string& t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_atoms(const CcRegistry& reg, const std::vector<std::string>& atoms) {
  for (const std::string& a : atoms)
    if (!reg.has_atom(a)) throw std::invalid_argument("unregistered atom: " + a);
}

void require_descriptor(const CcRegistry& reg, const SetDescriptor& d) {
  switch (d.kind) {
    case SetDescriptor::Kind::Finite:
    case SetDescriptor::Kind::Cofinite:
      require_atoms(reg, d.atoms);
      break;
    case SetDescriptor::Kind::CountableTag:
    case SetDescriptor::Kind::CoCountableTag:
      if (!reg.has_tag(d.tag)) throw std::invalid_argument("unregistered tag: " + d.tag);
      break;
    default:
      break;
  }
}

}  // namespace

SetDescriptor SetDescriptor::finite(std::vector<std::string> atoms) {
  return {Kind::Finite, sorted_unique(std::move(atoms)), {}};
}

SetDescriptor SetDescriptor::cofinite(std::vector<std::string> atoms) {
  return {Kind::Cofinite, sorted_unique(std::move(atoms)), {}};
}

SetDescriptor SetDescriptor::countable_tag(std::string tag) {
  return {Kind::CountableTag, {}, std::move(tag)};
}

SetDescriptor SetDescriptor::co_countable_tag(std::string tag) {
  return {Kind::CoCountableTag, {}, std::move(tag)};
}

std::string to_string(const SetDescriptor& d) {
  auto list = [&] {
    std::string out;
    for (const std::string& a : d.atoms) {
      if (!out.empty()) out += ',';
      out += a;
    }
    return out;
  };
  switch (d.kind) {
    case SetDescriptor::Kind::Empty: return "{}";
    case SetDescriptor::Kind::Full: return "X";
    case SetDescriptor::Kind::Finite: return "{" + list() + "}";
    case SetDescriptor::Kind::Cofinite: return "X\\{" + list() + "}";
    case SetDescriptor::Kind::CountableTag: return "countable:" + d.tag;
    case SetDescriptor::Kind::CoCountableTag: return "co-countable:" + d.tag;
  }
  return "?";
}

bool cc_is_open(const CcRegistry& reg, const SetDescriptor& d) {
  require_descriptor(reg, d);
  switch (d.kind) {
    case SetDescriptor::Kind::Empty:
    case SetDescriptor::Kind::Full:
    case SetDescriptor::Kind::Cofinite:
    case SetDescriptor::Kind::CoCountableTag:
      return true;
    case SetDescriptor::Kind::Finite:
      return d.atoms.empty();  // the empty set again
    case SetDescriptor::Kind::CountableTag:
      return false;  // complement of a countable set in an uncountable carrier
  }
  return false;
}

SetDescriptor cc_seq_limits(const CcRegistry& reg,
                            const sequences::BasicEpSequence<std::string>& s) {
  if (s.cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  require_atoms(reg, s.prefix);
  require_atoms(reg, s.cycle);
  for (const std::string& v : s.cycle)
    if (v != s.cycle.front()) return SetDescriptor::empty();
  // the punctured co-countable neighborhood of any other point excludes the tail
  return SetDescriptor::finite({s.cycle.front()});
}

bool cc_sequentially_open(const CcRegistry& reg, const SetDescriptor& d) {
  require_descriptor(reg, d);
  // A sequence in the complement converges only if its tail is constant, and
  // then only to the tail value, which lies in the complement.
  return true;
}

SetDescriptor cc_complement(const SetDescriptor& d) {
  switch (d.kind) {
    case SetDescriptor::Kind::Empty: return SetDescriptor::full();
    case SetDescriptor::Kind::Full: return SetDescriptor::empty();
    case SetDescriptor::Kind::Finite: return SetDescriptor::cofinite(d.atoms);
    case SetDescriptor::Kind::Cofinite: return SetDescriptor::finite(d.atoms);
    case SetDescriptor::Kind::CountableTag: return SetDescriptor::co_countable_tag(d.tag);
    case SetDescriptor::Kind::CoCountableTag: return SetDescriptor::countable_tag(d.tag);
  }
  throw descriptor_closure_error("unsupported descriptor");
}

// ---- NatSet -----------------------------------------------------------------

namespace {

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

NatSet NatSet::finite(std::vector<std::uint64_t> atoms) {
  return {false, sorted_unique(std::move(atoms))};
}

NatSet NatSet::cofinite_excluding(std::vector<std::uint64_t> atoms) {
  return {true, sorted_unique(std::move(atoms))};
}

bool NatSet::contains(std::uint64_t n) const {
  const bool listed = std::binary_search(atoms.begin(), atoms.end(), n);
  return cofinite ? !listed : listed;
}

bool NatSet::subset_of(const NatSet& o) const {
  if (!cofinite && !o.cofinite)
    return std::includes(o.atoms.begin(), o.atoms.end(), atoms.begin(), atoms.end());
  if (!cofinite && o.cofinite) {
    for (std::uint64_t a : atoms)
      if (!o.contains(a)) return false;
    return true;
  }
  if (cofinite && !o.cofinite) return false;  // a cofinite set is infinite
  // both cofinite: complements reverse the inclusion
  return std::includes(atoms.begin(), atoms.end(), o.atoms.begin(), o.atoms.end());
}

std::optional<std::uint64_t> NatSet::smallest_member() const {
  if (!cofinite) {
    if (atoms.empty()) return std::nullopt;
    return atoms.front();
  }
  std::uint64_t n = 0;
  while (std::binary_search(atoms.begin(), atoms.end(), n)) ++n;
  return n;
}

std::string to_string(const NatSet& s) {
  std::string list;
  for (std::uint64_t a : s.atoms) {
    if (!list.empty()) list += ',';
    list += std::to_string(a);
  }
  return s.cofinite ? "N\\{" + list + "}" : "{" + list + "}";
}

// ---- ω+1 --------------------------------------------------------------------

bool omega_plus_one_is_open(const OmegaPlusOneSet& d) {
  return !d.has_inf || d.naturals.cofinite;
}

// ---- fan --------------------------------------------------------------------

const NatSet& FanSetDescriptor::spoke_trace(std::uint64_t spoke) const {
  const auto it = exceptional.find(spoke);
  return it == exceptional.end() ? default_rule : it->second;
}

bool FanSetDescriptor::contains(std::uint64_t spoke, std::uint64_t n) const {
  return spoke_trace(spoke).contains(n);
}

bool fan_is_open(const FanSetDescriptor& d) {
  if (!d.apex) return true;  // spoke points are isolated
  if (!d.default_rule.cofinite) return false;
  for (const auto& [spoke, trace] : d.exceptional)
    if (!trace.cofinite) return false;
  return true;
}

bool fan_subset(const FanSetDescriptor& inner, const FanSetDescriptor& outer) {
  if (inner.apex && !outer.apex) return false;
  if (!inner.default_rule.subset_of(outer.default_rule)) return false;
  for (const auto& [spoke, trace] : inner.exceptional)
    if (!trace.subset_of(outer.spoke_trace(spoke))) return false;
  for (const auto& [spoke, trace] : outer.exceptional)
    if (!inner.spoke_trace(spoke).subset_of(trace)) return false;
  return true;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> fan_not_subset_witness(
    const FanSetDescriptor& inner, const FanSetDescriptor& outer) {
  std::vector<std::uint64_t> spokes;
  for (const auto& [spoke, trace] : inner.exceptional) spokes.push_back(spoke);
  for (const auto& [spoke, trace] : outer.exceptional) spokes.push_back(spoke);
  spokes = sorted_unique(std::move(spokes));
  spokes.push_back(spokes.empty() ? 0 : spokes.back() + 1);  // a default-rule spoke
  for (std::uint64_t spoke : spokes) {
    const NatSet& in = inner.spoke_trace(spoke);
    const NatSet& out = outer.spoke_trace(spoke);
    if (in.subset_of(out)) continue;
    if (!in.cofinite) {
      for (std::uint64_t a : in.atoms)
        if (!out.contains(a)) return std::make_pair(spoke, a);
    } else {
      // in is cofinite and leaks: some exclusion of out is retained by in,
      // or out is finite and in reaches beyond it
      for (std::uint64_t a : out.atoms)
        if (in.contains(a) && !out.contains(a)) return std::make_pair(spoke, a);
      if (!out.cofinite) {
        std::uint64_t n = out.atoms.empty() ? 0 : out.atoms.back() + 1;
        while (!in.contains(n)) ++n;
        return std::make_pair(spoke, n);
      }
    }
  }
  return std::nullopt;
}

FanSetDescriptor fan_defeat_basis(const std::vector<FanSetDescriptor>& candidates) {
  for (const FanSetDescriptor& c : candidates)
    if (!c.apex || !fan_is_open(c))
      throw std::invalid_argument("candidate not open or missing apex");
  FanSetDescriptor w;
  w.apex = true;
  w.default_rule = NatSet::all();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const NatSet& trace = candidates[i].spoke_trace(i);  // cofinite: candidate is open
    const std::uint64_t m = *trace.smallest_member();
    w.exceptional[i] = NatSet::cofinite_excluding({m});
  }
  if (!fan_is_open(w) || !w.apex)
    throw std::logic_error("defeating neighborhood is not an open apex set");
  for (const FanSetDescriptor& c : candidates)
    if (fan_subset(c, w)) throw std::logic_error("candidate fits inside the defeat set");
  return w;
}

// ---- pointwise limits -------------------------------------------------------

PointwiseLimit product_pointwise_limit(
    const sequences::BasicEpSequence<std::vector<std::string>>& s) {
  if (s.cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  std::vector<std::vector<std::string>> cycle;
  for (const std::vector<std::string>& set : s.cycle) cycle.push_back(sorted_unique(set));
  std::vector<std::string> uni;
  for (const std::vector<std::string>& set : cycle)
    uni.insert(uni.end(), set.begin(), set.end());
  uni = sorted_unique(std::move(uni));

  std::vector<std::string> limit;
  for (const std::string& atom : uni) {
    bool in_all = true;
    for (const std::vector<std::string>& set : cycle)
      if (!std::binary_search(set.begin(), set.end(), atom)) in_all = false;
    if (in_all)
      limit.push_back(atom);
    else
      return Diverges{atom};  // membership oscillates along the cycle
  }
  return limit;
}

// ---- SymbolicSpace -----------------------------------------------------------

std::string to_string(const SymbolicSpace& s) {
  struct Visitor {
    std::string operator()(const SymbolicSpace::CountableComplement& c) const {
      return "countable-complement space (" + std::to_string(c.registry.atoms.size()) +
             " named atoms)";
    }
    std::string operator()(const SymbolicSpace::OrdinalIntervalSpace& o) const {
      return std::string("ordinal interval [0,") + to_string_point(o.interval.top) +
             (o.interval.closed_top ? "]" : ")");
    }
    std::string operator()(const SymbolicSpace::OmegaPlusOne&) const {
      return "convergent-sequence space w+1";
    }
    std::string operator()(const SymbolicSpace::SequentialFan&) const {
      return "sequential fan";
    }
    std::string operator()(const SymbolicSpace::BinaryProduct& b) const {
      return "binary product over [" + netlab::symbolic::to_string(b.index.lo) + "," +
             netlab::symbolic::to_string(b.index.hi) + ")";
    }
    static std::string to_string_point(const OrdinalPoint& p) {
      return netlab::symbolic::to_string(p);
    }
  };
  return std::visit(Visitor{}, s.family);
}

// ---- Franklin ----------------------------------------------------------------

FranklinSpace franklin_build(const FranklinPresentation& p) {
  const unsigned n = p.base.carrier();
  std::vector<bool> constant_seen(n, false);
  for (const sequences::EpSequence& s : p.samples) {
    sequences::validate(s, n);
    const unsigned first = s.eval(0);
    if (!sequences::seq_limits(s, p.base).contains(first))
      throw std::invalid_argument("sample not convergent to first term");
    bool constant = true;
    for (unsigned v : s.prefix)
      if (v != first) constant = false;
    for (unsigned v : s.cycle)
      if (v != first) constant = false;
    if (constant) constant_seen[first] = true;
  }
  for (unsigned x = 0; x < n; ++x)
    if (!constant_seen[x])
      throw std::invalid_argument("presentation must include every constant sequence");
  return FranklinSpace{p.samples.size()};
}

unsigned franklin_map(const FranklinPresentation& p, std::size_t copy,
                      const OmegaPlusOnePoint& pt) {
  const sequences::EpSequence& s = p.samples.at(copy);
  return pt.is_inf ? s.eval(0) : s.eval(pt.n);
}

bool franklin_check_open_reflection(const FranklinPresentation& p,
                                    const finite_top::PointSet& a) {
  const bool open_in_base = finite_top::is_open(p.base, a);
  bool all_traces_open = true;
  for (const sequences::EpSequence& s : p.samples) {
    // {n : x_n ∈ a} is cofinite iff every cycle value lies in a; the trace
    // holds ∞ iff the first term does
    const bool has_inf = a.contains(s.eval(0));
    bool tail_in_a = true;
    for (unsigned v : s.cycle)
      if (!a.contains(v)) tail_in_a = false;
    const bool trace_open = !has_inf || tail_in_a;
    if (!trace_open) all_traces_open = false;
  }
  return open_in_base == all_traces_open;
}

FranklinPresentation franklin_witness_presentation(const finite_top::FiniteSpace& base) {
  FranklinPresentation p{base, {}};
  for (unsigned x = 0; x < base.carrier(); ++x)
    p.samples.push_back(sequences::EpSequence{{}, {x}});
  const finite_top::Mask full = finite_top::full_mask(base.carrier());
  for (std::uint64_t a = 0; a <= full; ++a) {
    const auto defect = finite_top::open_defect(base, static_cast<finite_top::Mask>(a));
    if (defect) {
      const unsigned y = *defect;
      const finite_top::Mask leak = base.minimal_open_mask(y) & ~static_cast<finite_top::Mask>(a);
      const unsigned z = static_cast<unsigned>(std::countr_zero(leak));
      sequences::EpSequence sample{{y}, {z}};
      if (std::find(p.samples.begin(), p.samples.end(), sample) == p.samples.end())
        p.samples.push_back(std::move(sample));
    }
    if (a == full) break;
  }
  return p;
}

}  // namespace netlab::symbolic
