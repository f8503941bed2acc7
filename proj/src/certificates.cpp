#include "netlab/certificates.hpp"

#include "netlab/rational.hpp"

namespace netlab::cli {

using symbolic::CnfOrdinal;
using symbolic::SetDescriptor;

std::string render(const Certificate& c) {
  std::string out;
  for (const std::string& line : c.lines) out += line + "\n";
  out += "\n";
  out += "name=" + c.name + "\n";
  out += "claim=" + c.claim + "\n";
  out += "witness=" + c.witness + "\n";
  out += std::string("checked=") + (c.checked ? "true" : "false") + "\n";
  return out;
}

Certificate counterexample_cc(const std::string& atom) {
  Certificate c;
  c.name = "cc";
  const symbolic::CcRegistry reg{{atom}, {}};
  const SetDescriptor d = SetDescriptor::finite({atom});
  const bool open = symbolic::cc_is_open(reg, d);
  const bool seq_open = symbolic::cc_sequentially_open(reg, d);
  // a convergent sequence is eventually constant here, so check the only
  // sequence shapes that matter: constant in the complement, and oscillating
  const symbolic::CcRegistry probe{{atom, atom + "'"}, {}};
  const SetDescriptor const_limit =
      symbolic::cc_seq_limits(probe, {{}, {atom + "'"}});
  const SetDescriptor osc_limit =
      symbolic::cc_seq_limits(probe, {{}, {atom, atom + "'"}});
  const bool const_ok = const_limit == SetDescriptor::finite({atom + "'"});
  const bool osc_ok = osc_limit == SetDescriptor::empty();

  const symbolic::SymbolicSpace space{symbolic::SymbolicSpace::CountableComplement{reg}};
  c.lines.push_back(symbolic::to_string(space) + " on an uncountable carrier");
  c.lines.push_back("set " + symbolic::to_string(d) + ": finite and nonempty");
  c.lines.push_back(std::string("open=") + (open ? "true" : "false") +
                    " (the complement of a nonempty finite set is uncountable)");
  c.lines.push_back(std::string("sequentially_open=") + (seq_open ? "true" : "false") +
                    " (a convergent sequence is eventually constant, so limits stay"
                    " in the value set)");
  c.lines.push_back("limit of the constant sequence [|" + atom + "'] is " +
                    symbolic::to_string(const_limit));
  c.lines.push_back("limit of the oscillating sequence [|" + atom + "," + atom +
                    "'] is " + symbolic::to_string(osc_limit));
  c.claim = "a sequentially open set need not be open";
  c.witness = "set=" + symbolic::to_string(d);
  c.checked = seq_open && !open && const_ok && osc_ok;
  return c;
}

Certificate counterexample_ordinal(const std::vector<CnfOrdinal>& alphas) {
  Certificate c;
  c.name = "ordinal";
  const CnfOrdinal point = symbolic::ord_no_finite_subcover(alphas);
  std::vector<symbolic::OrdinalPoint> values;
  for (const CnfOrdinal& a : alphas) values.push_back(symbolic::OrdinalPoint::cnf(a));
  const symbolic::OrdinalPoint sup = symbolic::ord_sup(values);

  const symbolic::SymbolicSpace space{symbolic::SymbolicSpace::OrdinalIntervalSpace{
      {symbolic::OrdinalPoint::omega1(), false}}};

  std::string list;
  for (const CnfOrdinal& a : alphas) {
    if (!list.empty()) list += ", ";
    list += symbolic::to_string(a);
  }
  c.lines.push_back("covering attempt of the " + symbolic::to_string(space) +
                    " by [0,a) for a in {" + list + "}");
  c.lines.push_back("sup of the listed ordinals: " + symbolic::to_string(sup) +
                    " (still below the first uncountable ordinal)");
  c.lines.push_back("uncovered point: " + symbolic::to_string(point));
  bool uncovered = true;
  for (const CnfOrdinal& a : alphas) {
    const bool outside = symbolic::ord_leq(symbolic::OrdinalPoint::cnf(a),
                                           symbolic::OrdinalPoint::cnf(point));
    c.lines.push_back("  " + symbolic::to_string(point) + " not in [0," +
                      symbolic::to_string(a) + "): " + (outside ? "true" : "false"));
    if (!outside) uncovered = false;
  }
  // the top of the closed interval is sequentially open yet not open
  const bool top_isolated = symbolic::ord_is_isolated(symbolic::OrdinalPoint::omega1());
  c.lines.push_back(std::string("the top of [0,w1] is isolated: ") +
                    (top_isolated ? "true" : "false") +
                    " (so {w1} is not open, while every eventually periodic sequence"
                    " below it keeps a countable supremum)");
  c.claim = "no finite list of initial intervals covers the countable ordinals";
  c.witness = "uncovered=" + symbolic::to_string(point);
  c.checked = uncovered && !sup.is_omega1 && !top_isolated;
  return c;
}

Certificate counterexample_product(
    const sequences::BasicEpSequence<std::vector<std::string>>& s) {
  Certificate c;
  c.name = "product";
  auto set_str = [](const std::vector<std::string>& atoms) {
    std::string out = "{";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (i) out += ',';
      out += atoms[i];
    }
    return out + "}";
  };
  std::string seq_str = "[";
  for (std::size_t i = 0; i < s.prefix.size(); ++i) {
    if (i) seq_str += ',';
    seq_str += set_str(s.prefix[i]);
  }
  seq_str += '|';
  for (std::size_t i = 0; i < s.cycle.size(); ++i) {
    if (i) seq_str += ',';
    seq_str += set_str(s.cycle[i]);
  }
  seq_str += ']';
  c.lines.push_back("pointwise convergence of the set sequence " + seq_str);

  const symbolic::PointwiseLimit limit = symbolic::product_pointwise_limit(s);
  if (const auto* atoms = std::get_if<std::vector<std::string>>(&limit)) {
    c.lines.push_back("limit: " + set_str(*atoms) + " (a finite set)");
    // the limit sits inside the union of all terms
    bool contained = true;
    for (const std::string& a : *atoms) {
      bool found = false;
      for (const auto& term : s.prefix)
        for (const std::string& b : term)
          if (a == b) found = true;
      for (const auto& term : s.cycle)
        for (const std::string& b : term)
          if (a == b) found = true;
      if (!found) contained = false;
    }
    c.lines.push_back(std::string("limit contained in the union of terms: ") +
                      (contained ? "true" : "false"));
    c.witness = "limit=" + set_str(*atoms);
    c.checked = contained;
  } else {
    const std::string atom = std::get<symbolic::Diverges>(limit).unstable_atom;
    bool in_some = false, out_some = false;
    for (const auto& term : s.cycle) {
      bool in = false;
      for (const std::string& b : term)
        if (b == atom) in = true;
      (in ? in_some : out_some) = true;
    }
    c.lines.push_back("diverges: membership of '" + atom + "' oscillates along the cycle");
    c.witness = "unstable=" + atom;
    c.checked = in_some && out_some;
  }
  c.claim = "a sequence of finite sets can only converge to a finite subset of its union";
  return c;
}

Certificate counterexample_binary_digits(const std::vector<unsigned>& indices) {
  Certificate c;
  c.name = "binary-digits";
  const symbolic::Rational r = symbolic::diagonal_witness(indices);
  std::string pos, digits;
  bool alternating = true;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (!pos.empty()) pos += ',';
    pos += std::to_string(indices[i]);
    const int d = symbolic::binary_digit(r, indices[i]);
    digits += static_cast<char>('0' + d);
    if (d != static_cast<int>(i % 2)) alternating = false;
  }
  c.lines.push_back("candidate subsequence positions: " + pos);
  c.lines.push_back("witness rational r=" + symbolic::to_string(r));
  c.lines.push_back("binary digits of r at those positions: " +
                    (digits.empty() ? std::string("-") : digits));
  c.lines.push_back("the digits alternate 0,1,0,1,... so the digit sequence at r has"
                    " no limit along these positions");
  c.claim = "the binary-digit sequence has no convergent subsequence";
  c.witness = "r=" + symbolic::to_string(r);
  c.checked = alternating;
  return c;
}

Certificate counterexample_fan(unsigned candidate_count) {
  Certificate c;
  c.name = "fan";
  std::vector<symbolic::FanSetDescriptor> candidates;
  for (unsigned i = 0; i < candidate_count; ++i) {
    symbolic::FanSetDescriptor cand;
    cand.apex = true;
    cand.default_rule = symbolic::NatSet::all();
    candidates.push_back(std::move(cand));
  }
  const symbolic::FanSetDescriptor w = symbolic::fan_defeat_basis(candidates);
  c.lines.push_back("candidate apex neighborhoods: " + std::to_string(candidate_count) +
                    " (each with full spokes)");
  bool ok = symbolic::fan_is_open(w) && w.apex;
  c.lines.push_back("defeating apex neighborhood W:");
  for (const auto& [spoke, trace] : w.exceptional)
    c.lines.push_back("  spoke " + std::to_string(spoke) + ": " +
                      symbolic::to_string(trace));
  c.lines.push_back("  other spokes: " + symbolic::to_string(w.default_rule));
  for (unsigned i = 0; i < candidate_count; ++i) {
    const auto witness = symbolic::fan_not_subset_witness(candidates[i], w);
    if (!witness) {
      ok = false;
      c.lines.push_back("candidate " + std::to_string(i) + " fits inside W");
      continue;
    }
    c.lines.push_back("candidate " + std::to_string(i) + " not inside W: point (spoke " +
                      std::to_string(witness->first) + ", " +
                      std::to_string(witness->second) + ") is left out");
  }
  c.claim = "no finite list of apex neighborhoods is a basis at the fan apex";
  c.witness = "candidates=" + std::to_string(candidate_count);
  c.checked = ok;
  return c;
}

Certificate counterexample_franklin(const finite_top::FiniteSpace& base) {
  Certificate c;
  c.name = "franklin";
  const symbolic::FranklinPresentation p = symbolic::franklin_witness_presentation(base);
  const symbolic::FranklinSpace z = symbolic::franklin_build(p);
  c.lines.push_back("base space on " + std::to_string(base.carrier()) + " points with " +
                    std::to_string(base.opens().size()) + " opens");
  c.lines.push_back("sum of " + std::to_string(z.copies) +
                    " convergent-sequence spaces, one per sample");
  bool ok = true;
  std::uint64_t checked = 0;
  const finite_top::Mask full = finite_top::full_mask(base.carrier());
  for (std::uint64_t a = 0; a <= full; ++a) {
    ++checked;
    if (!symbolic::franklin_check_open_reflection(
            p, finite_top::PointSet::from_mask(base.carrier(),
                                               static_cast<finite_top::Mask>(a))))
      ok = false;
    if (a == full) break;
  }
  c.lines.push_back("open reflection agreed on " + std::to_string(checked) + " subsets");
  c.claim = "a set is open in the base iff its preimage is open in the sum";
  c.witness = "copies=" + std::to_string(z.copies);
  c.checked = ok;
  return c;
}

}  // namespace netlab::cli
