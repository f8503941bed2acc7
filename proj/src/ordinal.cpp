#include "netlab/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace netlab::symbolic {

CnfOrdinal::CnfOrdinal(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].second == 0)
      throw std::invalid_argument("CNF coefficients must be positive");
    if (i > 0 && terms_[i - 1].first <= terms_[i].first)
      throw std::invalid_argument("CNF exponents must be strictly decreasing");
  }
}

CnfOrdinal CnfOrdinal::natural(std::uint64_t n) {
  if (n == 0) return CnfOrdinal();
  return CnfOrdinal({{0u, n}});
}

CnfOrdinal CnfOrdinal::omega() { return CnfOrdinal({{1u, 1u}}); }

std::strong_ordering CnfOrdinal::operator<=>(const CnfOrdinal& o) const {
  const std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (terms_[i].first != o.terms_[i].first)
      return terms_[i].first <=> o.terms_[i].first;
    if (terms_[i].second != o.terms_[i].second)
      return terms_[i].second <=> o.terms_[i].second;
  }
  return terms_.size() <=> o.terms_.size();
}

CnfOrdinal ord_succ(const CnfOrdinal& a) {
  std::vector<CnfOrdinal::Term> terms = a.terms();
  if (!terms.empty() && terms.back().first == 0)
    terms.back().second += 1;
  else
    terms.emplace_back(0u, 1u);
  return CnfOrdinal(std::move(terms));
}

std::string to_string(const CnfOrdinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : a.terms()) {
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += std::to_string(c);
    } else {
      out += 'w';
      if (e > 1) out += "^" + std::to_string(e);
      if (c > 1) out += "*" + std::to_string(c);
    }
  }
  return out;
}

namespace {

std::uint64_t parse_nat(const std::string& t, std::size_t& i) {
  if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i])))
    throw std::invalid_argument("expected a number in ordinal literal");
  std::uint64_t v = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
    v = v * 10 + static_cast<std::uint64_t>(t[i++] - '0');
  return v;
}

}  // namespace

CnfOrdinal parse_cnf(const std::string& text) {
  std::vector<CnfOrdinal::Term> terms;
  std::size_t i = 0;
  if (text.empty()) throw std::invalid_argument("empty ordinal literal");
  while (true) {
    unsigned exponent = 0;
    std::uint64_t coeff = 0;
    if (i < text.size() && text[i] == 'w') {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        exponent = static_cast<unsigned>(parse_nat(text, i));
      }
      coeff = 1;
      if (i < text.size() && text[i] == '*') {
        ++i;
        coeff = parse_nat(text, i);
      }
    } else {
      exponent = 0;
      coeff = parse_nat(text, i);
    }
    if (coeff > 0) terms.emplace_back(exponent, coeff);
    else if (!(exponent == 0 && text == "0"))
      throw std::invalid_argument("zero coefficient in ordinal literal");
    if (i == text.size()) break;
    if (text[i] != '+') throw std::invalid_argument("malformed ordinal literal");
    ++i;
  }
  return CnfOrdinal(std::move(terms));  // rejects non-decreasing exponents
}

bool ord_leq(const OrdinalPoint& a, const OrdinalPoint& b) {
  if (a.is_omega1) return b.is_omega1;
  if (b.is_omega1) return true;
  return a.value <= b.value;
}

bool ord_lt(const OrdinalPoint& a, const OrdinalPoint& b) {
  return ord_leq(a, b) && !(a == b);
}

OrdinalPoint ord_max(const std::vector<OrdinalPoint>& values) {
  if (values.empty()) throw std::invalid_argument("maximum of an empty list");
  OrdinalPoint best = values.front();
  for (const OrdinalPoint& v : values)
    if (!ord_leq(v, best)) best = v;
  return best;
}

OrdinalPoint ord_sup(const std::vector<OrdinalPoint>& values) { return ord_max(values); }

OrdinalPoint ord_succ(const OrdinalPoint& a) {
  if (a.is_omega1) throw std::invalid_argument("successor of the top point is out of range");
  return OrdinalPoint::cnf(ord_succ(a.value));
}

std::string to_string(const OrdinalPoint& a) {
  return a.is_omega1 ? "w1" : to_string(a.value);
}

OrdinalPoint parse_ordinal(const std::string& text) {
  if (text == "w1") return OrdinalPoint::omega1();
  return OrdinalPoint::cnf(parse_cnf(text));
}

bool OrdinalInterval::contains(const OrdinalPoint& p) const {
  if (p == top) return closed_top;
  return ord_lt(p, top);
}

bool ord_is_isolated(const OrdinalPoint& p) {
  if (p.is_omega1) return false;  // above every CNF value, so a limit
  if (p.value.is_zero()) return true;
  return p.value.terms().back().first == 0;  // ends in a finite part
}

std::vector<OrdinalPoint> ord_seq_limits(const sequences::BasicEpSequence<OrdinalPoint>& s,
                                         const OrdinalInterval& interval) {
  if (s.cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  for (const OrdinalPoint& v : s.prefix)
    if (!interval.contains(v)) throw std::invalid_argument("value out of interval");
  for (const OrdinalPoint& v : s.cycle)
    if (!interval.contains(v)) throw std::invalid_argument("value out of interval");
  for (const OrdinalPoint& v : s.cycle)
    if (!(v == s.cycle.front())) return {};
  return {s.cycle.front()};
}

std::optional<OrdInterval> ord_separating_interval(
    const sequences::BasicEpSequence<OrdinalPoint>& s, const OrdinalPoint& y) {
  if (s.cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  std::optional<OrdinalPoint> differing;
  for (const OrdinalPoint& v : s.cycle)
    if (!(v == y)) {
      differing = v;
      break;
    }
  if (!differing) return std::nullopt;  // constantly y: it converges
  if (ord_lt(*differing, y)) return OrdInterval{*differing, std::nullopt};
  return OrdInterval{std::nullopt, *differing};
}

std::uint64_t MonotoneSubsequence::index_at(std::uint64_t n) const {
  if (n < prefix_indices.size()) return prefix_indices[n];
  const std::uint64_t k = n - prefix_indices.size();
  const std::uint64_t per = cycle_offsets.size();
  return tail_start + (k / per) * period + cycle_offsets[k % per];
}

MonotoneSubsequence ord_monotone_subsequence(const sequences::BasicEpSequence<CnfOrdinal>& s) {
  if (s.cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  const CnfOrdinal cyc_min = *std::min_element(s.cycle.begin(), s.cycle.end());

  MonotoneSubsequence out;
  out.tail_start = s.prefix.size();
  out.period = s.cycle.size();
  // positions whose value equals the minimum of the remaining tail
  for (std::size_t n = 0; n < s.prefix.size(); ++n) {
    CnfOrdinal tail_min = cyc_min;
    for (std::size_t m = n; m < s.prefix.size(); ++m)
      tail_min = std::min(tail_min, s.prefix[m]);
    if (s.prefix[n] == tail_min) {
      out.prefix_indices.push_back(n);
      out.values.prefix.push_back(s.prefix[n]);
    }
  }
  for (std::size_t o = 0; o < s.cycle.size(); ++o)
    if (s.cycle[o] == cyc_min) {
      out.cycle_offsets.push_back(o);
      out.values.cycle.push_back(cyc_min);
    }
  out.limit = cyc_min;
  return out;
}

CnfOrdinal ord_no_finite_subcover(const std::vector<CnfOrdinal>& alphas) {
  if (alphas.empty()) throw std::invalid_argument("empty covering list");
  const CnfOrdinal m = *std::max_element(alphas.begin(), alphas.end());
  return ord_succ(m);
}

}  // namespace netlab::symbolic
