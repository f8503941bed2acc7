#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netlab/sequences.hpp"

namespace netlab::symbolic {

/// Ordinal below ω^ω in Cantor normal form: a sum of ω^e·c terms with
/// strictly decreasing natural exponents and positive coefficients. The
/// empty sum is 0.
class CnfOrdinal {
 public:
  using Term = std::pair<unsigned, std::uint64_t>;  // (exponent, coefficient)

  CnfOrdinal() = default;
  explicit CnfOrdinal(std::vector<Term> terms);

  static CnfOrdinal natural(std::uint64_t n);
  static CnfOrdinal omega();

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::strong_ordering operator<=>(const CnfOrdinal& o) const;
  bool operator==(const CnfOrdinal&) const = default;

 private:
  std::vector<Term> terms_;
};

CnfOrdinal ord_succ(const CnfOrdinal& a);
std::string to_string(const CnfOrdinal& a);

/// Accepts sums like "w^2*3+w*2+5" with strictly decreasing exponents.
CnfOrdinal parse_cnf(const std::string& text);

/// A point of [0, ω₁]: either a CNF ordinal or the top sentinel ω₁.
struct OrdinalPoint {
  bool is_omega1 = false;
  CnfOrdinal value;

  static OrdinalPoint omega1() { return {true, {}}; }
  static OrdinalPoint cnf(CnfOrdinal v) { return {false, std::move(v)}; }

  bool operator==(const OrdinalPoint&) const = default;
};

bool ord_leq(const OrdinalPoint& a, const OrdinalPoint& b);
bool ord_lt(const OrdinalPoint& a, const OrdinalPoint& b);
OrdinalPoint ord_max(const std::vector<OrdinalPoint>& values);
/// Supremum of finitely many points = maximum; in particular any list of
/// CNF values has a CNF supremum, never ω₁.
OrdinalPoint ord_sup(const std::vector<OrdinalPoint>& values);
OrdinalPoint ord_succ(const OrdinalPoint& a);  // throws on ω₁
std::string to_string(const OrdinalPoint& a);
OrdinalPoint parse_ordinal(const std::string& text);  // "w1" names ω₁

/// Interval [0, top] (closed_top) or [0, top) with the order topology.
struct OrdinalInterval {
  OrdinalPoint top;
  bool closed_top = true;
  bool contains(const OrdinalPoint& p) const;
};

/// {p} is open in the order topology iff p is 0 or a successor; limit
/// ordinals (ω, ω·2, ..., and the ω₁ sentinel) are not isolated.
bool ord_is_isolated(const OrdinalPoint& p);

/// Limits of an eventually periodic ordinal sequence in the order topology:
/// a constant cycle converges to its value, a nonconstant cycle oscillates
/// across a fixed gap and diverges.
std::vector<OrdinalPoint> ord_seq_limits(const sequences::BasicEpSequence<OrdinalPoint>& s,
                                         const OrdinalInterval& interval);

/// Basic open interval around y missing some cycle value; certifies that y
/// is not a limit of a nonconstant-cycle sequence.
struct OrdInterval {
  std::optional<OrdinalPoint> lo;  // exclusive lower bound, none = from 0
  std::optional<OrdinalPoint> hi;  // exclusive upper bound, none = up to top
};
std::optional<OrdInterval> ord_separating_interval(
    const sequences::BasicEpSequence<OrdinalPoint>& s, const OrdinalPoint& y);

/// The nondecreasing subsequence through the positions whose value is
/// minimal among the remaining tail, with its supremum (= its limit).
struct MonotoneSubsequence {
  std::vector<std::uint64_t> prefix_indices;  // qualifying positions before the tail
  std::vector<std::uint64_t> cycle_offsets;   // qualifying offsets in each period
  std::uint64_t tail_start = 0;               // input prefix length
  std::uint64_t period = 0;                   // input cycle length
  sequences::BasicEpSequence<CnfOrdinal> values;
  CnfOrdinal limit;

  std::uint64_t index_at(std::uint64_t n) const;
};
MonotoneSubsequence ord_monotone_subsequence(const sequences::BasicEpSequence<CnfOrdinal>& s);

/// Interpreting {[0,α) : α ∈ alphas} as a covering attempt of [0, ω₁):
/// the successor of the maximum is a point no listed interval covers.
CnfOrdinal ord_no_finite_subcover(const std::vector<CnfOrdinal>& alphas);

}  // namespace netlab::symbolic
