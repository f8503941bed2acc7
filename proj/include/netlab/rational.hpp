#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace netlab::symbolic {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, canonical form: den > 0, gcd(|num|, den) = 1.
struct Rational {
  BigInt num = 0;
  BigInt den = 1;

  bool operator==(const Rational&) const = default;
};

Rational make_rational(BigInt num, BigInt den);
Rational rational_add(const Rational& a, const Rational& b);
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);  // "5/16" or "3"

/// n-th digit of the binary expansion of r in [0,1): floor(r·2^(n+1)) mod 2.
/// The floor form never produces an all-ones tail.
int binary_digit(const Rational& r, unsigned n);

/// The rational whose binary digits at the given strictly increasing
/// positions alternate 0,1,0,1,...: the sum of 2^-(k+1) over the odd-indexed
/// positions k. Self-checks the alternation before returning.
Rational diagonal_witness(const std::vector<unsigned>& indices);

}  // namespace netlab::symbolic
