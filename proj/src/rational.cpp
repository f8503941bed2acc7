#include "netlab/rational.hpp"

#include <stdexcept>

namespace netlab::symbolic {

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {std::move(num), std::move(den)};
}

Rational rational_add(const Rational& a, const Rational& b) {
  return make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return r.num.str();
  return r.num.str() + "/" + r.den.str();
}

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return make_rational(BigInt(text), 1);
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal");
  }
}

int binary_digit(const Rational& r, unsigned n) {
  if (r.num < 0 || r.num >= r.den) throw std::invalid_argument("rational must lie in [0,1)");
  const BigInt shifted = (r.num << (n + 1)) / r.den;
  return static_cast<int>(shifted & 1);
}

Rational diagonal_witness(const std::vector<unsigned>& indices) {
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i - 1] >= indices[i])
      throw std::invalid_argument("indices must be strictly increasing");
  Rational r{0, 1};
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (i % 2 == 1) r = rational_add(r, make_rational(1, BigInt(1) << (indices[i] + 1)));
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (binary_digit(r, indices[i]) != static_cast<int>(i % 2))
      throw std::logic_error("diagonal witness digit check failed");
  return r;
}

}  // namespace netlab::symbolic
