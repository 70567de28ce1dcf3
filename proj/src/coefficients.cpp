#include "trigonal/coefficients.hpp"

#include <stdexcept>

namespace trigonal {

BigInt gen_binomial(const BigInt& a, int k) {
  if (k < 0) return 0;
  BigInt num = 1;
  for (int i = 0; i < k; ++i) num *= a - i;
  return num / factorial(k);
}

const BigInt& factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  thread_local std::vector<BigInt> table{1};
  while (static_cast<int>(table.size()) <= n) table.push_back(table.back() * static_cast<int>(table.size()));
  return table[static_cast<std::size_t>(n)];
}

std::string to_string(const ExactRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

ReducedIdentity reduced_identity(int g) {
  if (g < 3) throw std::domain_error("reduced identity needs g >= 3");
  ReducedIdentity out;
  for (int k = 0; k <= 2; ++k) {
    out.terms.push_back(gen_binomial(2 - g, k) * gen_binomial(g, 2 - k));
    out.sum += out.terms.back();
  }
  const ExactRational gg = g;
  out.closed_form = gg * (gg - 1) / 2 + (2 - gg) * gg + (2 - gg) * (1 - gg) / 2;
  if (out.sum != 1 || out.closed_form != 1)
    throw std::logic_error("reduced identity fails at g=" + std::to_string(g) + ": sum " + out.sum.str() +
                           ", closed form " + to_string(out.closed_form));
  return out;
}

CoefficientChain evaluate_chain(int g) {
  if (g < 3) throw std::domain_error("coefficient chain needs g >= 3");
  CoefficientChain out;
  out.g = g;
  for (int k = 0; k <= 2; ++k) {
    const int top = 2 * g + k - 3;
    const ExactRational summand(gen_binomial(2 - g, k) * gen_binomial(top, g + k - 2) * factorial(g),
                                factorial(2 - k) * factorial(top));
    const ExactRational scaled = summand * ExactRational(factorial(g - 1));
    out.contributions.push_back(scaled);
    out.scaled_sum += scaled;
    out.variant_with_2k += scaled * (BigInt(1) << k);
  }
  out.coefficient = out.scaled_sum * 8 / ExactRational(factorial(g - 1));
  return out;
}

CoefficientChain coefficient_chain(int g) {
  CoefficientChain out = evaluate_chain(g);
  const ExactRational expected = ExactRational(8) / ExactRational(factorial(g - 1));
  if (out.scaled_sum != 1 || out.coefficient != expected)
    throw std::logic_error("coefficient chain fails at g=" + std::to_string(g) + ": got " +
                           to_string(out.coefficient) + ", expected " + to_string(expected));
  return out;
}

}  // namespace trigonal
