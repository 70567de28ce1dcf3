#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trigonal {

using BigInt = boost::multiprecision::cpp_int;
/// Always reduced with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

/// Generalized binomial a(a-1)...(a-k+1)/k!, valid for negative a.
BigInt gen_binomial(const BigInt& a, int k);

/// n! for n >= 0, memoized per thread.
const BigInt& factorial(int n);

struct ReducedIdentity {
  std::vector<BigInt> terms;  // k = 0, 1, 2
  BigInt sum;
  ExactRational closed_form;  // g(g-1)/2 + (2-g)g + (2-g)(1-g)/2
};

/// sum_{k=0}^{2} C(2-g, k) C(g, 2-k). Throws std::domain_error for g < 3
/// and std::logic_error if the sum or the closed form differs from 1.
ReducedIdentity reduced_identity(int g);

struct CoefficientChain {
  int g = 0;
  /// (g-1)! times the k-th summand of the displayed chain, k = 0, 1, 2.
  std::vector<ExactRational> contributions;
  /// Their sum; the chain yields 8/(g-1)! exactly when this is 1.
  ExactRational scaled_sum;
  /// Coefficient of the top power of the Prym class: 8 * scaled_sum / (g-1)!.
  ExactRational coefficient;
  /// Same sum with the extra 2^k factor in each summand.
  ExactRational variant_with_2k;
};

/// Evaluates the scalar chain exactly without asserting.
CoefficientChain evaluate_chain(int g);
/// Evaluates and throws std::logic_error (naming g and both values) unless
/// the scaled sum is exactly 1. Throws std::domain_error for g < 3.
CoefficientChain coefficient_chain(int g);

std::string to_string(const ExactRational& q);

}  // namespace trigonal
