#pragma once

// Number-theoretic analysis of group orders: factorization, Sylow form,
// Lagrange coset counts, the smallest-prime-index normality criterion and
// log-domain Stirling estimates of factorials.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bcgroup/core.hpp"

namespace bcgroup {

using BigInt = boost::multiprecision::cpp_int;

struct PrimePower {
  std::uint64_t prime;
  std::uint64_t exponent;

  bool operator==(const PrimePower&) const = default;
};

/// order = product of prime^exponent, primes strictly increasing.
struct OrderFactorization {
  BigInt order;
  std::vector<PrimePower> factors;

  bool operator==(const OrderFactorization&) const = default;
};

/// order = p_part * cofactor with prime not dividing cofactor.
struct SylowForm {
  std::uint64_t prime;
  BigInt p_part;
  BigInt cofactor;

  bool operator==(const SylowForm&) const = default;
};

enum class NormalityVerdict {
  NormalByCriterion,
  /// The index is not the smallest prime divisor; says nothing about normality.
  CriterionInapplicable,
};

/// n^r, the order claimed for the blockchain group.
BigInt paper_order(const GroupParams& params);
/// (r!)^n, the order of the implemented group of per-node pool permutations.
BigInt concrete_order(const GroupParams& params);

bool is_prime(std::uint64_t v);

/// Trial division. Throws NonPositive for order < 1 and TooLarge beyond 64 bits.
OrderFactorization factorize(const BigInt& order);
/// n's factorization with every exponent scaled by r.
OrderFactorization factorize_paper_order(const GroupParams& params);
/// Legendre exponents of r!, scaled by n.
OrderFactorization factorize_concrete_order(const GroupParams& params);

/// Throws PrimeNotPresent when p does not divide the order.
SylowForm sylow_form(const OrderFactorization& f, std::uint64_t p);
std::vector<SylowForm> sylow_forms(const OrderFactorization& f);

/// k, the number of distinct primes: a lower bound on the nontrivial Sylow subgroups.
std::size_t min_subgroup_count(const OrderFactorization& f);
std::vector<std::uint64_t> cauchy_primes(const OrderFactorization& f);

/// group_order / subgroup_order. Throws NotADivisor (and NonPositive for
/// non-positive inputs).
BigInt coset_count(const BigInt& group_order, const BigInt& subgroup_order);
NormalityVerdict normal_by_index(const BigInt& group_order, const BigInt& subgroup_order);

/// log2 of sqrt(2*pi*t) * (t/e)^t, evaluated in the log domain. Finite for
/// every t whose value fits in a double.
double stirling_log2(const BigInt& t);
/// log2(t!) by summation; t <= 10^6, otherwise TooLarge.
double exact_factorial_log2(std::uint64_t t);

inline constexpr std::uint64_t kExactFactorialLimit = 1'000'000;

std::string to_string(const OrderFactorization& f);
std::string to_string(NormalityVerdict v);

}  // namespace bcgroup
