#include "bcgroup/order.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace bcgroup {

namespace {

std::vector<PrimePower> trial_factor(std::uint64_t v) {
  std::vector<PrimePower> out;
  auto take = [&](std::uint64_t p) {
    std::uint64_t e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p <= v / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (v > 1) out.push_back({v, 1});
  return out;
}

std::uint64_t smallest_prime_divisor(const BigInt& v) {
  if (v % 2 == 0) return 2;
  for (std::uint64_t p = 3;; p += 2) {
    if (BigInt(p) * p > v) return static_cast<std::uint64_t>(v);
    if (v % p == 0) return p;
  }
}

}  // namespace

BigInt paper_order(const GroupParams& params) {
  return boost::multiprecision::pow(BigInt(params.node_count()), params.pool_count());
}

BigInt concrete_order(const GroupParams& params) {
  BigInt fact = 1;
  for (std::uint32_t k = 2; k <= params.pool_count(); ++k) fact *= k;
  return boost::multiprecision::pow(fact, params.node_count());
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  const auto f = trial_factor(v);
  return f.size() == 1 && f.front().exponent == 1;
}

OrderFactorization factorize(const BigInt& order) {
  if (order < 1) fail(ErrorKind::NonPositive, "order must be >= 1");
  if (order > std::numeric_limits<std::uint64_t>::max()) {
    fail(ErrorKind::TooLarge, "trial division is limited to 64-bit orders");
  }
  return {order, trial_factor(static_cast<std::uint64_t>(order))};
}

OrderFactorization factorize_paper_order(const GroupParams& params) {
  auto factors = trial_factor(params.node_count());
  for (auto& f : factors) f.exponent *= params.pool_count();
  return {paper_order(params), std::move(factors)};
}

OrderFactorization factorize_concrete_order(const GroupParams& params) {
  std::vector<PrimePower> factors;
  const std::uint64_t r = params.pool_count();
  for (std::uint64_t p = 2; p <= r; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t e = 0;
    for (std::uint64_t q = p; q <= r; q *= p) {
      e += r / q;
      if (q > r / p) break;
    }
    factors.push_back({p, e * params.node_count()});
  }
  return {concrete_order(params), std::move(factors)};
}

SylowForm sylow_form(const OrderFactorization& f, std::uint64_t p) {
  for (const auto& pp : f.factors) {
    if (pp.prime == p) {
      BigInt p_part = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(pp.exponent));
      return {p, p_part, f.order / p_part};
    }
  }
  fail(ErrorKind::PrimeNotPresent, std::to_string(p) + " does not divide " + f.order.str());
}

std::vector<SylowForm> sylow_forms(const OrderFactorization& f) {
  std::vector<SylowForm> out;
  for (const auto& pp : f.factors) out.push_back(sylow_form(f, pp.prime));
  return out;
}

std::size_t min_subgroup_count(const OrderFactorization& f) { return f.factors.size(); }

std::vector<std::uint64_t> cauchy_primes(const OrderFactorization& f) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : f.factors) out.push_back(pp.prime);
  return out;
}

BigInt coset_count(const BigInt& group_order, const BigInt& subgroup_order) {
  if (group_order < 1 || subgroup_order < 1) fail(ErrorKind::NonPositive, "orders must be >= 1");
  if (group_order % subgroup_order != 0) {
    fail(ErrorKind::NotADivisor, subgroup_order.str() + " does not divide " + group_order.str());
  }
  return group_order / subgroup_order;
}

NormalityVerdict normal_by_index(const BigInt& group_order, const BigInt& subgroup_order) {
  const BigInt index = coset_count(group_order, subgroup_order);
  if (group_order == 1) return NormalityVerdict::CriterionInapplicable;
  return index == smallest_prime_divisor(group_order) ? NormalityVerdict::NormalByCriterion
                                                      : NormalityVerdict::CriterionInapplicable;
}

double stirling_log2(const BigInt& t) {
  if (t < 1) fail(ErrorKind::NonPositive, "t must be >= 1");
  const double td = t.convert_to<double>();
  const double log2_t = std::log2(td);
  return 0.5 * std::log2(2.0 * std::numbers::pi * td) + td * (log2_t - std::numbers::log2e);
}

double exact_factorial_log2(std::uint64_t t) {
  if (t > kExactFactorialLimit) {
    fail(ErrorKind::TooLarge, "exact factorial limited to t <= " + std::to_string(kExactFactorialLimit));
  }
  // Kahan summation keeps the relative error far below 1e-6 at t = 10^6.
  long double sum = 0.0L;
  long double carry = 0.0L;
  for (std::uint64_t k = 2; k <= t; ++k) {
    const long double y = std::log2(static_cast<long double>(k)) - carry;
    const long double s = sum + y;
    carry = (s - sum) - y;
    sum = s;
  }
  return static_cast<double>(sum);
}

std::string to_string(const OrderFactorization& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const auto& pp : f.factors) {
    if (!out.empty()) out += " * ";
    out += std::to_string(pp.prime);
    if (pp.exponent != 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

std::string to_string(NormalityVerdict v) {
  return v == NormalityVerdict::NormalByCriterion ? "NormalByCriterion" : "CriterionInapplicable";
}

}  // namespace bcgroup
