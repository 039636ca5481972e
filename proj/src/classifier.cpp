#include "szmielew/classifier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "szmielew/evaluator.hpp"
#include "szmielew/number_theory.hpp"

namespace szmielew {
namespace {

// lambda_p = 0, and kappa at l_p - 1 is omega whenever I_p is finite and
// non-empty.
bool reduced_with_saturated_top(const PrimeComponent& c) {
  if (!c.lambda().is_zero()) return false;
  IpInfo info = ip_info(c);
  if (!info.ip_finite || info.ip_empty) return true;
  return c.kappa(*info.lp - 1).is_omega();
}

// 0 < lambda_p < omega and I_p infinite.
bool finite_divisible_over_infinite_support(const PrimeComponent& c) {
  return !c.lambda().is_zero() && c.lambda().is_finite() && !ip_info(c).ip_finite;
}

}  // namespace

bool is_discriminating(const SzmielewDescriptor& a) {
  return std::all_of(a.components().begin(), a.components().end(), [](const auto& entry) {
    const PrimeComponent& c = entry.second;
    return c.lambda().is_omega() || reduced_with_saturated_top(c);
  });
}

bool is_square_like(const SzmielewDescriptor& a) {
  return std::all_of(a.components().begin(), a.components().end(), [](const auto& entry) {
    const PrimeComponent& c = entry.second;
    return c.lambda().is_omega() || reduced_with_saturated_top(c) || finite_divisible_over_infinite_support(c);
  });
}

SzmielewDescriptor discriminating_companion(const SzmielewDescriptor& a) {
  if (!is_square_like(a)) {
    throw std::invalid_argument("discriminating_companion: group is not square-like");
  }
  SzmielewDescriptor out = a;
  for (const auto& [p, c] : a.components()) {
    if (finite_divisible_over_infinite_support(c)) {
      PrimeComponent reduced = c;
      reduced.set_lambda(0);
      out.set_component(p, std::move(reduced));
    }
  }
  return out;
}

bool elem_equiv(const SzmielewDescriptor& a, const SzmielewDescriptor& b) {
  std::set<Prime> primes;
  for (const auto& [p, c] : a.components()) primes.insert(p);
  for (const auto& [p, c] : b.components()) primes.insert(p);

  for (Prime p : primes) {
    const Level top =
        std::max(a.component(p).prefix_length(), b.component(p).prefix_length()) + 1;
    for (Level n = 0; n <= top; ++n) {
      if (a.component(p).kappa(n) != b.component(p).kappa(n)) return false;
      if (theta_value(a, p, n) != theta_value(b, p, n)) return false;
      if (gamma_value(a, p, n) != gamma_value(b, p, n)) return false;
      if (delta_magnitude(a, p, n) != delta_magnitude(b, p, n)) return false;
    }
  }

  Prime outside = 2;
  while (primes.count(outside) != 0 || !is_prime(outside)) ++outside;
  return delta_magnitude(a, outside, 0) == delta_magnitude(b, outside, 0);
}

}  // namespace szmielew
