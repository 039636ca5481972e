#include "szmielew/number_theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace szmielew {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Brent's variant of Pollard rho; n must be odd and composite.
std::uint64_t pollard_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize(0)");
  std::map<std::uint64_t, std::uint64_t> primes;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    while (n % p == 0) {
      ++primes[p];
      n /= p;
    }
  }
  factor_into(n, primes);
  return {primes.begin(), primes.end()};
}

std::uint64_t valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) throw std::invalid_argument("valuation of 0 or by p < 2");
  std::uint64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

bool checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit,
                 std::uint64_t& out) {
  out = 1;
  if (base <= 1) {
    out = (base == 0 && exp > 0) ? 0 : 1;
    return out <= limit;
  }
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > limit / base) return false;
    out *= base;
    if (out > limit) return false;
  }
  return true;
}

}  // namespace szmielew
