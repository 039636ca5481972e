#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace szmielew {

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
/// factorize(1) is empty; factorize(0) throws std::invalid_argument.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n);

/// Exponent of the prime p in n (n > 0).
std::uint64_t valuation(std::uint64_t n, std::uint64_t p);

/// base^exp, or nullopt-like saturation: returns false when the result would
/// exceed `limit`, leaving `out` unspecified.
bool checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit,
                 std::uint64_t& out);

}  // namespace szmielew
