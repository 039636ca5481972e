#pragma once

#include "szmielew/invariants.hpp"

namespace szmielew {

/// For every prime p: lambda_p = omega, or lambda_p = 0 and (I_p is infinite,
/// empty, or kappa at level l_p - 1 is omega).
bool is_discriminating(const SzmielewDescriptor& a);

/// As is_discriminating, additionally admitting primes with
/// 0 < lambda_p < omega and I_p infinite.
bool is_square_like(const SzmielewDescriptor& a);

/// Drops the Prufer summand Z(p^inf)^(lambda_p) at every prime where
/// 0 < lambda_p < omega and I_p is infinite. The result is discriminating and
/// elementarily equivalent to `a`. Throws std::invalid_argument unless `a` is
/// square-like.
SzmielewDescriptor discriminating_companion(const SzmielewDescriptor& a);

/// Whether `a` and `b` satisfy the same invariant sentences.
///
/// Past the explicit kappa prefix every profile is constant, so at each prime
/// in either support it suffices to compare kappa, the Theta, Gamma and Delta
/// values on levels 0 .. (longer prefix) + 1. At a prime r outside both
/// supports r^n acts bijectively and |r^n A| = |A|, so one Delta comparison
/// there covers every such prime.
bool elem_equiv(const SzmielewDescriptor& a, const SzmielewDescriptor& b);

}  // namespace szmielew
