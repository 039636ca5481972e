#pragma once

#include <optional>

#include "szmielew/invariants.hpp"
#include "szmielew/normalizer.hpp"

namespace szmielew {

/// Decides whether the conjunction holds in some Szmielew group and returns a
/// witness (with zero kappa tails) when it does.
///
/// Without Delta equalities the primes decouple: Phi/Theta/Gamma atoms at p
/// read only the p-component, and a Q summand makes every |p^n A| infinite so
/// all Delta strict bounds hold at once. Each prime is then an exact interval
/// propagation over tail sums (see solve_local in the implementation).
///
/// A Delta equality |p^n A| = k forces nu = 0, every lambda and mu to vanish,
/// every q-component (q != p) to be a finite group of order q^{v_q(k)}, and the
/// p-levels >= n to carry exactly p^{v_p(k)}. Those finite parts are
/// enumerated as partitions; the free p-levels below n range over
/// {0 .. C-1, omega} with C one more than the largest local bound, which
/// loses nothing because every atom saturates above its bound and Delta
/// strict bounds are monotone in the group.
///
/// The witness is deterministic. Without Delta equalities each prime takes the
/// least lambda, then the least mu, then the least total kappa mass, filled
/// from the lowest level up. With them, candidates are tried per prime in
/// increasing order, low-level values ascending with omega last, finite parts
/// in partition order.
std::optional<SzmielewDescriptor> satisfiable_szmielew(const Conjunction& c);

}  // namespace szmielew
