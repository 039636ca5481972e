#pragma once

#include <optional>

#include "szmielew/invariants.hpp"
#include "szmielew/normalizer.hpp"

namespace szmielew {

/// Whether a consistent p-conjunction (every atom at prime p) holds in some
/// discriminating p-Szmielew group, with a witness when it does.
///
/// Four cases, in order:
///   (a) some Delta(p,n)=k with k != 1: no discriminating group has a
///       non-trivial finite fully invariant subgroup p^n B, so absent.
///   (b) some Theta(p,n)=k with k > 0: a discriminating group has lambda_p in
///       {0, omega} and then a finite non-zero tail sum forces a finite top
///       kappa, so absent.
///   (c) no Delta or Theta equality: a consistency witness's p-part plus
///       Z(p^inf)^(omega).
///   (d) otherwise lift Gamma equalities to the least level n carrying
///       Delta(p,n)=1 or Theta(p,n)=0 and decide each consistent disjunct by
///       the Phi-chain criterion; see decide_lifted() in the implementation.
///
/// Throws std::invalid_argument when an atom lives at another prime or the
/// conjunction is inconsistent.
std::optional<SzmielewDescriptor> p_conj_discr_sat(Prime p, const Conjunction& c);

/// Whether a consistent conjunction holds in some discriminating Szmielew
/// group, by splitting on where its Delta equalities live (none, two or more
/// primes, exactly one prime). An inconsistent conjunction is reported absent.
std::optional<SzmielewDescriptor> conj_discr_sat(const Conjunction& c);

/// Every square-like abelian group is elementarily equivalent to a
/// discriminating Szmielew group, so satisfiability over square-like groups
/// reduces to conj_discr_sat on each consistent disjunct of the positive DNF.
/// The first witness in disjunct order is returned; it is discriminating.
/// Disjuncts are generated lazily and pruned as soon as a partial
/// conjunction is inconsistent, so the full DNF is never built.
std::optional<SzmielewDescriptor> satisfiable_square_like(const Sentence& s);

struct TheoryVerdict {
  bool member = false;
  /// A discriminating (hence square-like) group falsifying the sentence.
  std::optional<SzmielewDescriptor> counter_model;
};

/// Membership in the theory of square-like abelian groups.
TheoryVerdict in_theory(const Sentence& s);

}  // namespace szmielew
