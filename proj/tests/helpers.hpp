#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "szmielew/invariants.hpp"
#include "szmielew/normalizer.hpp"
#include "szmielew/oracle.hpp"

namespace testing {

using namespace szmielew;

inline const ExtCard W = kOmega;

inline PrimeComponent comp(std::vector<ExtCard> prefix, ExtCard tail = 0, ExtCard lambda = 0,
                           ExtCard mu = 0) {
  return PrimeComponent::from_profile(std::move(prefix), tail, lambda, mu);
}

inline SzmielewDescriptor desc(std::initializer_list<std::pair<Prime, PrimeComponent>> parts,
                               ExtCard nu = 0) {
  SzmielewDescriptor d;
  for (const auto& [p, c] : parts) d.set_component(p, c);
  d.set_nu(nu);
  return d;
}

inline InvariantAtom A(AtomKind kind, Prime p, Level n, Bound k) {
  return InvariantAtom(kind, p, n, k);
}

constexpr AtomKind PhiEq = AtomKind::PhiEq, PhiGt = AtomKind::PhiGt,
                   ThetaEq = AtomKind::ThetaEq, ThetaGt = AtomKind::ThetaGt,
                   GammaEq = AtomKind::GammaEq, GammaGt = AtomKind::GammaGt,
                   DeltaEq = AtomKind::DeltaEq, DeltaGt = AtomKind::DeltaGt;

inline const std::vector<AtomKind> kAllKinds = {PhiEq,   PhiGt,   ThetaEq, ThetaGt,
                                                GammaEq, GammaGt, DeltaEq, DeltaGt};

/// Small bounded enumeration used by several property tests: primes {2,3}
/// at levels <= 1, values {0,1,omega}, tails {0,1}.
inline std::vector<SzmielewDescriptor> small_enumeration() {
  auto stream = oracle::enumerate_descriptors({2, 3}, 1, {0, 1, kOmega}, {0, 1});
  std::vector<SzmielewDescriptor> out;
  while (auto d = stream.next()) out.push_back(std::move(*d));
  return out;
}

/// Every atom with p in {2,3}, n <= max_level, k <= max_bound.
inline std::vector<InvariantAtom> atom_grid(Level max_level, Bound max_bound) {
  std::vector<InvariantAtom> out;
  for (AtomKind kind : kAllKinds) {
    for (Prime p : {2, 3}) {
      for (Level n = 0; n <= max_level; ++n) {
        for (Bound k = 0; k <= max_bound; ++k) {
          if (kind == DeltaEq && k == 0) continue;
          out.emplace_back(kind, p, n, k);
        }
      }
    }
  }
  return out;
}

}  // namespace testing
