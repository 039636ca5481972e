#include "szmielew/decider.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "szmielew/classifier.hpp"
#include "szmielew/consistency.hpp"
#include "szmielew/errors.hpp"
#include "szmielew/evaluator.hpp"

namespace szmielew {
namespace {

bool holds(const Conjunction& c, const SzmielewDescriptor& a) {
  return std::all_of(c.begin(), c.end(),
                     [&](const InvariantAtom& x) { return eval_atom(x, a); });
}

bool has_phi_eq_at(const Conjunction& c, Prime p, Level level) {
  return std::any_of(c.begin(), c.end(), [&](const InvariantAtom& a) {
    return a.kind() == AtomKind::PhiEq && a.prime() == p && a.level() == level;
  });
}

// The case (d) obstruction: some Phi(p,m)=i with m < n, i > 0,
// and a Phi equality at every level strictly between m and n. When it holds,
// every p-Szmielew model has a finite top kappa below n, so none is
// discriminating.
bool phi_chain_blocks(const Conjunction& c, Prime p, Level n) {
  for (const auto& a : c) {
    if (a.kind() != AtomKind::PhiEq || a.prime() != p || a.level() >= n || a.bound() == 0) {
      continue;
    }
    bool chain = true;
    for (Level k = a.level() + 1; k < n && chain; ++k) chain = has_phi_eq_at(c, p, k);
    if (chain) return true;
  }
  return false;
}

// One lifted disjunct psi: no Gamma equality below n, some Delta(p,n)=1 or
// Theta(p,n)=0, no other Delta or Theta equalities. `model` satisfies psi.
std::optional<SzmielewDescriptor> decide_lifted(Prime p, Level n, const Conjunction& psi,
                                                const SzmielewDescriptor& model) {
  if (phi_chain_blocks(psi, p, n)) return std::nullopt;

  // Reduce to a p-Szmielew model: with a Delta equality the model is already
  // a p-group; otherwise keep its p-part and add Q so Delta strict bounds hold.
  const bool has_delta_eq = std::any_of(psi.begin(), psi.end(), [](const InvariantAtom& a) {
    return a.kind() == AtomKind::DeltaEq;
  });
  PrimeComponent comp = model.component(p);
  SzmielewDescriptor base;
  base.set_component(p, comp);
  if (has_delta_eq) {
    if (!(base == model)) {
      throw InvariantViolation("Delta(p,n)=1 model is not a p-group: " + model.to_string());
    }
  } else {
    base.set_nu(1);
  }

  // Delta(p,n)=1 or Theta(p,n)=0 forces lambda_p = 0 and kappa = 0 from n on.
  IpInfo info = ip_info(comp);
  if (!comp.lambda().is_zero() || !info.ip_finite || (info.lp && *info.lp > n)) {
    throw InvariantViolation("case (d) model has mass at or above level n: " +
                             base.to_string());
  }
  if (info.ip_empty) return base;

  // Pick the level k < n whose kappa becomes omega: the top occupied level if
  // no Phi equality pins it, else the first unpinned level above it (one
  // exists because the chain condition failed).
  const Level top = *info.lp - 1;
  std::optional<Level> k;
  if (!has_phi_eq_at(psi, p, top)) {
    k = top;
  } else {
    for (Level r = top + 1; r < n; ++r) {
      if (!has_phi_eq_at(psi, p, r)) {
        k = r;
        break;
      }
    }
  }
  if (!k) throw InvariantViolation("case (d): no unpinned level below n");
  comp.set_kappa(*k, kOmega);
  base.set_component(p, comp);
  return base;
}

void verify(const Conjunction& c, const SzmielewDescriptor& w, const char* who) {
  if (!holds(c, w) || !is_discriminating(w)) {
    throw InvariantViolation(std::string(who) + " produced an invalid witness " +
                             w.to_string());
  }
}

}  // namespace

std::optional<SzmielewDescriptor> p_conj_discr_sat(Prime p, const Conjunction& c) {
  for (const auto& a : c) {
    if (a.prime() != p) {
      throw std::invalid_argument("p_conj_discr_sat: atom " + a.to_string() +
                                  " is not at prime " + std::to_string(p));
    }
  }
  auto model = satisfiable_szmielew(c);
  if (!model) throw std::invalid_argument("p_conj_discr_sat: conjunction is inconsistent");

  bool any_delta_eq = false;
  bool any_theta_eq = false;
  Level n = 0;
  bool have_n = false;
  for (const auto& a : c) {
    if (a.kind() == AtomKind::DeltaEq) {
      if (a.bound() != 1) return std::nullopt;  // case (a)
      any_delta_eq = true;
    }
    if (a.kind() == AtomKind::ThetaEq) {
      if (a.bound() > 0) return std::nullopt;  // case (b)
      any_theta_eq = true;
    }
    if (a.kind() == AtomKind::DeltaEq || a.kind() == AtomKind::ThetaEq) {
      n = have_n ? std::min(n, a.level()) : a.level();
      have_n = true;
    }
  }

  if (!any_delta_eq && !any_theta_eq) {  // case (c)
    PrimeComponent comp = model->component(p);
    comp.set_lambda(kOmega);
    SzmielewDescriptor w;
    w.set_component(p, std::move(comp));
    verify(c, w, "p_conj_discr_sat case (c)");
    return w;
  }

  // case (d)
  for (const Conjunction& psi : gamma_lift(c, p, n)) {
    auto psi_model = satisfiable_szmielew(psi);
    if (!psi_model) continue;
    auto w = decide_lifted(p, n, psi, *psi_model);
    if (w) {
      verify(psi, *w, "p_conj_discr_sat case (d)");
      verify(c, *w, "p_conj_discr_sat case (d)");
      return w;
    }
  }
  return std::nullopt;
}

std::optional<SzmielewDescriptor> conj_discr_sat(const Conjunction& c) {
  if (!satisfiable_szmielew(c)) return std::nullopt;

  std::set<Prime> delta_primes;
  for (const auto& a : c) {
    if (a.kind() == AtomKind::DeltaEq) delta_primes.insert(a.prime());
  }

  if (delta_primes.empty()) {
    // Primes decouple; a direct sum of discriminating p-witnesses is
    // discriminating and only enlarges every |p^n A|.
    std::map<Prime, Conjunction> by_prime;
    for (const auto& a : c) by_prime[a.prime()].add(a);
    SzmielewDescriptor sum;
    for (const auto& [p, psi_p] : by_prime) {
      auto w = p_conj_discr_sat(p, psi_p);
      if (!w) return std::nullopt;
      for (const auto& [q, comp] : w->components()) sum.set_component(q, comp);
      sum.set_nu(sum.nu() + w->nu());
    }
    verify(c, sum, "conj_discr_sat (no Delta equality)");
    return sum;
  }

  if (delta_primes.size() >= 2) {
    // p^n B = q^m B = 0 for distinct p, q leaves only the trivial group.
    SzmielewDescriptor zero;
    if (holds(c, zero)) return zero;
    return std::nullopt;
  }

  // Delta equalities at the single prime p: the group is a p-group, so at
  // q != p only Phi/Theta/Gamma equal to 0 can hold, and |q^m B| > s means
  // |B| > s.
  const Prime p = *delta_primes.begin();
  Conjunction psi_p;
  std::vector<Bound> sizes;
  for (const auto& a : c) {
    if (a.prime() == p) {
      psi_p.add(a);
      continue;
    }
    if (a.family() == Family::Delta) {
      sizes.push_back(a.bound());  // necessarily a strict bound
      continue;
    }
    if (!a.is_eq() || a.bound() != 0) return std::nullopt;
  }
  for (Bound s : sizes) psi_p.add(InvariantAtom(AtomKind::DeltaGt, p, 0, s));
  auto w = p_conj_discr_sat(p, psi_p);
  if (w) verify(c, *w, "conj_discr_sat (one Delta prime)");
  return w;
}

std::optional<SzmielewDescriptor> satisfiable_square_like(const Sentence& s) {
  // Inconsistency is inherited by supersets, so the walk can drop every
  // disjunct extending an inconsistent partial conjunction.
  std::optional<SzmielewDescriptor> w;
  walk_positive_dnf(
      s, [](const Conjunction& partial) { return satisfiable_szmielew(partial).has_value(); },
      [&](const Conjunction& disjunct) {
        w = conj_discr_sat(disjunct);
        return w.has_value();
      });
  if (w && (!eval_sentence(s, *w) || !is_discriminating(*w))) {
    throw InvariantViolation("square-like witness fails the sentence: " + w->to_string());
  }
  return w;
}

TheoryVerdict in_theory(const Sentence& s) {
  TheoryVerdict v;
  v.counter_model = satisfiable_square_like(Sentence::negation(s));
  v.member = !v.counter_model.has_value();
  return v;
}

}  // namespace szmielew
