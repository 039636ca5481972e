#include "szmielew/consistency.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "szmielew/errors.hpp"
#include "szmielew/evaluator.hpp"
#include "szmielew/number_theory.hpp"

namespace szmielew {
namespace {

// A contiguous set of cardinals {lo, ..., hi}; [k, omega] also contains omega.
struct Interval {
  ExtCard lo{0};
  ExtCard hi = kOmega;

  bool empty() const { return lo > hi; }
  void intersect(const Interval& o) {
    lo = std::max(lo, o.lo);
    hi = std::min(hi, o.hi);
  }
};

Interval exactly(ExtCard v) { return {v, v}; }
Interval at_least(ExtCard v) { return {v, kOmega}; }

// Minkowski sum; both operands non-empty. Sums of intervals stay intervals.
Interval add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

// Interval for x such that `offset + x` satisfies the atom's comparison.
Interval shifted_constraint(const InvariantAtom& a, ExtCard offset) {
  const Bound k = a.bound();
  if (a.is_eq()) {
    if (offset.is_omega() || offset > ExtCard(k)) return {1, 0};
    return exactly(k - offset.finite_value());
  }
  if (offset.is_omega() || offset > ExtCard(k)) return {};
  return at_least(k + 1 - offset.finite_value());
}

std::vector<ExtCard> candidate_offsets(const std::vector<InvariantAtom>& atoms) {
  bool any = false;
  std::optional<Bound> eq_bound;
  for (const auto& a : atoms) {
    any = true;
    if (a.is_eq()) eq_bound = std::min(eq_bound.value_or(a.bound()), a.bound());
  }
  if (!any) return {ExtCard(0)};
  if (!eq_bound) return {ExtCard(0), kOmega};
  // An equality pins offset + tail; offsets past the least bound fail it.
  std::vector<ExtCard> out;
  for (Bound v = 0; v <= *eq_bound; ++v) out.emplace_back(v);
  return out;
}

// Exact solver for the Phi/Theta/Gamma atoms at one prime.
//
// For fixed lambda and mu, every atom becomes an interval constraint on either
// kappa_n or the tail sum T(n) = kappa_n + T(n+1). Levels above the largest
// atom level L carry no Phi atom and are read only through T(L+1), so one
// extra level L+1 stands for all of them. Propagating from the top,
//   S(n) = (K(n) + S(n+1)) & T-constraints(n)
// is the exact set of feasible tail sums at level n, and it is an interval.
std::optional<PrimeComponent> solve_local(const std::vector<InvariantAtom>& atoms) {
  if (atoms.empty()) return PrimeComponent{};
  Level top = 0;
  std::vector<InvariantAtom> theta, gamma;
  for (const auto& a : atoms) {
    top = std::max(top, a.level());
    if (a.family() == Family::Theta) theta.push_back(a);
    if (a.family() == Family::Gamma) gamma.push_back(a);
  }
  const std::size_t levels = top + 2;

  std::vector<Interval> kappa_con(levels);
  for (const auto& a : atoms) {
    if (a.family() == Family::Phi) kappa_con[a.level()].intersect(shifted_constraint(a, 0));
  }
  for (const auto& k : kappa_con) {
    if (k.empty()) return std::nullopt;
  }

  for (ExtCard lambda : candidate_offsets(theta)) {
    for (ExtCard mu : candidate_offsets(gamma)) {
      std::vector<Interval> tail_con(levels);
      for (const auto& a : theta) tail_con[a.level()].intersect(shifted_constraint(a, lambda));
      for (const auto& a : gamma) tail_con[a.level()].intersect(shifted_constraint(a, mu));

      // feasible[n] = S(n); feasible[levels] = {0}.
      std::vector<Interval> feasible(levels + 1);
      feasible[levels] = exactly(0);
      bool ok = true;
      for (std::size_t n = levels; n-- > 0;) {
        Interval s = add(kappa_con[n], feasible[n + 1]);
        s.intersect(tail_con[n]);
        if (s.empty()) {
          ok = false;
          break;
        }
        feasible[n] = s;
      }
      if (!ok) continue;

      // Smallest tail sum first, placed at the lowest levels the constraints
      // allow (so Theta(p,0)=1 yields Z(p), not Z(p^2)).
      std::vector<ExtCard> prefix(levels);
      ExtCard tail = feasible[0].lo;
      for (std::size_t n = 0; n < levels; ++n) {
        const Interval& kc = kappa_con[n];
        const Interval& rest = feasible[n + 1];
        ExtCard kappa, remainder;
        if (tail.is_omega()) {
          if (rest.hi.is_omega()) {
            kappa = kc.lo;
            remainder = kOmega;
          } else {
            kappa = kOmega;
            remainder = rest.lo;
          }
        } else {
          const std::uint64_t t = tail.finite_value();
          std::uint64_t hi = t - rest.lo.finite_value();
          if (kc.hi.is_finite()) hi = std::min(hi, kc.hi.finite_value());
          kappa = hi;
          remainder = t - hi;
        }
        prefix[n] = kappa;
        tail = remainder;
      }
      return PrimeComponent::from_profile(std::move(prefix), 0, lambda, mu);
    }
  }
  return std::nullopt;
}

// Calls fn(profile) for every finite abelian p-group of order p^e, as kappa
// profiles (profile[j] = number of Z(p^{j+1}) summands), in lexicographic
// order with smaller counts at lower levels first.
void for_each_partition(std::uint64_t e,
                        const std::function<bool(const std::vector<std::uint64_t>&)>& fn) {
  std::vector<std::uint64_t> profile(e, 0);
  bool stop = false;
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t level,
                                                              std::uint64_t remaining) {
    if (stop) return;
    if (remaining == 0) {
      std::fill(profile.begin() + static_cast<std::ptrdiff_t>(level), profile.end(), 0);
      if (!fn(profile)) stop = true;
      return;
    }
    if (level == e) return;
    const std::uint64_t weight = level + 1;
    for (std::uint64_t count = 0; count * weight <= remaining && !stop; ++count) {
      profile[level] = count;
      rec(level + 1, remaining - count * weight);
    }
    profile[level] = 0;
  };
  rec(0, e);
}

bool delta_exponent_matches(const PrimeComponent& c, Prime r, const InvariantAtom& a) {
  SzmielewDescriptor single;
  single.set_component(r, c);
  DeltaMagnitude m = delta_magnitude(single, r, a.level());
  if (m.infinite) return false;
  const std::uint64_t e = m.factors.empty() ? 0 : m.factors.front().second;
  return e == valuation(a.bound(), r);
}

bool passes_local(const PrimeComponent& c, Prime r, const std::vector<InvariantAtom>& local,
                  const std::vector<InvariantAtom>& own_delta_eq) {
  SzmielewDescriptor single;
  single.set_component(r, c);
  for (const auto& a : local) {
    if (!eval_atom(a, single)) return false;
  }
  for (const auto& a : own_delta_eq) {
    if (!delta_exponent_matches(c, r, a)) return false;
  }
  return true;
}

std::vector<ExtCard> to_cards(const std::vector<std::uint64_t>& v) {
  return {v.begin(), v.end()};
}

// Candidate components at r when some Delta equality lives at another prime:
// r contributes a finite group of the forced order.
std::optional<std::vector<PrimeComponent>> forced_finite_candidates(
    Prime r, const std::vector<InvariantAtom>& local,
    const std::vector<InvariantAtom>& own_delta_eq,
    const std::vector<InvariantAtom>& foreign_delta_eq) {
  const std::uint64_t e = valuation(foreign_delta_eq.front().bound(), r);
  for (const auto& a : foreign_delta_eq) {
    if (valuation(a.bound(), r) != e) return std::nullopt;
  }
  std::vector<PrimeComponent> out;
  for_each_partition(e, [&](const std::vector<std::uint64_t>& profile) {
    auto c = PrimeComponent::from_profile(to_cards(profile), 0);
    if (passes_local(c, r, local, own_delta_eq)) out.push_back(std::move(c));
    return true;
  });
  return out;
}

// Candidate components at the only prime carrying Delta equalities: levels
// >= n_min are a finite group of the forced order, lower levels are free.
std::vector<PrimeComponent> anchored_candidates(Prime r,
                                                const std::vector<InvariantAtom>& local,
                                                const std::vector<InvariantAtom>& all_at_r,
                                                const std::vector<InvariantAtom>& own_delta_eq) {
  const auto anchor = std::min_element(
      own_delta_eq.begin(), own_delta_eq.end(),
      [](const auto& a, const auto& b) { return a.level() < b.level(); });
  const Level n_min = anchor->level();
  const std::uint64_t e = valuation(anchor->bound(), r);

  // Within a run of levels that no atom at r mentions, mass can sit on the
  // run's top level: every tail sum and every Delta count is unchanged or
  // larger, and only Delta strict bounds see the difference.
  std::set<Level> free_levels;
  for (const auto& a : all_at_r) {
    if (a.level() < n_min) {
      free_levels.insert(a.level());
      if (a.level() > 0) free_levels.insert(a.level() - 1);
    }
  }
  if (n_min > 0) free_levels.insert(n_min - 1);
  const std::vector<Level> slots(free_levels.begin(), free_levels.end());

  Bound max_bound = 0;
  for (const auto& a : local) max_bound = std::max(max_bound, a.bound());
  std::vector<ExtCard> values;
  for (Bound v = 0; v <= max_bound; ++v) values.emplace_back(v);
  values.push_back(kOmega);

  std::vector<PrimeComponent> out;
  std::vector<std::size_t> choice(slots.size(), 0);
  while (true) {
    std::vector<ExtCard> low(n_min, ExtCard(0));
    for (std::size_t i = 0; i < slots.size(); ++i) low[slots[i]] = values[choice[i]];
    for_each_partition(e, [&](const std::vector<std::uint64_t>& profile) {
      std::vector<ExtCard> prefix = low;
      prefix.insert(prefix.end(), profile.begin(), profile.end());
      auto c = PrimeComponent::from_profile(std::move(prefix), 0);
      if (passes_local(c, r, local, own_delta_eq)) out.push_back(std::move(c));
      return true;
    });
    // Odometer, least significant digit = highest slot.
    std::size_t i = slots.size();
    while (i > 0 && ++choice[i - 1] == values.size()) choice[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::optional<SzmielewDescriptor> solve_with_delta_eq(const Conjunction& c) {
  std::set<Prime> primes;
  std::set<Prime> delta_primes;
  for (const auto& a : c) {
    primes.insert(a.prime());
    if (a.kind() == AtomKind::DeltaEq) {
      delta_primes.insert(a.prime());
      for (const auto& [q, e] : factorize(a.bound())) primes.insert(q);
    }
  }

  std::vector<Prime> order(primes.begin(), primes.end());
  std::vector<std::vector<PrimeComponent>> candidates;
  for (Prime r : order) {
    std::vector<InvariantAtom> local, all_at_r, own_delta_eq, foreign_delta_eq;
    for (const auto& a : c) {
      if (a.prime() == r) all_at_r.push_back(a);
      if (a.prime() == r && a.family() != Family::Delta) local.push_back(a);
      if (a.kind() == AtomKind::DeltaEq) {
        (a.prime() == r ? own_delta_eq : foreign_delta_eq).push_back(a);
      }
    }
    std::vector<PrimeComponent> cands;
    if (!foreign_delta_eq.empty()) {
      auto forced = forced_finite_candidates(r, local, own_delta_eq, foreign_delta_eq);
      if (!forced) return std::nullopt;
      cands = std::move(*forced);
    } else {
      cands = anchored_candidates(r, local, all_at_r, own_delta_eq);
    }
    if (cands.empty()) return std::nullopt;
    candidates.push_back(std::move(cands));
  }

  // Only Delta strict bounds couple the primes now; search the product.
  std::optional<SzmielewDescriptor> found;
  SzmielewDescriptor current;
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (found) return;
    if (i == order.size()) {
      if (std::all_of(c.begin(), c.end(),
                      [&](const InvariantAtom& a) { return eval_atom(a, current); })) {
        found = current;
      }
      return;
    }
    for (const auto& comp : candidates[i]) {
      current.set_component(order[i], comp);
      dfs(i + 1);
      if (found) return;
    }
    current.set_component(order[i], PrimeComponent{});
  };
  dfs(0);
  return found;
}

std::optional<SzmielewDescriptor> solve_without_delta_eq(const Conjunction& c) {
  std::map<Prime, std::vector<InvariantAtom>> local;
  for (const auto& a : c) {
    if (a.family() != Family::Delta) {
      local[a.prime()].push_back(a);
    }
  }
  SzmielewDescriptor out;
  for (const auto& [p, atoms] : local) {
    auto comp = solve_local(atoms);
    if (!comp) return std::nullopt;
    out.set_component(p, std::move(*comp));
  }
  const bool deltas_hold = std::all_of(c.begin(), c.end(), [&](const InvariantAtom& a) {
    return a.family() != Family::Delta || eval_atom(a, out);
  });
  if (!deltas_hold) out.set_nu(1);
  return out;
}

}  // namespace

std::optional<SzmielewDescriptor> satisfiable_szmielew(const Conjunction& c) {
  const bool has_delta_eq = std::any_of(c.begin(), c.end(), [](const InvariantAtom& a) {
    return a.kind() == AtomKind::DeltaEq;
  });
  auto witness = has_delta_eq ? solve_with_delta_eq(c) : solve_without_delta_eq(c);
  if (witness) {
    for (const auto& a : c) {
      if (!eval_atom(a, *witness)) {
        throw InvariantViolation("consistency witness fails " + a.to_string());
      }
    }
  }
  return witness;
}

}  // namespace szmielew
