#include "szmielew/evaluator.hpp"

#include <limits>
#include <stdexcept>

#include "szmielew/number_theory.hpp"

namespace szmielew {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw std::overflow_error("group order exponent exceeds 64-bit range");
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw std::overflow_error("group order exponent exceeds 64-bit range");
  }
  return a + b;
}

// Exponent of |q^start C| for the q-component C, or nullopt when infinite.
std::optional<std::uint64_t> component_log_order(const PrimeComponent& c, Level start) {
  if (!c.lambda().is_zero() || !c.mu().is_zero() || !c.kappa_tail().is_zero()) {
    return std::nullopt;
  }
  std::uint64_t e = 0;
  for (Level m = start; m < c.prefix_length(); ++m) {
    ExtCard k = c.kappa(m);
    if (k.is_zero()) continue;
    if (k.is_omega()) return std::nullopt;
    e = checked_add(e, checked_mul(m + 1 - start, k.finite_value()));
  }
  return e;
}

bool compare(ExtCard value, bool eq, Bound k) {
  return eq ? value == ExtCard(k) : value > ExtCard(k);
}

}  // namespace

ExtCard theta_value(const SzmielewDescriptor& a, Prime p, Level n) {
  const PrimeComponent& c = a.component(p);
  return c.lambda() + tail_sum(c, n);
}

ExtCard gamma_value(const SzmielewDescriptor& a, Prime p, Level n) {
  const PrimeComponent& c = a.component(p);
  return c.mu() + tail_sum(c, n);
}

DeltaMagnitude delta_magnitude(const SzmielewDescriptor& a, Prime p, Level n) {
  DeltaMagnitude out;
  if (!a.nu().is_zero()) {
    out.infinite = true;
    return out;
  }
  // components() is ordered by prime, so factors come out sorted.
  for (const auto& [q, c] : a.components()) {
    auto e = component_log_order(c, q == p ? n : 0);
    if (!e) {
      out.infinite = true;
      out.factors.clear();
      return out;
    }
    if (*e > 0) out.factors.emplace_back(q, *e);
  }
  return out;
}

ExtCard delta_value(const SzmielewDescriptor& a, Prime p, Level n) {
  DeltaMagnitude m = delta_magnitude(a, p, n);
  if (m.infinite) return kOmega;
  std::uint64_t order = 1;
  for (const auto& [q, e] : m.factors) {
    std::uint64_t power = 0;
    if (!checked_pow(q, e, std::numeric_limits<std::uint64_t>::max(), power)) {
      throw std::overflow_error("|p^n A| exceeds 64-bit range");
    }
    order = checked_mul(order, power);
  }
  return order;
}

bool eval_atom(const InvariantAtom& atom, const SzmielewDescriptor& a) {
  const Prime p = atom.prime();
  const Level n = atom.level();
  const Bound k = atom.bound();
  switch (atom.family()) {
    case Family::Phi: return compare(a.component(p).kappa(n), atom.is_eq(), k);
    case Family::Theta: return compare(theta_value(a, p, n), atom.is_eq(), k);
    case Family::Gamma: return compare(gamma_value(a, p, n), atom.is_eq(), k);
    case Family::Delta: break;
  }
  DeltaMagnitude m = delta_magnitude(a, p, n);
  if (m.infinite) return !atom.is_eq();
  if (atom.is_eq()) {
    // k >= 1 is guaranteed by InvariantAtom.
    auto expected = factorize(k);
    return m.factors == std::vector<std::pair<Prime, std::uint64_t>>(expected.begin(),
                                                                     expected.end());
  }
  // Saturating product: anything above k is as good as infinite here.
  std::uint64_t order = 1;
  for (const auto& [q, e] : m.factors) {
    std::uint64_t power = 0;
    if (!checked_pow(q, e, k, power)) return true;
    if (order > k / power) return true;
    order *= power;
    if (order > k) return true;
  }
  return order > k;
}

bool eval_sentence(const Sentence& s, const SzmielewDescriptor& a) {
  switch (s.kind()) {
    case Sentence::Kind::Atom: return eval_atom(s.atom(), a);
    case Sentence::Kind::True: return true;
    case Sentence::Kind::False: return false;
    case Sentence::Kind::Not: return !eval_sentence(s.children().front(), a);
    case Sentence::Kind::And:
      for (const Sentence& c : s.children()) {
        if (!eval_sentence(c, a)) return false;
      }
      return true;
    case Sentence::Kind::Or:
      for (const Sentence& c : s.children()) {
        if (eval_sentence(c, a)) return true;
      }
      return false;
  }
  throw std::logic_error("unknown sentence kind");
}

}  // namespace szmielew
