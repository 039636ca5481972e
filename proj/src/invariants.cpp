#include "szmielew/invariants.hpp"

#include <sstream>
#include <stdexcept>

#include "szmielew/number_theory.hpp"

namespace szmielew {

Family family_of(AtomKind kind) {
  return static_cast<Family>(static_cast<std::uint8_t>(kind) / 2);
}

bool is_eq(AtomKind kind) { return static_cast<std::uint8_t>(kind) % 2 == 0; }

AtomKind make_kind(Family family, bool eq) {
  return static_cast<AtomKind>(static_cast<std::uint8_t>(family) * 2 + (eq ? 0 : 1));
}

const char* family_name(Family family) {
  switch (family) {
    case Family::Phi: return "Phi";
    case Family::Theta: return "Theta";
    case Family::Gamma: return "Gamma";
    case Family::Delta: return "Delta";
  }
  return "?";
}

InvariantAtom::InvariantAtom(AtomKind kind, Prime p, Level n, Bound k)
    : kind_(kind), p_(p), n_(n), k_(k) {
  if (!is_prime(p)) {
    throw std::invalid_argument("invariant sentence prime " + std::to_string(p) +
                                " is not prime");
  }
  if (kind == AtomKind::DeltaEq && k == 0) {
    throw std::invalid_argument("Delta(p,n)=0 holds in no group");
  }
}

std::string InvariantAtom::to_string() const {
  std::ostringstream os;
  os << family_name(family()) << '(' << p_ << ',' << n_ << ')'
     << (is_eq() ? '=' : '>') << k_;
  return os.str();
}

// ---------------------------------------------------------------------------

struct Sentence::Node {
  Kind kind;
  std::optional<InvariantAtom> atom;
  std::vector<Sentence> children;
};

Sentence Sentence::atom(InvariantAtom a) {
  return Sentence(std::make_shared<const Node>(Node{Kind::Atom, a, {}}));
}

Sentence Sentence::conj(std::vector<Sentence> children) {
  if (children.empty()) throw std::invalid_argument("empty conjunction node");
  return Sentence(
      std::make_shared<const Node>(Node{Kind::And, std::nullopt, std::move(children)}));
}

Sentence Sentence::disj(std::vector<Sentence> children) {
  if (children.empty()) throw std::invalid_argument("empty disjunction node");
  return Sentence(
      std::make_shared<const Node>(Node{Kind::Or, std::nullopt, std::move(children)}));
}

Sentence Sentence::negation(Sentence child) {
  return Sentence(std::make_shared<const Node>(
      Node{Kind::Not, std::nullopt, std::vector<Sentence>{std::move(child)}}));
}

Sentence Sentence::truth() {
  static const Sentence t(std::make_shared<const Node>(Node{Kind::True, std::nullopt, {}}));
  return t;
}

Sentence Sentence::falsity() {
  static const Sentence f(std::make_shared<const Node>(Node{Kind::False, std::nullopt, {}}));
  return f;
}

Sentence::Kind Sentence::kind() const { return node_->kind; }

const InvariantAtom& Sentence::atom() const {
  if (node_->kind != Kind::Atom) throw std::logic_error("Sentence::atom() on non-atom");
  return *node_->atom;
}

std::span<const Sentence> Sentence::children() const { return node_->children; }

bool operator==(const Sentence& a, const Sentence& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  if (a.node_->kind == Sentence::Kind::Atom) return *a.node_->atom == *b.node_->atom;
  return a.node_->children == b.node_->children;
}

// ---------------------------------------------------------------------------

PrimeComponent PrimeComponent::from_profile(std::vector<ExtCard> prefix, ExtCard tail,
                                            ExtCard lambda, ExtCard mu) {
  PrimeComponent c;
  c.prefix_ = std::move(prefix);
  c.tail_ = tail;
  c.lambda_ = lambda;
  c.mu_ = mu;
  c.trim();
  return c;
}

ExtCard PrimeComponent::kappa(Level n) const {
  return n < prefix_.size() ? prefix_[n] : tail_;
}

std::map<Level, ExtCard> PrimeComponent::kappa_exceptions() const {
  std::map<Level, ExtCard> out;
  for (Level n = 0; n < prefix_.size(); ++n) {
    if (!prefix_[n].is_zero() || n + 1 == prefix_.size()) out.emplace(n, prefix_[n]);
  }
  return out;
}

PrimeComponent& PrimeComponent::set_kappa(Level n, ExtCard value) {
  if (n >= prefix_.size()) {
    if (value == tail_) return *this;
    prefix_.resize(n + 1, tail_);
  }
  prefix_[n] = value;
  trim();
  return *this;
}

PrimeComponent& PrimeComponent::set_kappa_tail(ExtCard value) {
  tail_ = value;
  trim();
  return *this;
}

PrimeComponent& PrimeComponent::set_lambda(ExtCard value) {
  lambda_ = value;
  return *this;
}

PrimeComponent& PrimeComponent::set_mu(ExtCard value) {
  mu_ = value;
  return *this;
}

bool PrimeComponent::is_zero() const {
  return prefix_.empty() && tail_.is_zero() && lambda_.is_zero() && mu_.is_zero();
}

void PrimeComponent::trim() {
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

// ---------------------------------------------------------------------------

const PrimeComponent& SzmielewDescriptor::component(Prime p) const {
  static const PrimeComponent zero;
  auto it = primes_.find(p);
  return it == primes_.end() ? zero : it->second;
}

SzmielewDescriptor& SzmielewDescriptor::set_component(Prime p, PrimeComponent c) {
  if (!is_prime(p)) {
    throw std::invalid_argument("descriptor key " + std::to_string(p) + " is not prime");
  }
  if (c.is_zero()) {
    primes_.erase(p);
  } else {
    primes_.insert_or_assign(p, std::move(c));
  }
  return *this;
}

std::vector<Prime> SzmielewDescriptor::support() const {
  std::vector<Prime> out;
  out.reserve(primes_.size());
  for (const auto& [p, c] : primes_) out.push_back(p);
  return out;
}

std::string SzmielewDescriptor::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const std::string& group, ExtCard mult) {
    if (mult.is_zero()) return;
    if (!first) os << " + ";
    first = false;
    os << group << '^' << mult;
  };
  for (const auto& [p, c] : primes_) {
    for (Level n = 0; n < c.prefix_length(); ++n) {
      term("Z(" + std::to_string(p) + "^" + std::to_string(n + 1) + ")", c.kappa(n));
    }
    if (!c.kappa_tail().is_zero()) {
      if (!first) os << " + ";
      first = false;
      os << "Z(" << p << "^n)^" << c.kappa_tail() << " for all n>"
         << c.prefix_length();
    }
    term("Z(" + std::to_string(p) + "^inf)", c.lambda());
    term("Z_(" + std::to_string(p) + ")", c.mu());
  }
  term("Q", nu_);
  return first ? std::string("0") : os.str();
}

// ---------------------------------------------------------------------------

ExtCard tail_sum(const PrimeComponent& c, Level n) {
  if (!c.kappa_tail().is_zero()) return kOmega;
  ExtCard sum;
  for (Level m = n; m < c.prefix_length(); ++m) sum += c.kappa(m);
  return sum;
}

IpInfo ip_info(const PrimeComponent& c) {
  IpInfo info;
  if (!c.kappa_tail().is_zero()) {
    info.ip_empty = false;
    info.ip_finite = false;
    return info;
  }
  for (Level n = c.prefix_length(); n-- > 0;) {
    if (!c.kappa(n).is_zero()) {
      info.ip_empty = false;
      info.lp = n + 1;
      break;
    }
  }
  return info;
}

}  // namespace szmielew
