#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "szmielew/ext_card.hpp"

namespace szmielew {

using Prime = std::uint64_t;
using Level = std::uint64_t;
using Bound = std::uint64_t;

// ---------------------------------------------------------------------------
// Invariant sentences
// ---------------------------------------------------------------------------

/// The eight Szmielew invariant sentence shapes. For an abelian group B,
/// prime p, level n and bound k:
///
///   Phi   : dim_p(p^n B[p] / p^{n+1} B[p])
///   Theta : dim_p(p^n B[p])
///   Gamma : dim_p(p^n B / p^{n+1} B)
///   Delta : |p^n B|
///
/// The Eq variant says the quantity equals k, the Gt variant that it exceeds k.
enum class AtomKind : std::uint8_t {
  PhiEq,
  PhiGt,
  ThetaEq,
  ThetaGt,
  GammaEq,
  GammaGt,
  DeltaEq,
  DeltaGt,
};

enum class Family : std::uint8_t { Phi, Theta, Gamma, Delta };

Family family_of(AtomKind kind);
bool is_eq(AtomKind kind);
AtomKind make_kind(Family family, bool eq);
const char* family_name(Family family);

/// One invariant sentence. Construction validates: p prime, and k >= 1 for
/// DeltaEq. Violations throw std::invalid_argument.
class InvariantAtom {
 public:
  InvariantAtom(AtomKind kind, Prime p, Level n, Bound k);

  AtomKind kind() const { return kind_; }
  Family family() const { return family_of(kind_); }
  bool is_eq() const { return szmielew::is_eq(kind_); }
  Prime prime() const { return p_; }
  Level level() const { return n_; }
  Bound bound() const { return k_; }

  /// Surface syntax, e.g. "Theta(3,0)>2".
  std::string to_string() const;

  friend auto operator<=>(const InvariantAtom&, const InvariantAtom&) = default;
  friend bool operator==(const InvariantAtom&, const InvariantAtom&) = default;

 private:
  AtomKind kind_;
  Prime p_;
  Level n_;
  Bound k_;
};

/// Immutable Boolean combination of invariant atoms. Copies share structure.
class Sentence {
 public:
  enum class Kind : std::uint8_t { Atom, And, Or, Not, True, False };

  static Sentence atom(InvariantAtom a);
  /// Throws std::invalid_argument on an empty child list.
  static Sentence conj(std::vector<Sentence> children);
  static Sentence disj(std::vector<Sentence> children);
  static Sentence negation(Sentence child);
  static Sentence truth();
  static Sentence falsity();

  Kind kind() const;
  const InvariantAtom& atom() const;           // Kind::Atom only
  std::span<const Sentence> children() const;  // And / Or / Not

  friend bool operator==(const Sentence& a, const Sentence& b);

 private:
  struct Node;
  explicit Sentence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Szmielew groups
// ---------------------------------------------------------------------------

/// The p-primary data of a Szmielew group:
///
///   (+)_{n>=0} Z(p^{n+1})^(kappa_n)  (+)  Z(p^inf)^(lambda)  (+)  Z_(p)^(mu)
///
/// Note the indexing: kappa at level n counts the cyclic summand of order
/// p^{n+1}, so I_p = { n+1 : kappa_n > 0 }.
///
/// The kappa profile is eventually constant: an explicit prefix for levels
/// below prefix_length() and kappa_tail() for every level at or above it.
/// The prefix is kept trimmed (its last entry never equals the tail), so two
/// components are equal iff they denote the same group.
class PrimeComponent {
 public:
  PrimeComponent() = default;

  /// kappa_n = prefix[n] for n < prefix.size(), kappa_n = tail above.
  static PrimeComponent from_profile(std::vector<ExtCard> prefix, ExtCard tail,
                                     ExtCard lambda = {}, ExtCard mu = {});

  ExtCard kappa(Level n) const;
  ExtCard kappa_tail() const { return tail_; }
  ExtCard lambda() const { return lambda_; }
  ExtCard mu() const { return mu_; }

  /// Levels below this are stored explicitly; all others read kappa_tail().
  Level prefix_length() const { return prefix_.size(); }

  /// The exception map: every non-zero prefix entry plus the last prefix entry
  /// (so that the map's largest key marks where the tail starts).
  std::map<Level, ExtCard> kappa_exceptions() const;

  /// Changes one level; every other level keeps its current reading.
  PrimeComponent& set_kappa(Level n, ExtCard value);
  /// Re-reads every level at or above prefix_length() as `value`.
  PrimeComponent& set_kappa_tail(ExtCard value);
  PrimeComponent& set_lambda(ExtCard value);
  PrimeComponent& set_mu(ExtCard value);

  bool is_zero() const;

  friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;

 private:
  void trim();

  std::vector<ExtCard> prefix_;
  ExtCard tail_;
  ExtCard lambda_;
  ExtCard mu_;
};

/// A finitely representable Szmielew group: p-components for finitely many
/// primes plus the rank nu of the Q summand. Absent primes are zero.
class SzmielewDescriptor {
 public:
  SzmielewDescriptor() = default;

  /// The zero component for primes outside the support.
  const PrimeComponent& component(Prime p) const;
  /// Stores c at p (erasing it when zero). Throws if p is not prime.
  SzmielewDescriptor& set_component(Prime p, PrimeComponent c);
  const std::map<Prime, PrimeComponent>& components() const { return primes_; }
  std::vector<Prime> support() const;

  ExtCard nu() const { return nu_; }
  SzmielewDescriptor& set_nu(ExtCard nu) {
    nu_ = nu;
    return *this;
  }

  bool is_zero() const { return primes_.empty() && nu_.is_zero(); }

  /// Human-readable direct-sum notation, e.g. "Z(2^1)^1 + Z(2^2)^omega + Q^1".
  std::string to_string() const;

  friend bool operator==(const SzmielewDescriptor&,
                         const SzmielewDescriptor&) = default;

 private:
  std::map<Prime, PrimeComponent> primes_;
  ExtCard nu_;
};

/// Sum of kappa over all levels >= n.
ExtCard tail_sum(const PrimeComponent& c, Level n);

struct IpInfo {
  bool ip_empty = true;
  bool ip_finite = true;
  /// Largest element of I_p when I_p is finite and non-empty.
  std::optional<Level> lp;
};

IpInfo ip_info(const PrimeComponent& c);

}  // namespace szmielew
