#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace szmielew {

/// A cardinal in {0, 1, 2, ...} u {omega}.
///
/// Every invariant of a Szmielew group (kappa, lambda, mu, nu) and every
/// value of an invariant sentence family lives in this domain. Finite values
/// are exact 64-bit integers; arithmetic that would leave that range throws
/// std::overflow_error rather than wrapping.
class ExtCard {
 public:
  constexpr ExtCard() = default;
  constexpr ExtCard(std::uint64_t value) : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtCard omega() {
    ExtCard c;
    c.omega_ = true;
    return c;
  }

  constexpr bool is_omega() const { return omega_; }
  constexpr bool is_finite() const { return !omega_; }
  constexpr bool is_zero() const { return !omega_ && value_ == 0; }

  /// Throws std::logic_error when called on omega.
  std::uint64_t finite_value() const;

  friend constexpr bool operator==(const ExtCard& a, const ExtCard& b) {
    return a.omega_ == b.omega_ && (a.omega_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtCard& a,
                                                    const ExtCard& b) {
    if (a.omega_ || b.omega_) return a.omega_ <=> b.omega_;
    return a.value_ <=> b.value_;
  }

  friend ExtCard operator+(ExtCard a, ExtCard b);
  ExtCard& operator+=(ExtCard other) { return *this = *this + other; }

  /// "omega" or the decimal value.
  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool omega_ = false;
};

inline constexpr ExtCard kOmega = ExtCard::omega();

/// Exact sum; omega is absorbing.
ExtCard ext_add(ExtCard a, ExtCard b);

std::ostream& operator<<(std::ostream& os, const ExtCard& c);

}  // namespace szmielew
