#include "szmielew/ext_card.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace szmielew {

std::uint64_t ExtCard::finite_value() const {
  if (omega_) throw std::logic_error("finite_value() called on omega");
  return value_;
}

ExtCard operator+(ExtCard a, ExtCard b) {
  if (a.omega_ || b.omega_) return kOmega;
  if (a.value_ > std::numeric_limits<std::uint64_t>::max() - b.value_) {
    throw std::overflow_error("cardinal sum exceeds 64-bit range");
  }
  return ExtCard(a.value_ + b.value_);
}

ExtCard ext_add(ExtCard a, ExtCard b) { return a + b; }

std::string ExtCard::to_string() const {
  return omega_ ? std::string("omega") : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, const ExtCard& c) {
  return os << c.to_string();
}

}  // namespace szmielew
