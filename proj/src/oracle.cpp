#include "szmielew/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "szmielew/errors.hpp"
#include "szmielew/number_theory.hpp"

namespace szmielew::oracle {
namespace {

// Prime p and exponent m with p^m == order, or throws.
std::pair<Prime, std::uint64_t> prime_power(std::uint64_t order) {
  if (order < 2) throw std::invalid_argument("cyclic order must exceed 1");
  auto f = factorize(order);
  if (f.size() != 1) {
    throw std::invalid_argument(std::to_string(order) + " is not a prime power");
  }
  return f.front();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;  // mod <= cap, no overflow
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

// Elements are indices 0 .. |G|-1 in mixed radix over the cyclic orders.
class Materialized {
 public:
  explicit Materialized(const FiniteAbelianGroup& g) : orders_(g.cyclic_orders()) {
    size_ = g.order();
  }

  std::uint64_t size() const { return size_; }

  // Marks of { c * x : x in G } for the integer multiplier c (given mod each
  // cyclic order).
  std::vector<char> image_of_multiplication(Prime p, Level n) const {
    std::vector<std::uint64_t> factor(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) factor[i] = pow_mod(p, n, orders_[i]);
    std::vector<char> marks(size_, 0);
    for (std::uint64_t x = 0; x < size_; ++x) marks[scale(x, factor)] = 1;
    return marks;
  }

  // Marks of G[p] = { x : p x = 0 }.
  std::vector<char> p_torsion(Prime p) const {
    std::vector<std::uint64_t> factor(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) factor[i] = p % orders_[i];
    std::vector<char> marks(size_, 0);
    for (std::uint64_t x = 0; x < size_; ++x) marks[x] = scale(x, factor) == 0 ? 1 : 0;
    return marks;
  }

 private:
  std::uint64_t scale(std::uint64_t x, const std::vector<std::uint64_t>& factor) const {
    std::uint64_t out = 0;
    std::uint64_t place = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      const std::uint64_t digit = x % orders_[i];
      x /= orders_[i];
      out += (digit * factor[i] % orders_[i]) * place;
      place *= orders_[i];
    }
    return out;
  }

  std::vector<std::uint64_t> orders_;
  std::uint64_t size_;
};

std::uint64_t count(const std::vector<char>& marks) {
  return static_cast<std::uint64_t>(std::count(marks.begin(), marks.end(), 1));
}

std::uint64_t count_both(const std::vector<char>& a, const std::vector<char>& b) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += (a[i] && b[i]) ? 1 : 0;
  return n;
}

// Exact log_p; a non-power means the enumeration is broken.
std::uint64_t exact_log(std::uint64_t value, Prime p) {
  std::uint64_t e = 0;
  while (value > 1) {
    if (value % p != 0) {
      throw InvariantViolation("subgroup size ratio is not a power of " + std::to_string(p));
    }
    value /= p;
    ++e;
  }
  if (value != 1) throw InvariantViolation("empty subgroup");
  return e;
}

std::uint64_t exact_ratio_log(std::uint64_t big, std::uint64_t small, Prime p) {
  if (small == 0 || big % small != 0) {
    throw InvariantViolation("subgroup sizes do not divide");
  }
  return exact_log(big / small, p);
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> cyclic_orders,
                                       std::uint64_t cap)
    : orders_(std::move(cyclic_orders)), cap_(cap) {
  for (std::uint64_t o : orders_) {
    prime_power(o);
    if (order_ > cap_ / o) {
      throw std::invalid_argument("group order exceeds cap " + std::to_string(cap_));
    }
    order_ *= o;
  }
  std::sort(orders_.begin(), orders_.end());
}

FiniteAbelianGroup FiniteAbelianGroup::operator+(const FiniteAbelianGroup& other) const {
  std::vector<std::uint64_t> orders = orders_;
  orders.insert(orders.end(), other.orders_.begin(), other.orders_.end());
  return FiniteAbelianGroup(std::move(orders), std::max(cap_, other.cap_));
}

std::uint64_t brute_multiple_size(const FiniteAbelianGroup& g, Prime p, Level n) {
  if (g.order() > g.cap()) throw std::invalid_argument("group exceeds order cap");
  return count(Materialized(g).image_of_multiplication(p, n));
}

bool brute_invariant(const InvariantAtom& atom, const FiniteAbelianGroup& g) {
  if (g.order() > g.cap()) throw std::invalid_argument("group exceeds order cap");
  const Materialized m(g);
  const Prime p = atom.prime();
  const Level n = atom.level();

  const auto multiples = m.image_of_multiplication(p, n);  // p^n G
  std::uint64_t value = 0;
  switch (atom.family()) {
    case Family::Delta: value = count(multiples); break;
    case Family::Gamma: {
      const auto next = m.image_of_multiplication(p, n + 1);
      value = exact_ratio_log(count(multiples), count(next), p);
      break;
    }
    case Family::Theta: {
      const auto torsion = m.p_torsion(p);
      value = exact_log(count_both(multiples, torsion), p);
      break;
    }
    case Family::Phi: {
      const auto torsion = m.p_torsion(p);
      const auto next = m.image_of_multiplication(p, n + 1);
      value = exact_ratio_log(count_both(multiples, torsion), count_both(next, torsion), p);
      break;
    }
  }
  return atom.is_eq() ? value == atom.bound() : value > atom.bound();
}

SzmielewDescriptor descriptor_of(const FiniteAbelianGroup& g) {
  std::map<Prime, std::vector<ExtCard>> profiles;
  for (std::uint64_t o : g.cyclic_orders()) {
    auto [p, m] = prime_power(o);
    auto& prof = profiles[p];
    if (prof.size() < m) prof.resize(m, ExtCard(0));
    prof[m - 1] += 1;
  }
  SzmielewDescriptor d;
  for (auto& [p, prof] : profiles) d.set_component(p, PrimeComponent::from_profile(prof, 0));
  return d;
}

std::vector<FiniteAbelianGroup> groups_up_to(const std::vector<Prime>& primes,
                                             std::uint64_t max_order) {
  // Each isomorphism class is a non-increasing list of prime-power orders per
  // prime (a partition of the exponent).
  for (Prime p : primes) {
    if (!is_prime(p)) throw std::invalid_argument("groups_up_to: " + std::to_string(p) + " is not prime");
  }
  std::vector<FiniteAbelianGroup> out;
  std::vector<std::uint64_t> orders;
  const std::uint64_t cap = std::max(max_order, kDefaultOrderCap);

  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> rec =
      [&](std::size_t i, std::uint64_t limit, std::uint64_t size) {
        if (i == primes.size()) {
          out.emplace_back(orders, cap);
          return;
        }
        rec(i + 1, max_order, size);  // close prime i
        const Prime p = primes[i];
        for (std::uint64_t part = p; part <= limit && size <= max_order / part; part *= p) {
          orders.push_back(part);
          rec(i, part, size * part);
          orders.pop_back();
          if (part > max_order / p) break;
        }
      };
  rec(0, max_order, 1);
  return out;
}

// ---------------------------------------------------------------------------

DescriptorStream::DescriptorStream(EnumerationParams params) : params_(std::move(params)) {
  if (params_.values.empty() || params_.tails.empty()) {
    done_ = true;
    return;
  }
  radix_.push_back(params_.values.size());  // nu
  for (std::size_t i = 0; i < params_.primes.size(); ++i) {
    if (!is_prime(params_.primes[i])) {
      throw std::invalid_argument("enumeration prime is not prime");
    }
    for (Level n = 0; n <= params_.max_level; ++n) radix_.push_back(params_.values.size());
    radix_.push_back(params_.tails.size());
    radix_.push_back(params_.values.size());  // lambda
    radix_.push_back(params_.values.size());  // mu
  }
  digits_.assign(radix_.size(), 0);
}

std::uint64_t DescriptorStream::count() const {
  if (params_.values.empty() || params_.tails.empty()) return 0;
  std::uint64_t total = 1;
  for (std::size_t r : radix_) total *= r;
  return total;
}

std::optional<SzmielewDescriptor> DescriptorStream::next() {
  if (done_) return std::nullopt;
  SzmielewDescriptor d;
  std::size_t pos = 0;
  d.set_nu(params_.values[digits_[pos++]]);
  for (Prime p : params_.primes) {
    std::vector<ExtCard> prefix;
    prefix.reserve(params_.max_level + 1);
    for (Level n = 0; n <= params_.max_level; ++n) prefix.push_back(params_.values[digits_[pos++]]);
    const ExtCard tail = params_.tails[digits_[pos++]];
    const ExtCard lambda = params_.values[digits_[pos++]];
    const ExtCard mu = params_.values[digits_[pos++]];
    d.set_component(p, PrimeComponent::from_profile(std::move(prefix), tail, lambda, mu));
  }
  // Advance: the last digit moves fastest.
  std::size_t i = digits_.size();
  while (i > 0 && ++digits_[i - 1] == radix_[i - 1]) digits_[--i] = 0;
  if (i == 0) done_ = true;
  return d;
}

DescriptorStream enumerate_descriptors(const std::vector<Prime>& primes, Level max_level,
                                       const std::vector<ExtCard>& values,
                                       const std::vector<ExtCard>& tails) {
  return DescriptorStream(EnumerationParams{primes, max_level, values, tails});
}

}  // namespace szmielew::oracle
