#include "szmielew/parser.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "szmielew/number_theory.hpp"

namespace szmielew {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("parse error at " + std::to_string(position) + ": " + message),
      position_(position),
      message_(message) {}

namespace {

constexpr int kMaxDepth = 2000;

class SentenceParser {
 public:
  explicit SentenceParser(std::string_view text) : text_(text) {}

  Sentence parse() {
    Sentence s = disjunction();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < text_.size() ? "expected '" + std::string(1, c) + "'"
                               : "expected '" + std::string(1, c) + "' at end of input");
    }
  }

  struct DepthGuard {
    explicit DepthGuard(SentenceParser& p) : p(p) {
      if (++p.depth_ > kMaxDepth) p.fail("nesting too deep");
    }
    ~DepthGuard() { --p.depth_; }
    SentenceParser& p;
  };

  Sentence disjunction() {
    std::vector<Sentence> parts{conjunction()};
    while (accept('|')) parts.push_back(conjunction());
    return parts.size() == 1 ? parts.front() : Sentence::disj(std::move(parts));
  }

  Sentence conjunction() {
    std::vector<Sentence> parts{unary()};
    while (accept('&')) parts.push_back(unary());
    return parts.size() == 1 ? parts.front() : Sentence::conj(std::move(parts));
  }

  Sentence unary() {
    DepthGuard guard(*this);
    if (accept('!')) return Sentence::negation(unary());
    return primary();
  }

  Sentence primary() {
    skip_ws();
    if (accept('(')) {
      Sentence inner = disjunction();
      expect(')');
      return inner;
    }
    const std::size_t start = pos_;
    std::string word = identifier();
    if (word == "true") return Sentence::truth();
    if (word == "false") return Sentence::falsity();
    Family family;
    if (word == "Phi") {
      family = Family::Phi;
    } else if (word == "Theta") {
      family = Family::Theta;
    } else if (word == "Gamma") {
      family = Family::Gamma;
    } else if (word == "Delta") {
      family = Family::Delta;
    } else {
      pos_ = start;
      fail(word.empty() ? "expected a sentence" : "unknown word '" + word + "'");
    }
    return atom(family);
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t integer(const char* what) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail(std::string(what) + " must not be negative");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      pos_ = start;
      fail(std::string("expected ") + what);
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      fail(std::string(what) + " does not fit in 64 bits");
    }
    return value;
  }

  Sentence atom(Family family) {
    expect('(');
    skip_ws();
    const std::size_t prime_pos = pos_;
    const std::uint64_t p = integer("prime");
    if (!is_prime(p)) throw ParseError(prime_pos, std::to_string(p) + " is not prime");
    expect(',');
    skip_ws();
    const std::size_t level_pos = pos_;
    const std::uint64_t n = integer("level");
    if (n > kMaxLevel) {
      throw ParseError(level_pos, "level exceeds " + std::to_string(kMaxLevel));
    }
    expect(')');
    skip_ws();
    bool eq;
    if (accept('=')) {
      eq = true;
    } else if (accept('>')) {
      eq = false;
    } else {
      fail("expected '=' or '>'");
    }
    skip_ws();
    const std::size_t bound_pos = pos_;
    const std::uint64_t k = integer("bound");
    if (family == Family::Delta && eq && k == 0) {
      throw ParseError(bound_pos, "Delta(p,n)=0 holds in no group");
    }
    return Sentence::atom(InvariantAtom(make_kind(family, eq), p, n, k));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

void write(const Sentence& s, std::string& out) {
  auto child = [&](const Sentence& c, bool wrap) {
    if (wrap) out += '(';
    write(c, out);
    if (wrap) out += ')';
  };
  switch (s.kind()) {
    case Sentence::Kind::True: out += "true"; return;
    case Sentence::Kind::False: out += "false"; return;
    case Sentence::Kind::Atom: out += s.atom().to_string(); return;
    case Sentence::Kind::Not: {
      const Sentence& c = s.children().front();
      out += '!';
      child(c, c.kind() == Sentence::Kind::And || c.kind() == Sentence::Kind::Or);
      return;
    }
    case Sentence::Kind::And:
    case Sentence::Kind::Or: {
      const char* sep = s.kind() == Sentence::Kind::And ? " & " : " | ";
      bool first = true;
      for (const Sentence& c : s.children()) {
        if (!first) out += sep;
        first = false;
        child(c, c.kind() == Sentence::Kind::And || c.kind() == Sentence::Kind::Or);
      }
      return;
    }
  }
}

[[noreturn]] void schema_error(const std::string& msg) { throw ParseError(0, msg); }

ExtCard card_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "omega") return kOmega;
    schema_error(where + ": expected a non-negative integer or \"omega\"");
  }
  if (j.is_number_unsigned()) return ExtCard(j.get<std::uint64_t>());
  if (j.is_number_integer()) schema_error(where + ": negative value");
  schema_error(where + ": expected a non-negative integer or \"omega\"");
}

std::uint64_t key_number(const std::string& key, const std::string& where) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
  if (key.empty() || ec != std::errc() || ptr != key.data() + key.size()) {
    schema_error(where + ": key '" + key + "' is not a non-negative integer");
  }
  return v;
}

nlohmann::json card_to_json(ExtCard c) {
  if (c.is_omega()) return "omega";
  return c.finite_value();
}

PrimeComponent component_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where + ": expected an object");
  ExtCard lambda, mu, tail;
  std::vector<ExtCard> prefix;
  for (const auto& [key, value] : j.items()) {
    if (key == "lambda") {
      lambda = card_from_json(value, where + ".lambda");
    } else if (key == "mu") {
      mu = card_from_json(value, where + ".mu");
    } else if (key == "kappa_tail") {
      tail = card_from_json(value, where + ".kappa_tail");
    } else if (key == "kappa") {
      if (!value.is_object()) schema_error(where + ".kappa: expected an object");
      for (const auto& [lk, lv] : value.items()) {
        const Level n = key_number(lk, where + ".kappa");
        if (n > kMaxLevel) schema_error(where + ".kappa: level exceeds " + std::to_string(kMaxLevel));
        if (prefix.size() <= n) prefix.resize(n + 1, ExtCard(0));
        prefix[n] = card_from_json(lv, where + ".kappa." + lk);
      }
    } else {
      schema_error(where + ": unknown field '" + key + "'");
    }
  }
  return PrimeComponent::from_profile(std::move(prefix), tail, lambda, mu);
}

}  // namespace

Sentence parse_sentence(std::string_view text) { return SentenceParser(text).parse(); }

std::string serialize_sentence(const Sentence& s) {
  std::string out;
  write(s, out);
  return out;
}

SzmielewDescriptor descriptor_from_json(const nlohmann::json& j) {
  if (!j.is_object()) schema_error("descriptor: expected an object");
  SzmielewDescriptor d;
  for (const auto& [key, value] : j.items()) {
    if (key == "nu") {
      d.set_nu(card_from_json(value, "nu"));
    } else if (key == "primes") {
      if (!value.is_object()) schema_error("primes: expected an object");
      for (const auto& [pk, pv] : value.items()) {
        const Prime p = key_number(pk, "primes");
        if (!is_prime(p)) schema_error("primes: " + pk + " is not prime");
        d.set_component(p, component_from_json(pv, "primes." + pk));
      }
    } else {
      schema_error("descriptor: unknown field '" + key + "'");
    }
  }
  return d;
}

SzmielewDescriptor parse_descriptor(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    throw ParseError(at, "malformed JSON");
  }
  return descriptor_from_json(j);
}

nlohmann::json descriptor_to_json(const SzmielewDescriptor& d) {
  nlohmann::json primes = nlohmann::json::object();
  for (const auto& [p, c] : d.components()) {
    nlohmann::json kappa = nlohmann::json::object();
    for (const auto& [n, v] : c.kappa_exceptions()) kappa[std::to_string(n)] = card_to_json(v);
    primes[std::to_string(p)] = {{"lambda", card_to_json(c.lambda())},
                                 {"mu", card_to_json(c.mu())},
                                 {"kappa", kappa},
                                 {"kappa_tail", card_to_json(c.kappa_tail())}};
  }
  return {{"nu", card_to_json(d.nu())}, {"primes", primes}};
}

std::string serialize_descriptor(const SzmielewDescriptor& d) {
  return descriptor_to_json(d).dump();
}

}  // namespace szmielew
