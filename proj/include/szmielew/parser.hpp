#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "szmielew/invariants.hpp"

namespace szmielew {

/// Malformed sentence text or descriptor JSON. `position` is a character
/// offset into the input (0 for schema errors that have no single location).
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message);

  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

/// Levels above this are rejected: components store kappa densely up to the
/// highest mentioned level.
inline constexpr Level kMaxLevel = Level{1} << 20;

/// Grammar:
///
///   sentence := disj
///   disj     := conj ('|' conj)*
///   conj     := unary ('&' unary)*
///   unary    := '!' unary | primary
///   primary  := 'true' | 'false' | atom | '(' sentence ')'
///   atom     := FAMILY '(' PRIME ',' LEVEL ')' ('=' | '>') BOUND
///
/// Whitespace is ignored between tokens. A chain a & b & c becomes one And
/// node with three children; parentheses only group.
Sentence parse_sentence(std::string_view text);

/// Inverse of parse_sentence for every sentence whose And/Or nodes have at
/// least two children.
std::string serialize_sentence(const Sentence& s);

/// { "nu": c, "primes": { "<p>": { "lambda": c, "mu": c,
///   "kappa": { "<level>": c, ... }, "kappa_tail": c } } }
/// where c is a non-negative integer or "omega"; every field defaults to 0.
SzmielewDescriptor parse_descriptor(std::string_view text);
SzmielewDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json descriptor_to_json(const SzmielewDescriptor& d);
std::string serialize_descriptor(const SzmielewDescriptor& d);

}  // namespace szmielew
