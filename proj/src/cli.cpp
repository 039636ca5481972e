#include "szmielew/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "szmielew/classifier.hpp"
#include "szmielew/consistency.hpp"
#include "szmielew/decider.hpp"
#include "szmielew/errors.hpp"
#include "szmielew/evaluator.hpp"
#include "szmielew/normalizer.hpp"
#include "szmielew/parser.hpp"

namespace szmielew {
namespace {

using nlohmann::json;

SzmielewDescriptor load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_descriptor(buf.str());
}

json eval_command(const std::string& group, const std::string& sentence) {
  const auto d = load_group(group);
  return {{"result", eval_sentence(parse_sentence(sentence), d)}};
}

json classify_command(const std::string& group) {
  const auto d = load_group(group);
  const bool square_like = is_square_like(d);
  json out = {{"discriminating", is_discriminating(d)}, {"square_like", square_like}};
  if (square_like) out["companion"] = descriptor_to_json(discriminating_companion(d));
  return out;
}

json sat_command(const std::string& sentence, const std::string& mode) {
  const Sentence s = parse_sentence(sentence);
  std::optional<SzmielewDescriptor> witness;
  if (mode == "szmielew") {
    walk_positive_dnf(
        s, [](const Conjunction& partial) { return satisfiable_szmielew(partial).has_value(); },
        [&](const Conjunction& c) {
          witness = satisfiable_szmielew(c);
          return witness.has_value();
        });
    if (witness && !eval_sentence(s, *witness)) {
      throw InvariantViolation("Szmielew witness fails the sentence");
    }
  } else {
    // Over discriminating groups and over square-like groups the same
    // sentences are satisfiable, so both modes share the decider.
    witness = satisfiable_square_like(s);
  }
  json out = {{"satisfiable", witness.has_value()}};
  if (witness) out["witness"] = descriptor_to_json(*witness);
  return out;
}

json prove_command(const std::string& sentence) {
  const TheoryVerdict v = in_theory(parse_sentence(sentence));
  json out = {{"member", v.member}};
  if (v.counter_model) out["counter_model"] = descriptor_to_json(*v.counter_model);
  return out;
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide Szmielew invariant sentences over square-like abelian groups"};
  app.name("szmielew");
  app.require_subcommand(1);

  std::string group, sentence, mode;
  auto* eval = app.add_subcommand("eval", "Evaluate a sentence in a group");
  eval->add_option("--group", group, "Descriptor JSON file")->required();
  eval->add_option("--sentence", sentence, "Sentence")->required();

  auto* classify = app.add_subcommand("classify", "Discriminating / square-like tests");
  classify->add_option("--group", group, "Descriptor JSON file")->required();

  auto* sat = app.add_subcommand("sat", "Satisfiability with a witness");
  sat->add_option("--sentence", sentence, "Sentence")->required();
  sat->add_option("--mode", mode, "szmielew | discriminating | square-like")
      ->required()
      ->check(CLI::IsMember({"szmielew", "discriminating", "square-like"}));

  auto* prove = app.add_subcommand("prove", "Membership in the theory of square-like groups");
  prove->add_option("--sentence", sentence, "Sentence")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << json{{"usage", app.help()}}.dump() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what()).dump() << '\n';
    return 1;
  }

  try {
    json result;
    if (*eval) {
      result = eval_command(group, sentence);
    } else if (*classify) {
      result = classify_command(group);
    } else if (*sat) {
      result = sat_command(sentence, mode);
    } else {
      result = prove_command(sentence);
    }
    out << result.dump() << '\n';
    return 0;
  } catch (const ParseError& e) {
    json j = error_json("parse", e.message());
    j["position"] = e.position();
    err << j.dump() << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    err << error_json("internal", e.what()).dump() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << error_json("invalid", e.what()).dump() << '\n';
    return 1;
  } catch (const std::overflow_error& e) {
    err << error_json("overflow", e.what()).dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what()).dump() << '\n';
    return 2;
  }
}

}  // namespace szmielew
