// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "szmielew/classifier.hpp"
#include "szmielew/consistency.hpp"
#include "szmielew/decider.hpp"
#include "szmielew/evaluator.hpp"
#include "szmielew/normalizer.hpp"
#include "szmielew/oracle.hpp"
#include "szmielew/parser.hpp"

using namespace szmielew;
using Clock = std::chrono::steady_clock;

namespace {

const ExtCard W = kOmega;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Report {
  int failures = 0;
  void line(int id, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
};

// Longest single decision query seen in criteria 4 to 7.
struct QueryTimer {
  double worst = 0;
  std::string worst_label;
  template <class F>
  auto time(const std::string& label, F&& f) {
    const auto t0 = Clock::now();
    auto result = f();
    const double dt = seconds_since(t0);
    if (dt > worst) {
      worst = dt;
      worst_label = label;
    }
    return result;
  }
};

std::vector<InvariantAtom> atom_grid(const std::vector<Prime>& primes, Level max_level,
                                     Bound max_bound) {
  std::vector<InvariantAtom> out;
  for (Family f : {Family::Phi, Family::Theta, Family::Gamma, Family::Delta}) {
    for (bool eq : {true, false}) {
      for (Prime p : primes) {
        for (Level n = 0; n <= max_level; ++n) {
          for (Bound k = 0; k <= max_bound; ++k) {
            if (f == Family::Delta && eq && k == 0) continue;
            out.emplace_back(make_kind(f, eq), p, n, k);
          }
        }
      }
    }
  }
  return out;
}

SzmielewDescriptor one_prime(Prime p, std::vector<ExtCard> prefix, ExtCard tail = 0,
                             ExtCard lambda = 0, ExtCard mu = 0, ExtCard nu = 0) {
  SzmielewDescriptor d;
  d.set_component(p, PrimeComponent::from_profile(std::move(prefix), tail, lambda, mu));
  d.set_nu(nu);
  return d;
}

// ---------------------------------------------------------------------------

void oracle_equivalence(Report& r) {
  const auto t0 = Clock::now();
  const auto groups = oracle::groups_up_to({2, 3}, 256);
  const auto atoms = atom_grid({2, 3}, 3, 8);
  std::uint64_t checks = 0, disagreements = 0;
  std::string first;
  for (const auto& g : groups) {
    const auto d = oracle::descriptor_of(g);
    for (const auto& a : atoms) {
      ++checks;
      if (oracle::brute_invariant(a, g) != eval_atom(a, d)) {
        if (disagreements++ == 0) first = a.to_string() + " on " + d.to_string();
      }
    }
  }
  const double dt = seconds_since(t0);
  r.line(1, disagreements == 0 && dt < 60,
         std::to_string(groups.size()) + " groups x " + std::to_string(atoms.size()) +
             " atoms, " + std::to_string(disagreements) + " disagreements" +
             (first.empty() ? "" : " (first: " + first + ")") + ", " + std::to_string(dt) + " s");
}

void classification_fixtures(Report& r) {
  struct Fixture {
    const char* name;
    SzmielewDescriptor d;
    bool discriminating;
    bool square_like;
  };
  const std::vector<Fixture> fixtures = {
      {"Q", SzmielewDescriptor{}.set_nu(1), true, true},
      {"Z(2)", one_prime(2, {1}), false, false},
      {"Z(2)^omega", one_prime(2, {W}), true, true},
      {"Z(2^inf)", one_prime(2, {}, 0, 1), false, false},
      {"lambda_2=1, kappa_tail=1", one_prime(2, {}, 1, 1), false, true},
      {"zero", SzmielewDescriptor{}, true, true},
  };
  int ok = 0;
  std::string bad;
  for (const auto& f : fixtures) {
    const bool pass =
        is_square_like(f.d) == f.square_like && is_discriminating(f.d) == f.discriminating;
    ok += pass ? 1 : 0;
    if (!pass) bad += std::string(" ") + f.name;
  }
  r.line(2, ok == static_cast<int>(fixtures.size()),
         std::to_string(ok) + "/" + std::to_string(fixtures.size()) + " fixtures" +
             (bad.empty() ? "" : ", wrong:" + bad));
}

void companion_correctness(Report& r) {
  const auto t0 = Clock::now();
  auto stream = oracle::enumerate_descriptors({2, 3}, 2, {0, 1, 2, W}, {0, 1});
  std::uint64_t total = 0, square_like = 0, bad = 0;
  std::string first;
  while (auto d = stream.next()) {
    ++total;
    if (!is_square_like(*d)) continue;
    ++square_like;
    const auto c = discriminating_companion(*d);
    if (!is_discriminating(c) || !elem_equiv(*d, c)) {
      if (bad++ == 0) first = d->to_string();
    }
  }
  const double dt = seconds_since(t0);
  r.line(3, bad == 0 && dt < 120,
         std::to_string(square_like) + " square-like of " + std::to_string(total) +
             " descriptors, " + std::to_string(bad) + " failures" +
             (first.empty() ? "" : " (first: " + first + ")") + ", " + std::to_string(dt) + " s");
}

// Seeded corpus shared by criteria 4 and 7.
std::vector<Sentence> random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Prime primes[] = {2, 3, 5};
  const Bound delta_bounds[] = {1, 2, 3, 4, 6, 8, 9};
  std::function<Sentence(int)> gen = [&](int depth) -> Sentence {
    const auto roll = rng() % 100;
    if (depth == 0 || roll < 40) {
      if (roll < 3) return roll % 2 ? Sentence::truth() : Sentence::falsity();
      const Family f = static_cast<Family>(rng() % 4);
      const bool eq = rng() % 2;
      const Prime p = primes[rng() % 3];
      const Level n = rng() % 4;
      Bound k = rng() % 4;
      if (f == Family::Delta) k = delta_bounds[rng() % 7];
      return Sentence::atom(InvariantAtom(make_kind(f, eq), p, n, k));
    }
    if (roll < 55) return Sentence::negation(gen(depth - 1));
    std::vector<Sentence> kids;
    const int n = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < n; ++i) kids.push_back(gen(depth - 1));
    return roll < 80 ? Sentence::conj(std::move(kids)) : Sentence::disj(std::move(kids));
  };
  std::vector<Sentence> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen(3));
  return out;
}

void decider_soundness(Report& r, const std::vector<Sentence>& corpus, QueryTimer& timer) {
  std::size_t witnesses = 0, bad = 0;
  std::string first;
  for (const auto& s : corpus) {
    const std::string text = serialize_sentence(s);
    const auto w = timer.time("sat " + text, [&] { return satisfiable_square_like(s); });
    if (!w) continue;
    ++witnesses;
    if (!eval_sentence(s, *w) || !is_discriminating(*w)) {
      if (bad++ == 0) first = text;
    }
  }
  r.line(4, bad == 0,
         std::to_string(corpus.size()) + " sentences, " + std::to_string(witnesses) +
             " witnesses, " + std::to_string(bad) + " invalid" +
             (first.empty() ? "" : " (first: " + first + ")"));
}

// ---------------------------------------------------------------------------
// Criterion 5

using TruthVector = std::array<std::uint64_t, 3>;  // one bit per atom (<= 192)

struct VectorHash {
  std::size_t operator()(const TruthVector& v) const {
    return std::hash<std::uint64_t>()(v[0] * 0x9E3779B97F4A7C15ULL ^ v[1] * 31 ^ v[2]);
  }
};

// Per-atom bitsets over the distinct truth vectors, for fast "is there a
// model of these atoms" queries.
class ModelIndex {
 public:
  ModelIndex(const std::unordered_set<TruthVector, VectorHash>& vectors, std::size_t atoms)
      : words_((vectors.size() + 63) / 64), bits_(atoms, std::vector<std::uint64_t>(words_, 0)) {
    std::size_t i = 0;
    for (const auto& v : vectors) {
      for (std::size_t a = 0; a < atoms; ++a) {
        if ((v[a / 64] >> (a % 64)) & 1) bits_[a][i / 64] |= 1ULL << (i % 64);
      }
      ++i;
    }
  }

  bool any(std::initializer_list<std::size_t> atoms) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t acc = ~0ULL;
      for (std::size_t a : atoms) acc &= bits_[a][w];
      if (acc) return true;
    }
    return false;
  }

 private:
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> bits_;
};

void set_bit(TruthVector& v, std::size_t i) { v[i / 64] |= 1ULL << (i % 64); }

// Literal search: every enumerated descriptor, discriminating ones kept.
std::unordered_set<TruthVector, VectorHash> literal_models(const std::vector<InvariantAtom>& atoms,
                                                           const std::vector<ExtCard>& values,
                                                           std::uint64_t& discriminating) {
  std::unordered_set<TruthVector, VectorHash> out;
  auto stream = oracle::enumerate_descriptors({2, 3}, 2, values, {0, 1});
  discriminating = 0;
  while (auto d = stream.next()) {
    if (!is_discriminating(*d)) continue;
    ++discriminating;
    TruthVector v{};
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (eval_atom(atoms[i], *d)) set_bit(v, i);
    }
    out.insert(v);
  }
  return out;
}

// Same search, factored: a descriptor's truth vector depends only on whether
// nu is zero and on a signature of each of its two components (its own
// Phi/Theta/Gamma bits, its |p^n C| for n <= 2 and its order, each capped at
// 4 since no bound exceeds 3). Used for the larger value set, where the
// literal product is too big to walk.
std::unordered_set<TruthVector, VectorHash> factored_models(const std::vector<InvariantAtom>& atoms,
                                                            const std::vector<ExtCard>& values) {
  const std::uint64_t kCap = 4;
  auto capped = [kCap](const DeltaMagnitude& m) -> std::uint64_t {
    if (m.infinite) return kCap;
    std::uint64_t v = 1;
    for (const auto& [q, e] : m.factors) {
      for (std::uint64_t i = 0; i < e && v < kCap; ++i) v *= q;
    }
    return std::min(v, kCap);
  };
  struct Signature {
    TruthVector local{};
    std::array<std::uint64_t, 3> own{};
    std::uint64_t order = 1;
    bool operator<(const Signature& o) const {
      return std::tie(local, own, order) < std::tie(o.local, o.own, o.order);
    }
  };
  std::map<Prime, std::set<Signature>> sigs;
  for (Prime p : {Prime{2}, Prime{3}}) {
    const Prime other = p == 2 ? 3 : 2;
    auto stream = oracle::enumerate_descriptors({p}, 2, values, {0, 1});
    while (auto d = stream.next()) {
      if (!d->nu().is_zero()) continue;  // nu is handled below
      if (!is_discriminating(*d)) continue;
      Signature s;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].prime() == p && atoms[i].family() != Family::Delta &&
            eval_atom(atoms[i], *d)) {
          set_bit(s.local, i);
        }
      }
      for (Level n = 0; n <= 2; ++n) s.own[n] = capped(delta_magnitude(*d, p, n));
      s.order = capped(delta_magnitude(*d, other, 0));
      sigs[p].insert(s);
    }
  }
  std::unordered_set<TruthVector, VectorHash> out;
  for (bool nu_zero : {true, false}) {
    for (const auto& s2 : sigs[2]) {
      for (const auto& s3 : sigs[3]) {
        TruthVector v{};
        for (int w = 0; w < 3; ++w) v[w] = s2.local[w] | s3.local[w];
        for (std::size_t i = 0; i < atoms.size(); ++i) {
          const auto& a = atoms[i];
          if (a.family() != Family::Delta) continue;
          const Signature& own = a.prime() == 2 ? s2 : s3;
          const Signature& other = a.prime() == 2 ? s3 : s2;
          const std::uint64_t size =
              nu_zero ? std::min(own.own[a.level()] * other.order, kCap) : kCap;
          const bool holds = a.is_eq() ? size == a.bound() : size > a.bound();
          if (holds) set_bit(v, i);
        }
        out.insert(v);
      }
    }
  }
  return out;
}

struct CompletenessResult {
  std::uint64_t conjunctions = 0;
  std::uint64_t decider_only = 0;  // decider satisfiable, no enumerated model
  std::uint64_t search_only = 0;   // enumerated model, decider absent
  std::vector<std::string> examples;
};

CompletenessResult compare_with_decider(const std::vector<InvariantAtom>& atoms,
                                        const ModelIndex& index, QueryTimer* timer) {
  CompletenessResult res;
  auto check = [&](std::initializer_list<std::size_t> ids) {
    ++res.conjunctions;
    Conjunction c;
    for (std::size_t i : ids) c.add(atoms[i]);
    const bool by_search = index.any(ids);
    const bool by_decider =
        timer ? timer->time("conj_discr_sat", [&] { return conj_discr_sat(c).has_value(); })
              : conj_discr_sat(c).has_value();
    if (by_search == by_decider) return;
    (by_decider ? res.decider_only : res.search_only)++;
    if (res.examples.size() < 4) {
      std::string text;
      for (const auto& a : c) text += (text.empty() ? "" : " & ") + a.to_string();
      res.examples.push_back((by_decider ? "decider-only: " : "search-only: ") + text);
    }
  };
  const std::size_t n = atoms.size();
  for (std::size_t i = 0; i < n; ++i) {
    check({i});
    for (std::size_t j = i + 1; j < n; ++j) {
      check({i, j});
      for (std::size_t k = j + 1; k < n; ++k) check({i, j, k});
    }
  }
  return res;
}

void decider_completeness(Report& r, QueryTimer& timer) {
  const auto t0 = Clock::now();
  const auto atoms = atom_grid({2, 3}, 2, 3);
  std::uint64_t discriminating = 0;
  const auto models = literal_models(atoms, {0, 1, 2, W}, discriminating);
  const ModelIndex index(models, atoms.size());
  const auto res = compare_with_decider(atoms, index, &timer);
  const double dt = seconds_since(t0);

  std::string detail = std::to_string(res.conjunctions) + " conjunctions over " +
                       std::to_string(atoms.size()) + " atoms vs " +
                       std::to_string(discriminating) + " discriminating descriptors (" +
                       std::to_string(models.size()) + " distinct truth vectors); " +
                       std::to_string(res.decider_only) + " decider-only, " +
                       std::to_string(res.search_only) + " search-only mismatches, " +
                       std::to_string(dt) + " s";
  for (const auto& e : res.examples) detail += "\n    " + e;
  r.line(5, res.decider_only == 0 && res.search_only == 0 && dt < 600, detail);

  // Not gating. The value set {0,1,2,omega} cannot express a multiplicity of
  // exactly 3, which bounds up to 3 can demand; repeat the comparison with 3
  // added, using the factored search after checking it against the literal
  // one on the original values.
  const auto t1 = Clock::now();
  const bool factored_agrees = factored_models(atoms, {0, 1, 2, W}) == models;
  const auto wide = factored_models(atoms, {0, 1, 2, 3, W});
  const ModelIndex wide_index(wide, atoms.size());
  const auto res3 = compare_with_decider(atoms, wide_index, nullptr);
  std::printf(
      "  supplementary (not gating): factored search %s the literal one on {0,1,2,omega}; "
      "with values {0,1,2,3,omega}: %llu decider-only, %llu search-only mismatches, %.1f s\n",
      factored_agrees ? "reproduces" : "DIFFERS FROM",
      static_cast<unsigned long long>(res3.decider_only),
      static_cast<unsigned long long>(res3.search_only), seconds_since(t1));
  for (const auto& e : res3.examples) std::printf("    %s\n", e.c_str());
  std::fflush(stdout);
}

// ---------------------------------------------------------------------------

void reference_decisions(Report& r, QueryTimer& timer) {
  struct Case {
    const char* sentence;
    bool satisfiable;
  };
  const std::vector<Case> cases = {
      {"Theta(2,0)=1", false},
      {"Delta(2,0)=2", false},
      {"Delta(2,0)=1", true},
      {"Phi(2,0)=1", true},
      {"Theta(2,1)=0 & Phi(2,0)=1", false},
      {"Theta(2,2)=0 & Phi(2,0)=1", true},
  };
  int ok = 0;
  std::string bad;
  for (const auto& c : cases) {
    const auto w = timer.time(c.sentence, [&] {
      return satisfiable_square_like(parse_sentence(c.sentence));
    });
    bool pass = w.has_value() == c.satisfiable;
    if (pass && std::string(c.sentence) == "Delta(2,0)=1") pass = w->is_zero();
    if (pass && std::string(c.sentence) == "Phi(2,0)=1") pass = w->component(2).lambda() == W;
    ok += pass ? 1 : 0;
    if (!pass) bad += std::string(" [") + c.sentence + "]";
  }
  r.line(6, ok == static_cast<int>(cases.size()),
         std::to_string(ok) + "/" + std::to_string(cases.size()) + " decisions" +
             (bad.empty() ? "" : ", wrong:" + bad));
}

void duality(Report& r, const std::vector<Sentence>& corpus, QueryTimer& timer) {
  std::size_t bad = 0, members = 0;
  for (const auto& s : corpus) {
    const std::string text = serialize_sentence(s);
    const auto v = timer.time("prove " + text, [&] { return in_theory(s); });
    const bool refuted = timer.time("sat !" + text, [&] {
      return satisfiable_square_like(Sentence::negation(s)).has_value();
    });
    members += v.member ? 1 : 0;
    if (v.member == refuted) ++bad;
  }
  const Sentence s = parse_sentence("Phi(2,0)=0");
  const bool s_member = timer.time("prove Phi(2,0)=0", [&] { return in_theory(s).member; });
  const bool not_member =
      timer.time("prove !Phi(2,0)=0", [&] { return in_theory(Sentence::negation(s)).member; });
  const bool incomplete = !s_member && !not_member;
  r.line(7, bad == 0 && incomplete,
         std::to_string(corpus.size()) + " sentences (" + std::to_string(members) +
             " theorems), " + std::to_string(bad) + " duality violations; Phi(2,0)=0 and its " +
             "negation both non-members: " + (incomplete ? "yes" : "no"));
}

}  // namespace

int main() {
  Report report;
  QueryTimer timer;
  const auto corpus = random_corpus(1000, 20240607);

  oracle_equivalence(report);
  classification_fixtures(report);
  companion_correctness(report);
  decider_soundness(report, corpus, timer);
  decider_completeness(report, timer);
  reference_decisions(report, timer);
  duality(report, corpus, timer);
  report.line(8, timer.worst < 1.0,
              "slowest decision query " + std::to_string(timer.worst) + " s (" +
                  timer.worst_label + ")");

  std::printf("%d of 8 criteria failed\n", report.failures);
  return report.failures == 0 ? 0 : 1;
}
