#include "szmielew/normalizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace szmielew {

Conjunction::Conjunction(std::initializer_list<InvariantAtom> atoms) {
  for (const auto& a : atoms) add(a);
}

Conjunction::Conjunction(std::vector<InvariantAtom> atoms) {
  for (const auto& a : atoms) add(a);
}

void Conjunction::add(const InvariantAtom& atom) {
  if (!contains(atom)) atoms_.push_back(atom);
}

bool Conjunction::contains(const InvariantAtom& atom) const {
  return std::find(atoms_.begin(), atoms_.end(), atom) != atoms_.end();
}

Sentence Conjunction::to_sentence() const {
  if (atoms_.empty()) return Sentence::truth();
  if (atoms_.size() == 1) return Sentence::atom(atoms_.front());
  std::vector<Sentence> children;
  children.reserve(atoms_.size());
  for (const auto& a : atoms_) children.push_back(Sentence::atom(a));
  return Sentence::conj(std::move(children));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<InvariantAtom> complement_atoms(const InvariantAtom& a) {
  const Family f = a.family();
  const Bound first = f == Family::Delta ? 1 : 0;
  std::vector<InvariantAtom> out;
  if (a.is_eq()) out.emplace_back(make_kind(f, false), a.prime(), a.level(), a.bound());
  const Bound last = a.is_eq() ? a.bound() : a.bound() + 1;  // exclusive
  for (Bound j = first; j < last; ++j) {
    out.emplace_back(make_kind(f, true), a.prime(), a.level(), j);
  }
  return out;
}

Dnf product(const Dnf& lhs, const Dnf& rhs) {
  Dnf out;
  out.reserve(lhs.size() * rhs.size());
  for (const auto& l : lhs) {
    for (const auto& r : rhs) {
      Conjunction c = l;
      for (const auto& a : r) c.add(a);
      out.push_back(std::move(c));
    }
  }
  return out;
}

Dnf dnf(const Sentence& s, bool positive) {
  switch (s.kind()) {
    case Sentence::Kind::True: return positive ? Dnf{Conjunction{}} : Dnf{};
    case Sentence::Kind::False: return positive ? Dnf{} : Dnf{Conjunction{}};
    case Sentence::Kind::Atom: {
      if (positive) return Dnf{Conjunction{s.atom()}};
      Dnf out;
      for (const auto& a : complement_atoms(s.atom())) out.push_back(Conjunction{a});
      return out;
    }
    case Sentence::Kind::Not: return dnf(s.children().front(), !positive);
    case Sentence::Kind::And:
    case Sentence::Kind::Or: {
      // De Morgan: a negated And behaves as an Or and vice versa.
      const bool conjunctive = (s.kind() == Sentence::Kind::And) == positive;
      if (conjunctive) {
        Dnf acc{Conjunction{}};
        for (const auto& child : s.children()) {
          acc = product(acc, dnf(child, positive));
          if (acc.empty()) break;
        }
        return acc;
      }
      Dnf acc;
      for (const auto& child : s.children()) {
        Dnf part = dnf(child, positive);
        acc.insert(acc.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      }
      return acc;
    }
  }
  throw std::logic_error("unknown sentence kind");
}

}  // namespace

Sentence negate_atom(const InvariantAtom& a) {
  std::vector<InvariantAtom> atoms = complement_atoms(a);
  if (atoms.empty()) return Sentence::falsity();
  if (atoms.size() == 1) return Sentence::atom(atoms.front());
  std::vector<Sentence> children;
  children.reserve(atoms.size());
  for (const auto& x : atoms) children.push_back(Sentence::atom(x));
  return Sentence::disj(std::move(children));
}

Dnf to_positive_dnf(const Sentence& s) { return dnf(s, true); }

namespace {

struct Pending {
  Sentence s;
  bool positive;
};

class DnfWalker {
 public:
  DnfWalker(const DisjunctFilter& keep, const DisjunctVisitor& visit) : keep_(keep), visit_(visit) {}

  // `agenda` is a stack: its back is processed first.
  bool walk(Conjunction current, std::vector<Pending> agenda) {
    while (!agenda.empty()) {
      Pending top = std::move(agenda.back());
      agenda.pop_back();
      const Sentence& s = top.s;
      switch (s.kind()) {
        case Sentence::Kind::True:
        case Sentence::Kind::False:
          if ((s.kind() == Sentence::Kind::True) != top.positive) return false;
          break;
        case Sentence::Kind::Atom:
          if (top.positive) {
            if (!extend(current, s.atom())) return false;
          } else {
            return branch(current, agenda, complement_atoms(s.atom()));
          }
          break;
        case Sentence::Kind::Not:
          agenda.push_back({s.children().front(), !top.positive});
          break;
        case Sentence::Kind::And:
        case Sentence::Kind::Or: {
          const auto kids = s.children();
          if ((s.kind() == Sentence::Kind::And) == top.positive) {
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
              agenda.push_back({*it, top.positive});
            }
            break;
          }
          for (const Sentence& kid : kids) {
            std::vector<Pending> next = agenda;
            next.push_back({kid, top.positive});
            if (walk(current, std::move(next))) return true;
          }
          return false;
        }
      }
    }
    return visit_(current);
  }

 private:
  bool extend(Conjunction& current, const InvariantAtom& a) {
    if (current.contains(a)) return true;
    current.add(a);
    return keep_(current);
  }

  bool branch(const Conjunction& current, const std::vector<Pending>& agenda,
              const std::vector<InvariantAtom>& options) {
    for (const auto& a : options) {
      Conjunction next = current;
      if (!extend(next, a)) continue;
      if (walk(std::move(next), agenda)) return true;
    }
    return false;
  }

  const DisjunctFilter& keep_;
  const DisjunctVisitor& visit_;
};

}  // namespace

bool walk_positive_dnf(const Sentence& s, const DisjunctFilter& keep,
                       const DisjunctVisitor& visit) {
  return DnfWalker(keep, visit).walk(Conjunction{}, {{s, true}});
}

Dnf gamma_lift(const Conjunction& c, Prime p, Level n) {
  // Lowest offending level first; every rewrite raises that level by one, so
  // sum over offenders of (n - level) strictly decreases.
  const InvariantAtom* target = nullptr;
  for (const auto& a : c) {
    if (a.kind() == AtomKind::GammaEq && a.prime() == p && a.level() < n &&
        (target == nullptr || a.level() < target->level())) {
      target = &a;
    }
  }
  if (target == nullptr) return Dnf{c};

  const Level k = target->level();
  const Bound l = target->bound();
  Dnf out;
  for (Bound i = 0; i <= l; ++i) {
    Conjunction next;
    for (const auto& a : c) {
      if (a == *target) {
        next.add(InvariantAtom(AtomKind::GammaEq, p, k + 1, l - i));
        next.add(InvariantAtom(AtomKind::PhiEq, p, k, i));
      } else {
        next.add(a);
      }
    }
    Dnf lifted = gamma_lift(next, p, n);
    out.insert(out.end(), std::make_move_iterator(lifted.begin()),
               std::make_move_iterator(lifted.end()));
  }
  return out;
}

}  // namespace szmielew
