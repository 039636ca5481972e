#pragma once

#include <functional>
#include <vector>

#include "szmielew/invariants.hpp"

namespace szmielew {

/// A finite conjunction of atoms; empty means "true". Atoms are kept in
/// insertion order without duplicates.
class Conjunction {
 public:
  Conjunction() = default;
  Conjunction(std::initializer_list<InvariantAtom> atoms);
  explicit Conjunction(std::vector<InvariantAtom> atoms);

  /// Appends unless already present.
  void add(const InvariantAtom& atom);
  bool contains(const InvariantAtom& atom) const;

  const std::vector<InvariantAtom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  Sentence to_sentence() const;

  friend bool operator==(const Conjunction&, const Conjunction&) = default;

 private:
  std::vector<InvariantAtom> atoms_;
};

/// Disjunction of conjunctions; empty means "false".
using Dnf = std::vector<Conjunction>;

/// The complement of `a` as a positive sentence, by trichotomy over cardinals:
///   not (v = k)  ->  (v > k) or (v = j) for j < k
///   not (v > k)  ->  (v = j) for j <= k
/// Delta equalities start at j = 1 since every group is non-empty, so
/// not Delta(p,n)>0 is `false`.
Sentence negate_atom(const InvariantAtom& a);

/// Negation-free disjunctive normal form, equivalent over all abelian groups.
Dnf to_positive_dnf(const Sentence& s);

using DisjunctFilter = std::function<bool(const Conjunction&)>;
using DisjunctVisitor = std::function<bool(const Conjunction&)>;

/// Visits the disjuncts of to_positive_dnf(s) in the same order, without
/// building the list. `keep` sees each partial conjunction as an atom is
/// added; false drops every disjunct extending it, so `keep` must be
/// monotone (once false, false for all supersets). The walk stops when
/// `visit` returns true, and then returns true.
bool walk_positive_dnf(const Sentence& s, const DisjunctFilter& keep,
                       const DisjunctVisitor& visit);

/// Rewrites every Gamma(p,k)=l with k < n through
///   Gamma(p,k)=l  <->  OR_{i=0..l} ( Gamma(p,k+1)=l-i  and  Phi(p,k)=i )
/// lowest level first, and redistributes to DNF. Gamma strict bounds and the
/// other families are left untouched.
Dnf gamma_lift(const Conjunction& c, Prime p, Level n);

}  // namespace szmielew
