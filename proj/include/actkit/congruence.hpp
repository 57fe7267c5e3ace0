#pragma once

#include <utility>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/classes.hpp"

namespace actkit {

// Right congruence on an act: an equivalence stable under the action
// (a ~ b implies a*s ~ b*s).  Stored canonically: class ids are assigned in
// order of each class's least member, so equal partitions compare equal.
class Congruence {
 public:
  Congruence(ActPtr act, std::vector<int> class_of);

  const ActPtr& act() const noexcept { return act_; }
  int num_classes() const noexcept { return num_classes_; }
  int class_of(int a) const { return class_of_[a]; }
  const std::vector<int>& classes() const noexcept { return class_of_; }
  bool relates(int a, int b) const { return class_of_[a] == class_of_[b]; }

  bool identity() const { return num_classes_ == act_->size(); }

  // every pair related by other is related by *this
  bool contains(const Congruence& other) const;

  bool operator==(const Congruence& o) const {
    return class_of_ == o.class_of_ && *act_ == *o.act_;
  }
  bool operator<(const Congruence& o) const {  // canonical enumeration order
    if (num_classes_ != o.num_classes_) return num_classes_ > o.num_classes_;
    return class_of_ < o.class_of_;
  }

 private:
  ActPtr act_;
  int num_classes_;
  std::vector<int> class_of_;
};

Congruence identity_congruence(const ActPtr& a);
Congruence universal_congruence(const ActPtr& a);

// Least congruence containing the given pairs: union-find closure pushing
// (a*s, b*s) for every merged pair (a, b).
Congruence generated_congruence(const ActPtr& a,
                                const std::vector<std::pair<int, int>>& pairs);

// Every right congruence, ordered coarsest-last (identity first, universal
// last, ties lexicographic).  Hard cap: act size 9.
std::vector<Congruence> all_congruences(const ActPtr& a);

// As all_congruences but restricted to congruences refining `within` (every
// class sits inside a class of `within`).  candidate_budget caps the number
// of partial assignments explored.
std::vector<Congruence> congruences_refining(const ActPtr& a,
                                             const Congruence& within,
                                             long long candidate_budget);

Congruence kernel(const ActMap& f);

// Checks the list is an ascending chain and returns its union (for a finite
// ascending chain that is the last entry).
Congruence union_of_chain(const std::vector<Congruence>& chain);

struct QuotientAct {
  ActPtr act;
  ActMap natural;
};
// Classes ordered by least member; the induced action is well defined by
// stability.
QuotientAct quotient_act(const ActPtr& a, const Congruence& rho);

// The minimum group congruence on an inverse monoid M, as a congruence on
// the regular act: s ~ t iff es = et for some idempotent e.
Congruence min_group_congruence(const MonoidPtr& m);

// Membership of the quotient act in a class (decided by the flatness layer).
bool is_class_pure_congruence(const ActPtr& a, const Congruence& rho,
                              ActClass cls);

}  // namespace actkit
