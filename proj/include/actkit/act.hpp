#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "actkit/monoid.hpp"

namespace actkit {

// Finite right act over a finite monoid: a set {0..size-1} with a table
// action[a][s] satisfying a*1 = a and (a*s)*t = a*(st).  Validated eagerly,
// immutable afterwards.  Empty acts are excluded.
class FiniteAct {
 public:
  FiniteAct(MonoidPtr monoid, std::vector<int> action, int size);

  const MonoidPtr& monoid() const noexcept { return monoid_; }
  int size() const noexcept { return size_; }
  int act(int a, int s) const { return action_[a * monoid_->size() + s]; }
  const std::vector<int>& action() const noexcept { return action_; }

  bool operator==(const FiniteAct& o) const {
    return size_ == o.size_ && action_ == o.action_ &&
           same_monoid(monoid_, o.monoid_);
  }

 private:
  MonoidPtr monoid_;
  int size_;
  std::vector<int> action_;
};

using ActPtr = std::shared_ptr<const FiniteAct>;

ActPtr make_act(MonoidPtr monoid, const std::vector<std::vector<int>>& action);

// One-element act.
ActPtr theta_act(MonoidPtr monoid);
// The monoid acting on itself by right multiplication.
ActPtr regular_act(MonoidPtr monoid);

// Equivariant map between acts over the same monoid (pointer- or
// value-equal); equivariance is validated at construction.
struct ActMap {
  ActMap(ActPtr domain, ActPtr codomain, std::vector<int> values);

  ActPtr domain, codomain;
  std::vector<int> values;

  int operator()(int a) const { return values[a]; }
  bool operator==(const ActMap& o) const {
    return values == o.values && *domain == *o.domain &&
           *codomain == *o.codomain;
  }
};

ActMap identity_map(const ActPtr& a);
ActMap compose(const ActMap& second, const ActMap& first);  // second . first

struct Coproduct {
  ActPtr act;
  std::vector<ActMap> injections;  // block layout, input order
};
Coproduct coproduct(const std::vector<ActPtr>& parts);

// Connected components of the graph a -- a*s, each sorted, ordered by least
// element.  Components are exactly the maximal indecomposable subacts.
std::vector<std::vector<int>> decompose_indecomposable(const FiniteAct& a);

// The subact on the given (action-closed, nonempty, sorted) carrier subset,
// together with its inclusion into the ambient act.
struct Subact {
  ActPtr act;
  ActMap inclusion;
};
Subact subact(const ActPtr& ambient, const std::vector<int>& elements);

// Collapses an action-closed nonempty subset to a single point; returns the
// quotient and the natural map.
struct ReesQuotient {
  ActPtr act;
  ActMap natural;
};
ReesQuotient rees_quotient(const ActPtr& y, const std::vector<int>& subset);

// Fibre product {(b,c) : f(b) = g(c)} with its two projections; nullopt when
// no pair matches (the empty act has no carrier here).
struct Pullback {
  ActPtr act;
  ActMap to_left;   // onto dom(f)
  ActMap to_right;  // onto dom(g)
  std::vector<std::pair<int, int>> pairs;  // element i is pairs[i]
};
std::optional<Pullback> pullback(const ActMap& f, const ActMap& g);

// Checks the universal property of a pullback against every cone whose apex
// is one of the probe acts.
bool verify_pullback(const Pullback& pb, const ActMap& f, const ActMap& g,
                     const std::vector<ActPtr>& probes);

}  // namespace actkit
