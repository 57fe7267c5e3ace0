#pragma once

#include <compare>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/congruence.hpp"

namespace actkit {

// One equation y_j * s = y_k * t over a tuple (indices 0-based).
struct Relation {
  int j, k, s, t;
  auto operator<=>(const Relation&) const = default;
};

// The maximal relation family the tuple satisfies, in (j,k,s,t) order.
// Any lift satisfying it satisfies every sub-family, so purity checks only
// need this one.
std::vector<Relation> satisfied_relations(const FiniteAct& a,
                                          const std::vector<int>& tuple);

struct PurityCheck {
  bool pure;
  // least stuck tuple (ascending, distinct entries), empty when pure
  std::vector<int> witness;
};

// Every n-tuple in the codomain admits a preimage tuple satisfying the
// tuple's maximal relation family.  Tuples with repeated entries reuse the
// lift of their distinct support (collapsing duplicates merges the relation
// family and any solution transfers back), so only ascending tuples of
// distinct elements are scanned, smallest support first.
PurityCheck is_n_pure(const ActMap& g, int n);

// n-purity saturates at n = |codomain|: larger tuples repeat an entry and
// add nothing new.
PurityCheck is_pure_epi(const ActMap& g);

// Purity of the natural map A -> A/rho, cross-checked against the
// representative-wise formulation on A itself (lift tuples rho-related to
// the originals with the relations holding exactly).
bool is_pure_congruence(const ActPtr& a, const Congruence& rho);

// Tensoring with every act over the opposite monoid of size <= bound stays
// injective on classes.  A bounded certificate, not a decision: the
// definition quantifies over all such acts.
bool is_pure_mono_bounded(const ActMap& f, int bound);

}  // namespace actkit
