#pragma once

#include <optional>
#include <vector>

#include "actkit/act.hpp"

namespace actkit {

// Search budget for hom enumeration: the number of generator-image tuples
// |A|^g must not exceed it.  Overridable through the ACTKIT_BUDGET
// environment variable (read once per process).
long long search_budget();

// A smallest generating set: the least element of every source component of
// the reachability preorder x >= y iff y in xS.  Every hom is determined by
// its values on this set.
std::vector<int> act_generators(const FiniteAct& a);

// All equivariant maps dom -> cod, ordered lexicographically by their value
// vectors.  allowed, when present, restricts the image of each domain
// element.  Throws when |cod|^generators exceeds the budget.
std::vector<ActMap> homs(const ActPtr& dom, const ActPtr& cod);
std::vector<ActMap> homs(const ActPtr& dom, const ActPtr& cod,
                         const std::vector<std::vector<char>>& allowed);
// Some hom (deterministically chosen), or nullopt; cheap existence check.
std::optional<ActMap> first_hom(const ActPtr& dom, const ActPtr& cod,
                                const std::vector<std::vector<char>>& allowed);

struct MapProperties {
  bool mono;
  bool epi;
  bool iso;
  bool split_epi;   // a section exists
  bool split_mono;  // a retraction exists
};
MapProperties map_properties(const ActMap& f);

// Lexicographically least isomorphism by value vector, or nullopt.  Pruned
// by size, component size multisets, fixed points and orbit sizes.
std::optional<ActMap> find_iso(const ActPtr& x, const ActPtr& y);

// All endomorphisms f of dom(g) with g o f = g.
std::vector<ActMap> endos_over(const ActMap& g);

// Whether some epi from the act onto the regular act exists.
bool is_generator(const ActPtr& g);

// Complete isomorphism invariant: the least action table over all
// relabellings of the carrier.
std::vector<int> act_canonical_form(const FiniteAct& a);

}  // namespace actkit
