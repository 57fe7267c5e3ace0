#pragma once

#include <map>
#include <utility>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/congruence.hpp"

namespace actkit {

// Finite direct system: acts over one monoid indexed by a preordered set
// (relation matrix leq), with a transition map for every related pair.
struct DirectSystem {
  std::vector<ActPtr> acts;
  std::vector<std::vector<char>> leq;  // leq[i][j]: i <= j
  std::map<std::pair<int, int>, ActMap> transitions;
};

// Checks shape, preorder axioms, endpoint acts, identity on the diagonal and
// functoriality (trans[j,k] o trans[i,j] = trans[i,k]); missing diagonal
// entries are filled with identities.  Throws InvalidSystem with a witness.
DirectSystem make_system(std::vector<ActPtr> acts,
                         std::vector<std::vector<char>> leq,
                         std::map<std::pair<int, int>, ActMap> transitions);
void validate_system(const DirectSystem& d);

// Every two indices have a common upper bound.
bool is_directed(const DirectSystem& d);

struct Cocone {
  ActPtr apex;
  std::vector<ActMap> legs;
};

bool is_cocone(const DirectSystem& d, const Cocone& c);

// Quotient of the coproduct by the congruence generated by all pairs
// (inj_i(x), inj_j(trans[i,j](x))).
Cocone colimit(const DirectSystem& d);

// Same apex from the one-shot description available for directed systems:
// inj_i(x) ~ inj_j(y) iff some stage k >= i,j equalizes the images.  The raw
// relation is verified to be transitive as written and to coincide with the
// generated congruence; both are theorems for directed systems, so a
// mismatch aborts rather than returning.
Cocone directed_colimit(const DirectSystem& d);

// Exactly one mediating map from cone.apex commutes with every probe.
bool verify_universal_property(const DirectSystem& d, const Cocone& cone,
                               const std::vector<Cocone>& probes);

// The map through a jointly surjective cocone `univ` onto a compatible
// cocone `probe`: univ legs pick the value, clashes mean the probe is not
// compatible.
ActMap cocone_mediator(const Cocone& univ, const Cocone& probe);

// Induced map between the apexes of two systems over the same preorder,
// connected by levelwise maps psi with commuting squares.
ActMap colimit_of_maps(const DirectSystem& dx, const DirectSystem& dy,
                       const std::vector<ActMap>& psi);

// System of quotients X/rho with i <= j iff rho_j is coarser, transitions
// sending classes to the classes containing them.
DirectSystem quotient_chain_system(const ActPtr& x,
                                   const std::vector<Congruence>& rhos);

// For an inverse monoid: quotients of the regular act by the kernels of
// left translation by each idempotent, ordered by kernel inclusion.  The
// colimit is the quotient by the minimum group congruence.
DirectSystem idempotent_kernel_system(const MonoidPtr& m);

}  // namespace actkit
