#pragma once

#include <optional>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/classes.hpp"

namespace actkit {

// Pairwise non-isomorphic indecomposable representatives of a class over one
// monoid.  For SF and CP on a finite monoid every locally cyclic act is
// cyclic, so the quotients of the regular act exhaust the indecomposable
// members; for Pr the principal acts eS do.  E and LC carry no such finite
// completeness argument and are refused.
struct Skeleton {
  ActClass cls;
  MonoidPtr monoid;
  std::vector<ActPtr> members;  // canonical tables, ordered by (size, table)
};

Skeleton build_skeleton(const MonoidPtr& m, ActClass cls);

struct FactorizationEntry {
  int member;     // index into the skeleton
  ActMap hom;     // member -> target
  ActMap factor;  // member -> carrier, map o factor = hom
};

struct PrecoverCertificate {
  ActPtr target;
  ActPtr carrier;
  ActMap map;  // carrier -> target
  std::vector<FactorizationEntry> factorizations;
};

// Carrier with one copy of K per (skeleton member K, hom h: K -> target);
// the map restricts to h on its copy, the factorizations are the injections.
PrecoverCertificate build_precover(const ActPtr& a, ActClass cls);

// Re-checks every recorded factorization against the map.
bool verify_certificate(const PrecoverCertificate& cert);

struct PrecoverCheck {
  bool ok;
  std::optional<ActMap> unfactored;  // witness hom when not a precover
};

// Every hom from every skeleton member into the codomain factors through g.
// Quantifying over the skeleton suffices: an arbitrary class member is a
// coproduct of indecomposables, each isomorphic to a skeleton member, and a
// hom from a coproduct factors componentwise.
PrecoverCheck is_precover(const ActMap& g, ActClass cls);

struct CoverCheck {
  bool ok;
  std::optional<ActMap> unfactored;
  std::optional<ActMap> bad_endo;  // non-iso endomorphism over g
};

// Precover whose endomorphisms over g are all isomorphisms.
CoverCheck is_cover(const ActMap& g, ActClass cls);

struct CoverSearch {
  bool found = false;
  std::optional<ActMap> cover;
  std::optional<PrecoverCertificate> certificate;
  long long candidates = 0;    // action-closed subsets examined
  bool fallback_used = false;  // coproduct enumeration was reached
};

// Searches the action-closed subsets of the canonical precover carrier in
// ascending (size, carrier) order for one that is in the class, still a
// precover and passes the endomorphism test.  Any cover embeds into any
// precover of the same act (the cover-through-precover composite is an
// automorphism), so this enumeration cannot miss one.  If no subset passes,
// epis from coproducts of skeleton members are tried before giving up;
// found=false then contradicts the existence theorem for Pr/SF/CP over a
// finite monoid and should be treated as a bug report.
CoverSearch find_cover(const ActPtr& a, ActClass cls);

// Epi from a projective act such that no proper action-closed subset still
// maps onto the codomain.
bool is_projective_cover(const ActMap& g);

// Isomorphism h with g2 o h = g1 between the domains of two maps onto the
// same act, if one exists.
std::optional<ActMap> iso_over(const ActMap& g1, const ActMap& g2);

}  // namespace actkit
