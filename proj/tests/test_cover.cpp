#include <doctest.h>

#include <algorithm>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/congruence.hpp"
#include "actkit/corpus.hpp"
#include "actkit/cover.hpp"
#include "actkit/flatness.hpp"
#include "actkit/hom.hpp"
#include "helpers.hpp"

using namespace actkit;

namespace {

const MonoidPtr z2 = standard_monoid("cyclic_group(2)");
const MonoidPtr ch2 = standard_monoid("semilattice_chain(2)");

}  // namespace

TEST_CASE("skeletons list the indecomposable class members once") {
  auto pr = build_skeleton(z2, ActClass::Pr);
  CHECK(pr.members.size() == 1);
  CHECK(pr.members[0]->size() == 2);  // only eS is S itself

  auto cp = build_skeleton(z2, ActClass::CP);
  REQUIRE(cp.members.size() == 2);
  CHECK(cp.members[0]->size() == 1);
  CHECK(cp.members[1]->size() == 2);

  CHECK(build_skeleton(z2, ActClass::SF).members.size() == 1);
  // over the chain the zero gives a second principal act
  CHECK(build_skeleton(ch2, ActClass::Pr).members.size() == 2);
  CHECK(build_skeleton(ch2, ActClass::SF).members.size() == 2);

  for (auto& m : cp.members) CHECK(in_class(*m, ActClass::CP));
  expect_error(errc::unsupported_class,
               [] { build_skeleton(z2, ActClass::E); });
  expect_error(errc::unsupported_class,
               [] { build_skeleton(z2, ActClass::LC); });
}

TEST_CASE("canonical precover of the point over a group") {
  auto t = theta_act(z2);
  auto cert = build_precover(t, ActClass::CP);
  CHECK(cert.carrier->size() == 3);  // one point copy plus one group copy
  CHECK(cert.factorizations.size() == 2);
  CHECK(verify_certificate(cert));
  CHECK(is_precover(cert.map, ActClass::CP).ok);
  for (auto& entry : cert.factorizations) {
    CHECK(compose(cert.map, entry.factor) == entry.hom);
    CHECK(map_properties(entry.factor).mono);
  }
  // the big carrier has a non invertible endomorphism over the map
  auto chk = is_cover(cert.map, ActClass::CP);
  CHECK_FALSE(chk.ok);
  REQUIRE(chk.bad_endo.has_value());
  CHECK_FALSE(map_properties(*chk.bad_endo).iso);
  CHECK(compose(cert.map, *chk.bad_endo) == cert.map);
}

TEST_CASE("covers of the point over a group") {
  auto t = theta_act(z2);

  auto cp = find_cover(t, ActClass::CP);
  REQUIRE(cp.found);
  CHECK(cp.cover->domain->size() == 1);  // the point covers itself
  CHECK(is_cover(*cp.cover, ActClass::CP).ok);

  auto sf = find_cover(t, ActClass::SF);
  REQUIRE(sf.found);
  CHECK(sf.cover->domain->size() == 2);  // the group itself is forced
  CHECK(find_iso(sf.cover->domain, regular_act(z2)).has_value());
  CHECK(is_cover(*sf.cover, ActClass::SF).ok);

  auto pr = find_cover(t, ActClass::Pr);
  REQUIRE(pr.found);
  CHECK(pr.cover->domain->size() == 2);
  CHECK(pr.cover->values == std::vector<int>{0, 0});
  CHECK(is_projective_cover(*pr.cover));
}

TEST_CASE("cover domains are unique up to isomorphism over the target") {
  for (auto cls : {ActClass::Pr, ActClass::SF, ActClass::CP})
    for (auto a : {theta_act(z2), theta_act(ch2), regular_act(ch2)}) {
      auto found = find_cover(a, cls);
      REQUIRE(found.found);
      auto& g = *found.cover;
      // twisting by any automorphism over g yields another cover,
      // necessarily isomorphic over the target
      for (auto& e : endos_over(g))
        if (map_properties(e).iso) {
          auto twisted = compose(g, e);
          CHECK(is_cover(twisted, cls).ok);
          CHECK(iso_over(g, twisted).has_value());
        }
      CHECK(iso_over(g, g).has_value());
    }
}

TEST_CASE("a cover must leave no non invertible endomorphism behind") {
  // the fold of two group copies is a precover but never a cover
  auto r = regular_act(z2);
  auto rr = coproduct({r, r});
  ActMap fold(rr.act, r, {0, 1, 0, 1});
  CHECK(is_precover(fold, ActClass::SF).ok);
  auto chk = is_cover(fold, ActClass::SF);
  CHECK_FALSE(chk.ok);
  CHECK(chk.bad_endo.has_value());
  CHECK_FALSE(is_projective_cover(fold));
  CHECK(is_projective_cover(identity_map(r)));
}

TEST_CASE("coproducts of precovers precover the coproduct") {
  auto t = theta_act(z2);
  auto r = regular_act(z2);
  auto target = coproduct({t, r});
  auto c1 = build_precover(t, ActClass::CP);
  auto c2 = build_precover(r, ActClass::CP);
  auto dom = coproduct({c1.carrier, c2.carrier});
  std::vector<int> fv(dom.act->size());
  for (int x = 0; x < c1.carrier->size(); ++x)
    fv[dom.injections[0](x)] = target.injections[0](c1.map(x));
  for (int x = 0; x < c2.carrier->size(); ++x)
    fv[dom.injections[1](x)] = target.injections[1](c2.map(x));
  ActMap glued(dom.act, target.act, fv);
  CHECK(is_precover(glued, ActClass::CP).ok);
}

TEST_CASE("precover misses are witnessed") {
  // the group copy alone cannot factor maps from the point
  auto t = theta_act(z2);
  auto r = regular_act(z2);
  ActMap g(r, t, {0, 0});
  auto chk = is_precover(g, ActClass::CP);
  CHECK_FALSE(chk.ok);
  REQUIRE(chk.unfactored.has_value());
  CHECK(chk.unfactored->domain->size() == 1);
  // and indeed no factor exists
  CHECK(homs(chk.unfactored->domain, r).empty());
}

TEST_CASE("domains are vetted before any search") {
  auto t = theta_act(z2);
  expect_error(errc::domain_not_in_class, [&] {
    is_precover(identity_map(t), ActClass::SF);  // the point is not SF here
  });
  expect_error(errc::domain_not_projective, [&] {
    is_projective_cover(identity_map(t));
  });
  expect_error(errc::not_epi, [&] {
    is_projective_cover(subact(regular_act(ch2), {1}).inclusion);
  });
  expect_error(errc::precondition_violated, [&] {
    iso_over(identity_map(t), identity_map(theta_act(ch2)));
  });
}

TEST_CASE("projectivity equals the lifting property on the small corpus") {
  CorpusSpec spec;
  spec.max_monoid_order = 2;
  spec.max_act_size = 3;
  for (auto& e : generate_corpus(spec).entries) {
    auto reg = regular_act(e.monoid);
    // epis between small acts, plus the free cover onto each target
    std::vector<ActMap> onto;
    for (auto& b : e.acts) {
      for (auto& a : e.acts)
        for (auto& g : epis_between(a, b)) onto.push_back(g);
      std::vector<ActPtr> copies(b->size(), reg);
      auto cp = coproduct(copies);
      std::vector<int> fv(cp.act->size());
      for (int y = 0; y < b->size(); ++y)
        for (int s = 0; s < e.monoid->size(); ++s)
          fv[cp.injections[y](s)] = b->act(y, s);
      onto.emplace_back(cp.act, b, fv);
    }
    for (auto& p : e.acts) {
      bool lifts = true;
      for (auto& g : onto)
        for (auto& h : homs(p, g.codomain)) {
          std::vector<std::vector<char>> allowed(
              p->size(), std::vector<char>(g.domain->size(), 0));
          for (int x = 0; x < p->size(); ++x)
            for (int a = 0; a < g.domain->size(); ++a)
              if (g(a) == h(x)) allowed[x][a] = 1;
          if (!first_hom(p, g.domain, allowed)) lifts = false;
        }
      CHECK(in_class(*p, ActClass::Pr) == lifts);
    }
  }
}

TEST_CASE("gluing free copies along their zeros is covered by the copies") {
  auto r = regular_act(ch2);
  auto cp = coproduct({r, r});
  auto glued = quotient_act(cp.act, generated_congruence(cp.act, {{1, 3}})).act;
  for (auto cls : {ActClass::Pr, ActClass::SF, ActClass::CP}) {
    auto found = find_cover(glued, cls);
    REQUIRE(found.found);
    CHECK(found.cover->domain->size() == 4);
    CHECK(kernel(*found.cover).num_classes() == 3);
    CHECK(is_cover(*found.cover, cls).ok);
  }
}

TEST_CASE("no smaller class quotient hides below a cover kernel") {
  // two group copies cover two points; the kernel has two congruences
  // strictly inside it and neither quotient stays in the class
  auto tt = coproduct({theta_act(z2), theta_act(z2)}).act;
  auto found = find_cover(tt, ActClass::SF);
  REQUIRE(found.found);
  CHECK(found.cover->domain->size() == 4);
  auto ker = kernel(*found.cover);
  CHECK(ker.num_classes() == 2);
  int middle = 0;
  for (auto& rho : congruences_refining(found.cover->domain, ker, 100'000)) {
    if (rho.identity() || rho == ker) continue;
    ++middle;
    CHECK_FALSE(
        is_class_pure_congruence(found.cover->domain, rho, ActClass::SF));
  }
  CHECK(middle == 2);
}
