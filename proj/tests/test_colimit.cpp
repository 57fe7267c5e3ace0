#include <doctest.h>

#include <map>
#include <utility>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/colimit.hpp"
#include "actkit/congruence.hpp"
#include "actkit/corpus.hpp"
#include "actkit/cover.hpp"
#include "actkit/hom.hpp"
#include "actkit/purity.hpp"
#include "helpers.hpp"

using namespace actkit;

namespace {

const MonoidPtr z2 = standard_monoid("cyclic_group(2)");
const MonoidPtr ch2 = standard_monoid("semilattice_chain(2)");
const MonoidPtr ch3 = standard_monoid("semilattice_chain(3)");

DirectSystem two_chain(const ActMap& f) {
  std::map<std::pair<int, int>, ActMap> trans;
  trans.emplace(std::make_pair(0, 1), f);
  return make_system({f.domain, f.codomain}, {{1, 1}, {0, 1}}, std::move(trans));
}

}  // namespace

TEST_CASE("system validation catches shape and functor violations") {
  auto r = regular_act(z2);
  auto t = theta_act(z2);
  ActMap f(r, t, {0, 0});

  auto ok = two_chain(f);
  CHECK(ok.acts.size() == 2);
  // the diagonal was filled in with identities
  CHECK(ok.transitions.at({0, 0}) == identity_map(r));

  expect_error(errc::invalid_system, [&] { make_system({}, {}, {}); });
  expect_error(errc::invalid_system, [&] {
    make_system({r, t}, {{1, 1}, {0, 1}}, {});  // missing 0 <= 1 transition
  });
  expect_error(errc::invalid_system, [&] {
    make_system({r, t}, {{1, 1}}, {{{0, 1}, f}});
  });
  expect_error(errc::mixed_monoids, [&] {
    make_system({r, theta_act(ch2)}, {{1, 0}, {0, 1}}, {});
  });
  // 0 <= 1 <= 2 without 0 <= 2 breaks transitivity
  expect_error(errc::invalid_system, [&] {
    std::map<std::pair<int, int>, ActMap> trans;
    trans.emplace(std::make_pair(0, 1), identity_map(t));
    trans.emplace(std::make_pair(1, 2), identity_map(t));
    make_system({t, t, t}, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, std::move(trans));
  });
  // functoriality: the composite around a three element chain must agree
  expect_error(errc::invalid_system, [&] {
    std::map<std::pair<int, int>, ActMap> trans;
    ActMap swap(r, r, {1, 0});
    trans.emplace(std::make_pair(0, 1), swap);
    trans.emplace(std::make_pair(1, 2), identity_map(r));
    trans.emplace(std::make_pair(0, 2), identity_map(r));  // should be swap
    make_system({r, r, r}, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}, std::move(trans));
  });
}

TEST_CASE("a chain colimit is its final act") {
  auto r = regular_act(z2);
  auto t = theta_act(z2);
  ActMap f(r, t, {0, 0});
  auto d = two_chain(f);
  CHECK(is_directed(d));
  auto c = colimit(d);
  CHECK(is_cocone(d, c));
  CHECK(c.apex->size() == 1);
  CHECK(c.legs[1].values == std::vector<int>{0});
  CHECK(verify_universal_property(d, c, {Cocone{t, {f, identity_map(t)}}}));
}

TEST_CASE("directed and generic colimits agree on directed systems") {
  auto r3 = regular_act(ch3);
  auto rho = generated_congruence(r3, {{1, 2}});
  auto d = quotient_chain_system(
      r3, {identity_congruence(r3), rho, universal_congruence(r3)});
  CHECK(d.acts.size() == 3);
  CHECK(is_directed(d));
  auto generic = colimit(d);
  auto direct = directed_colimit(d);
  CHECK(find_iso(generic.apex, direct.apex).has_value());
  CHECK(generic.apex->size() == 1);

  // the union of the chain gives the same quotient
  auto uni = union_of_chain(
      {identity_congruence(r3), rho, universal_congruence(r3)});
  CHECK(find_iso(generic.apex, quotient_act(r3, uni).act).has_value());
}

TEST_CASE("non directed shapes are refused by the directed algorithm") {
  auto t = theta_act(z2);
  auto d = make_system({t, t}, {{1, 0}, {0, 1}}, {});
  CHECK_FALSE(is_directed(d));
  expect_error(errc::not_directed, [&] { directed_colimit(d); });
  // the generic construction still works: two disjoint points
  CHECK(colimit(d).apex->size() == 2);
}

TEST_CASE("single act systems collapse to the act itself") {
  for (auto a : {regular_act(z2), regular_act(ch3), theta_act(ch2)}) {
    auto d = make_system({a}, {{1}}, {});
    auto c = colimit(d);
    CHECK(find_iso(c.apex, a).has_value());
    CHECK(map_properties(c.legs[0]).iso);
  }
}

TEST_CASE("mediators factor compatible cocones uniquely") {
  auto r = regular_act(z2);
  auto t = theta_act(z2);
  ActMap f(r, t, {0, 0});
  auto d = two_chain(f);
  auto c = colimit(d);
  Cocone probe{t, {f, identity_map(t)}};
  auto med = cocone_mediator(c, probe);
  for (size_t i = 0; i < c.legs.size(); ++i)
    CHECK(compose(med, c.legs[i]) == probe.legs[i]);

  // a non commuting probe is rejected
  auto tt = coproduct({t, t});
  ActMap g0(r, tt.act, {0, 0});
  ActMap g1(t, tt.act, {1});  // lands on the other point, cannot commute
  expect_error(errc::not_a_cocone,
               [&] { cocone_mediator(c, Cocone{tt.act, {g0, g1}}); });
  expect_error(errc::not_a_cocone,
               [&] { cocone_mediator(c, Cocone{t, {f}}); });
}

TEST_CASE("levelwise maps induce a map of colimits") {
  auto r = regular_act(ch2);
  auto t = theta_act(ch2);
  ActMap zero_r(r, r, {1, 1});
  ActMap zero_t(t, t, {0});
  auto dx = two_chain(zero_r);
  auto dy = two_chain(zero_t);
  ActMap psi0(r, t, {0, 0});
  ActMap psi1(r, t, {0, 0});
  auto induced = colimit_of_maps(dx, dy, {psi0, psi1});
  CHECK(map_properties(induced).epi);

  // squares must commute before anything is glued
  auto rr = coproduct({r, r});
  ActMap j0(r, rr.act, {0, 1});
  ActMap j1(r, rr.act, {2, 3});
  auto dz = two_chain(identity_map(rr.act));
  expect_error(errc::squares_do_not_commute, [&] {
    colimit_of_maps(two_chain(identity_map(r)), dz, {j0, j1});
  });
  expect_error(errc::invalid_system, [&] {
    colimit_of_maps(dx, dy, {psi0});
  });
}

TEST_CASE("idempotent translation kernels assemble the group quotient") {
  auto i2 = standard_monoid("symmetric_inverse(2)");
  auto d = idempotent_kernel_system(i2);
  CHECK(d.acts.size() == 4);  // one quotient per idempotent
  CHECK(is_directed(d));
  auto c = directed_colimit(d);
  auto sigma = min_group_congruence(i2);
  auto q = quotient_act(regular_act(i2), sigma);
  CHECK(find_iso(c.apex, q.act).has_value());
  CHECK(c.apex->size() == 1);

  expect_error(errc::not_inverse, [] {
    idempotent_kernel_system(standard_monoid("full_transformation(2)"));
  });
}

TEST_CASE("colimits of compatible precover families stay precovers") {
  long long instances = 0;
  for (auto cls : {ActClass::Pr, ActClass::SF, ActClass::CP})
    for (auto a : {theta_act(z2), regular_act(z2), theta_act(ch2)}) {
      auto cert = build_precover(a, cls);
      auto& g = cert.map;
      int used = 0;
      for (auto& e : endos_over(g)) {
        if (used >= 2) break;
        ActMap f0 = compose(g, e);
        if (!is_precover(f0, cls).ok) continue;  // family hypothesis fails
        auto d = two_chain(e);
        auto c = colimit(d);
        auto med = cocone_mediator(c, Cocone{a, {f0, g}});
        CHECK(is_precover(med, cls).ok);
        for (size_t i = 0; i < c.legs.size(); ++i)
          CHECK(compose(med, c.legs[i]) ==
                (i == 0 ? f0 : g));  // the family is recovered on each level
        ++used;
        ++instances;
      }
    }
  CHECK(instances >= 9);
}
