#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/congruence.hpp"
#include "actkit/corpus.hpp"
#include "actkit/hom.hpp"
#include "actkit/tensor.hpp"
#include "helpers.hpp"

using namespace actkit;

namespace {

const MonoidPtr z2 = standard_monoid("cyclic_group(2)");
const MonoidPtr ch2 = standard_monoid("semilattice_chain(2)");
const MonoidPtr ch3 = standard_monoid("semilattice_chain(3)");

}  // namespace

TEST_CASE("action tables are validated") {
  CHECK(theta_act(z2)->size() == 1);
  CHECK(regular_act(z2)->action() == z2->table());

  expect_error(errc::identity_axiom, [] { make_act(z2, {{1, 1}, {0, 0}}); });
  // row for element 0 claims 0*e = 1 but then (0*e)*e = 0 != 0*(ee) = 1
  expect_error(errc::associativity_axiom,
               [] { make_act(ch2, {{0, 1}, {1, 0}}); });
  expect_error(errc::index_out_of_range, [] { make_act(z2, {{0, 5}}); });
  expect_error(errc::invalid_input, [] { make_act(z2, {{0, 1}, {1}}); });
  expect_error(errc::invalid_input, [] { make_act(z2, {}); });
}

TEST_CASE("maps are checked for equivariance") {
  auto r = regular_act(z2);
  auto t = theta_act(z2);
  CHECK(ActMap(r, t, {0, 0})(1) == 0);
  // swapping the two elements of S is the action of 1, hence equivariant
  CHECK(ActMap(r, r, {1, 0}).values == std::vector<int>{1, 0});
  expect_error(errc::not_equivariant, [&] {
    ActMap(coproduct({t, t}).act, regular_act(z2), {0, 1});
  });
  expect_error(errc::invalid_input, [&] { ActMap(r, t, {0}); });
  expect_error(errc::mixed_monoids, [&] {
    ActMap(regular_act(ch2), theta_act(z2), {0, 0});
  });
  expect_error(errc::invalid_input, [&] {
    compose(ActMap(r, r, {1, 0}), ActMap(r, t, {0, 0}));  // r->t->r mismatch
  });
}

TEST_CASE("coproduct lays out blocks in input order") {
  auto r = regular_act(ch2);
  auto t = theta_act(ch2);
  auto cp = coproduct({r, t, r});
  CHECK(cp.act->size() == 5);
  REQUIRE(cp.injections.size() == 3);
  for (auto& inj : cp.injections) {
    auto props = map_properties(inj);
    CHECK(props.mono);
    CHECK_FALSE(props.epi);
  }
  CHECK(cp.injections[1](0) == 2);
  CHECK(cp.injections[2](1) == 4);
  // blocks never interact
  for (int a = 0; a < cp.act->size(); ++a)
    for (int s = 0; s < ch2->size(); ++s) {
      int b = cp.act->act(a, s);
      CHECK(((a < 2 && b < 2) || (a == 2 && b == 2) || (a > 2 && b > 2)));
    }
  expect_error(errc::mixed_monoids, [&] { coproduct({r, theta_act(z2)}); });
  expect_error(errc::invalid_input, [] { coproduct({}); });
}

TEST_CASE("indecomposable components are the connected pieces") {
  CHECK(decompose_indecomposable(*regular_act(z2)).size() == 1);
  CHECK(decompose_indecomposable(*regular_act(ch3)).size() == 1);
  auto cp = coproduct({theta_act(z2), regular_act(z2), theta_act(z2)});
  auto comps = decompose_indecomposable(*cp.act);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0});
  CHECK(comps[1] == std::vector<int>{1, 2});
  CHECK(comps[2] == std::vector<int>{3});
}

TEST_CASE("epimorphic images of indecomposable acts are indecomposable") {
  CorpusSpec spec;
  spec.max_monoid_order = 2;
  spec.max_act_size = 3;
  long long pairs = 0;
  for (auto& e : generate_corpus(spec).entries)
    for (auto& a : e.acts) {
      if (decompose_indecomposable(*a).size() != 1) continue;
      for (auto& b : e.acts)
        if (!epis_between(a, b).empty()) {
          CHECK(decompose_indecomposable(*b).size() == 1);
          ++pairs;
        }
    }
  CHECK(pairs > 0);
}

TEST_CASE("subacts demand closed carriers") {
  auto r = regular_act(ch2);
  auto sub = subact(r, {1});
  CHECK(sub.act->size() == 1);
  CHECK(sub.inclusion(0) == 1);
  CHECK(map_properties(sub.inclusion).mono);

  expect_error(errc::not_a_subact, [&] { subact(r, {0}); });  // 0*e = 1 leaves
  expect_error(errc::not_a_subact, [&] { subact(r, {}); });
  expect_error(errc::invalid_input, [&] { subact(regular_act(ch3), {2, 1}); });
  expect_error(errc::index_out_of_range, [&] { subact(r, {5}); });
}

TEST_CASE("collapsing a closed subset yields a zero") {
  auto r = regular_act(ch3);
  auto rq = rees_quotient(r, {1, 2});
  CHECK(rq.act->size() == 2);
  CHECK(rq.natural.values == std::vector<int>{0, 1, 1});
  // the collapsed class absorbs the action
  for (int s = 0; s < ch3->size(); ++s) CHECK(rq.act->act(1, s) == 1);
  CHECK(map_properties(rq.natural).epi);
}

TEST_CASE("pullbacks carry their universal property") {
  auto t = theta_act(z2);
  auto r = regular_act(z2);
  auto cp = coproduct({t, t});
  ActMap f(cp.act, t, {0, 0});
  ActMap g(r, t, {0, 0});
  auto pb = pullback(f, g);
  REQUIRE(pb.has_value());
  CHECK(pb->act->size() == 4);  // both maps constant: full product
  CHECK(pb->pairs.size() == 4);
  for (int i = 0; i < pb->act->size(); ++i) {
    CHECK(pb->to_left(i) == pb->pairs[i].first);
    CHECK(pb->to_right(i) == pb->pairs[i].second);
    CHECK(f(pb->pairs[i].first) == g(pb->pairs[i].second));
  }
  CHECK(verify_pullback(*pb, f, g, {t, r, cp.act}));

  // maps into different components never meet
  ActMap into0(t, cp.act, {0});
  ActMap into1(t, cp.act, {1});
  CHECK_FALSE(pullback(into0, into1).has_value());

  expect_error(errc::invalid_input, [&] { pullback(f, ActMap(r, r, {0, 1})); });
}

TEST_CASE("quotients of quotients collapse to a single quotient") {
  auto a = regular_act(ch3);
  auto congs = all_congruences(a);
  REQUIRE(congs.size() == 4);
  for (auto& rho : congs)
    for (auto& theta : congs) {
      if (!theta.contains(rho)) continue;
      auto qr = quotient_act(a, rho);
      auto qt = quotient_act(a, theta);
      // the second projection factors through the first
      std::vector<int> hv(qr.act->size());
      for (int x = 0; x < a->size(); ++x) hv[qr.natural(x)] = qt.natural(x);
      ActMap h(qr.act, qt.act, hv);
      auto tower = kernel(h);
      CHECK(tower.identity() == (rho == theta));
      auto collapsed = quotient_act(qr.act, tower);
      CHECK(find_iso(collapsed.act, qt.act).has_value());
    }
}

TEST_CASE("tensor with the regular act changes nothing") {
  // z2 is commutative, so the regular act doubles as a left act
  auto r = regular_act(z2);
  auto rt = tensor(*r, *r);
  CHECK(rt.num_classes == 2);
  auto tt = tensor(*theta_act(z2), *r);
  CHECK(tt.num_classes == 1);
  CHECK(tt.class_index(0, 0) == tt.class_index(0, 1));
  expect_error(errc::mixed_monoids,
               [&] { tensor(*regular_act(ch2), *regular_act(z2)); });
}

TEST_CASE("base change along an embedding") {
  auto i2 = standard_monoid("symmetric_inverse(2)");
  // z2 embeds as {identity, transposition}
  int id = i2->identity();
  int tr = -1;
  for (int x = 0; x < i2->size(); ++x)
    if (x != id && i2->mul(x, x) == id) tr = x;
  REQUIRE(tr >= 0);
  MonoidEmbedding emb(z2, i2, {id, tr});
  auto ind = induced_act(regular_act(z2), emb);
  CHECK(same_monoid(ind.act->monoid(), i2));
  CHECK(ind.act->size() == ind.classes.num_classes);
  // the unit map is equivariant along the embedding
  for (int x = 0; x < 2; ++x)
    for (int s = 0; s < 2; ++s)
      CHECK(ind.act->act(ind.unit_map[x], emb(s)) ==
            ind.unit_map[regular_act(z2)->act(x, s)]);

  expect_error(errc::not_an_embedding, [&] { MonoidEmbedding(z2, i2, {id, id}); });
  expect_error(errc::not_an_embedding, [&] { MonoidEmbedding(z2, i2, {id, 1}); });
}
