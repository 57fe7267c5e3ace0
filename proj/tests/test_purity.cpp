#include <doctest.h>

#include <vector>

#include "actkit/act.hpp"
#include "actkit/congruence.hpp"
#include "actkit/corpus.hpp"
#include "actkit/flatness.hpp"
#include "actkit/hom.hpp"
#include "actkit/purity.hpp"
#include "helpers.hpp"

using namespace actkit;

namespace {

const MonoidPtr z2 = standard_monoid("cyclic_group(2)");
const MonoidPtr ch2 = standard_monoid("semilattice_chain(2)");

// reference check: every n-tuple over the codomain, repeats included, must
// lift with its full relation family intact
bool brute_n_pure(const ActMap& g, int n) {
  const FiniteAct& dom = *g.domain;
  const FiniteAct& cod = *g.codomain;
  std::vector<int> tup(n, 0);
  while (true) {
    auto rels = satisfied_relations(cod, tup);
    std::vector<int> lift(n, 0);
    bool found = false;
    while (true) {
      bool ok = true;
      for (int i = 0; ok && i < n; ++i)
        if (g(lift[i]) != tup[i]) ok = false;
      for (size_t i = 0; ok && i < rels.size(); ++i)
        if (dom.act(lift[rels[i].j], rels[i].s) !=
            dom.act(lift[rels[i].k], rels[i].t))
          ok = false;
      if (ok) {
        found = true;
        break;
      }
      int i = n - 1;
      while (i >= 0 && lift[i] == dom.size() - 1) lift[i--] = 0;
      if (i < 0) break;
      ++lift[i];
    }
    if (!found) return false;
    int i = n - 1;
    while (i >= 0 && tup[i] == cod.size() - 1) tup[i--] = 0;
    if (i < 0) return true;
    ++tup[i];
  }
}

ActMap natural_onto_theta(const ActPtr& a) {
  return ActMap(a, theta_act(a->monoid()), std::vector<int>(a->size(), 0));
}

}  // namespace

TEST_CASE("relation families grow with the tuple") {
  auto r = regular_act(z2);
  auto one = satisfied_relations(*r, {0});
  // a faithful act only relates an element to itself via equal scalars
  for (auto& rel : one) {
    CHECK(rel.j == 0);
    CHECK(rel.k == 0);
    CHECK(rel.s == rel.t);
  }
  auto two = satisfied_relations(*r, {0, 1});
  CHECK(two.size() > one.size());
  for (auto& rel : two)
    CHECK(r->act(rel.j, rel.s) == r->act(rel.k, rel.t));
}

TEST_CASE("tuple lifting agrees with the exhaustive definition") {
  CorpusSpec spec;
  spec.max_monoid_order = 2;
  spec.max_act_size = 3;
  long long maps = 0;
  for (auto& e : generate_corpus(spec).entries)
    for (auto& a : e.acts) {
      if (a->size() > 3) continue;
      for (auto& b : e.acts) {
        if (b->size() > 2) continue;
        for (auto& g : epis_between(a, b))
          for (int n = 1; n <= 2; ++n) {
            CHECK(is_n_pure(g, n).pure == brute_n_pure(g, n));
            ++maps;
          }
      }
    }
  CHECK(maps > 50);
}

TEST_CASE("collapsing a group to a point is never one pure") {
  auto g = natural_onto_theta(regular_act(z2));
  auto chk = is_n_pure(g, 1);
  REQUIRE_FALSE(chk.pure);
  CHECK(chk.witness == std::vector<int>{0});
  CHECK_FALSE(is_pure_epi(g).pure);

  // over the chain the zero lifts the point with all its relations
  auto h = natural_onto_theta(regular_act(ch2));
  CHECK(is_n_pure(h, 1).pure);
  CHECK(is_pure_epi(h).pure);
}

TEST_CASE("purity saturates at the codomain size") {
  auto r = regular_act(ch2);
  auto rr = coproduct({r, r});
  ActMap fold(rr.act, r, {0, 1, 0, 1});
  auto full = is_pure_epi(fold);
  CHECK(full.pure == is_n_pure(fold, 100).pure);
  auto g = natural_onto_theta(regular_act(z2));
  CHECK(is_pure_epi(g).pure == is_n_pure(g, 100).pure);
}

TEST_CASE("purity coincides with splitting for finite acts") {
  CorpusSpec spec;
  spec.max_monoid_order = 2;
  spec.max_act_size = 3;
  long long epis = 0;
  for (auto& e : generate_corpus(spec).entries)
    for (auto& a : e.acts)
      for (auto& b : e.acts)
        for (auto& g : epis_between(a, b)) {
          CHECK(is_pure_epi(g).pure == map_properties(g).split_epi);
          ++epis;
        }
  CHECK(epis > 100);
}

TEST_CASE("pure congruences are those with pure projections") {
  auto r2 = regular_act(z2);
  CHECK_FALSE(is_pure_congruence(r2, universal_congruence(r2)));
  CHECK(is_pure_congruence(r2, identity_congruence(r2)));

  auto rc = regular_act(ch2);
  CHECK(is_pure_congruence(rc, universal_congruence(rc)));

  // exhaustive agreement with the direct check on the quotient map
  for (auto& rho : all_congruences(regular_act(ch2))) {
    auto q = quotient_act(rc, rho);
    CHECK(is_pure_congruence(rc, rho) == is_pure_epi(q.natural).pure);
  }
}

TEST_CASE("strong flatness is equivalent to every epi onto the act splitting") {
  CorpusSpec spec;
  spec.max_monoid_order = 2;
  spec.max_act_size = 3;
  for (auto& e : generate_corpus(spec).entries) {
    auto reg = regular_act(e.monoid);
    for (auto& y : e.acts) {
      bool all_pure = true;
      for (auto& a : e.acts)
        for (auto& g : epis_between(a, y))
          if (!is_pure_epi(g).pure) all_pure = false;
      // the free cover, one copy of S per element, is the decisive epi
      std::vector<ActPtr> copies(y->size(), reg);
      auto cp = coproduct(copies);
      std::vector<int> fv(cp.act->size());
      for (int v = 0; v < y->size(); ++v)
        for (int s = 0; s < e.monoid->size(); ++s)
          fv[cp.injections[v](s)] = y->act(v, s);
      if (!is_pure_epi(ActMap(cp.act, y, fv)).pure) all_pure = false;
      CHECK(in_class(*y, ActClass::SF) == all_pure);
    }
  }
}

TEST_CASE("bounded tensor certificate for monomorphisms") {
  auto rc = regular_act(ch2);
  CHECK(is_pure_mono_bounded(subact(rc, {1}).inclusion, 2));
  expect_error(errc::not_mono, [&] {
    is_pure_mono_bounded(natural_onto_theta(rc), 2);
  });
}

TEST_CASE("degenerate purity arguments are rejected") {
  auto r = regular_act(z2);
  expect_error(errc::precondition_violated,
               [&] { is_n_pure(identity_map(r), 0); });
  expect_error(errc::not_epi, [&] {
    is_n_pure(subact(regular_act(ch2), {1}).inclusion, 1);
  });
}
