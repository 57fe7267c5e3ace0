#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "actkit/corpus.hpp"
#include "actkit/hom.hpp"
#include "helpers.hpp"

using namespace actkit;

TEST_CASE("monoid enumeration counts by order") {
  CHECK(all_monoids_of_order(1).size() == 1);
  CHECK(all_monoids_of_order(2).size() == 2);
  CHECK(all_monoids_of_order(3).size() == 7);
  CHECK(all_monoids_of_order(4).size() == 35);
  expect_error(errc::cap_exceeded, [] { all_monoids_of_order(5); });
  expect_error(errc::cap_exceeded, [] { all_monoids_of_order(0); });
}

TEST_CASE("enumerated monoids are pairwise non isomorphic") {
  auto ms = all_monoids_of_order(3);
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = i + 1; j < ms.size(); ++j)
      CHECK_FALSE(monoid_iso(*ms[i], *ms[j]));
}

TEST_CASE("act enumeration over the two element group") {
  auto z2 = standard_monoid("cyclic_group(2)");
  auto acts = all_acts(z2, 4);
  CHECK(acts.size() == 8);
  int le2 = 0, eq2 = 0;
  for (auto& a : acts) {
    le2 += a->size() <= 2;
    eq2 += a->size() == 2;
    // stored in canonical form, sorted by size then table
    CHECK(act_canonical_form(*a) == a->action());
  }
  CHECK(le2 == 3);
  CHECK(eq2 == 2);
  for (size_t i = 0; i + 1 < acts.size(); ++i) {
    CHECK(acts[i]->size() <= acts[i + 1]->size());
    if (acts[i]->size() == acts[i + 1]->size())
      CHECK(acts[i]->action() < acts[i + 1]->action());
  }
  for (size_t i = 0; i < acts.size(); ++i)
    for (size_t j = i + 1; j < acts.size(); ++j)
      CHECK_FALSE(find_iso(acts[i], acts[j]).has_value());

  expect_error(errc::cap_exceeded, [&] { all_acts(z2, 7); });
}

TEST_CASE("the default corpus merges enumeration with the builders") {
  Corpus c = generate_corpus({});
  CHECK(c.entries.size() == 12);
  std::set<std::string> names;
  for (auto& e : c.entries) {
    CHECK(names.insert(e.name).second);
    CHECK_FALSE(e.acts.empty());
    for (auto& a : e.acts) {
      CHECK(same_monoid(a->monoid(), e.monoid));
      CHECK(a->size() <= 4);
    }
  }
  // builders already isomorphic to an enumerated monoid are not repeated
  int order2 = 0;
  for (auto& e : c.entries) order2 += e.monoid->size() == 2;
  CHECK(order2 == 2);
}

TEST_CASE("corpus caps and builder merging") {
  CorpusSpec spec;
  spec.max_monoid_order = 2;
  spec.max_act_size = 4;
  spec.builders = {"cyclic_group(2)"};
  CHECK(generate_corpus(spec).entries.size() == 3);

  CorpusSpec bad = spec;
  bad.max_monoid_order = 9;
  expect_error(errc::cap_exceeded, [&] { generate_corpus(bad); });
  bad = spec;
  bad.max_act_size = 7;
  expect_error(errc::cap_exceeded, [&] { generate_corpus(bad); });
}

TEST_CASE("surjection and injection filters") {
  auto z2 = standard_monoid("cyclic_group(2)");
  auto r = regular_act(z2);
  auto rr = coproduct({r, r}).act;
  // any generator pair image generates everything in a group
  CHECK(epis_between(rr, r).size() == 4);
  CHECK(epis_between(r, rr).empty());
  CHECK(monos_between(r, rr).size() == 4);
  CHECK(monos_between(theta_act(z2), r).empty());
  for (auto& g : epis_between(rr, r)) CHECK(map_properties(g).epi);
  for (auto& f : monos_between(r, rr)) CHECK(map_properties(f).mono);
}
