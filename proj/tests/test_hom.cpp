#include <doctest.h>

#include <algorithm>
#include <vector>

#include "actkit/act.hpp"
#include "actkit/corpus.hpp"
#include "actkit/hom.hpp"
#include "helpers.hpp"

using namespace actkit;

namespace {

const MonoidPtr z2 = standard_monoid("cyclic_group(2)");
const MonoidPtr ch2 = standard_monoid("semilattice_chain(2)");

}  // namespace

TEST_CASE("generators pick one element per source component") {
  CHECK(act_generators(*regular_act(z2)) == std::vector<int>{0});
  CHECK(act_generators(*regular_act(ch2)) == std::vector<int>{0});
  auto tt = coproduct({theta_act(z2), theta_act(z2)});
  CHECK(act_generators(*tt.act) == std::vector<int>{0, 1});
  // a generator reaches everything in its component
  auto r3 = regular_act(standard_monoid("semilattice_chain(3)"));
  auto gens = act_generators(*r3);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0] == 0);
}

TEST_CASE("maps out of the regular act correspond to elements") {
  CorpusSpec spec;
  spec.max_monoid_order = 3;
  spec.max_act_size = 4;
  for (auto& e : generate_corpus(spec).entries) {
    auto reg = regular_act(e.monoid);
    for (auto& a : e.acts) CHECK((int)homs(reg, a).size() == a->size());
    if (e.monoid->size() == 3) break;  // a couple of entries is plenty
  }
}

TEST_CASE("maps off a coproduct multiply componentwise") {
  auto r = regular_act(z2);
  auto t = theta_act(z2);
  auto rr = coproduct({r, r}).act;
  auto rt = coproduct({r, t}).act;
  for (auto& c : {r, t, rr, rt}) {
    size_t lhs = homs(rr, c).size();
    CHECK(lhs == homs(r, c).size() * homs(r, c).size());
    CHECK(homs(rt, c).size() == homs(r, c).size() * homs(t, c).size());
  }
  // maps out of the one point act land on fixed points; a group act has none
  CHECK(homs(t, r).empty());
  CHECK(homs(t, t).size() == 1);
  expect_error(errc::mixed_monoids, [&] { homs(r, regular_act(ch2)); });
}

TEST_CASE("image restrictions prune the enumeration") {
  auto r = regular_act(z2);
  std::vector<std::vector<char>> diag = {{1, 0}, {0, 1}};
  auto fixed = homs(r, r, diag);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0] == identity_map(r));

  auto any = first_hom(r, r, {{1, 1}, {1, 1}});
  REQUIRE(any.has_value());
  CHECK(*any == homs(r, r).front());  // both scans are lexicographic

  std::vector<std::vector<char>> none = {{0, 0}, {0, 0}};
  CHECK(homs(r, r, none).empty());
  CHECK_FALSE(first_hom(r, r, none).has_value());
}

TEST_CASE("map property flags") {
  auto r = regular_act(z2);
  auto props = map_properties(identity_map(r));
  CHECK(props.iso);
  CHECK(props.split_epi);
  CHECK(props.split_mono);

  auto rr = coproduct({r, r});
  std::vector<int> fv = {0, 1, 0, 1};
  ActMap fold(rr.act, r, fv);
  auto fp = map_properties(fold);
  CHECK(fp.epi);
  CHECK(fp.split_epi);
  CHECK_FALSE(fp.mono);
  CHECK_FALSE(fp.iso);

  auto inc = subact(regular_act(ch2), {1}).inclusion;
  auto ip = map_properties(inc);
  CHECK(ip.mono);
  CHECK(ip.split_mono);  // constant retraction onto the zero
  CHECK_FALSE(ip.epi);
}

TEST_CASE("isomorphism search agrees with the canonical form") {
  CorpusSpec spec;
  spec.max_monoid_order = 2;
  spec.max_act_size = 3;
  for (auto& e : generate_corpus(spec).entries)
    for (auto& a : e.acts)
      for (auto& b : e.acts) {
        bool same_form = act_canonical_form(*a) == act_canonical_form(*b);
        auto iso = find_iso(a, b);
        CHECK(same_form == iso.has_value());
        if (iso) {
          CHECK(map_properties(*iso).iso);
          // least value vector among isomorphisms
          for (auto& h : homs(a, b))
            if (map_properties(h).iso) {
              CHECK(iso->values == h.values);
              break;
            }
        }
      }
}

TEST_CASE("endomorphisms over a fold swap or collapse the copies") {
  auto r = regular_act(z2);
  auto rr = coproduct({r, r});
  ActMap fold(rr.act, r, {0, 1, 0, 1});
  auto over = endos_over(fold);
  CHECK(over.size() == 4);  // each identity copy may land on either identity
  for (auto& h : over) CHECK(compose(fold, h) == fold);
  // the swap is among them and is an isomorphism
  CHECK(std::any_of(over.begin(), over.end(), [](const ActMap& h) {
    return map_properties(h).iso && h.values != std::vector<int>{0, 1, 2, 3};
  }));
}

TEST_CASE("generator acts admit a map onto the regular act") {
  auto r = regular_act(z2);
  CHECK(is_generator(r));
  CHECK(is_generator(coproduct({r, r}).act));
  CHECK_FALSE(is_generator(theta_act(z2)));
  CHECK_FALSE(is_generator(theta_act(ch2)));
  // the two element chain has a two element cyclic generator act
  CHECK(is_generator(regular_act(ch2)));
}

TEST_CASE("enumeration stops at the configured budget") {
  CHECK(search_budget() == 10'000'000);
  auto r = regular_act(z2);
  std::vector<ActPtr> parts(12, r);
  auto big = coproduct(parts).act;   // 12 generators
  auto four = coproduct({r, r}).act;  // 4^12 tuples is over budget
  expect_error(errc::search_budget_exceeded, [&] { homs(big, four); });
}
