#include <doctest.h>

#include <algorithm>
#include <set>

#include "actkit/monoid.hpp"
#include "helpers.hpp"

using namespace actkit;

TEST_CASE("builder monoids have the advertised tables") {
  auto triv = standard_monoid("trivial");
  CHECK(triv->size() == 1);
  CHECK(triv->identity() == 0);

  auto z4 = standard_monoid("cyclic_group", {4});
  CHECK(z4->size() == 4);
  CHECK(z4->identity() == 0);
  CHECK(z4->mul(1, 3) == 0);
  CHECK(z4->mul(2, 3) == 1);

  auto ch = standard_monoid("semilattice_chain", {3});
  CHECK(ch->size() == 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(ch->mul(a, b) == std::max(a, b));
  // same table under a second name
  CHECK(standard_monoid("max_chain", {3})->table() == ch->table());

  auto rb = standard_monoid("rectangular_band_1", {2, 2});
  CHECK(rb->size() == 5);
  // (i,j)(k,l) = (i,l); element (i,j) sits at 1 + i*2 + j
  CHECK(rb->mul(1 + 0 * 2 + 1, 1 + 1 * 2 + 0) == 1 + 0 * 2 + 0);
  CHECK(rb->mul(1 + 1 * 2 + 0, 1 + 0 * 2 + 1) == 1 + 1 * 2 + 1);

  auto rz = standard_monoid("right_zero_1", {3});
  CHECK(rz->size() == 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 1; b < 4; ++b) CHECK(rz->mul(a, b) == b);
}

TEST_CASE("builder text parsing dispatches to the parameter overload") {
  CHECK(standard_monoid("cyclic_group(3)")->table() ==
        standard_monoid("cyclic_group", {3})->table());
  expect_error(errc::unknown_builder, [] { standard_monoid("no_such_thing"); });
  expect_error(errc::invalid_input, [] { standard_monoid("cyclic_group(x)"); });
  expect_error(errc::param_too_large,
               [] { standard_monoid("symmetric_inverse(5)"); });
  expect_error(errc::invalid_input, [] { standard_monoid("cyclic_group(0)"); });
}

TEST_CASE("partial injections on two points") {
  auto i2 = standard_monoid("symmetric_inverse(2)");
  CHECK(i2->size() == 7);
  CHECK(idempotents(*i2).size() == 4);  // partial identities, one per subset
  CHECK(is_inverse_monoid(*i2).inverse);

  auto t2 = standard_monoid("full_transformation(2)");
  CHECK(t2->size() == 4);
  auto chk = is_inverse_monoid(*t2);
  CHECK_FALSE(chk.inverse);
  CHECK(chk.witness >= 0);
  CHECK(chk.inverse_count != 1);
}

TEST_CASE("table validation") {
  expect_error(errc::not_identity, [] { make_monoid({{0, 1}, {1, 0}}, 1); });
  // (2*1)*1 = 0 but 2*(1*1) = 2 in this table
  expect_error(errc::not_associative, [] {
    make_monoid({{0, 1, 2}, {1, 0, 2}, {2, 1, 0}}, 0);
  });
  expect_error(errc::index_out_of_range,
               [] { make_monoid({{0, 1}, {1, 7}}, 0); });
  expect_error(errc::invalid_input, [] { make_monoid({{0, 1}, {1}}, 0); });
}

TEST_CASE("opposite monoid transposes the table") {
  auto ch = standard_monoid("semilattice_chain(3)");
  CHECK(opposite(ch)->table() == ch->table());  // commutative

  auto rb = standard_monoid("rectangular_band_1(2,2)");
  auto op = opposite(rb);
  for (int a = 0; a < rb->size(); ++a)
    for (int b = 0; b < rb->size(); ++b) CHECK(op->mul(a, b) == rb->mul(b, a));
  CHECK(opposite(op)->table() == rb->table());
}

TEST_CASE("isomorphism detection is label independent") {
  auto z2 = standard_monoid("cyclic_group(2)");
  // same group with the identity renamed to index 1
  auto relabeled = make_monoid({{1, 0}, {0, 1}}, 1);
  CHECK(monoid_iso(*z2, *relabeled));
  CHECK(monoid_canonical_form(*z2) == monoid_canonical_form(*relabeled));

  auto ch2 = standard_monoid("semilattice_chain(2)");
  CHECK_FALSE(monoid_iso(*z2, *ch2));
  CHECK(monoid_canonical_form(*z2) != monoid_canonical_form(*ch2));
  CHECK_FALSE(monoid_iso(*z2, *standard_monoid("trivial")));
}

TEST_CASE("generator sets generate") {
  for (const char* name : {"cyclic_group(4)", "semilattice_chain(3)",
                           "symmetric_inverse(2)", "full_transformation(2)"}) {
    auto m = standard_monoid(name);
    auto gens = monoid_generators(*m);
    std::set<int> closed = {m->identity()};
    for (bool grew = true; grew;) {
      grew = false;
      for (int x : closed)
        for (int g : gens)
          if (closed.insert(m->mul(x, g)).second) {
            grew = true;
            break;
          }
    }
    CHECK((int)closed.size() == m->size());
  }
  CHECK(monoid_generators(*standard_monoid("cyclic_group(4)")).size() == 1);
  CHECK(monoid_generators(*standard_monoid("symmetric_inverse(2)")).size() ==
        2);
}

TEST_CASE("same_monoid accepts equal tables behind different pointers") {
  auto a = standard_monoid("cyclic_group(2)");
  auto b = standard_monoid("cyclic_group(2)");
  CHECK(a != b);
  CHECK(same_monoid(a, b));
  CHECK_FALSE(same_monoid(a, standard_monoid("semilattice_chain(2)")));
}
