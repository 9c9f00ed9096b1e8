#include <doctest.h>

#include <algorithm>
#include <set>

#include "ordrel/config.hpp"
#include "ordrel/duality.hpp"
#include "ordrel/poset.hpp"
#include "oracles.hpp"

using namespace ordrel;
using oracles::antichain;
using oracles::chain;

TEST_CASE("validate_poset closes generating pairs transitively") {
  poset p = validate_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.le(0, 2)); // a <= c by transitivity
  CHECK(p.le(0, 0));
  CHECK_FALSE(p.le(2, 0));
  CHECK(p.covers() ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
}

TEST_CASE("validate_poset matches a literal closure oracle") {
  // random generating pairs over 4 elements; compare against the oracle
  // closure, or expect a rejection exactly when the oracle has a 2-cycle
  std::vector<std::string> names = {"a", "b", "c", "d"};
  for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
    std::vector<std::pair<std::string, std::string>> gen;
    std::vector<bitset> step(4, bitset(4));
    std::size_t cell = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == j) continue;
        if ((mask >> cell) & 1) {
          gen.emplace_back(names[i], names[j]);
          step[i].set(j);
        }
        ++cell;
      }
    auto closed = oracles::brute_refl_trans_closure(4, step);
    bool cyclic = false;
    for (std::size_t i = 0; i < 4 && !cyclic; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i != j && closed[i].test(j) && closed[j].test(i)) {
          cyclic = true;
          break;
        }
    if (cyclic) {
      CHECK_THROWS_AS(validate_poset(names, gen), error);
    } else {
      poset p = validate_poset(names, gen);
      for (std::size_t i = 0; i < 4; ++i)
        CHECK(p.up(i) == closed[i]);
    }
  }
}

TEST_CASE("validate_poset rejections carry the right code") {
  auto code_of = [](auto&& thunk) {
    try {
      thunk();
    } catch (const error& e) {
      return e.code();
    }
    return errc::internal;
  };
  CHECK(code_of([] { validate_poset({"a", "a"}, {}); }) ==
        errc::duplicate_element);
  CHECK(code_of([] { validate_poset({"a"}, {{"a", "z"}}); }) ==
        errc::unknown_element);
  try {
    validate_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL("2-cycle accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::antisymmetry_violation);
    CHECK(std::string(e.what()).find("a") != std::string::npos);
  }
}

TEST_CASE("opposite is an involution and flips covers") {
  poset_ptr c3 = chain({"0", "a", "1"});
  poset op = opposite(*c3);
  CHECK(op.le(2, 0));
  CHECK_FALSE(op.le(0, 2));
  CHECK(opposite(op) == *c3);
}

TEST_CASE("linear_extension is compatible with the order") {
  for (poset_ptr p : {chain({"x", "y", "z"}), oracles::square4(),
                      antichain({"p", "q", "r"})}) {
    auto ord = p->linear_extension();
    REQUIRE(ord.size() == p->size());
    for (std::size_t i = 0; i < ord.size(); ++i)
      for (std::size_t j = i + 1; j < ord.size(); ++j) {
        bool later_below_earlier = p->le(ord[j], ord[i]) && ord[i] != ord[j];
        CHECK_FALSE(later_below_earlier);
      }
  }
}

TEST_CASE("monotone_map validates monotonicity and totality") {
  poset_ptr c2 = chain({"0", "1"});
  poset_ptr d2 = antichain({"x", "y"});
  CHECK_NOTHROW(monotone_map(c2, c2, {0, 1}));
  CHECK_THROWS_AS(monotone_map(c2, d2, {0, 1}), error); // 0<=1 but x||y
  CHECK_THROWS_AS(monotone_map(c2, c2, {0}), error);    // partial
  monotone_map f = monotone_map::by_name(c2, c2, {{"1", "0"}, {"0", "0"}});
  CHECK(f(0) == 0);
  CHECK(f(1) == 0);
  CHECK_THROWS_AS(monotone_map::by_name(c2, c2, {{"0", "0"}}), error);
  CHECK_THROWS_AS(
      monotone_map::by_name(c2, c2, {{"0", "0"}, {"0", "1"}, {"1", "1"}}),
      error);
}

TEST_CASE("compose and identity behave") {
  poset_ptr c2 = chain({"0", "1"});
  poset_ptr c3 = chain({"0", "a", "1"});
  monotone_map f = monotone_map::by_name(c2, c3, {{"0", "0"}, {"1", "a"}});
  monotone_map g =
      monotone_map::by_name(c3, c2, {{"0", "0"}, {"a", "1"}, {"1", "1"}});
  monotone_map gf = compose(g, f);
  CHECK(gf(0) == 0);
  CHECK(gf(1) == 1);
  CHECK(compose(f, identity_map(c2)) == f);
  CHECK(compose(identity_map(c3), f) == f);
  CHECK_THROWS_AS(compose(f, f), error); // cod/dom mismatch
}

TEST_CASE("classify_map distinguishes surjections, embeddings, isos") {
  poset_ptr c2 = chain({"0", "1"});
  poset_ptr d2 = antichain({"x", "y"});
  map_class id = classify_map(identity_map(c2));
  CHECK(id.iso);
  CHECK(id.embedding);
  CHECK(id.surjective);

  // d2 -> c2 by x|->0, y|->1: injective and surjective but NOT order
  // reflecting, hence not an embedding and not an iso
  map_class comp = classify_map(monotone_map(d2, c2, {0, 1}));
  CHECK(comp.injective);
  CHECK(comp.surjective);
  CHECK_FALSE(comp.embedding);
  CHECK_FALSE(comp.iso);

  map_class cst = classify_map(monotone_map(c2, c2, {0, 0}));
  CHECK_FALSE(cst.injective);
  CHECK_FALSE(cst.surjective);
}

TEST_CASE("product is the componentwise order with projections") {
  poset_ptr c2 = chain({"0", "1"});
  product_result pr = product(c2, c2);
  REQUIRE(pr.prod->size() == 4);
  // row-major names
  CHECK(pr.prod->name(0) == "(0,0)");
  CHECK(pr.prod->name(1) == "(0,1)");
  CHECK(pr.prod->name(2) == "(1,0)");
  CHECK(pr.prod->name(3) == "(1,1)");
  CHECK(pr.prod->le(0, 3));
  CHECK_FALSE(pr.prod->le(1, 2)); // (0,1) and (1,0) incomparable
  CHECK(pr.proj_left(1) == 0);
  CHECK(pr.proj_right(1) == 1);
}

TEST_CASE("factorize splits every map into surjection then embedding") {
  poset_ptr c3 = chain({"0", "a", "1"});
  poset_ptr sq = oracles::square4();
  for (auto& img : oracles::brute_monotone_maps(*c3, *sq)) {
    monotone_map f(c3, sq, img);
    factorization fac = factorize(f);
    CHECK(classify_map(fac.surjection).surjective);
    CHECK(classify_map(fac.embedding).embedding);
    CHECK(compose(fac.embedding, fac.surjection) == f);
  }
}

TEST_CASE("poset_reflection collapses cycle classes") {
  // preorder on {a,b,c}: a <= b <= a (a 2-cycle) and b <= c
  std::vector<bitset> rows(3, bitset(3));
  for (std::size_t i = 0; i < 3; ++i) rows[i].set(i);
  rows[0].set(1);
  rows[1].set(0);
  rows[1].set(2);
  preorder_closure(rows);
  reflection r = poset_reflection({"a", "b", "c"}, rows);
  REQUIRE(r.quotient->size() == 2);
  CHECK(r.quotient->name(0) == "a"); // least member names the class
  CHECK(r.quotient->name(1) == "c");
  CHECK(r.cls == std::vector<std::size_t>{0, 0, 1});
  CHECK(r.quotient->le(0, 1));
}

TEST_CASE("enumerate_upsets agrees with the subset-filter oracle") {
  for (poset_ptr p :
       {chain({"0", "1"}), chain({"0", "a", "1"}), antichain({"x", "y", "z"}),
        oracles::square4(),
        ordrel::share(validate_poset({"a", "b", "c"},
                                     {{"a", "c"}, {"b", "c"}}))}) {
    std::vector<bitset> got;
    enumerate_upsets(*p, [&](const bitset& u) { got.push_back(u); });
    CHECK(got == oracles::brute_upsets(*p));
  }
}

TEST_CASE("upset counts on the standard small shapes") {
  auto count = [](const poset& p) {
    std::size_t n = 0;
    enumerate_upsets(p, [&](const bitset&) { ++n; });
    return n;
  };
  CHECK(count(*chain({"0", "1", "2", "3"})) == 5);     // chain: n+1
  CHECK(count(*antichain({"x", "y", "z"})) == 8);      // antichain: 2^n
  CHECK(count(*oracles::square4()) == 6);              // square: free DL + bounds
  poset v = validate_poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  CHECK(count(v) == 5);
}

TEST_CASE("enumerate_monotone_maps agrees with the all-functions oracle") {
  std::vector<poset_ptr> shapes = {chain({"0", "1"}), chain({"0", "a", "1"}),
                                   antichain({"x", "y"}), oracles::square4()};
  for (auto& dom : shapes)
    for (auto& cod : shapes) {
      std::set<std::vector<std::size_t>> got;
      enumerate_monotone_maps(*dom, *cod, [&](const std::vector<std::size_t>& img) {
        CHECK(got.insert(img).second); // no duplicates
      });
      auto want = oracles::brute_monotone_maps(*dom, *cod);
      CHECK(got == std::set<std::vector<std::size_t>>(want.begin(), want.end()));
    }
}

TEST_CASE("enumerate_monotone_maps edge cases") {
  poset empty;
  poset_ptr c2 = chain({"0", "1"});
  std::size_t n = 0;
  enumerate_monotone_maps(empty, *c2, [&](const std::vector<std::size_t>&) { ++n; });
  CHECK(n == 1); // the empty map
  n = 0;
  enumerate_monotone_maps(*c2, empty, [&](const std::vector<std::size_t>&) { ++n; });
  CHECK(n == 0);
}

TEST_CASE("enumerate_posets yields the labeled poset counts") {
  limits lim;
  auto count = [&](std::size_t n) {
    std::size_t k = 0;
    enumerate_posets(n, [&](const poset&) { ++k; }, lim);
    return k;
  };
  CHECK(count(0) == 1);
  CHECK(count(1) == 1);
  CHECK(count(2) == 3);
  CHECK(count(3) == 19);
  CHECK(count(4) == 219); // labeled posets on 4 elements
  CHECK_THROWS_AS(count(lim.max_enum_posets + 1), error);
}
