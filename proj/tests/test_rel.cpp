#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "ordrel/rel.hpp"
#include "oracles.hpp"

using namespace ordrel;
using oracles::antichain;
using oracles::chain;

namespace {

std::vector<poset_ptr> small_shapes() {
  return {chain({"0", "1"}), chain({"0", "a", "1"}), antichain({"x", "y"}),
          oracles::square4(),
          share(validate_poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}))};
}

} // namespace

TEST_CASE("weak_rel construction validates weakening closure") {
  poset_ptr c2 = chain({"0", "1"});
  std::vector<bitset> bad(2, bitset(2));
  bad[1].set(0); // 1 r 0 forces 0 r 0 and 0 r 1 and 1 r 1
  try {
    weak_rel r(c2, c2, bad);
    FAIL("non-closed rows accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_weakening_closed);
    // witness names a concrete missing pair
    CHECK(std::string(e.what()).find("missing (") != std::string::npos);
  }
  CHECK_NOTHROW(weak_rel(c2, c2, std::vector<bitset>(2, bitset(2))));
}

TEST_CASE("weakening_closure matches the fixpoint oracle") {
  for (auto& dom : small_shapes())
    for (auto& cod : small_shapes()) {
      std::size_t n = dom->size(), m = cod->size();
      if (n * m > 9) continue; // keep the sweep exhaustive but fast
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n * m));
           ++mask) {
        std::vector<bitset> seed(n, bitset(m));
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < m; ++b)
            if ((mask >> (a * m + b)) & 1) seed[a].set(b);
        weak_rel got = weakening_closure(dom, cod, seed);
        CHECK(oracles::rows_of(got) ==
              oracles::brute_weakening_closure(*dom, *cod, seed));
      }
    }
}

TEST_CASE("rel_from_pairs closes or validates according to the flag") {
  poset_ptr c2 = chain({"0", "1"});
  weak_rel closed = rel_from_pairs(c2, c2, {{"1", "0"}}, /*close=*/true);
  CHECK(closed.pair_count() == 4); // closure of (1,0) is total
  CHECK_THROWS_AS(rel_from_pairs(c2, c2, {{"1", "0"}}, /*close=*/false),
                  error);
  CHECK_THROWS_AS(rel_from_pairs(c2, c2, {{"1", "z"}}, true), error);
}

TEST_CASE("identity, empty, total and composition laws") {
  poset_ptr c3 = chain({"0", "a", "1"});
  poset_ptr sq = oracles::square4();
  weak_rel id3 = identity_rel(c3);
  // the identity relation is the order itself
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(id3.contains(i, j) == c3->le(i, j));

  for (auto& r : all_relations(c3, sq)) {
    CHECK(compose_rel(id3, r) == r);
    CHECK(compose_rel(r, identity_rel(sq)) == r);
    CHECK(compose_rel(empty_rel(c3, c3), r) == empty_rel(c3, sq));
    CHECK(rel_union(r, empty_rel(c3, sq)) == r);
    CHECK(rel_intersection(r, total_rel(c3, sq)) == r);
  }
}

TEST_CASE("compose_rel agrees with the witness-search oracle") {
  poset_ptr c2 = chain({"0", "1"});
  poset_ptr d2 = antichain({"x", "y"});
  auto rs = all_relations(c2, d2);
  auto ss = all_relations(d2, c2);
  for (auto& r : rs)
    for (auto& s : ss) {
      weak_rel got = compose_rel(r, s);
      CHECK(oracles::rows_of(got) ==
            oracles::brute_compose(oracles::rows_of(r), oracles::rows_of(s),
                                   d2->size(), c2->size()));
    }
}

TEST_CASE("composition is associative") {
  poset_ptr c2 = chain({"0", "1"});
  auto rs = all_relations(c2, c2);
  for (auto& r : rs)
    for (auto& s : rs)
      for (auto& t : rs)
        CHECK(compose_rel(compose_rel(r, s), t) ==
              compose_rel(r, compose_rel(s, t)));
}

TEST_CASE("all_relations enumerates exactly the closed pair sets") {
  for (auto& dom : small_shapes())
    for (auto& cod : small_shapes()) {
      if (dom->size() * cod->size() > 9) continue;
      auto got = all_relations(dom, cod);
      auto want = oracles::brute_all_relations(*dom, *cod);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(oracles::rows_of(got[i]) == want[i]);
    }
}

TEST_CASE("frozen relation counts on the benchmark hom-posets") {
  poset_ptr c2 = chain({"0", "1"});
  poset_ptr c3 = chain({"0", "a", "1"});
  poset_ptr d2 = antichain({"x", "y"});
  CHECK(all_relations(c2, c2).size() == 6);
  CHECK(all_relations(c3, c3).size() == 20);
  CHECK(all_relations(d2, d2).size() == 16); // all subsets: no order to close
  CHECK(all_relations(c2, d2).size() == 9);
}

TEST_CASE("the six weakening relations on the 2-chain, frozen") {
  poset_ptr c2 = chain({"0", "1"});
  std::set<std::set<std::string>> got;
  for (auto& r : all_relations(c2, c2)) {
    std::set<std::string> pairs;
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        if (r.contains(a, b))
          pairs.insert(c2->name(a) + c2->name(b));
    got.insert(pairs);
  }
  std::set<std::set<std::string>> want = {
      {},                          // empty
      {"01"},                      // strictly-below
      {"01", "11"},                // companion of const-1
      {"00", "01"},                // conjoint of const-0
      {"00", "01", "11"},          // identity (the order)
      {"00", "01", "10", "11"},    // total
  };
  CHECK(got == want);
}

TEST_CASE("image and product_mask") {
  poset_ptr c2 = chain({"0", "1"});
  weak_rel id = identity_rel(c2);
  bitset s(2);
  s.set(1);
  CHECK(id.image(s) == c2->up(1));
  bitset full(2);
  full.set_all();
  CHECK(id.image(full) == full);
  // mask index a*|B|+b over the closed identity pairs (0,0),(0,1),(1,1)
  bitset mask = id.product_mask();
  CHECK(mask.test(0));
  CHECK(mask.test(1));
  CHECK_FALSE(mask.test(2));
  CHECK(mask.test(3));
}

TEST_CASE("companion and conjoint are adjoint and recover the map") {
  std::vector<poset_ptr> shapes = small_shapes();
  for (auto& dom : shapes)
    for (auto& cod : shapes)
      for (auto& img : oracles::brute_monotone_maps(*dom, *cod)) {
        monotone_map f(dom, cod, img);
        weak_rel lower = companion(f), upper = conjoint(f);
        // companion pairs are f(a) <= b; conjoint pairs are b <= f(a)
        for (std::size_t a = 0; a < dom->size(); ++a)
          for (std::size_t b = 0; b < cod->size(); ++b) {
            CHECK(lower.contains(a, b) == cod->le(f(a), b));
            CHECK(upper.contains(b, a) == cod->le(b, f(a)));
          }
        // unit + counit hold, and the map is recoverable
        CHECK(identity_rel(dom).subset_of(compose_rel(lower, upper)));
        CHECK(compose_rel(upper, lower).subset_of(identity_rel(cod)));
        CHECK(recover_map_from_adjunction(lower, upper) == f);
      }
}

TEST_CASE("recover_map_from_adjunction rejects non-adjoint pairs") {
  poset_ptr c2 = chain({"0", "1"});
  weak_rel tot = total_rel(c2, c2), emp = empty_rel(c2, c2);
  try {
    recover_map_from_adjunction(emp, tot); // unit fails: Id not<= empty;total
    FAIL("non-adjoint pair accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_adjoint);
  }
}

TEST_CASE("surjection and embedding criteria match classify_map") {
  std::vector<poset_ptr> shapes = small_shapes();
  for (auto& dom : shapes)
    for (auto& cod : shapes)
      for (auto& img : oracles::brute_monotone_maps(*dom, *cod)) {
        monotone_map f(dom, cod, img);
        adjoint_criteria ac = surjection_embedding_criteria(f);
        map_class mc = classify_map(f);
        CHECK(ac.surjection == mc.surjective);
        CHECK(ac.embedding == mc.embedding);
      }
}

TEST_CASE("hom-product guard") {
  poset_ptr c5 = chain({"1", "2", "3", "4", "5"});
  limits lim;
  lim.max_hom_product = 20;
  CHECK_THROWS_AS(all_relations(c5, c5, lim), error); // 25 > 20
}
