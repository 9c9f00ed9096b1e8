#include "ordrel/suite.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ordrel/apps.hpp"
#include "ordrel/error.hpp"
#include "ordrel/io.hpp"

namespace ordrel {

namespace {

// --- witness formatting ------------------------------------------------------

std::string poset_key(const poset& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p.name(i);
  }
  s += ";";
  bool first = true;
  for (auto& [a, b] : p.covers()) {
    if (!first) s += " ";
    first = false;
    s += p.name(a) + "<" + p.name(b);
  }
  s += ")";
  return s;
}

std::string rel_key(const weak_rel& r) {
  std::string s = "[";
  for (std::size_t a = 0; a < r.dom().size(); ++a)
    r.row(a).for_each([&](std::size_t b) {
      s += "(" + r.dom().name(a) + "," + r.cod().name(b) + ")";
    });
  s += "]";
  return s;
}

std::string rel_instance(const weak_rel& r) {
  return "X=" + poset_key(r.dom()) + " Y=" + poset_key(r.cod()) +
         " r=" + rel_key(r);
}

check_entry pass_entry(std::string check, std::size_t n, const char* noun) {
  return {std::move(check), std::to_string(n) + " " + noun, true, ""};
}

check_entry fail_entry(std::string check, std::size_t n, const char* noun,
                       std::string witness) {
  return {std::move(check), std::to_string(n) + " " + noun, false,
          std::move(witness)};
}

// --- shared instance universe ------------------------------------------------

struct ctx {
  suite_config cfg;
  std::vector<poset_ptr> posets;        // all labeled posets, sizes 0..max
  std::vector<upset_lattice> duals;     // dual_space per poset
  std::vector<std::vector<std::vector<weak_rel>>> rels; // rels[i][j]
};

ctx build_ctx(const suite_config& cfg) {
  ctx c;
  c.cfg = cfg;
  for (std::size_t n = 0; n <= cfg.max_poset_size; ++n)
    enumerate_posets(
        n, [&](const poset& p) { c.posets.push_back(share(p)); }, cfg.lim);
  c.duals.reserve(c.posets.size());
  for (auto& p : c.posets) c.duals.push_back(dual_space(p, cfg.lim));
  std::size_t np = c.posets.size();
  c.rels.resize(np);
  for (std::size_t i = 0; i < np; ++i) {
    c.rels[i].resize(np);
    for (std::size_t j = 0; j < np; ++j)
      c.rels[i][j] = all_relations(c.posets[i], c.posets[j], cfg.lim);
  }
  return c;
}

weak_rel random_rel(poset_ptr x, poset_ptr y, std::mt19937_64& rng) {
  std::vector<bitset> rows(x->size(), bitset(y->size()));
  for (std::size_t a = 0; a < x->size(); ++a)
    for (std::size_t b = 0; b < y->size(); ++b)
      if (rng() % 3 == 0) rows[a].set(b);
  return weakening_closure(std::move(x), std::move(y), std::move(rows));
}

// --- criterion 1: round-trip through the duality -----------------------------

check_entry criterion_roundtrip(const ctx& c) {
  const std::string name = "criterion-1-roundtrip";
  std::size_t count = 0;
  for (std::size_t i = 0; i < c.posets.size(); ++i)
    for (std::size_t j = 0; j < c.posets.size(); ++j)
      for (const weak_rel& r : c.rels[i][j]) {
        ++count;
        roundtrip_report rep = roundtrip_relation(r, c.cfg.lim);
        if (!rep.equal)
          return fail_entry(name, count, "relations",
                            rel_instance(r) + ": " + rep.witness);
      }
  return pass_entry(name, count, "relations");
}

// --- criterion 2: functoriality ----------------------------------------------

check_entry criterion_functoriality(const ctx& c) {
  const std::string name = "criterion-2-functoriality";
  std::size_t count = 0;
  // identity preservation
  for (std::size_t i = 0; i < c.posets.size(); ++i) {
    ++count;
    weak_rel did =
        dual_rel_formula(identity_rel(c.posets[i]), c.duals[i], c.duals[i]);
    if (!(did == identity_rel(c.duals[i].carrier)))
      return fail_entry(name, count, "instances",
                        "dual of identity at " + poset_key(*c.posets[i]) +
                            " is not the identity");
  }
  // exhaustive composable pairs
  std::size_t np = c.posets.size();
  for (std::size_t y = 0; y < np; ++y) {
    std::vector<std::vector<weak_rel>> ldual(np), rdual(np);
    for (std::size_t x = 0; x < np; ++x) {
      ldual[x].reserve(c.rels[x][y].size());
      for (const weak_rel& r : c.rels[x][y])
        ldual[x].push_back(dual_rel_formula(r, c.duals[x], c.duals[y]));
    }
    for (std::size_t z = 0; z < np; ++z) {
      rdual[z].reserve(c.rels[y][z].size());
      for (const weak_rel& s : c.rels[y][z])
        rdual[z].push_back(dual_rel_formula(s, c.duals[y], c.duals[z]));
    }
    for (std::size_t x = 0; x < np; ++x)
      for (std::size_t z = 0; z < np; ++z)
        for (std::size_t a = 0; a < c.rels[x][y].size(); ++a)
          for (std::size_t b = 0; b < c.rels[y][z].size(); ++b) {
            ++count;
            const weak_rel& r = c.rels[x][y][a];
            const weak_rel& s = c.rels[y][z][b];
            weak_rel lhs =
                dual_rel_formula(compose_rel(r, s), c.duals[x], c.duals[z]);
            if (!(lhs == compose_rel(ldual[x][a], rdual[z][b])))
              return fail_entry(name, count, "instances",
                                "dual(r;s) != dual(r);dual(s) at r=" +
                                    rel_instance(r) + " s=" + rel_instance(s));
          }
  }
  // seeded random tier at sampled_size
  std::vector<poset_ptr> big;
  enumerate_posets(
      c.cfg.sampled_size, [&](const poset& p) { big.push_back(share(p)); },
      c.cfg.lim);
  std::vector<upset_lattice> bigd;
  bigd.reserve(big.size());
  for (auto& p : big) bigd.push_back(dual_space(p, c.cfg.lim));
  std::mt19937_64 rng(c.cfg.random_seed);
  for (std::size_t t = 0; t < c.cfg.sample_count; ++t) {
    std::size_t x = rng() % big.size();
    std::size_t y = rng() % big.size();
    std::size_t z = rng() % big.size();
    weak_rel r = random_rel(big[x], big[y], rng);
    weak_rel s = random_rel(big[y], big[z], rng);
    ++count;
    weak_rel lhs = dual_rel_formula(compose_rel(r, s), bigd[x], bigd[z]);
    weak_rel rhs = compose_rel(dual_rel_formula(r, bigd[x], bigd[y]),
                               dual_rel_formula(s, bigd[y], bigd[z]));
    if (!(lhs == rhs))
      return fail_entry(name, count, "instances",
                        "random tier: dual(r;s) != dual(r);dual(s) at r=" +
                            rel_instance(r) + " s=" + rel_instance(s));
  }
  return pass_entry(name, count, "instances");
}

// --- criterion 3: three constructions of the dual ----------------------------

check_entry criterion_three_paths(const ctx& c) {
  const std::string name = "criterion-3-three-paths";
  std::size_t count = 0;
  for (std::size_t i = 0; i < c.posets.size(); ++i)
    for (std::size_t j = 0; j < c.posets.size(); ++j)
      for (const weak_rel& r : c.rels[i][j]) {
        ++count;
        weak_rel a = dual_rel_formula(r, c.duals[i], c.duals[j]);
        weak_rel b = dual_rel_via_span(r, c.duals[i], c.duals[j], c.cfg.lim);
        if (!(a == b))
          return fail_entry(name, count, "relations",
                            "span path disagrees at " + rel_instance(r));
        weak_rel d = dual_rel_via_cospan(r, c.duals[i], c.duals[j], c.cfg.lim);
        if (!(a == d))
          return fail_entry(name, count, "relations",
                            "cospan path disagrees at " + rel_instance(r));
      }
  return pass_entry(name, count, "relations");
}

// --- criterion 4: complete meet-semilattice homomorphism ----------------------

check_entry criterion_meet_hom(const ctx& c) {
  const std::string name = "criterion-4-meet-hom";
  std::size_t count = 0;
  std::vector<poset_ptr> univ = {
      share(validate_poset({"a", "b"}, {{"a", "b"}})),
      share(validate_poset({"a", "b"}, {})),
      share(validate_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}))};
  std::vector<upset_lattice> ud;
  ud.reserve(univ.size());
  for (auto& p : univ) ud.push_back(dual_space(p, c.cfg.lim));

  struct site {
    std::size_t x, y;
    std::vector<weak_rel> rels;
    std::vector<weak_rel> duals;
  };
  std::vector<site> sites;
  for (std::size_t x = 0; x < univ.size(); ++x)
    for (std::size_t y = 0; y < univ.size(); ++y) {
      site s{x, y, all_relations(univ[x], univ[y], c.cfg.lim), {}};
      s.duals.reserve(s.rels.size());
      for (auto& r : s.rels)
        s.duals.push_back(dual_rel_formula(r, ud[x], ud[y]));
      sites.push_back(std::move(s));
    }

  for (auto& s : sites) {
    ++count;
    weak_rel de = dual_rel_formula(empty_rel(univ[s.x], univ[s.y]), ud[s.x],
                                   ud[s.y]);
    if (!(de == total_rel(ud[s.x].carrier, ud[s.y].carrier)))
      return fail_entry(name, count, "families",
                        "dual of the empty relation is not total between " +
                            poset_key(*univ[s.x]) + " and " +
                            poset_key(*univ[s.y]));
    for (std::size_t a = 0; a < s.rels.size(); ++a)
      for (std::size_t b = 0; b < s.rels.size(); ++b) {
        ++count;
        weak_rel lhs = dual_rel_formula(rel_union(s.rels[a], s.rels[b]),
                                        ud[s.x], ud[s.y]);
        if (!(lhs == rel_intersection(s.duals[a], s.duals[b])))
          return fail_entry(name, count, "families",
                            "dual(r1 u r2) != dual(r1) n dual(r2) at r1=" +
                                rel_key(s.rels[a]) +
                                " r2=" + rel_key(s.rels[b]) + " over " +
                                poset_key(*univ[s.x]) + "," +
                                poset_key(*univ[s.y]));
      }
  }
  // sampled families of size 3
  std::mt19937_64 rng(c.cfg.random_seed + 4);
  for (std::size_t t = 0; t < c.cfg.sample_count; ++t) {
    auto& s = sites[rng() % sites.size()];
    std::size_t a = rng() % s.rels.size();
    std::size_t b = rng() % s.rels.size();
    std::size_t d = rng() % s.rels.size();
    ++count;
    weak_rel un = rel_union(rel_union(s.rels[a], s.rels[b]), s.rels[d]);
    weak_rel lhs = dual_rel_formula(un, ud[s.x], ud[s.y]);
    weak_rel rhs =
        rel_intersection(rel_intersection(s.duals[a], s.duals[b]), s.duals[d]);
    if (!(lhs == rhs))
      return fail_entry(name, count, "families",
                        "size-3 family disagrees at indices " +
                            std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(d));
  }
  return pass_entry(name, count, "families");
}

// --- criterion 5: pinned fixtures --------------------------------------------

// the non-embedding cocomma instance: p = id_W, q: W -> C2; expects the
// cocomma (q, id) with a non-embedding left leg
std::string check_nonembedding_fixture(poset_ptr w,
                                        const std::vector<std::size_t>& qimg,
                                        const limits& lim) {
  poset_ptr two = share(validate_poset({"0", "1"}, {{"0", "1"}}));
  dl_ptr wdl = share(validate_dl(w));
  dl_ptr bdl = share(validate_dl(two));
  monotone_map p = identity_map(w);
  monotone_map q(w, two, qimg);
  dl_span s = make_dl_span(wdl, wdl, bdl, span(p, q));
  dl_cospan cc = dl_cocomma_via_duality(s, lim);

  const fin_dl& coap = *cc.coapex;
  if (coap.size() != 2) return "coapex is not the 2-chain";
  std::size_t bot = coap.bottom(), top = coap.top();
  const monotone_map& j = cc.carrier.left();
  const monotone_map& k = cc.carrier.right();
  for (std::size_t i = 0; i < w->size(); ++i)
    if (j(i) != (qimg[i] == 0 ? bot : top))
      return "left leg differs from q at '" + w->name(i) + "'";
  if (k(0) != bot || k(1) != top) return "right leg is not the identity";
  if (classify_map(j).embedding) return "left leg unexpectedly an embedding";
  if (!classify_map(k).iso) return "right leg is not an isomorphism";

  // the direct cocone (q, id) factors through the computed cocomma by an iso
  dl_cospan direct = make_dl_cospan(bdl, wdl, bdl,
                                    cospan(q, identity_map(two)));
  monotone_map med = dl_cocomma_mediate(s, cc, direct, lim);
  if (!classify_map(med).iso) return "mediator to (q,id) is not an iso";
  if (!(compose(med, j) == q)) return "mediator does not recover q";
  if (!(compose(med, k) == identity_map(two)))
    return "mediator does not recover id";
  return "";
}

check_entry criterion_fixtures(const ctx& c) {
  const std::string name = "criterion-5-frozen-fixtures";
  const limits& lim = c.cfg.lim;

  poset_ptr ch_a = share(validate_poset({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}));
  poset_ptr ch_b = share(validate_poset({"0", "b", "1"}, {{"0", "b"}, {"b", "1"}}));
  poset_ptr two = share(validate_poset({"0", "1"}, {{"0", "1"}}));
  poset_ptr sq = share(validate_poset(
      {"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}}));
  dl_ptr dch_a = share(validate_dl(ch_a));
  dl_ptr dch_b = share(validate_dl(ch_b));
  dl_ptr dtwo = share(validate_dl(two));
  dl_ptr dsq = share(validate_dl(sq));

  // (a) smallest lattice-compatible relation between the 3-chains
  dl_rel smallest = dl_relation_closure(
      dch_a, dch_b, std::vector<bitset>(3, bitset(3)));
  weak_rel expected_a = rel_from_pairs(
      ch_a, ch_b,
      {{"0", "0"}, {"0", "b"}, {"0", "1"}, {"a", "1"}, {"1", "1"}}, false);
  if (!(smallest.rel == expected_a))
    return {name, "fixture (a)", false,
            "smallest relation between 3-chains is " + rel_key(smallest.rel)};

  // (b) exactly two lattice-compatible relations on the 2-chain
  std::vector<weak_rel> two_rels = all_relations(two, two, lim);
  std::size_t dl_count = 0;
  bool saw_identity = false, saw_total = false;
  for (auto& r : two_rels)
    if (is_dl_relation(*dtwo, *dtwo, r)) {
      ++dl_count;
      if (r == identity_rel(two)) saw_identity = true;
      if (r == total_rel(two, two)) saw_total = true;
    }
  if (dl_count != 2 || !saw_identity || !saw_total)
    return {name, "fixture (b)", false,
            "expected exactly {identity, total}, found " +
                std::to_string(dl_count) + " relations"};

  // (c) negation closure of {(0,0)} on the 4-element Boolean algebra
  std::vector<bitset> seed_c(4, bitset(4));
  seed_c[0].set(0);
  dl_rel closed_c = dl_relation_closure(dsq, dsq, seed_c,
                                        /*with_complements=*/true);
  if (!(closed_c.rel == total_rel(sq, sq)))
    return {name, "fixture (c)", false,
            "negation closure of {(0,0)} is " + rel_key(closed_c.rel) +
                ", not total"};

  // (d) cocomma of the tabulated total relation between 3-chains collapses
  dl_rel total_dl = make_dl_rel(dch_a, dch_b, total_rel(ch_a, ch_b));
  dl_cospan collapsed = dl_cocomma_via_duality(dl_tabulate(total_dl), lim);
  if (collapsed.coapex->size() != 1)
    return {name, "fixture (d)", false,
            "cocomma coapex has " + std::to_string(collapsed.coapex->size()) +
                " elements, expected 1"};

  // (e) non-embedding cocomma legs, on the 3-chain (free bounded
  // distributive lattice on one generator) and on the 4-element Boolean
  // algebra with the generator sent to 0
  if (std::string w = check_nonembedding_fixture(ch_a, {0, 0, 1}, lim);
      !w.empty())
    return {name, "fixture (e), 3-chain", false, w};
  if (std::string w = check_nonembedding_fixture(sq, {0, 0, 1, 1}, lim);
      !w.empty())
    return {name, "fixture (e), 2x2 square", false, w};

  return {name, "5 fixtures", true, ""};
}

// --- criterion 6: exact-square preservation ----------------------------------

check_entry criterion_exact_squares(const ctx& c) {
  const std::string name = "criterion-6-exact-squares";
  const std::size_t ms = c.cfg.max_poset_size; // exhaustive tier bound
  // The image squares dualize the comma apexes, which have up to ms^2
  // elements, so the guards must sit above the derived sizes, not the
  // generated ones.
  limits inner = c.cfg.lim;
  inner.max_dual_space = std::max(inner.max_dual_space, ms * ms);
  inner.max_dual_algebra = std::max(inner.max_dual_algebra, ms * ms);
  std::size_t derived = std::size_t(1) << std::min<std::size_t>(ms * ms, 62);
  inner.max_internal_upsets = std::max(inner.max_internal_upsets, derived);
  inner.max_cocomma_lattice = std::max(inner.max_cocomma_lattice, derived);
  check_report space =
      check_extension_preconditions(space_functor(inner), ms, inner);
  check_report algebra =
      check_extension_preconditions(algebra_functor(inner), ms, inner);
  for (auto* rep : {&space, &algebra})
    for (auto& e : rep->entries)
      if (!e.pass)
        return {name, e.instance, false, e.check + ": " + e.witness};
  std::string inst;
  for (auto& e : space.entries) {
    if (!inst.empty()) inst += ", ";
    inst += e.check + " " + e.instance;
  }
  return {name, "space/algebra, " + inst, true, ""};
}

// --- criterion 7: the specification Galois connection ------------------------

check_entry criterion_hoare_galois(const ctx& c) {
  const std::string name = "criterion-7-hoare-galois";
  std::size_t count = 0;
  std::vector<poset_ptr> univ = {
      share(validate_poset({"a", "b"}, {{"a", "b"}})),
      share(validate_poset({"a", "b"}, {}))};
  for (auto& x : univ) {
    upset_lattice ux = dual_space(x, c.cfg.lim);
    std::vector<weak_rel> programs = all_relations(x, x, c.cfg.lim);
    std::vector<weak_rel> theories;
    theories.reserve(programs.size());
    for (auto& r : programs) theories.push_back(hoare_theory(r, ux, ux));
    std::vector<weak_rel> specs = all_relations(ux.carrier, ux.carrier, c.cfg.lim);
    for (auto& spec : specs) {
      weak_rel impl = hoare_implementation(spec, ux, ux);
      weak_rel brute = empty_rel(x, x);
      for (std::size_t i = 0; i < programs.size(); ++i) {
        ++count;
        bool left = spec.subset_of(theories[i]);
        bool right = programs[i].subset_of(impl);
        if (left != right)
          return fail_entry(
              name, count, "pairs",
              "S<=Theory(R) is " + std::to_string(left) +
                  " but R<=Impl(S) is " + std::to_string(right) + " at S=" +
                  rel_key(spec) + " R=" + rel_key(programs[i]) + " over " +
                  poset_key(*x));
        if (left) brute = rel_union(brute, programs[i]);
      }
      if (!(brute == impl))
        return fail_entry(name, count, "pairs",
                          "closed-form implementation differs from the "
                          "brute-force union at S=" +
                              rel_key(spec) + " over " + poset_key(*x));
    }
  }
  return pass_entry(name, count, "pairs");
}

// --- criterion 8: preorders become interpolative relations -------------------

check_entry criterion_preorder_transport(const ctx& c) {
  const std::string name = "criterion-8-preorder-transport";
  std::size_t count = 0;
  for (std::size_t i = 0; i < c.posets.size(); ++i) {
    const poset_ptr& x = c.posets[i];
    for (const weak_rel& r : c.rels[i][i]) {
      if (!identity_rel(x).subset_of(r)) continue;
      if (!compose_rel(r, r).subset_of(r)) continue;
      ++count;
      weak_rel d = dual_rel_formula(r, c.duals[i], c.duals[i]);
      interpolative_result ir = interpolative_check(d);
      if (!ir.below_identity || !ir.interpolative)
        return fail_entry(name, count, "preorders",
                          "dual not interpolative-below-identity at " +
                              rel_instance(r));
      monotone_map q = quotient_by_preorder(r);
      std::vector<bitset> fixed = reflexive_elements(r);
      std::vector<bitset> qups;
      enumerate_upsets(q.cod(), [&](const bitset& u) { qups.push_back(u); });
      if (fixed.size() != qups.size())
        return fail_entry(name, count, "preorders",
                          std::to_string(fixed.size()) +
                              " reflexive elements vs " +
                              std::to_string(qups.size()) +
                              " quotient upsets at " + rel_instance(r));
      for (const bitset& a : fixed) {
        bitset img(q.cod().size());
        a.for_each([&](std::size_t e) { img.set(q(e)); });
        bool is_upset = true;
        img.for_each([&](std::size_t u) {
          if (!q.cod().up(u).subset_of(img)) is_upset = false;
        });
        if (!is_upset || !(q.preimage(img) == a))
          return fail_entry(name, count, "preorders",
                            "bijection breaks on a reflexive element at " +
                                rel_instance(r));
      }
      for (const bitset& u : qups) {
        bitset back = q.preimage(u);
        if (!r.image(back).subset_of(back))
          return fail_entry(name, count, "preorders",
                            "quotient upset pulls back to a non-reflexive "
                            "element at " +
                                rel_instance(r));
      }
    }
  }
  return pass_entry(name, count, "preorders");
}

// --- criterion 9: framed two-cells --------------------------------------------

check_entry criterion_framed_cells(const ctx& c) {
  const std::string name = "criterion-9-framed-cells";
  std::size_t count = 0;

  // indices of posets with at most 2 elements
  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < c.posets.size(); ++i)
    if (c.posets[i]->size() <= 2) small.push_back(i);
  // hom sets over the small universe
  std::size_t ns = small.size();
  std::vector<std::vector<std::vector<monotone_map>>> hom(
      ns, std::vector<std::vector<monotone_map>>(ns));
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = 0; b < ns; ++b)
      enumerate_monotone_maps(
          *c.posets[small[a]], *c.posets[small[b]],
          [&](const std::vector<std::size_t>& img) {
            hom[a][b].emplace_back(c.posets[small[a]], c.posets[small[b]],
                                   img);
          });

  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = 0; b < ns; ++b)
      for (std::size_t x = 0; x < ns; ++x)
        for (std::size_t y = 0; y < ns; ++y) {
          const auto& srel = c.rels[small[a]][small[b]];
          const auto& rrel = c.rels[small[x]][small[y]];
          for (const monotone_map& f : hom[a][x])
            for (const monotone_map& g : hom[b][y])
              for (const weak_rel& s : srel)
                for (const weak_rel& r : rrel) {
                  ++count;
                  try {
                    framed_cell_check(s, f, g, r);
                  } catch (const error& e) {
                    return fail_entry(name, count, "cells",
                                      std::string(e.what()) + " at S=" +
                                          rel_key(s) + " R=" + rel_key(r));
                  }
                }
        }

  // unit cells: every relation is the restriction of its double dual along
  // the unit isomorphisms, and that restriction is a valid cell
  std::vector<monotone_map> units;
  units.reserve(c.posets.size());
  for (auto& p : c.posets) units.push_back(unit_space_iso(p, c.cfg.lim));
  for (std::size_t i = 0; i < c.posets.size(); ++i)
    for (std::size_t j = 0; j < c.posets.size(); ++j)
      for (const weak_rel& r : c.rels[i][j]) {
        ++count;
        roundtrip_report rt = roundtrip_relation(r, c.cfg.lim);
        const monotone_map& ex = units[i];
        const monotone_map& ey = units[j];
        weak_rel back = framed_restriction(rt.double_dual, ex, ey);
        if (!(back == r))
          return fail_entry(name, count, "cells",
                            "unit cell is not an equality at " +
                                rel_instance(r));
        framed_cell_verdict v = framed_cell_check(r, ex, ey, rt.double_dual);
        if (!v.holds)
          return fail_entry(name, count, "cells",
                            "unit cell rejected at " + rel_instance(r));
      }
  return pass_entry(name, count, "cells");
}

// --- criterion 10: the cocomma -| comma Galois pair ---------------------------

// sub-poset of A x B on the pairs selected by mask (row-major), with the
// two projections
span subset_span(const poset_ptr& a, const poset_ptr& b, const bitset& mask) {
  std::size_t m = b->size();
  std::vector<std::pair<std::size_t, std::size_t>> pts;
  mask.for_each([&](std::size_t k) { pts.emplace_back(k / m, k % m); });
  std::vector<std::string> names;
  names.reserve(pts.size());
  for (auto& [x, y] : pts)
    names.push_back("(" + a->name(x) + "," + b->name(y) + ")");
  std::vector<bitset> rows(pts.size(), bitset(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (a->le(pts[i].first, pts[j].first) &&
          b->le(pts[i].second, pts[j].second))
        rows[i].set(j);
  poset_ptr apex = share(poset::from_order(std::move(names), std::move(rows)));
  std::vector<std::size_t> li, ri;
  li.reserve(pts.size());
  ri.reserve(pts.size());
  for (auto& [x, y] : pts) {
    li.push_back(x);
    ri.push_back(y);
  }
  return span(monotone_map(apex, a, std::move(li)),
              monotone_map(apex, b, std::move(ri)));
}

bool same_span(const span& s, const span& t) {
  return s.left() == t.left() && s.right() == t.right();
}
bool same_cospan(const cospan& s, const cospan& t) {
  return s.left() == t.left() && s.right() == t.right();
}

// mediating map from the collage of r into the coapex of c, if monotone
bool collage_mediates(const weak_rel& r, const cospan& col, const cospan& c) {
  const poset& coap = col.coapex();
  std::vector<std::size_t> img(coap.size());
  for (std::size_t i = 0; i < r.dom().size(); ++i)
    img[col.left()(i)] = c.left()(i);
  for (std::size_t i = 0; i < r.cod().size(); ++i)
    img[col.right()(i)] = c.right()(i);
  try {
    monotone_map med(col.left().cod_ptr(), c.left().cod_ptr(), std::move(img));
    return compose(med, col.left()) == c.left() &&
           compose(med, col.right()) == c.right();
  } catch (const error&) {
    return false;
  }
}

// mediating map from the apex of s into the comma apex of c, if it exists
bool span_mediates(const span& s, const weak_rel& target_rel, const span& cm) {
  const poset& m = *s.right().cod_ptr();
  std::size_t cols = m.size();
  // rank of pair (x,y) inside the comma apex (pairs of target_rel, row-major)
  std::vector<std::size_t> rank(target_rel.dom().size() * cols, SIZE_MAX);
  {
    std::size_t next = 0;
    for (std::size_t x = 0; x < target_rel.dom().size(); ++x)
      target_rel.row(x).for_each(
          [&](std::size_t y) { rank[x * cols + y] = next++; });
  }
  std::vector<std::size_t> img(s.apex().size());
  for (std::size_t w = 0; w < s.apex().size(); ++w) {
    std::size_t k = rank[s.left()(w) * cols + s.right()(w)];
    if (k == SIZE_MAX) return false;
    img[w] = k;
  }
  try {
    monotone_map med(s.left().dom_ptr(), cm.left().dom_ptr(), std::move(img));
    return compose(cm.left(), med) == s.left() &&
           compose(cm.right(), med) == s.right();
  } catch (const error&) {
    return false;
  }
}

check_entry criterion_cocomma_comma(const ctx& c) {
  const std::string name = "criterion-10-cocomma-comma";
  std::size_t count = 0;
  std::size_t np = c.posets.size();

  // hom sets over the full universe, used by the interior tier
  std::vector<std::vector<std::vector<monotone_map>>> hom(
      np, std::vector<std::vector<monotone_map>>(np));
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b)
      enumerate_monotone_maps(*c.posets[a], *c.posets[b],
                              [&](const std::vector<std::size_t>& img) {
                                hom[a][b].emplace_back(c.posets[a],
                                                       c.posets[b], img);
                              });

  std::mt19937_64 rng(c.cfg.random_seed + 10);
  for (std::size_t ia = 0; ia < np; ++ia)
    for (std::size_t ib = 0; ib < np; ++ib) {
      const poset_ptr& a = c.posets[ia];
      const poset_ptr& b = c.posets[ib];
      std::size_t nm = a->size() * b->size();

      // closure tier: every sub-poset span of A x B
      std::size_t fixed_count = 0;
      for (std::size_t m = 0; m < (std::size_t{1} << nm); ++m) {
        ++count;
        bitset mask(nm);
        for (std::size_t k = 0; k < nm; ++k)
          if (m & (std::size_t{1} << k)) mask.set(k);
        span s = subset_span(a, b, mask);
        weak_rel r = rel_of_span(s);
        cospan cc = cocomma(s);
        if (!(rel_of_cospan(cc) == r))
          return fail_entry(name, count, "instances",
                            "cocomma changes the relation at mask span " +
                                rel_key(r));
        span closed = comma(cc);
        span gr = graph(r);
        if (!same_span(closed, gr))
          return fail_entry(name, count, "instances",
                            "comma(cocomma(s)) is not graph(rel(s)) at " +
                                rel_key(r));
        if (!span_mediates(s, r, closed))
          return fail_entry(name, count, "instances",
                            "span does not embed into its closure at " +
                                rel_key(r));
        if (same_span(closed, s)) ++fixed_count;
      }
      if (fixed_count != c.rels[ia][ib].size())
        return fail_entry(name, count, "instances",
                          "closure fixed points (" +
                              std::to_string(fixed_count) +
                              ") do not biject with relations (" +
                              std::to_string(c.rels[ia][ib].size()) + ") over " +
                              poset_key(*a) + "," + poset_key(*b));

      // fixed-point laws per relation: graph and collage are stable
      for (const weak_rel& r : c.rels[ia][ib]) {
        ++count;
        cospan col = collage(r);
        if (!(rel_of_cospan(col) == r))
          return fail_entry(name, count, "instances",
                            "collage represents the wrong relation at " +
                                rel_key(r));
        if (!same_span(comma(col), graph(r)) ||
            !same_cospan(cocomma(graph(r)), col))
          return fail_entry(name, count, "instances",
                            "graph/collage fixed-point laws fail at " +
                                rel_key(r));
      }

      // interior tier: every generated cospan contracts onto a collage
      for (std::size_t ic = 0; ic < np; ++ic)
        for (const monotone_map& j : hom[ia][ic])
          for (const monotone_map& k : hom[ib][ic]) {
            ++count;
            cospan cs(j, k);
            weak_rel r = rel_of_cospan(cs);
            span cm = comma(cs);
            if (!(rel_of_span(cm) == r))
              return fail_entry(name, count, "instances",
                                "comma changes the relation at cospan over " +
                                    poset_key(*c.posets[ic]));
            cospan interior = cocomma(cm);
            cospan col = collage(r);
            if (!same_cospan(interior, col))
              return fail_entry(name, count, "instances",
                                "cocomma(comma(c)) is not the collage at " +
                                    rel_key(r));
            if (!collage_mediates(r, col, cs))
              return fail_entry(name, count, "instances",
                                "interior does not contract onto the cospan "
                                "at " +
                                    rel_key(r));
          }

      // Galois tier: cocomma(s) factors through collage(r) exactly when s
      // factors through graph(r); both happen exactly on inclusion
      std::size_t pairs_total = (std::size_t{1} << nm) * c.rels[ia][ib].size();
      bool sample = pairs_total > 4096;
      std::size_t probes = sample ? 64 : pairs_total;
      for (std::size_t t = 0; t < probes; ++t) {
        std::size_t mi, ri;
        if (sample) {
          mi = rng() % (std::size_t{1} << nm);
          ri = rng() % c.rels[ia][ib].size();
        } else {
          mi = t % (std::size_t{1} << nm);
          ri = t / (std::size_t{1} << nm);
        }
        ++count;
        bitset mask(nm);
        for (std::size_t kk = 0; kk < nm; ++kk)
          if (mi & (std::size_t{1} << kk)) mask.set(kk);
        span s = subset_span(a, b, mask);
        weak_rel rs = rel_of_span(s);
        const weak_rel& target = c.rels[ia][ib][ri];
        bool incl = rs.subset_of(target);
        bool lhs = collage_mediates(rs, cocomma(s), collage(target));
        bool rhs = span_mediates(s, target, graph(target));
        if (lhs != incl || rhs != incl)
          return fail_entry(
              name, count, "instances",
              "adjunction mismatch: inclusion=" + std::to_string(incl) +
                  " cospan-side=" + std::to_string(lhs) + " span-side=" +
                  std::to_string(rhs) + " at s=" + rel_key(rs) + " r=" +
                  rel_key(target));
      }
    }
  return pass_entry(name, count, "instances");
}

using criterion_fn = check_entry (*)(const ctx&);

} // namespace

check_report run_suite(const suite_config& cfg) {
  ctx c = build_ctx(cfg);
  const std::pair<const char*, criterion_fn> table[] = {
      {"criterion-1-roundtrip", &criterion_roundtrip},
      {"criterion-2-functoriality", &criterion_functoriality},
      {"criterion-3-three-paths", &criterion_three_paths},
      {"criterion-4-meet-hom", &criterion_meet_hom},
      {"criterion-5-frozen-fixtures", &criterion_fixtures},
      {"criterion-6-exact-squares", &criterion_exact_squares},
      {"criterion-7-hoare-galois", &criterion_hoare_galois},
      {"criterion-8-preorder-transport", &criterion_preorder_transport},
      {"criterion-9-framed-cells", &criterion_framed_cells},
      {"criterion-10-cocomma-comma", &criterion_cocomma_comma},
  };
  check_report rep;
  for (auto& [cname, fn] : table) {
    try {
      rep.entries.push_back(fn(c));
    } catch (const std::exception& e) {
      rep.entries.push_back(
          {cname, "aborted", false, std::string("exception: ") + e.what()});
    }
  }
  return rep;
}

std::string format_report(const check_report& rep) {
  std::ostringstream os;
  for (auto& e : rep.entries) {
    os << (e.pass ? "PASS" : "FAIL") << "  " << e.check << "  [" << e.instance
       << "]";
    if (!e.witness.empty()) os << "  " << e.witness;
    os << "\n";
  }
  return os.str();
}

} // namespace ordrel
