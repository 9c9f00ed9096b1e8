#include "ordrel/duality.hpp"

#include <algorithm>
#include <cassert>

namespace ordrel {

std::size_t upset_lattice::index_of(const bitset& u) const {
  auto it = std::lower_bound(upsets.begin(), upsets.end(), u);
  if (it == upsets.end() || !(*it == u))
    fail(errc::internal, "set is not an upset of the base poset");
  return std::size_t(it - upsets.begin());
}

static std::string brace_name(const poset& base, const bitset& u) {
  std::string s = "{";
  bool first = true;
  u.for_each([&](std::size_t i) {
    if (!first) s += ",";
    s += base.name(i);
    first = false;
  });
  return s + "}";
}

static upset_lattice build_upset_lattice(poset_ptr base, bool with_tables) {
  upset_lattice out;
  out.base = std::move(base);
  enumerate_upsets(*out.base,
                   [&](const bitset& u) { out.upsets.push_back(u); });
  std::size_t n = out.upsets.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (auto& u : out.upsets) names.push_back(brace_name(*out.base, u));
  std::vector<bitset> rows(n, bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out.upsets[i].subset_of(out.upsets[j])) rows[i].set(j);
  out.carrier = share(poset::from_order(std::move(names), std::move(rows)));
  if (with_tables) {
    std::vector<std::size_t> meet(n * n), join(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        std::size_t m = out.index_of(out.upsets[i] & out.upsets[j]);
        std::size_t v = out.index_of(out.upsets[i] | out.upsets[j]);
        meet[i * n + j] = meet[j * n + i] = m;
        join[i * n + j] = join[j * n + i] = v;
      }
    // ascending mask order puts the empty set first and the full set last
    out.dl = share(fin_dl::trusted(out.carrier, std::move(meet),
                                   std::move(join), 0, n - 1));
  }
  return out;
}

upset_lattice dual_space(poset_ptr x, const limits& lim) {
  if (x->size() > lim.max_dual_space)
    fail(errc::size_guard, "dual_space: |X| = " + std::to_string(x->size()) +
                               " > " + std::to_string(lim.max_dual_space));
  return build_upset_lattice(std::move(x), true);
}

upset_lattice upset_poset_of(poset_ptr base, std::size_t max_upsets) {
  // 2^|W| bounds the upset count; refuse before enumerating
  if (base->size() >= 64 || (std::size_t(1) << base->size()) > max_upsets)
    fail(errc::size_guard,
         "upset poset of " + std::to_string(base->size()) +
             " elements may exceed " + std::to_string(max_upsets));
  return build_upset_lattice(std::move(base), false);
}

monotone_map dual_map_space(const monotone_map& f, const upset_lattice& ux,
                            const upset_lattice& uy) {
  std::vector<std::size_t> img(uy.upsets.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = ux.index_of(f.preimage(uy.upsets[i]));
  return monotone_map(uy.carrier, ux.carrier, std::move(img));
}

prime_filter_poset dual_algebra(dl_ptr a, const limits& lim) {
  if (a->size() > lim.max_dual_algebra)
    fail(errc::size_guard, "dual_algebra: |A| = " + std::to_string(a->size()) +
                               " > " + std::to_string(lim.max_dual_algebra));
  return prime_filters(std::move(a));
}

monotone_map dual_map_algebra(const dl_morphism& g,
                              const prime_filter_poset& pf_dom,
                              const prime_filter_poset& pf_cod) {
  const fin_dl& b = *g.dom;
  const poset& bc = b.carrier();
  std::vector<std::size_t> img(pf_cod.gens.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    // g^{-1}(up m) is a prime filter of B; its generator is the meet of
    // the preimage members
    std::size_t m = pf_cod.gens[i];
    std::size_t gen = b.top();
    bool empty = true;
    for (std::size_t x = 0; x < bc.size(); ++x)
      if (g.cod->carrier().le(m, g.map(x))) {
        gen = empty ? x : b.meet(gen, x);
        empty = false;
      }
    if (empty)
      fail(errc::internal, "inverse image of a prime filter is empty");
    auto it = std::find(pf_dom.gens.begin(), pf_dom.gens.end(), gen);
    if (it == pf_dom.gens.end())
      fail(errc::internal, "inverse image is not a prime filter");
    img[i] = std::size_t(it - pf_dom.gens.begin());
  }
  return monotone_map(pf_cod.pf, pf_dom.pf, std::move(img));
}

static void require_iso(const monotone_map& f, const char* what) {
  map_class c = classify_map(f);
  if (!c.iso) fail(errc::iso_failure, std::string(what) + " is not an iso");
}

monotone_map unit_space_iso(poset_ptr x, const limits& lim) {
  upset_lattice ux = dual_space(x, lim);
  prime_filter_poset pf = dual_algebra(ux.dl, lim);
  std::vector<std::size_t> img(x->size());
  for (std::size_t i = 0; i < x->size(); ++i) {
    // {U | x in U} is the principal filter at the upset ^x
    std::size_t gen = ux.index_of(x->up(i));
    auto it = std::find(pf.gens.begin(), pf.gens.end(), gen);
    if (it == pf.gens.end())
      fail(errc::iso_failure, "principal upset is not join-irreducible");
    img[i] = std::size_t(it - pf.gens.begin());
  }
  monotone_map unit(std::move(x), pf.pf, std::move(img));
  require_iso(unit, "unit at the poset");
  return unit;
}

monotone_map unit_algebra_iso(dl_ptr a, const limits& lim) {
  prime_filter_poset pf = dual_algebra(a, lim);
  upset_lattice up = dual_space(pf.pf, lim);
  std::vector<std::size_t> img(a->size());
  for (std::size_t e = 0; e < a->size(); ++e) {
    bitset mask(pf.gens.size());
    for (std::size_t f = 0; f < pf.gens.size(); ++f)
      if (pf.member(f, e)) mask.set(f);
    img[e] = up.index_of(mask);
  }
  monotone_map unit(a->carrier_ptr(), up.carrier, std::move(img));
  require_iso(unit, "unit at the lattice");
  std::string w;
  if (!is_dl_morphism(*a, *up.dl, unit, &w))
    fail(errc::iso_failure, "unit at the lattice: " + w);
  return unit;
}

duality_witness unit_isos(poset_ptr x, dl_ptr a, const limits& lim) {
  return {unit_space_iso(std::move(x), lim),
          unit_algebra_iso(std::move(a), lim)};
}

// --- relation duals, space -> algebra -------------------------------------

weak_rel dual_rel_formula(const weak_rel& r, const upset_lattice& ux,
                          const upset_lattice& uy) {
  std::size_t n = ux.upsets.size(), m = uy.upsets.size();
  std::vector<bitset> rows(n, bitset(m));
  for (std::size_t i = 0; i < n; ++i) {
    bitset img = r.image(ux.upsets[i]);
    for (std::size_t j = 0; j < m; ++j)
      if (img.subset_of(uy.upsets[j])) rows[i].set(j);
  }
  return weak_rel(ux.carrier, uy.carrier, std::move(rows));
}

weak_rel dual_rel_via_span(const weak_rel& r, const upset_lattice& ux,
                           const upset_lattice& uy, const limits& lim) {
  span g = graph(r);
  upset_lattice uw =
      upset_poset_of(g.left().dom_ptr(), lim.max_internal_upsets);
  monotone_map j = dual_map_space(g.left(), uw, ux);  // 2^p: Up(X) -> Up(W)
  monotone_map k = dual_map_space(g.right(), uw, uy); // 2^q: Up(Y) -> Up(W)
  return rel_of_cospan(cospan(std::move(j), std::move(k)));
}

weak_rel dual_rel_via_cospan(const weak_rel& r, const upset_lattice& ux,
                             const upset_lattice& uy, const limits& lim) {
  cospan c = collage(r);
  upset_lattice uc =
      upset_poset_of(c.left().cod_ptr(), lim.max_internal_upsets);
  monotone_map j = dual_map_space(c.left(), ux, uc);  // 2^j: Up(C) -> Up(X)
  monotone_map k = dual_map_space(c.right(), uy, uc); // 2^k: Up(C) -> Up(Y)
  return rel_of_span(span(std::move(j), std::move(k)));
}

// --- relation duals, algebra -> space -------------------------------------

weak_rel dual_rel_formula(const dl_rel& r, const prime_filter_poset& pa,
                          const prime_filter_poset& pb) {
  std::size_t n = pa.gens.size(), m = pb.gens.size();
  std::vector<bitset> rows(n, bitset(m));
  for (std::size_t x = 0; x < n; ++x) {
    bitset members(r.dom->size());
    for (std::size_t e = 0; e < r.dom->size(); ++e)
      if (pa.member(x, e)) members.set(e);
    bitset img = r.rel.image(members);
    for (std::size_t y = 0; y < m; ++y) {
      bool ok = true;
      img.for_each([&](std::size_t b) {
        if (!pb.member(y, b)) ok = false;
      });
      if (ok) rows[x].set(y);
    }
  }
  return weak_rel(pa.pf, pb.pf, std::move(rows));
}

weak_rel dual_rel_via_span(const dl_rel& r, const prime_filter_poset& pa,
                           const prime_filter_poset& pb, const limits& lim) {
  dl_span t = dl_tabulate(r);
  prime_filter_poset pw = dual_algebra(t.apex, lim);
  monotone_map j = dual_map_algebra(
      dl_morphism{t.apex, t.left_cod, t.carrier.left()}, pw, pa);
  monotone_map k = dual_map_algebra(
      dl_morphism{t.apex, t.right_cod, t.carrier.right()}, pw, pb);
  return rel_of_cospan(cospan(std::move(j), std::move(k)));
}

weak_rel dual_rel_via_cospan(const dl_rel& r, const prime_filter_poset& pa,
                             const prime_filter_poset& pb, const limits& lim) {
  dl_cospan q = dl_cocomma_via_duality(dl_tabulate(r), lim);
  prime_filter_poset pq = dual_algebra(q.coapex, lim);
  monotone_map j = dual_map_algebra(
      dl_morphism{q.left_dom, q.coapex, q.carrier.left()}, pa, pq);
  monotone_map k = dual_map_algebra(
      dl_morphism{q.right_dom, q.coapex, q.carrier.right()}, pb, pq);
  return rel_of_span(span(std::move(j), std::move(k)));
}

// --- (co)commas of DL spans ------------------------------------------------

dl_span dl_comma(const dl_cospan& c) {
  span carrier = comma(c.carrier);
  const fin_dl& a = *c.left_dom;
  const fin_dl& b = *c.right_dom;
  std::size_t m = b.size();
  std::vector<std::pair<std::size_t, std::size_t>> pts;
  std::vector<std::size_t> rank(a.size() * m, 0);
  for (std::size_t w = 0; w < carrier.apex().size(); ++w) {
    std::size_t x = carrier.left()(w), y = carrier.right()(w);
    rank[x * m + y] = w;
    pts.emplace_back(x, y);
  }
  std::size_t k = pts.size();
  std::vector<std::size_t> meet(k * k), join(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      meet[i * k + j] = rank[a.meet(pts[i].first, pts[j].first) * m +
                             b.meet(pts[i].second, pts[j].second)];
      join[i * k + j] = rank[a.join(pts[i].first, pts[j].first) * m +
                             b.join(pts[i].second, pts[j].second)];
    }
  dl_ptr apex = share(
      fin_dl::trusted(carrier.left().dom_ptr(), std::move(meet),
                      std::move(join), rank[a.bottom() * m + b.bottom()],
                      rank[a.top() * m + b.top()]));
  return make_dl_span(apex, c.left_dom, c.right_dom, std::move(carrier));
}

dl_cospan dl_cocomma_via_duality(const dl_span& s, const limits& lim) {
  prime_filter_poset pw = dual_algebra(s.apex, lim);
  prime_filter_poset pa = dual_algebra(s.left_cod, lim);
  prime_filter_poset pb = dual_algebra(s.right_cod, lim);
  monotone_map pf_p = dual_map_algebra(
      dl_morphism{s.apex, s.left_cod, s.carrier.left()}, pw, pa);
  monotone_map pf_q = dual_map_algebra(
      dl_morphism{s.apex, s.right_cod, s.carrier.right()}, pw, pb);
  span v = comma(cospan(std::move(pf_p), std::move(pf_q)));
  // dualize the comma apex back to a lattice
  upset_lattice uq = build_upset_lattice(v.left().dom_ptr(), true);
  if (uq.upsets.size() > lim.max_cocomma_lattice)
    fail(errc::size_guard,
         "cocomma lattice has " + std::to_string(uq.upsets.size()) +
             " elements > " + std::to_string(lim.max_cocomma_lattice));
  std::size_t nv = v.apex().size();
  auto leg = [&](const fin_dl& side, const prime_filter_poset& pf,
                 const monotone_map& proj) {
    std::vector<std::size_t> img(side.size());
    for (std::size_t e = 0; e < side.size(); ++e) {
      bitset mask(nv);
      for (std::size_t w = 0; w < nv; ++w)
        if (pf.member(proj(w), e)) mask.set(w);
      img[e] = uq.index_of(mask);
    }
    return monotone_map(side.carrier_ptr(), uq.carrier, std::move(img));
  };
  cospan carrier(leg(*s.left_cod, pa, v.left()),
                 leg(*s.right_cod, pb, v.right()));
  // the cocomma square is exact: both sides represent the same relation
  assert(rel_of_cospan(carrier) == rel_of_span(s.carrier));
  return make_dl_cospan(uq.dl, s.left_cod, s.right_cod, std::move(carrier));
}

monotone_map dl_cocomma_mediate(const dl_span& s, const dl_cospan& q,
                                const dl_cospan& cocone, const limits& lim) {
  // lax cocone check
  for (std::size_t w = 0; w < s.apex->size(); ++w)
    if (!cocone.coapex->carrier().le(cocone.carrier.left()(s.carrier.left()(w)),
                                     cocone.carrier.right()(s.carrier.right()(w))))
      fail(errc::not_lax_commuting,
           "cocone at apex element '" + s.apex->carrier().name(w) + "'");
  // dualize the cocone tip and land it in the comma apex V that produced q
  prime_filter_poset pw = dual_algebra(s.apex, lim);
  prime_filter_poset pa = dual_algebra(s.left_cod, lim);
  prime_filter_poset pb = dual_algebra(s.right_cod, lim);
  monotone_map pf_p = dual_map_algebra(
      dl_morphism{s.apex, s.left_cod, s.carrier.left()}, pw, pa);
  monotone_map pf_q = dual_map_algebra(
      dl_morphism{s.apex, s.right_cod, s.carrier.right()}, pw, pb);
  span v = comma(cospan(pf_p, pf_q));
  upset_lattice uq = build_upset_lattice(v.left().dom_ptr(), false);
  prime_filter_poset pc = dual_algebra(cocone.coapex, lim);
  monotone_map pf_j = dual_map_algebra(
      dl_morphism{cocone.left_dom, cocone.coapex, cocone.carrier.left()}, pa,
      pc);
  monotone_map pf_k = dual_map_algebra(
      dl_morphism{cocone.right_dom, cocone.coapex, cocone.carrier.right()},
      pb, pc);
  // z |-> (j'^{-1} z, k'^{-1} z) lands in V by the lax condition
  std::vector<std::size_t> into_v(pc.gens.size());
  for (std::size_t z = 0; z < pc.gens.size(); ++z) {
    std::size_t x = pf_j(z), y = pf_k(z);
    bool found = false;
    for (std::size_t w = 0; w < v.apex().size(); ++w)
      if (v.left()(w) == x && v.right()(w) == y) {
        into_v[z] = w;
        found = true;
        break;
      }
    if (!found) fail(errc::internal, "dualized cocone misses the comma apex");
  }
  // h: Up(V) -> C' through the unit iso of C'
  monotone_map unit = unit_algebra_iso(cocone.coapex, lim);
  std::vector<std::size_t> unit_inv(unit.cod().size());
  for (std::size_t e = 0; e < cocone.coapex->size(); ++e)
    unit_inv[unit(e)] = e;
  upset_lattice upc = build_upset_lattice(pc.pf, false);
  std::vector<std::size_t> img(uq.upsets.size());
  for (std::size_t i = 0; i < uq.upsets.size(); ++i) {
    bitset zmask(pc.gens.size());
    for (std::size_t z = 0; z < pc.gens.size(); ++z)
      if (uq.upsets[i].test(into_v[z])) zmask.set(z);
    img[i] = unit_inv[upc.index_of(zmask)];
  }
  return monotone_map(q.coapex->carrier_ptr(), cocone.coapex->carrier_ptr(),
                      std::move(img));
}

// --- odds and ends --------------------------------------------------------

bitset extend_upset_along_embedding(const monotone_map& f, const bitset& p) {
  if (!classify_map(f).embedding)
    fail(errc::not_an_embedding, "map does not reflect the order");
  const poset& x = f.dom();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (p.test(i) && !x.up(i).subset_of(p))
      fail(errc::type_mismatch, "given set is not an upset");
  bitset q(f.cod().size());
  p.for_each([&](std::size_t i) { q |= f.cod().up(f(i)); });
  assert(f.preimage(q) == p);
  return q;
}

roundtrip_report roundtrip_relation(const weak_rel& r, const limits& lim) {
  upset_lattice ux = dual_space(r.dom_ptr(), lim);
  upset_lattice uy = dual_space(r.cod_ptr(), lim);
  roundtrip_report rep{dual_rel_formula(r, ux, uy), {}, {}, false, ""};
  dl_rel d = make_dl_rel(ux.dl, uy.dl, rep.dual); // duals are DL relations
  prime_filter_poset pa = dual_algebra(ux.dl, lim);
  prime_filter_poset pb = dual_algebra(uy.dl, lim);
  rep.double_dual = dual_rel_formula(d, pa, pb);
  monotone_map ex = unit_space_iso(r.dom_ptr(), lim);
  monotone_map ey = unit_space_iso(r.cod_ptr(), lim);
  std::vector<bitset> rows(r.dom().size(), bitset(r.cod().size()));
  for (std::size_t x = 0; x < r.dom().size(); ++x)
    for (std::size_t y = 0; y < r.cod().size(); ++y)
      if (rep.double_dual.contains(ex(x), ey(y))) rows[x].set(y);
  rep.transported = weak_rel(r.dom_ptr(), r.cod_ptr(), std::move(rows));
  rep.equal = rep.transported == r;
  if (!rep.equal)
    for (std::size_t x = 0; x < r.dom().size() && rep.witness.empty(); ++x)
      for (std::size_t y = 0; y < r.cod().size(); ++y)
        if (rep.transported.contains(x, y) != r.contains(x, y)) {
          rep.witness = "(" + r.dom().name(x) + "," + r.cod().name(y) + ")";
          break;
        }
  return rep;
}

// --- extension preconditions ------------------------------------------------

void enumerate_posets(std::size_t n,
                      const std::function<void(const poset&)>& emit,
                      const limits& lim) {
  if (n > lim.max_enum_posets)
    fail(errc::size_guard, "enumerate_posets: n = " + std::to_string(n) +
                               " > " + std::to_string(lim.max_enum_posets));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  if (n == 0) {
    emit(poset());
    return;
  }
  // all strict relations as bit choices over off-diagonal cells, kept when
  // transitive and acyclic
  std::size_t cells = n * (n - 1);
  std::vector<std::pair<std::size_t, std::size_t>> cell;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) cell.emplace_back(i, j);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << cells); ++mask) {
    std::vector<bitset> rows(n, bitset(n));
    for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
    for (std::size_t c = 0; c < cells; ++c)
      if ((mask >> c) & 1) rows[cell[c].first].set(cell[c].second);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (!rows[i].test(j)) continue;
        if (i != j && rows[j].test(i)) ok = false; // 2-cycle
        else if (!rows[j].subset_of(rows[i])) ok = false; // not transitive
      }
    if (ok) emit(poset::from_order(names, std::move(rows)));
  }
}

// Pointer-keyed memo for the functor probes.  The precondition checks visit
// a handful of pinned base objects plus one fresh apex per generated square,
// so a small FIFO that keeps its keys alive turns the repeated on_map calls
// into one dual computation per distinct object.
namespace {
template <class V>
struct object_memo {
  std::vector<std::pair<poset_ptr, std::shared_ptr<const V>>> entries;
  std::shared_ptr<const V> find(const poset_ptr& p) const {
    for (auto& [k, v] : entries)
      if (k == p) return v;
    return nullptr;
  }
  void put(poset_ptr p, std::shared_ptr<const V> v) {
    if (entries.size() >= 64) entries.erase(entries.begin());
    entries.emplace_back(std::move(p), std::move(v));
  }
};
} // namespace

dual_functor space_functor(const limits& lim) {
  dual_functor f;
  f.name = "upsets";
  f.admits_object = [](const poset&) { return true; };
  f.admits_map = [](const monotone_map&) { return true; };
  f.on_object = [lim](const poset& p) {
    return *dual_space(share(poset(p)), lim).carrier;
  };
  // Order-only duals: nothing downstream of on_map reads the meet/join
  // tables, and skipping them makes the square sweeps tractable.
  auto memo = std::make_shared<object_memo<upset_lattice>>();
  auto dual_of = [lim, memo](const poset_ptr& p) {
    if (auto hit = memo->find(p)) return hit;
    if (p->size() > lim.max_dual_space)
      fail(errc::size_guard, "dual_space: |X| = " + std::to_string(p->size()) +
                                 " > " + std::to_string(lim.max_dual_space));
    auto u = std::make_shared<const upset_lattice>(upset_poset_of(
        p, std::size_t(1) << std::min<std::size_t>(p->size(), 63)));
    memo->put(p, u);
    return std::shared_ptr<const upset_lattice>(u);
  };
  f.on_map = [dual_of](const monotone_map& m) {
    auto ux = dual_of(m.dom_ptr());
    auto uy = dual_of(m.cod_ptr());
    return dual_map_space(m, *ux, *uy);
  };
  f.make_cocomma_square = [](const span& s) { return cocomma_square(s); };
  return f;
}

dual_functor algebra_functor(const limits& lim) {
  dual_functor f;
  f.name = "prime-filters";
  f.admits_object = [](const poset& p) {
    try {
      validate_dl(share(poset(p)));
      return true;
    } catch (const error&) {
      return false;
    }
  };
  f.admits_map = [](const monotone_map& m) {
    try {
      fin_dl a = validate_dl(m.dom_ptr());
      fin_dl b = validate_dl(m.cod_ptr());
      return is_dl_morphism(a, b, m);
    } catch (const error&) {
      return false;
    }
  };
  f.on_object = [lim](const poset& p) {
    return *dual_algebra(share(validate_dl(share(poset(p)))), lim).pf;
  };
  auto memo = std::make_shared<object_memo<prime_filter_poset>>();
  auto dual_of = [lim, memo](const poset_ptr& p) {
    if (auto hit = memo->find(p)) return hit;
    auto pf = std::make_shared<const prime_filter_poset>(
        dual_algebra(share(validate_dl(p)), lim));
    memo->put(p, pf);
    return std::shared_ptr<const prime_filter_poset>(pf);
  };
  f.on_map = [dual_of](const monotone_map& m) {
    auto pa = dual_of(m.dom_ptr());
    auto pb = dual_of(m.cod_ptr());
    return dual_map_algebra(dl_morphism{pa->algebra, pb->algebra, m}, *pa,
                            *pb);
  };
  f.make_cocomma_square = [lim](const span& s) {
    dl_ptr w = share(validate_dl(s.left().dom_ptr()));
    dl_ptr a = share(validate_dl(s.left().cod_ptr()));
    dl_ptr b = share(validate_dl(s.right().cod_ptr()));
    dl_span ds = make_dl_span(w, a, b, s);
    return square(s, dl_cocomma_via_duality(ds, lim).carrier);
  };
  return f;
}

static std::string describe(const monotone_map& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.dom().size(); ++i) {
    if (i) s += ",";
    s += m.dom().name(i) + ">" + m.cod().name(m(i));
  }
  return s + "]";
}

check_report check_extension_preconditions(const dual_functor& f,
                                           std::size_t max_size,
                                           const limits& lim) {
  check_report rep;
  std::vector<poset_ptr> objects;
  for (std::size_t n = 0; n <= max_size; ++n)
    enumerate_posets(n, [&](const poset& p) {
      if (f.admits_object(p)) objects.push_back(share(poset(p)));
    }, lim);

  // hom sets, computed once
  std::size_t k = objects.size();
  std::vector<std::vector<std::vector<monotone_map>>> hom(
      k, std::vector<std::vector<monotone_map>>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      enumerate_monotone_maps(
          *objects[a], *objects[b], [&](const std::vector<std::size_t>& img) {
            monotone_map m(objects[a], objects[b], img);
            if (f.admits_map(m)) hom[a][b].push_back(std::move(m));
          });

  check_entry adj{"duals-are-adjoint-pairs", "", true, ""};
  check_entry s2e{"surjections-to-embeddings", "", true, ""};
  check_entry e2s{"embeddings-to-surjections", "", true, ""};
  std::size_t n_maps = 0, n_surj = 0, n_emb = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (auto& m : hom[a][b]) {
        ++n_maps;
        monotone_map fm = f.on_map(m);
        std::string inst = "map " + describe(m);
        if (adj.pass) {
          try {
            monotone_map back =
                recover_map_from_adjunction(companion(fm), conjoint(fm));
            if (!(back == fm)) {
              adj.pass = false;
              adj.witness = inst + ": recovered map differs";
            }
          } catch (const error& e) {
            adj.pass = false;
            adj.witness = inst + ": " + std::string(e.what());
          }
        }
        map_class before = classify_map(m);
        map_class after = classify_map(fm);
        if (before.surjective) {
          ++n_surj;
          if (!after.embedding && s2e.pass) {
            s2e.pass = false;
            s2e.witness = inst;
          }
        }
        if (before.embedding) {
          ++n_emb;
          if (!after.surjective && e2s.pass) {
            e2s.pass = false;
            e2s.witness = inst;
          }
        }
      }
  adj.instance = std::to_string(n_maps) + " maps";
  s2e.instance = std::to_string(n_surj) + " surjections";
  e2s.instance = std::to_string(n_emb) + " embeddings";

  // exact squares: commas of every admitted cospan, cocommas of every
  // admitted span, pushed through the functor
  check_entry cme{"comma-squares-stay-exact", "", true, ""};
  check_entry cce{"cocomma-squares-stay-exact", "", true, ""};
  std::size_t n_comma = 0, n_cocomma = 0;
  auto image_square = [&](const square& sq) {
    // contravariance swaps the span and cospan
    span img_span(f.on_map(sq.outer().left()), f.on_map(sq.outer().right()));
    cospan img_cospan(f.on_map(sq.inner().left()),
                      f.on_map(sq.inner().right()));
    return square(std::move(img_span), std::move(img_cospan));
  };
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) {
        for (auto& j : hom[a][c])
          for (auto& kk : hom[b][c]) {
            if (!cme.pass) break;
            ++n_comma;
            square sq = comma_square(cospan(j, kk));
            exact_result ex = is_exact(image_square(sq));
            if (!ex.exact) {
              cme.pass = false;
              cme.witness = "cospan " + describe(j) + " " + describe(kk) +
                            ": " + ex.witness;
            }
          }
        for (auto& p : hom[c][a])
          for (auto& q : hom[c][b]) {
            if (!cce.pass) break;
            ++n_cocomma;
            square sq = f.make_cocomma_square(span(p, q));
            exact_result ex = is_exact(image_square(sq));
            if (!ex.exact) {
              cce.pass = false;
              cce.witness = "span " + describe(p) + " " + describe(q) + ": " +
                            ex.witness;
            }
          }
      }
  cme.instance = std::to_string(n_comma) + " comma squares";
  cce.instance = std::to_string(n_cocomma) + " cocomma squares";

  rep.entries.push_back(adj);
  rep.entries.push_back(s2e);
  rep.entries.push_back(e2s);
  rep.entries.push_back(cme);
  rep.entries.push_back(cce);
  return rep;
}

} // namespace ordrel
