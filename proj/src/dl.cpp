#include "ordrel/dl.hpp"

#include <cassert>

namespace ordrel {

fin_dl fin_dl::trusted(poset_ptr carrier, std::vector<std::size_t> meet,
                       std::vector<std::size_t> join, std::size_t bottom,
                       std::size_t top) {
  fin_dl a;
  a.carrier_ = std::move(carrier);
  a.meet_ = std::move(meet);
  a.join_ = std::move(join);
  a.bottom_ = bottom;
  a.top_ = top;
  assert(a.meet_.size() == a.size() * a.size());
  assert(a.join_.size() == a.size() * a.size());
  return a;
}

fin_dl validate_dl(poset_ptr carrier) {
  const poset& p = *carrier;
  std::size_t n = p.size();
  if (n == 0) fail(errc::empty_lattice, "a bounded lattice is nonempty");
  std::vector<std::size_t> meet(n * n), join(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      bitset lower = p.down(a) & p.down(b);
      bitset upper = p.up(a) & p.up(b);
      std::size_t m = n, j = n;
      lower.for_each([&](std::size_t c) {
        if (lower.subset_of(p.down(c))) m = c;
      });
      upper.for_each([&](std::size_t c) {
        if (upper.subset_of(p.up(c))) j = c;
      });
      if (m == n)
        fail(errc::not_a_lattice,
             "no meet of " + p.name(a) + " and " + p.name(b));
      if (j == n)
        fail(errc::not_a_lattice,
             "no join of " + p.name(a) + " and " + p.name(b));
      meet[a * n + b] = meet[b * n + a] = m;
      join[a * n + b] = join[b * n + a] = j;
    }
  // bounds exist once binary meets/joins do (finite nonempty)
  std::size_t bottom = 0, top = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bottom = meet[bottom * n + a];
    top = join[top * n + a];
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet[a * n + join[b * n + c]] !=
            join[meet[a * n + b] * n + meet[a * n + c]])
          fail(errc::not_distributive,
               p.name(a) + " /\\ (" + p.name(b) + " \\/ " + p.name(c) +
                   ") != (" + p.name(a) + " /\\ " + p.name(b) + ") \\/ (" +
                   p.name(a) + " /\\ " + p.name(c) + ")");
  return fin_dl::trusted(carrier, std::move(meet), std::move(join), bottom,
                         top);
}

bool is_dl_morphism(const fin_dl& dom, const fin_dl& cod,
                    const monotone_map& f, std::string* witness) {
  auto report = [&](const std::string& w) {
    if (witness) *witness = w;
    return false;
  };
  if (f(dom.bottom()) != cod.bottom()) return report("bottom not preserved");
  if (f(dom.top()) != cod.top()) return report("top not preserved");
  std::size_t n = dom.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (f(dom.meet(a, b)) != cod.meet(f(a), f(b)))
        return report("meet of " + dom.carrier().name(a) + "," +
                      dom.carrier().name(b) + " not preserved");
      if (f(dom.join(a, b)) != cod.join(f(a), f(b)))
        return report("join of " + dom.carrier().name(a) + "," +
                      dom.carrier().name(b) + " not preserved");
    }
  return true;
}

dl_morphism validate_dl_morphism(dl_ptr dom, dl_ptr cod, monotone_map f) {
  if (!(f.dom() == dom->carrier()) || !(f.cod() == cod->carrier()))
    fail(errc::type_mismatch, "map endpoints are not the given lattices");
  std::string w;
  if (!is_dl_morphism(*dom, *cod, f, &w)) fail(errc::not_a_homomorphism, w);
  return {std::move(dom), std::move(cod), std::move(f)};
}

prime_filter_poset prime_filters(dl_ptr a) {
  const poset& p = a->carrier();
  std::size_t n = p.size();
  std::vector<std::size_t> gens;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == a->bottom()) continue;
    // join-irreducible iff exactly one lower cover
    std::size_t covers = 0;
    p.down(j).for_each([&](std::size_t k) {
      if (k == j) return;
      bitset between = p.up(k) & p.down(j);
      between.reset(k);
      between.reset(j);
      if (between.none()) ++covers;
    });
    if (covers == 1) gens.push_back(j);
  }
  std::vector<std::string> names;
  names.reserve(gens.size());
  for (auto g : gens) names.push_back("↑" + p.name(g));
  std::vector<bitset> rows(gens.size(), bitset(gens.size()));
  for (std::size_t x = 0; x < gens.size(); ++x)
    for (std::size_t y = 0; y < gens.size(); ++y)
      if (p.le(gens[y], gens[x])) rows[x].set(y); // inclusion reverses
  return {std::move(a), std::move(gens),
          share(poset::from_order(std::move(names), std::move(rows)))};
}

bool is_dl_relation(const fin_dl& dom, const fin_dl& cod, const weak_rel& r,
                    std::string* witness) {
  auto report = [&](const std::string& w) {
    if (witness) *witness = w;
    return false;
  };
  if (!(r.dom() == dom.carrier()) || !(r.cod() == cod.carrier()))
    return report("relation endpoints are not the given lattices");
  if (!r.contains(dom.bottom(), cod.bottom())) return report("missing (0,0)");
  if (!r.contains(dom.top(), cod.top())) return report("missing (1,1)");
  std::vector<std::pair<std::size_t, std::size_t>> pts;
  for (std::size_t x = 0; x < r.dom().size(); ++x)
    r.row(x).for_each([&](std::size_t y) { pts.emplace_back(x, y); });
  for (auto& [a, b] : pts)
    for (auto& [a2, b2] : pts) {
      if (!r.contains(dom.meet(a, a2), cod.meet(b, b2)))
        return report("not closed under meet at (" + dom.carrier().name(a) +
                      "," + cod.carrier().name(b) + ") and (" +
                      dom.carrier().name(a2) + "," + cod.carrier().name(b2) +
                      ")");
      if (!r.contains(dom.join(a, a2), cod.join(b, b2)))
        return report("not closed under join at (" + dom.carrier().name(a) +
                      "," + cod.carrier().name(b) + ") and (" +
                      dom.carrier().name(a2) + "," + cod.carrier().name(b2) +
                      ")");
    }
  return true;
}

dl_rel make_dl_rel(dl_ptr dom, dl_ptr cod, weak_rel r) {
  std::string w;
  if (!is_dl_relation(*dom, *cod, r, &w)) fail(errc::not_a_dl_relation, w);
  return {std::move(dom), std::move(cod), std::move(r)};
}

/// complement table: comp[a] with a /\ comp[a] = 0, a \/ comp[a] = 1
static std::vector<std::size_t> complements(const fin_dl& a) {
  std::size_t n = a.size();
  std::vector<std::size_t> comp(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (a.meet(x, y) == a.bottom() && a.join(x, y) == a.top()) {
        comp[x] = y;
        break; // complements in a DL are unique
      }
    if (comp[x] == n)
      fail(errc::not_complemented,
           "'" + a.carrier().name(x) + "' has no complement");
  }
  return comp;
}

dl_rel dl_relation_closure(dl_ptr dom, dl_ptr cod,
                           std::vector<bitset> seed_rows,
                           bool with_complements) {
  std::size_t n = dom->size();
  if (seed_rows.size() != n)
    fail(errc::type_mismatch, "seed row count != domain size");
  std::vector<std::size_t> comp_a, comp_b;
  if (with_complements) {
    comp_a = complements(*dom);
    comp_b = complements(*cod);
  }
  std::vector<bitset> rows = std::move(seed_rows);
  rows[dom->bottom()].set(cod->bottom());
  rows[dom->top()].set(cod->top());
  bool changed = true;
  while (changed) {
    changed = false;
    // weakening step
    weak_rel closed = weakening_closure(dom->carrier_ptr(),
                                        cod->carrier_ptr(), rows);
    for (std::size_t x = 0; x < n; ++x)
      if (!(closed.row(x) == rows[x])) {
        rows[x] = closed.row(x);
        changed = true;
      }
    // componentwise meet/join (and optionally complement) step
    std::vector<std::pair<std::size_t, std::size_t>> pts;
    for (std::size_t x = 0; x < n; ++x)
      rows[x].for_each([&](std::size_t y) { pts.emplace_back(x, y); });
    auto add = [&](std::size_t x, std::size_t y) {
      if (!rows[x].test(y)) {
        rows[x].set(y);
        changed = true;
      }
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (with_complements)
        add(comp_a[pts[i].first], comp_b[pts[i].second]);
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        add(dom->meet(pts[i].first, pts[j].first),
            cod->meet(pts[i].second, pts[j].second));
        add(dom->join(pts[i].first, pts[j].first),
            cod->join(pts[i].second, pts[j].second));
      }
    }
  }
  weak_rel closed(dom->carrier_ptr(), cod->carrier_ptr(), std::move(rows));
  return make_dl_rel(std::move(dom), std::move(cod), std::move(closed));
}

dl_span make_dl_span(dl_ptr apex, dl_ptr left_cod, dl_ptr right_cod, span s) {
  validate_dl_morphism(apex, left_cod, s.left());
  validate_dl_morphism(apex, right_cod, s.right());
  return {std::move(apex), std::move(left_cod), std::move(right_cod),
          std::move(s)};
}

dl_cospan make_dl_cospan(dl_ptr coapex, dl_ptr left_dom, dl_ptr right_dom,
                         cospan c) {
  validate_dl_morphism(left_dom, coapex, c.left());
  validate_dl_morphism(right_dom, coapex, c.right());
  return {std::move(coapex), std::move(left_dom), std::move(right_dom),
          std::move(c)};
}

dl_span dl_tabulate(const dl_rel& r) {
  span carrier = graph(r.rel);
  const poset& a = r.dom->carrier();
  const poset& b = r.cod->carrier();
  std::size_t m = b.size();
  // rank of pair (x,y) in the row-major pair list = apex element index
  std::vector<std::size_t> rank(a.size() * m);
  std::vector<std::pair<std::size_t, std::size_t>> pts;
  for (std::size_t x = 0; x < a.size(); ++x)
    r.rel.row(x).for_each([&](std::size_t y) {
      rank[x * m + y] = pts.size();
      pts.emplace_back(x, y);
    });
  std::size_t k = pts.size();
  std::vector<std::size_t> meet(k * k), join(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t mx = r.dom->meet(pts[i].first, pts[j].first);
      std::size_t my = r.cod->meet(pts[i].second, pts[j].second);
      std::size_t jx = r.dom->join(pts[i].first, pts[j].first);
      std::size_t jy = r.cod->join(pts[i].second, pts[j].second);
      // closure under componentwise meet/join makes these hit pairs of r
      assert(r.rel.contains(mx, my) && r.rel.contains(jx, jy));
      meet[i * k + j] = rank[mx * m + my];
      join[i * k + j] = rank[jx * m + jy];
    }
  dl_ptr apex = share(fin_dl::trusted(
      carrier.left().dom_ptr(), std::move(meet), std::move(join),
      rank[r.dom->bottom() * m + r.cod->bottom()],
      rank[r.dom->top() * m + r.cod->top()]));
  return make_dl_span(apex, r.dom, r.cod, std::move(carrier));
}

} // namespace ordrel
