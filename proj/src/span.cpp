#include "ordrel/span.hpp"

namespace ordrel {

span::span(monotone_map left, monotone_map right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_.dom() == right_.dom()))
    fail(errc::type_mismatch, "span legs have different apexes");
}

cospan::cospan(monotone_map left, monotone_map right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_.cod() == right_.cod()))
    fail(errc::type_mismatch, "cospan legs have different coapexes");
}

square::square(span s, cospan c) : span_(std::move(s)), cospan_(std::move(c)) {
  const monotone_map &p = span_.left(), &q = span_.right();
  const monotone_map &j = cospan_.left(), &k = cospan_.right();
  if (!(p.cod() == j.dom()) || !(q.cod() == k.dom()))
    fail(errc::type_mismatch, "square boundary does not match");
  for (std::size_t w = 0; w < span_.apex().size(); ++w)
    if (!cospan_.coapex().le(j(p(w)), k(q(w))))
      fail(errc::not_lax_commuting,
           "at apex element '" + span_.apex().name(w) + "'");
}

weak_rel rel_of_span(const span& s) {
  const poset& a = s.left().cod();
  const poset& b = s.right().cod();
  std::vector<bitset> rows(a.size(), bitset(b.size()));
  for (std::size_t w = 0; w < s.apex().size(); ++w) {
    const bitset& ups = b.up(s.right()(w));
    a.down(s.left()(w)).for_each([&](std::size_t x) { rows[x] |= ups; });
  }
  return weak_rel(s.left().cod_ptr(), s.right().cod_ptr(), std::move(rows));
}

weak_rel rel_of_cospan(const cospan& c) {
  const poset& a = c.left().dom();
  const poset& b = c.right().dom();
  std::vector<bitset> rows(a.size(), bitset(b.size()));
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y)
      if (c.coapex().le(c.left()(x), c.right()(y))) rows[x].set(y);
  return weak_rel(c.left().dom_ptr(), c.right().dom_ptr(), std::move(rows));
}

// sub-poset of A x B on an explicit pair list (row-major order), with
// projections
static span pair_span(poset_ptr a, poset_ptr b,
                      const std::vector<std::pair<std::size_t, std::size_t>>& pts) {
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
  auto apex = share(poset::from_order(std::move(names), std::move(rows)));
  std::vector<std::size_t> pl(pts.size()), pr(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    pl[i] = pts[i].first;
    pr[i] = pts[i].second;
  }
  return span(monotone_map(apex, std::move(a), std::move(pl)),
              monotone_map(apex, std::move(b), std::move(pr)));
}

span graph(const weak_rel& r) {
  std::vector<std::pair<std::size_t, std::size_t>> pts;
  for (std::size_t x = 0; x < r.dom().size(); ++x)
    r.row(x).for_each([&](std::size_t y) { pts.emplace_back(x, y); });
  return pair_span(r.dom_ptr(), r.cod_ptr(), pts);
}

cospan collage(const weak_rel& r) {
  const poset& a = r.dom();
  const poset& b = r.cod();
  std::size_t n = a.size(), m = b.size();
  std::vector<std::string> names;
  names.reserve(n + m);
  for (std::size_t x = 0; x < n; ++x) names.push_back("L:" + a.name(x));
  for (std::size_t y = 0; y < m; ++y) names.push_back("R:" + b.name(y));
  std::vector<bitset> rows(n + m, bitset(n + m));
  // L-part keeps the A order and points into R via the relation; the result
  // is already transitive because r is weakening closed
  for (std::size_t x = 0; x < n; ++x) {
    a.up(x).for_each([&](std::size_t x2) { rows[x].set(x2); });
    r.row(x).for_each([&](std::size_t y) { rows[x].set(n + y); });
  }
  for (std::size_t y = 0; y < m; ++y)
    b.up(y).for_each([&](std::size_t y2) { rows[n + y].set(n + y2); });
  auto c = share(poset::from_order(std::move(names), std::move(rows)));
  std::vector<std::size_t> jl(n), kr(m);
  for (std::size_t x = 0; x < n; ++x) jl[x] = x;
  for (std::size_t y = 0; y < m; ++y) kr[y] = n + y;
  return cospan(monotone_map(r.dom_ptr(), c, std::move(jl)),
                monotone_map(r.cod_ptr(), c, std::move(kr)));
}

span comma(const cospan& c) {
  const poset& a = c.left().dom();
  const poset& b = c.right().dom();
  std::vector<std::pair<std::size_t, std::size_t>> pts;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y)
      if (c.coapex().le(c.left()(x), c.right()(y))) pts.emplace_back(x, y);
  return pair_span(c.left().dom_ptr(), c.right().dom_ptr(), pts);
}

cospan cocomma(const span& s) {
  const poset& a = s.left().cod();
  const poset& b = s.right().cod();
  std::size_t n = a.size(), m = b.size();
  std::vector<std::string> names;
  names.reserve(n + m);
  for (std::size_t x = 0; x < n; ++x) names.push_back("L:" + a.name(x));
  for (std::size_t y = 0; y < m; ++y) names.push_back("R:" + b.name(y));
  std::vector<bitset> rows(n + m, bitset(n + m));
  for (std::size_t x = 0; x < n; ++x)
    a.up(x).for_each([&](std::size_t x2) { rows[x].set(x2); });
  for (std::size_t y = 0; y < m; ++y)
    b.up(y).for_each([&](std::size_t y2) { rows[n + y].set(n + y2); });
  for (std::size_t w = 0; w < s.apex().size(); ++w)
    rows[s.left()(w)].set(n + s.right()(w));
  preorder_closure(rows);
  reflection refl = poset_reflection(names, rows);
  std::vector<std::size_t> jl(n), kr(m);
  for (std::size_t x = 0; x < n; ++x) jl[x] = refl.cls[x];
  for (std::size_t y = 0; y < m; ++y) kr[y] = refl.cls[n + y];
  return cospan(monotone_map(s.left().cod_ptr(), refl.quotient, std::move(jl)),
                monotone_map(s.right().cod_ptr(), refl.quotient, std::move(kr)));
}

monotone_map coinserter(const monotone_map& f, const monotone_map& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    fail(errc::type_mismatch, "coinserter needs a parallel pair");
  const poset& y = f.cod();
  std::vector<bitset> rows;
  rows.reserve(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) rows.push_back(y.up(i));
  for (std::size_t x = 0; x < f.dom().size(); ++x) rows[f(x)].set(g(x));
  preorder_closure(rows);
  reflection refl = poset_reflection(y.names(), rows);
  return monotone_map(f.cod_ptr(), refl.quotient, refl.cls);
}

monotone_map inserter(const monotone_map& j, const monotone_map& k) {
  if (!(j.dom() == k.dom()) || !(j.cod() == k.cod()))
    fail(errc::type_mismatch, "inserter needs a parallel pair");
  const poset& x = j.dom();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (j.cod().le(j(i), k(i))) keep.push_back(i);
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (auto i : keep) names.push_back(x.name(i));
  std::vector<bitset> rows(keep.size(), bitset(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t l = 0; l < keep.size(); ++l)
      if (x.le(keep[i], keep[l])) rows[i].set(l);
  auto sub = share(poset::from_order(std::move(names), std::move(rows)));
  return monotone_map(sub, j.dom_ptr(), std::move(keep));
}

exact_result is_exact(const square& sq) {
  weak_rel inner = rel_of_span(sq.inner());
  weak_rel outer = rel_of_cospan(sq.outer());
  exact_result res;
  res.exact = inner == outer;
  if (!res.exact) {
    for (std::size_t x = 0; x < inner.dom().size() && res.witness.empty(); ++x)
      for (std::size_t y = 0; y < inner.cod().size(); ++y)
        if (inner.contains(x, y) != outer.contains(x, y)) {
          res.witness = "(" + inner.dom().name(x) + "," + inner.cod().name(y) +
                        ") " +
                        (outer.contains(x, y) ? "has no span witness"
                                              : "missing from cospan side");
          break;
        }
  }
  return res;
}

square comma_square(const cospan& c) { return square(comma(c), c); }

square cocomma_square(const span& s) { return square(s, cocomma(s)); }

span_class classify_span(const span& s) {
  weak_rel r = rel_of_span(s);
  // rank of each pair of r in row-major order = index in graph(r)'s apex
  std::size_t m = r.cod().size();
  std::vector<std::size_t> rank(r.dom().size() * m, 0);
  std::size_t cnt = 0;
  for (std::size_t x = 0; x < r.dom().size(); ++x)
    r.row(x).for_each([&](std::size_t y) { rank[x * m + y] = cnt++; });
  // canonical comparison w |-> (p(w), q(w))
  std::vector<std::size_t> to(s.apex().size());
  bitset hit(cnt);
  for (std::size_t w = 0; w < to.size(); ++w) {
    to[w] = rank[s.left()(w) * m + s.right()(w)];
    hit.set(to[w]);
  }
  span_class out;
  out.weakening_closed = hit.count() == cnt;
  out.embedding = true;
  for (std::size_t w = 0; w < to.size() && out.embedding; ++w)
    for (std::size_t v = 0; v < to.size(); ++v) {
      // u(w) <= u(v) in the graph apex means componentwise order of images
      bool img_le = r.dom().le(s.left()(w), s.left()(v)) &&
                    r.cod().le(s.right()(w), s.right()(v));
      if (img_le && !s.apex().le(w, v)) {
        out.embedding = false;
        break;
      }
    }
  out.graph = out.weakening_closed && out.embedding;
  return out;
}

cospan_class classify_cospan(const cospan& c) {
  weak_rel r = rel_of_cospan(c);
  cospan co = collage(r);
  // canonical comparison L:a |-> j(a), R:b |-> k(b) from the collage to C
  std::size_t n = r.dom().size();
  std::size_t total = n + r.cod().size();
  std::vector<std::size_t> to(total);
  for (std::size_t x = 0; x < n; ++x) to[x] = c.left()(x);
  for (std::size_t y = 0; y < r.cod().size(); ++y) to[n + y] = c.right()(y);
  const poset& h = co.coapex();
  cospan_class out;
  bitset hit(c.coapex().size());
  for (auto t : to) hit.set(t);
  out.onto = hit.count() == c.coapex().size();
  out.bipartite = true;
  for (std::size_t u = 0; u < total && out.bipartite; ++u)
    for (std::size_t v = 0; v < total; ++v)
      if (c.coapex().le(to[u], to[v]) && !h.le(u, v)) {
        out.bipartite = false;
        break;
      }
  out.collage = out.bipartite && out.onto;
  return out;
}

span compose_spans(const span& s1, const span& s2) {
  if (!(s1.right().cod() == s2.left().cod()))
    fail(errc::composition_mismatch, "spans do not share a middle object");
  span mid = comma(cospan(s1.right(), s2.left()));
  return span(compose(s1.left(), mid.left()),
              compose(s2.right(), mid.right()));
}

cospan compose_cospans(const cospan& c1, const cospan& c2) {
  if (!(c1.right().dom() == c2.left().dom()))
    fail(errc::composition_mismatch, "cospans do not share a middle object");
  cospan mid = cocomma(span(c1.right(), c2.left()));
  return cospan(compose(mid.left(), c1.left()),
                compose(mid.right(), c2.right()));
}

} // namespace ordrel
