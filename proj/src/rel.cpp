#include "ordrel/rel.hpp"

#include <cstdlib>

namespace ordrel {

limits limits_for_size(std::size_t n) {
  limits l;
  if (n == 0) return l;
  l.max_dual_space = n;
  l.max_hom_product = n * n;
  l.max_dual_algebra = n >= 20 ? (std::size_t(1) << 20) : (std::size_t(1) << n);
  l.max_enum_posets = n < 5 ? n : 6;
  l.max_internal_upsets = l.max_dual_algebra;
  return l;
}

const limits& default_limits() {
  static const limits lim = [] {
    if (const char* env = std::getenv("ORDREL_MAX_SIZE"))
      return limits_for_size(std::strtoull(env, nullptr, 10));
    return limits{};
  }();
  return lim;
}

static void check_parallel(const weak_rel& r, const weak_rel& s) {
  if (!(r.dom() == s.dom()) || !(r.cod() == s.cod()))
    fail(errc::composition_mismatch, "relations are not parallel");
}

weak_rel::weak_rel(poset_ptr dom, poset_ptr cod, std::vector<bitset> rows)
    : dom_(std::move(dom)), cod_(std::move(cod)), rows_(std::move(rows)) {
  if (rows_.size() != dom_->size())
    fail(errc::type_mismatch, "relation row count != domain size");
  for (auto& r : rows_)
    if (r.size() != cod_->size())
      fail(errc::type_mismatch, "relation row width != codomain size");
  std::string w;
  if (!is_weakening_closed(*dom_, *cod_, rows_, &w))
    fail(errc::not_weakening_closed, w);
}

bitset weak_rel::image(const bitset& s) const {
  bitset out(cod_->size());
  s.for_each([&](std::size_t a) { out |= rows_[a]; });
  return out;
}

std::size_t weak_rel::pair_count() const {
  std::size_t c = 0;
  for (auto& r : rows_) c += r.count();
  return c;
}

bool weak_rel::subset_of(const weak_rel& o) const {
  check_parallel(*this, o);
  for (std::size_t a = 0; a < rows_.size(); ++a)
    if (!rows_[a].subset_of(o.rows_[a])) return false;
  return true;
}

bitset weak_rel::product_mask() const {
  std::size_t m = cod_->size();
  bitset out(dom_->size() * m);
  for (std::size_t a = 0; a < rows_.size(); ++a)
    rows_[a].for_each([&](std::size_t b) { out.set(a * m + b); });
  return out;
}

bool is_weakening_closed(const poset& dom, const poset& cod,
                         const std::vector<bitset>& rows,
                         std::string* witness) {
  std::size_t n = dom.size();
  // T(a) = up-closure of row(a); the closure's row at a' is the union of
  // T(a) over all a >= a'
  std::vector<bitset> t(n, bitset(cod.size()));
  for (std::size_t a = 0; a < n; ++a)
    rows[a].for_each([&](std::size_t b) { t[a] |= cod.up(b); });
  for (std::size_t a2 = 0; a2 < n; ++a2) {
    bitset closed(cod.size());
    dom.up(a2).for_each([&](std::size_t a) { closed |= t[a]; });
    if (!(closed == rows[a2])) {
      if (witness) {
        std::size_t b2 = (closed - rows[a2]).first();
        *witness =
            "missing (" + dom.name(a2) + "," + cod.name(b2) + ")";
      }
      return false;
    }
  }
  return true;
}

weak_rel weakening_closure(poset_ptr dom, poset_ptr cod,
                           std::vector<bitset> seed) {
  std::size_t n = dom->size();
  // T(a) = up-closure of row(a); closure row(a') = union of T(a) over a >= a'
  std::vector<bitset> t(n, bitset(cod->size()));
  for (std::size_t a = 0; a < n; ++a)
    seed[a].for_each([&](std::size_t b) { t[a] |= cod->up(b); });
  std::vector<bitset> rows(n, bitset(cod->size()));
  for (std::size_t a2 = 0; a2 < n; ++a2)
    dom->up(a2).for_each([&](std::size_t a) { rows[a2] |= t[a]; });
  return weak_rel(std::move(dom), std::move(cod), std::move(rows));
}

weak_rel rel_from_pairs(
    poset_ptr dom, poset_ptr cod,
    const std::vector<std::pair<std::string, std::string>>& pairs,
    bool close) {
  std::vector<bitset> rows(dom->size(), bitset(cod->size()));
  for (auto& [a, b] : pairs) {
    auto ia = dom->index_of(a);
    if (!ia) fail(errc::unknown_element, "'" + a + "' not in domain");
    auto ib = cod->index_of(b);
    if (!ib) fail(errc::unknown_element, "'" + b + "' not in codomain");
    rows[*ia].set(*ib);
  }
  if (close) return weakening_closure(std::move(dom), std::move(cod), std::move(rows));
  return weak_rel(std::move(dom), std::move(cod), std::move(rows));
}

weak_rel rel_from_mask(poset_ptr dom, poset_ptr cod, const bitset& mask) {
  std::size_t m = cod->size();
  std::vector<bitset> rows(dom->size(), bitset(m));
  mask.for_each([&](std::size_t k) { rows[k / m].set(k % m); });
  return weak_rel(std::move(dom), std::move(cod), std::move(rows));
}

weak_rel identity_rel(poset_ptr a) {
  std::vector<bitset> rows;
  rows.reserve(a->size());
  for (std::size_t i = 0; i < a->size(); ++i) rows.push_back(a->up(i));
  return weak_rel(a, a, std::move(rows));
}

weak_rel empty_rel(poset_ptr dom, poset_ptr cod) {
  std::vector<bitset> rows(dom->size(), bitset(cod->size()));
  return weak_rel(std::move(dom), std::move(cod), std::move(rows));
}

weak_rel total_rel(poset_ptr dom, poset_ptr cod) {
  bitset full(cod->size());
  full.set_all();
  std::vector<bitset> rows(dom->size(), full);
  return weak_rel(std::move(dom), std::move(cod), std::move(rows));
}

weak_rel compose_rel(const weak_rel& r, const weak_rel& s) {
  if (!(r.cod() == s.dom()))
    fail(errc::composition_mismatch, "cod of first != dom of second");
  std::vector<bitset> rows(r.dom().size(), bitset(s.cod().size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    r.row(a).for_each([&](std::size_t b) { rows[a] |= s.row(b); });
  return weak_rel(r.dom_ptr(), s.cod_ptr(), std::move(rows));
}

weak_rel rel_union(const weak_rel& r, const weak_rel& s) {
  check_parallel(r, s);
  std::vector<bitset> rows = r.rows();
  for (std::size_t a = 0; a < rows.size(); ++a) rows[a] |= s.row(a);
  return weak_rel(r.dom_ptr(), r.cod_ptr(), std::move(rows));
}

weak_rel rel_intersection(const weak_rel& r, const weak_rel& s) {
  check_parallel(r, s);
  std::vector<bitset> rows = r.rows();
  for (std::size_t a = 0; a < rows.size(); ++a) rows[a] &= s.row(a);
  return weak_rel(r.dom_ptr(), r.cod_ptr(), std::move(rows));
}

weak_rel companion(const monotone_map& f) {
  std::vector<bitset> rows;
  rows.reserve(f.dom().size());
  for (std::size_t a = 0; a < f.dom().size(); ++a)
    rows.push_back(f.cod().up(f(a)));
  return weak_rel(f.dom_ptr(), f.cod_ptr(), std::move(rows));
}

weak_rel conjoint(const monotone_map& f) {
  std::vector<bitset> rows(f.cod().size(), bitset(f.dom().size()));
  for (std::size_t b = 0; b < f.cod().size(); ++b)
    for (std::size_t a = 0; a < f.dom().size(); ++a)
      if (f.cod().le(b, f(a))) rows[b].set(a);
  return weak_rel(f.cod_ptr(), f.dom_ptr(), std::move(rows));
}

monotone_map recover_map_from_adjunction(const weak_rel& r,
                                         const weak_rel& s) {
  if (!(r.cod() == s.dom()) || !(r.dom() == s.cod()))
    fail(errc::composition_mismatch, "adjoint pair endpoints do not match");
  const poset_ptr& a = r.dom_ptr();
  const poset_ptr& b = r.cod_ptr();
  weak_rel unit = compose_rel(r, s);   // A -|-> A
  weak_rel counit = compose_rel(s, r); // B -|-> B
  if (!identity_rel(a).subset_of(unit))
    fail(errc::not_adjoint, "unit fails: Id_A is not below s.r");
  if (!counit.subset_of(identity_rel(b)))
    fail(errc::not_adjoint, "counit fails: r.s is not below Id_B");
  std::vector<std::size_t> img(a->size());
  for (std::size_t x = 0; x < a->size(); ++x) {
    // r(x,-) /\ s(-,x)
    bitset cand = r.row(x);
    bitset scol(b->size());
    for (std::size_t y = 0; y < b->size(); ++y)
      if (s.contains(y, x)) scol.set(y);
    cand &= scol;
    if (cand.count() != 1)
      fail(errc::not_adjoint,
           "no unique value at '" + a->name(x) + "'"); // unreachable if laws hold
    img[x] = cand.first();
  }
  monotone_map f(a, b, std::move(img));
  if (!(companion(f) == r) || !(conjoint(f) == s))
    fail(errc::not_adjoint, "pair is not (f_*, f^*) of any monotone f");
  return f;
}

adjoint_criteria surjection_embedding_criteria(const monotone_map& f) {
  adjoint_criteria c;
  weak_rel lower = companion(f), upper = conjoint(f);
  c.surjection = compose_rel(upper, lower) == identity_rel(f.cod_ptr());
  c.embedding = compose_rel(lower, upper) == identity_rel(f.dom_ptr());
  return c;
}

std::vector<weak_rel> all_relations(poset_ptr dom, poset_ptr cod,
                                    const limits& lim) {
  std::size_t cells = dom->size() * cod->size();
  if (cells > lim.max_hom_product)
    fail(errc::size_guard, "hom poset has " + std::to_string(cells) +
                               " cells > " +
                               std::to_string(lim.max_hom_product));
  poset prod = *product(share(opposite(*dom)), cod).prod;
  std::vector<weak_rel> out;
  enumerate_upsets(prod, [&](const bitset& mask) {
    out.push_back(rel_from_mask(dom, cod, mask));
  });
  return out;
}

} // namespace ordrel
