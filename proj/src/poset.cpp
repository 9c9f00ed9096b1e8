#include "ordrel/poset.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ordrel {

poset poset::from_order(std::vector<std::string> names,
                        std::vector<bitset> up) {
  poset p;
  std::size_t n = names.size();
  assert(up.size() == n);
  p.names_ = std::move(names);
  p.up_ = std::move(up);
  p.down_.assign(n, bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    assert(p.up_[i].size() == n);
    assert(p.up_[i].test(i));
    p.up_[i].for_each([&](std::size_t j) { p.down_[j].set(i); });
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = p.index_.emplace(p.names_[i], i);
    if (!fresh) fail(errc::duplicate_element, "element '" + p.names_[i] + "'");
  }
  return p;
}

std::optional<std::size_t> poset::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !le(i, j)) continue;
      // strictly between: k with i < k < j
      bitset between = up_[i] & down_[j];
      between.reset(i);
      between.reset(j);
      if (between.none()) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::size_t> poset::linear_extension() const {
  std::size_t n = size();
  std::vector<std::size_t> out;
  out.reserve(n);
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    for (std::size_t i = 0; i < n; ++i) { // stable: lowest index first
      if (placed[i]) continue;
      bool minimal = true;
      down_[i].for_each([&](std::size_t j) {
        if (j != i && !placed[j]) minimal = false;
      });
      if (minimal) {
        placed[i] = true;
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

void preorder_closure(std::vector<bitset>& rows) {
  std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
  // Warshall with bitset rows
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rows[i].test(k)) rows[i] |= rows[k];
}

poset validate_poset(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& le) {
  std::size_t n = elements.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = index.emplace(elements[i], i);
    if (!fresh) fail(errc::duplicate_element, "element '" + elements[i] + "'");
  }
  std::vector<bitset> rows(n, bitset(n));
  for (auto& [a, b] : le) {
    auto ia = index.find(a);
    if (ia == index.end()) fail(errc::unknown_element, "'" + a + "' in le");
    auto ib = index.find(b);
    if (ib == index.end()) fail(errc::unknown_element, "'" + b + "' in le");
    rows[ia->second].set(ib->second);
  }
  preorder_closure(rows);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rows[i].test(j) && rows[j].test(i))
        fail(errc::antisymmetry_violation,
             "cycle: " + elements[i] + " <= " + elements[j] + " <= " +
                 elements[i]);
  return poset::from_order(elements, std::move(rows));
}

poset opposite(const poset& p) {
  std::size_t n = p.size();
  std::vector<bitset> rows(n, bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.le(j, i)) rows[i].set(j);
  return poset::from_order(p.names(), std::move(rows));
}

monotone_map::monotone_map(poset_ptr dom, poset_ptr cod,
                           std::vector<std::size_t> img)
    : dom_(std::move(dom)), cod_(std::move(cod)), img_(std::move(img)) {
  if (img_.size() != dom_->size())
    fail(errc::type_mismatch, "map assignment size != domain size");
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] >= cod_->size())
      fail(errc::unknown_element, "image index out of range");
  std::size_t n = dom_->size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (dom_->le(i, j) && !cod_->le(img_[i], img_[j]))
        fail(errc::not_monotone, dom_->name(i) + " <= " + dom_->name(j) +
                                     " but " + cod_->name(img_[i]) +
                                     " !<= " + cod_->name(img_[j]));
}

monotone_map monotone_map::by_name(
    poset_ptr dom, poset_ptr cod,
    const std::vector<std::pair<std::string, std::string>>& graph) {
  std::vector<std::size_t> img(dom->size(), dom->size());
  std::vector<bool> seen(dom->size(), false);
  for (auto& [a, b] : graph) {
    auto ia = dom->index_of(a);
    if (!ia) fail(errc::unknown_element, "'" + a + "' not in domain");
    auto ib = cod->index_of(b);
    if (!ib) fail(errc::unknown_element, "'" + b + "' not in codomain");
    if (seen[*ia]) fail(errc::duplicate_element, "'" + a + "' assigned twice");
    seen[*ia] = true;
    img[*ia] = *ib;
  }
  for (std::size_t i = 0; i < dom->size(); ++i)
    if (!seen[i])
      fail(errc::unknown_element, "'" + dom->name(i) + "' not assigned");
  return monotone_map(std::move(dom), std::move(cod), std::move(img));
}

bitset monotone_map::preimage(const bitset& s) const {
  bitset out(dom_->size());
  for (std::size_t i = 0; i < dom_->size(); ++i)
    if (s.test(img_[i])) out.set(i);
  return out;
}

monotone_map compose(const monotone_map& g, const monotone_map& f) {
  if (!(f.cod() == g.dom()))
    fail(errc::composition_mismatch, "cod of inner map != dom of outer map");
  std::vector<std::size_t> img(f.dom().size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g(f(i));
  return monotone_map(f.dom_ptr(), g.cod_ptr(), std::move(img));
}

monotone_map identity_map(poset_ptr p) {
  std::vector<std::size_t> img(p->size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = i;
  return monotone_map(p, p, std::move(img));
}

map_class classify_map(const monotone_map& f) {
  map_class c;
  std::size_t n = f.dom().size(), m = f.cod().size();
  bitset hit(m);
  c.injective = true;
  std::vector<bool> used(m, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[f(i)]) c.injective = false;
    used[f(i)] = true;
    hit.set(f(i));
  }
  c.surjective = hit.count() == m;
  c.embedding = true;
  for (std::size_t i = 0; i < n && c.embedding; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (f.cod().le(f(i), f(j)) && !f.dom().le(i, j)) {
        c.embedding = false;
        break;
      }
  c.iso = c.embedding && c.surjective;
  return c;
}

product_result product(poset_ptr a, poset_ptr b) {
  std::size_t n = a->size(), m = b->size();
  std::vector<std::string> names;
  names.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      names.push_back("(" + a->name(i) + "," + b->name(j) + ")");
  std::vector<bitset> rows(n * m, bitset(n * m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l)
          if (a->le(i, k) && b->le(j, l)) rows[i * m + j].set(k * m + l);
  auto prod = share(poset::from_order(std::move(names), std::move(rows)));
  std::vector<std::size_t> pl(n * m), pr(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      pl[i * m + j] = i;
      pr[i * m + j] = j;
    }
  return {prod, monotone_map(prod, std::move(a), std::move(pl)),
          monotone_map(prod, std::move(b), std::move(pr))};
}

factorization factorize(const monotone_map& f) {
  std::size_t m = f.cod().size();
  bitset hit(m);
  for (std::size_t i = 0; i < f.dom().size(); ++i) hit.set(f(i));
  std::vector<std::string> names;
  std::vector<std::size_t> to_cod;    // image index -> cod index
  std::vector<std::size_t> of_cod(m); // cod index -> image index (if hit)
  hit.for_each([&](std::size_t j) {
    of_cod[j] = names.size();
    names.push_back(f.cod().name(j));
    to_cod.push_back(j);
  });
  std::size_t k = names.size();
  std::vector<bitset> rows(k, bitset(k));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      if (f.cod().le(to_cod[x], to_cod[y])) rows[x].set(y);
  auto img = share(poset::from_order(std::move(names), std::move(rows)));
  std::vector<std::size_t> surj(f.dom().size());
  for (std::size_t i = 0; i < surj.size(); ++i) surj[i] = of_cod[f(i)];
  return {monotone_map(f.dom_ptr(), img, std::move(surj)),
          monotone_map(img, f.cod_ptr(), std::move(to_cod))};
}

reflection poset_reflection(const std::vector<std::string>& names,
                            const std::vector<bitset>& rows) {
  std::size_t n = names.size();
  std::vector<std::size_t> cls(n, n);
  std::vector<std::size_t> rep; // class -> representative original index
  std::vector<std::string> cnames;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] != n) continue;
    std::size_t c = rep.size();
    std::string least = names[i];
    for (std::size_t j = i; j < n; ++j)
      if (rows[i].test(j) && rows[j].test(i)) {
        cls[j] = c;
        if (names[j] < least) least = names[j];
      }
    rep.push_back(i);
    cnames.push_back(std::move(least));
  }
  std::size_t k = rep.size();
  std::vector<bitset> crows(k, bitset(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (rows[rep[a]].test(rep[b])) crows[a].set(b);
  return {share(poset::from_order(std::move(cnames), std::move(crows))),
          std::move(cls)};
}

} // namespace ordrel
