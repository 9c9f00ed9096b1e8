#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordrel/bitset.hpp"
#include "ordrel/error.hpp"

namespace ordrel {

// Finite poset.  Elements are identified by their position in `names`; the
// order is stored as dense up-set rows (up(i) = all j with i <= j) plus the
// transposed down-set rows.  Instances are immutable once built.
class poset {
public:
  poset() = default; // the empty poset

  // Trusts `up` to be a reflexive, transitive, antisymmetric matrix.
  // Internal constructions use this; external data goes through
  // validate_poset.
  static poset from_order(std::vector<std::string> names,
                          std::vector<bitset> up);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  bool le(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  const bitset& up(std::size_t i) const { return up_[i]; }
  const bitset& down(std::size_t i) const { return down_[i]; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  // covering pairs (i,j): i < j with nothing strictly between
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  // indices in an order compatible with <= (minimal elements first; stable
  // with respect to the listed order)
  std::vector<std::size_t> linear_extension() const;

  bool operator==(const poset& o) const {
    return names_ == o.names_ && up_ == o.up_;
  }

private:
  std::vector<std::string> names_;
  std::vector<bitset> up_;
  std::vector<bitset> down_;
  std::unordered_map<std::string, std::size_t> index_;
};

using poset_ptr = std::shared_ptr<const poset>;

inline poset_ptr share(poset p) {
  return std::make_shared<const poset>(std::move(p));
}

// Builds a poset from raw element names and generating pairs: closes the
// pairs reflexively and transitively, then rejects duplicate or unknown
// names and 2-cycles (with a witness).
poset validate_poset(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& le);

// Same carrier and names, reversed order.  Applying it twice gives back the
// argument on the nose.
poset opposite(const poset& p);

// Monotone map between posets.  Stores shared pointers to its endpoints, so
// maps are cheap to copy and carry their own typing information.
class monotone_map {
public:
  monotone_map() = default;

  // validates totality (img.size() == dom->size()) and monotonicity
  monotone_map(poset_ptr dom, poset_ptr cod, std::vector<std::size_t> img);

  // name-based construction; every dom element must be assigned exactly once
  static monotone_map
  by_name(poset_ptr dom, poset_ptr cod,
          const std::vector<std::pair<std::string, std::string>>& graph);

  const poset& dom() const { return *dom_; }
  const poset& cod() const { return *cod_; }
  const poset_ptr& dom_ptr() const { return dom_; }
  const poset_ptr& cod_ptr() const { return cod_; }

  std::size_t operator()(std::size_t i) const { return img_[i]; }
  const std::vector<std::size_t>& image_vector() const { return img_; }

  // f^{-1}(S) as a subset of the domain
  bitset preimage(const bitset& s) const;

  bool operator==(const monotone_map& o) const {
    return *dom_ == *o.dom_ && *cod_ == *o.cod_ && img_ == o.img_;
  }

private:
  poset_ptr dom_, cod_;
  std::vector<std::size_t> img_;
};

// g after f; requires f.cod == g.dom
monotone_map compose(const monotone_map& g, const monotone_map& f);

monotone_map identity_map(poset_ptr p);

struct map_class {
  bool injective = false;
  bool surjective = false;
  bool embedding = false; // order-reflecting (hence injective)
  bool iso = false;
};

map_class classify_map(const monotone_map& f);

// product with projections; elements named "(a,b)", listed row-major in the
// argument orders
struct product_result {
  poset_ptr prod;
  monotone_map proj_left, proj_right;
};
product_result product(poset_ptr a, poset_ptr b);

// surjection-embedding factorization through the image sub-poset (image
// elements keep their codomain names and listed order)
struct factorization {
  monotone_map surjection; // dom -> image
  monotone_map embedding;  // image -> cod
};
factorization factorize(const monotone_map& f);

// Poset reflection of a preorder: collapses each cycle class to one element
// named after its lexicographically least member; classes are listed by the
// earliest listed position of a member.  `rows` must be reflexive and
// transitive.
struct reflection {
  poset_ptr quotient;
  std::vector<std::size_t> cls; // original index -> class index
};
reflection poset_reflection(const std::vector<std::string>& names,
                            const std::vector<bitset>& rows);

// reflexive-transitive closure of generating rows (in place)
void preorder_closure(std::vector<bitset>& rows);

// All upsets of p, emitted in ascending bit-mask order (a linear extension
// of inclusion: subsets come before supersets).
template <class F>
void enumerate_upsets(const poset& p, F&& emit) {
  std::size_t n = p.size();
  // decide membership maximal-first: an element may join only if everything
  // strictly above it is already in
  std::vector<std::size_t> order = p.linear_extension();
  std::vector<bitset> acc;
  acc.reserve(n + 1);
  bitset cur(n);
  // recursive lambda over positions in reverse linear extension
  auto rec = [&](auto&& self, std::size_t k, bitset u) -> void {
    if (k == n) {
      acc.push_back(std::move(u));
      return;
    }
    std::size_t e = order[n - 1 - k];
    self(self, k + 1, u); // e stays out
    bitset above = p.up(e);
    above.reset(e);
    if (above.subset_of(u)) {
      u.set(e);
      self(self, k + 1, std::move(u));
    }
  };
  rec(rec, 0, std::move(cur));
  std::sort(acc.begin(), acc.end());
  for (auto& u : acc) emit(u);
}

// All monotone maps dom -> cod (empty dom yields the single empty map;
// empty cod with nonempty dom yields none).  Deterministic order.
template <class F>
void enumerate_monotone_maps(const poset& dom, const poset& cod, F&& emit) {
  if (dom.size() > 0 && cod.size() == 0) return;
  std::vector<std::size_t> order = dom.linear_extension();
  std::vector<std::size_t> img(dom.size(), 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == dom.size()) {
      emit(img);
      return;
    }
    std::size_t e = order[k];
    for (std::size_t y = 0; y < cod.size(); ++y) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        std::size_t e2 = order[j];
        if (dom.le(e2, e) && !cod.le(img[e2], y)) ok = false;
        if (dom.le(e, e2) && !cod.le(y, img[e2])) ok = false;
      }
      if (!ok) continue;
      img[e] = y;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

} // namespace ordrel
