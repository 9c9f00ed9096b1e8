#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ordrel/span.hpp"

namespace ordrel {

// Finite bounded distributive lattice: a poset carrier plus meet/join
// tables and the two bounds.  Build one with validate_dl (full checks,
// witnessed errors) or trusted() for constructions that are lattices by
// construction (upset lattices, pair sublattices).
class fin_dl {
public:
  fin_dl() = default;

  const poset& carrier() const { return *carrier_; }
  const poset_ptr& carrier_ptr() const { return carrier_; }
  std::size_t size() const { return carrier_->size(); }

  std::size_t meet(std::size_t a, std::size_t b) const {
    return meet_[a * size() + b];
  }
  std::size_t join(std::size_t a, std::size_t b) const {
    return join_[a * size() + b];
  }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  static fin_dl trusted(poset_ptr carrier, std::vector<std::size_t> meet,
                        std::vector<std::size_t> join, std::size_t bottom,
                        std::size_t top);

private:
  poset_ptr carrier_;
  std::vector<std::size_t> meet_, join_;
  std::size_t bottom_ = 0, top_ = 0;
};

using dl_ptr = std::shared_ptr<const fin_dl>;

// Checks the carrier is a nonempty lattice (errc::empty_lattice /
// errc::not_a_lattice with the pair lacking a meet or join) and that meets
// distribute over joins (errc::not_distributive with the witness triple).
fin_dl validate_dl(poset_ptr carrier);

inline dl_ptr share(fin_dl a) {
  return std::make_shared<const fin_dl>(std::move(a));
}

// monotone map that preserves bottom, top, binary meets and joins
// (errc::not_a_homomorphism with a witness otherwise)
struct dl_morphism {
  dl_ptr dom, cod;
  monotone_map map;
};
dl_morphism validate_dl_morphism(dl_ptr dom, dl_ptr cod, monotone_map f);
bool is_dl_morphism(const fin_dl& dom, const fin_dl& cod,
                    const monotone_map& f, std::string* witness = nullptr);

// Prime filters of A, all principal at join-irreducible elements; named
// "↑m" and ordered by inclusion (so ↑m <= ↑m' iff m' <= m in A).  The
// trivial lattice has none and yields the empty poset.
struct prime_filter_poset {
  dl_ptr algebra;
  std::vector<std::size_t> gens; // generator element per filter
  poset_ptr pf;

  // is carrier element `elt` a member of filter #f?
  bool member(std::size_t f, std::size_t elt) const {
    return algebra->carrier().le(gens[f], elt);
  }
};
prime_filter_poset prime_filters(dl_ptr a);

// Relation between lattices closed under weakening, both bounds pairs, and
// componentwise meet and join.
struct dl_rel {
  dl_ptr dom, cod;
  weak_rel rel;
};

bool is_dl_relation(const fin_dl& dom, const fin_dl& cod, const weak_rel& r,
                    std::string* witness = nullptr);
dl_rel make_dl_rel(dl_ptr dom, dl_ptr cod, weak_rel r);

// Least dl_rel containing the seed pairs.  With with_complements the pair
// set is additionally closed under componentwise complement (both lattices
// must be complemented: errc::not_complemented otherwise); on Boolean
// algebras this is closure to a Boolean subalgebra of dom x cod.
dl_rel dl_relation_closure(dl_ptr dom, dl_ptr cod,
                           std::vector<bitset> seed_rows,
                           bool with_complements = false);

// span of DL morphisms
struct dl_span {
  dl_ptr apex, left_cod, right_cod;
  span carrier;
};
dl_span make_dl_span(dl_ptr apex, dl_ptr left_cod, dl_ptr right_cod, span s);

// cospan of DL morphisms
struct dl_cospan {
  dl_ptr coapex, left_dom, right_dom;
  cospan carrier;
};
dl_cospan make_dl_cospan(dl_ptr coapex, dl_ptr left_dom, dl_ptr right_dom,
                         cospan c);

// Tabulates r as the sublattice of dom x cod on its pair set, with the
// projections; the five closure rules make the apex a sublattice, hence
// distributive.
dl_span dl_tabulate(const dl_rel& r);

} // namespace ordrel
