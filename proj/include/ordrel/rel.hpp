#pragma once

#include <string>
#include <vector>

#include "ordrel/config.hpp"
#include "ordrel/poset.hpp"

namespace ordrel {

// Weakening relation r: A -|-> B.  The pair set is stored row-wise
// (rows()[a] = all b with a r b) and is weakening closed by construction:
// a' <= a, a r b, b <= b'  implies  a' r b'.
class weak_rel {
public:
  weak_rel() = default;

  // validates weakening closure (errc::not_weakening_closed with a witness)
  weak_rel(poset_ptr dom, poset_ptr cod, std::vector<bitset> rows);

  const poset& dom() const { return *dom_; }
  const poset& cod() const { return *cod_; }
  const poset_ptr& dom_ptr() const { return dom_; }
  const poset_ptr& cod_ptr() const { return cod_; }

  bool contains(std::size_t a, std::size_t b) const {
    return rows_[a].test(b);
  }
  const bitset& row(std::size_t a) const { return rows_[a]; }
  const std::vector<bitset>& rows() const { return rows_; }

  // r[S] = direct image of a subset of the domain
  bitset image(const bitset& s) const;

  std::size_t pair_count() const;

  // 2-cell: inclusion of pair sets (endpoints must agree)
  bool subset_of(const weak_rel& o) const;

  bool operator==(const weak_rel& o) const {
    return *dom_ == *o.dom_ && *cod_ == *o.cod_ && rows_ == o.rows_;
  }

  // pair set as one bitset over |A|*|B| (index a*|B|+b); this is the upset
  // mask over opposite(A) x B
  bitset product_mask() const;

private:
  poset_ptr dom_, cod_;
  std::vector<bitset> rows_;
};

// raw pair sets ------------------------------------------------------------

// does the closure rule hold?  On failure *witness (if non-null) receives
// "missing (a',b')" for a pair the closure forces.
bool is_weakening_closed(const poset& dom, const poset& cod,
                         const std::vector<bitset>& rows,
                         std::string* witness = nullptr);

// least weakening-closed relation containing the seed pairs
weak_rel weakening_closure(poset_ptr dom, poset_ptr cod,
                           std::vector<bitset> seed);

weak_rel rel_from_pairs(
    poset_ptr dom, poset_ptr cod,
    const std::vector<std::pair<std::string, std::string>>& pairs,
    bool close);

weak_rel rel_from_mask(poset_ptr dom, poset_ptr cod, const bitset& mask);

// constructions ------------------------------------------------------------

// the order of A, which is the identity at A
weak_rel identity_rel(poset_ptr a);
weak_rel empty_rel(poset_ptr dom, poset_ptr cod);
weak_rel total_rel(poset_ptr dom, poset_ptr cod);

// diagrammatic composite: first r: A -|-> B, then s: B -|-> C
weak_rel compose_rel(const weak_rel& r, const weak_rel& s);

// union / intersection of parallel relations (both weakening closed again)
weak_rel rel_union(const weak_rel& r, const weak_rel& s);
weak_rel rel_intersection(const weak_rel& r, const weak_rel& s);

// companion f_* = {(a,b) | f(a) <= b} and conjoint f^* = {(b,a) | b <= f(a)}
weak_rel companion(const monotone_map& f);
weak_rel conjoint(const monotone_map& f);

// Recovers f from an adjoint pair (r, s) with r -| s: checks the unit
// Id_A <= r;s and counit s;r <= Id_B, then reads f(a) off as the unique
// element of r(a,-) /\ s(-,a).  Throws errc::not_adjoint with the failing
// condition otherwise.
monotone_map recover_map_from_adjunction(const weak_rel& r, const weak_rel& s);

// e surjective iff e^*;e_* is the identity at cod; m embedding iff m_*;m^*
// is the identity at dom
struct adjoint_criteria {
  bool surjection = false;
  bool embedding = false;
};
adjoint_criteria surjection_embedding_criteria(const monotone_map& f);

// The whole hom-poset A -|-> B (all upsets of opposite(A) x B), in ascending
// pair-mask order.  Guarded by lim.max_hom_product.
std::vector<weak_rel> all_relations(poset_ptr dom, poset_ptr cod,
                                    const limits& lim = default_limits());

} // namespace ordrel
