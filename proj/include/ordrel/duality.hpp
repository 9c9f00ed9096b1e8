#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ordrel/config.hpp"
#include "ordrel/dl.hpp"

namespace ordrel {

// The lattice of upsets of a poset, with elements named "{a,c}" (base
// listed order inside the braces) and listed in ascending bit-mask order,
// which puts subsets before supersets.  `dl` is populated by dual_space;
// the cheaper upset_poset_of leaves it empty when only the order matters.
struct upset_lattice {
  poset_ptr base;
  std::vector<bitset> upsets;
  poset_ptr carrier;
  dl_ptr dl;

  std::size_t index_of(const bitset& u) const; // errc::internal if absent
};

// 2^X as a finite distributive lattice; guarded by lim.max_dual_space
upset_lattice dual_space(poset_ptr x, const limits& lim = default_limits());

// order-only variant for internal middle objects (no meet/join tables);
// guarded by max_upsets on the upset count
upset_lattice upset_poset_of(poset_ptr base, std::size_t max_upsets);

// 2^f: Up(Y) -> Up(X) for f: X -> Y, given the duals of its endpoints
monotone_map dual_map_space(const monotone_map& f, const upset_lattice& ux,
                            const upset_lattice& uy);

// prime filter poset of A; guarded by lim.max_dual_algebra
prime_filter_poset dual_algebra(dl_ptr a, const limits& lim = default_limits());

// PF(g): PF(A) -> PF(B) for a DL morphism g: B -> A (inverse image of
// filters), given the duals of its endpoints
monotone_map dual_map_algebra(const dl_morphism& g,
                              const prime_filter_poset& pf_dom,
                              const prime_filter_poset& pf_cod);

// The two unit isomorphisms x |-> {U | x in U} and a |-> {F | a in F}.
// Both are verified to be isomorphisms (errc::iso_failure otherwise).
struct duality_witness {
  monotone_map unit_space;   // X -> PF(2^X)
  monotone_map unit_algebra; // A -> 2^(PF A)
};
monotone_map unit_space_iso(poset_ptr x, const limits& lim = default_limits());
monotone_map unit_algebra_iso(dl_ptr a, const limits& lim = default_limits());
duality_witness unit_isos(poset_ptr x, dl_ptr a,
                          const limits& lim = default_limits());

// --- relation duals, space -> algebra ---------------------------------
// All three return the same relation Up(X) -|-> Up(Y): (A,B) is in the
// dual iff r[A] <= B.

weak_rel dual_rel_formula(const weak_rel& r, const upset_lattice& ux,
                          const upset_lattice& uy);
// tabulate as a span, push both legs through 2^-, read the cospan off
weak_rel dual_rel_via_span(const weak_rel& r, const upset_lattice& ux,
                           const upset_lattice& uy,
                           const limits& lim = default_limits());
// cotabulate as a collage, push both legs through 2^-, read the span off
weak_rel dual_rel_via_cospan(const weak_rel& r, const upset_lattice& ux,
                             const upset_lattice& uy,
                             const limits& lim = default_limits());

// --- relation duals, algebra -> space ---------------------------------
// All three return the relation PF(A) -|-> PF(B): (x,y) is in the dual iff
// a in x implies b in y for every pair (a,b) of r.

weak_rel dual_rel_formula(const dl_rel& r, const prime_filter_poset& pa,
                          const prime_filter_poset& pb);
weak_rel dual_rel_via_span(const dl_rel& r, const prime_filter_poset& pa,
                           const prime_filter_poset& pb,
                           const limits& lim = default_limits());
weak_rel dual_rel_via_cospan(const dl_rel& r, const prime_filter_poset& pa,
                             const prime_filter_poset& pb,
                             const limits& lim = default_limits());

// --- (co)commas of DL spans --------------------------------------------

// comma of a DL cospan: the carrier comma is a sublattice of dom x dom
dl_span dl_comma(const dl_cospan& c);

// Cocomma of a DL span computed through the duality: dualize the span,
// take the comma in posets, dualize back.  The result is guarded by
// lim.max_cocomma_lattice on the output size.  The cocomma square is
// asserted exact.
dl_cospan dl_cocomma_via_duality(const dl_span& s,
                                 const limits& lim = default_limits());

// Mediating DL morphism for a cocone (j': A -> C', k': B -> C') with
// j'.p <= k'.q over the cocomma q of s; satisfies h . legs = cocone legs.
monotone_map dl_cocomma_mediate(const dl_span& s, const dl_cospan& q,
                                const dl_cospan& cocone,
                                const limits& lim = default_limits());

// --- odds and ends ------------------------------------------------------

// least upset of Y restricting back to p along an embedding f: X -> Y
// (errc::not_an_embedding if f is not one)
bitset extend_upset_along_embedding(const monotone_map& f, const bitset& p);

// dual twice and transport back along the unit isomorphisms
struct roundtrip_report {
  weak_rel dual;        // Up(X) -|-> Up(Y)
  weak_rel double_dual; // PF(Up X) -|-> PF(Up Y)
  weak_rel transported; // back on X -|-> Y
  bool equal = false;
  std::string witness;
};
roundtrip_report roundtrip_relation(const weak_rel& r,
                                    const limits& lim = default_limits());

// --- extension preconditions ---------------------------------------------

// A contravariant assignment to probe: on_map(f: X -> Y) must produce
// F(f): F(Y) -> F(X).  The admits predicates narrow generation to the
// functor's actual domain (e.g. lattices and their morphisms).
struct dual_functor {
  std::string name;
  std::function<bool(const poset&)> admits_object;
  std::function<bool(const monotone_map&)> admits_map;
  std::function<poset(const poset&)> on_object;
  std::function<monotone_map(const monotone_map&)> on_map;
  // canonical cocomma square of an admitted span (side-specific)
  std::function<square(const span&)> make_cocomma_square;
};

dual_functor space_functor(const limits& lim = default_limits());
dual_functor algebra_functor(const limits& lim = default_limits());

struct check_entry {
  std::string check;
  std::string instance;
  bool pass = false;
  std::string witness;
};
struct check_report {
  std::vector<check_entry> entries;
  bool all_pass() const {
    for (auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

// Verifies, over all instances up to max_size elements: duals of maps form
// adjoint pairs, surjections dualize to embeddings (and conversely), and
// comma/cocomma squares stay exact.  One summary entry per check.
check_report check_extension_preconditions(const dual_functor& f,
                                           std::size_t max_size,
                                           const limits& lim = default_limits());

// all labeled posets on n elements (names "a", "b", ...), guarded by
// lim.max_enum_posets
void enumerate_posets(std::size_t n,
                      const std::function<void(const poset&)>& emit,
                      const limits& lim = default_limits());

} // namespace ordrel
