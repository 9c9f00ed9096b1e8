#pragma once

#include "ordrel/duality.hpp"

namespace ordrel {

// --- Hoare triples ----------------------------------------------------------
// A specification is a relation between upset lattices: (P,Q) in the spec
// reads "precondition P guarantees postcondition Q".

// all valid triples of a program relation r: (P,Q) with r[P] <= Q
weak_rel hoare_theory(const weak_rel& r, const upset_lattice& ux,
                      const upset_lattice& uy);

// the largest program relation satisfying every triple of the spec:
// x r y iff x in P implies y in Q for all (P,Q) in the spec
weak_rel hoare_implementation(const weak_rel& spec, const upset_lattice& ux,
                              const upset_lattice& uy);

// the contravariant Galois connection: spec <= theory(r) iff
// r <= implementation(spec); returns both sides for the caller to compare
struct galois_verdict {
  bool spec_below_theory = false;
  bool rel_below_implementation = false;
  bool equivalent() const {
    return spec_below_theory == rel_below_implementation;
  }
};
galois_verdict hoare_galois_check(const weak_rel& spec, const weak_rel& r,
                                  const upset_lattice& ux,
                                  const upset_lattice& uy);

// --- preorders and quotients -----------------------------------------------

// r must contain the identity relation and be closed under composition
// (errc::not_a_preorder otherwise); returns the projection X -> X/r
monotone_map quotient_by_preorder(const weak_rel& r);

// upsets A with r[A] <= A; for a preorder these are in bijection with the
// upsets of X/r (send A to its image)
std::vector<bitset> reflexive_elements(const weak_rel& r);

struct interpolative_result {
  bool below_identity = false;
  bool interpolative = false; // r <= r;r
};
interpolative_result interpolative_check(const weak_rel& r);

// --- framed structure --------------------------------------------------------
// Cells have shape  S: A -|-> B  over  R: C -|-> D  along f: A -> C and
// g: B -> D.

// R(f,g) = {(a,b) | f(a) R g(b)}
weak_rel framed_restriction(const weak_rel& r, const monotone_map& f,
                            const monotone_map& g);

// f^* ; M ; g_* = {(c,d) | c <= f(a), a M b, g(b) <= d for some a,b}
weak_rel framed_extension(const weak_rel& m, const monotone_map& f,
                          const monotone_map& g);

// The four equivalent readings of "S is a cell over R along (f,g)".  All
// four are computed; a mismatch raises errc::formulation_disagreement.
struct framed_cell_verdict {
  bool holds = false;
  bool by_restriction = false;  // S <= R(f,g)
  bool by_square = false;       // S;g_* <= f_*;R
  bool by_extension = false;    // f^*;S;g_* <= R
  bool by_graph = false;        // S <= f_*;R;g^*
};
framed_cell_verdict framed_cell_check(const weak_rel& s, const monotone_map& f,
                                      const monotone_map& g,
                                      const weak_rel& r);

// --- the upset lattice carved out by an inserter ----------------------------

// Dualize the order of X (as a relation on the underlying discrete poset)
// into a parallel pair 2^|X| => 2^graph and take its inserter; the result
// is exactly dual_space(X) and is returned with its lattice structure.
fin_dl order_dual_via_inserter(poset_ptr x,
                               const limits& lim = default_limits());

} // namespace ordrel
