#pragma once

#include <optional>
#include <string>

#include "ordrel/rel.hpp"

namespace ordrel {

// span of monotone maps: left: W -> A, right: W -> B (shared apex W)
class span {
public:
  span(monotone_map left, monotone_map right);
  const monotone_map& left() const { return left_; }
  const monotone_map& right() const { return right_; }
  const poset& apex() const { return left_.dom(); }

private:
  monotone_map left_, right_;
};

// cospan of monotone maps: left: A -> C, right: B -> C (shared coapex C)
class cospan {
public:
  cospan(monotone_map left, monotone_map right);
  const monotone_map& left() const { return left_; }
  const monotone_map& right() const { return right_; }
  const poset& coapex() const { return left_.cod(); }

private:
  monotone_map left_, right_;
};

// Lax square over the same boundary (A,B): span (p: W->A, q: W->B) and
// cospan (j: A->C, k: B->C) with j.p <= k.q pointwise (else
// errc::not_lax_commuting).
class square {
public:
  square(span s, cospan c);
  const span& inner() const { return span_; }
  const cospan& outer() const { return cospan_; }

private:
  span span_;
  cospan cospan_;
};

// the relation a span represents: a r b iff a <= p(w) and q(w) <= b for
// some w
weak_rel rel_of_span(const span& s);

// the relation a cospan represents: a r b iff j(a) <= k(b)
weak_rel rel_of_cospan(const cospan& c);

// tabulation of r as the sub-poset of A x B on its pairs, with projections
span graph(const weak_rel& r);

// cotabulation of r: coapex A + B with L:a <= R:b iff a r b
cospan collage(const weak_rel& r);

// universal span over a cospan: apex {(a,b) | j(a) <= k(b)} inside A x B
span comma(const cospan& c);

// universal cospan under a span: tagged union of A and B with the preorder
// generated by both orders and L:p(w) <= R:q(w), reflected to a poset
cospan cocomma(const span& s);

// Coequalizing quotient of parallel maps f,g: X => Y in the order sense:
// poset reflection of the least preorder on Y containing <=_Y and all
// (f(x), g(x)).  Returned as the quotient map Y -> Q.
monotone_map coinserter(const monotone_map& f, const monotone_map& g);

// Dual construction: the full sub-poset of X on {x | j(x) <= k(x)} for
// parallel j,k: X => Y, returned as the inclusion map.
monotone_map inserter(const monotone_map& j, const monotone_map& k);

struct exact_result {
  bool exact = false;
  std::string witness; // pair in one represented relation but not the other
};

// Beck-Chevalley check: the square is exact iff its span and cospan
// represent the same relation, i.e. j(a) <= k(b) always lifts to a w with
// a <= p(w), q(w) <= b.
exact_result is_exact(const square& sq);

// canonical exact squares
square comma_square(const cospan& c);
square cocomma_square(const span& s);

// Comparison with the closure Comma(Cocomma(-)): the span is weakening
// closed / an embedding span / a graph according as the canonical map
// W -> graph(rel_of_span) is onto / order-reflecting / both.
struct span_class {
  bool weakening_closed = false;
  bool embedding = false;
  bool graph = false;
};
span_class classify_span(const span& s);

// Comparison with the interior Cocomma(Comma(-)): the cospan is bipartite /
// onto / a collage according as the canonical map collage(rel_of_cospan) -> C
// is order-reflecting / onto / both.
struct cospan_class {
  bool bipartite = false;
  bool onto = false;
  bool collage = false;
};
cospan_class classify_cospan(const cospan& c);

// composite span via the comma of the shared-middle cospan
span compose_spans(const span& s1, const span& s2);

// composite cospan via the cocomma of the shared-middle span
cospan compose_cospans(const cospan& c1, const cospan& c2);

} // namespace ordrel
