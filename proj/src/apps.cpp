#include "ordrel/apps.hpp"

#include <string>

#include "ordrel/error.hpp"

namespace ordrel {

namespace {

void require_same(const poset& got, const poset& want, const char* what) {
  if (got == want) return;
  fail(errc::type_mismatch, std::string(what) + " does not match");
}

} // namespace

weak_rel hoare_theory(const weak_rel& r, const upset_lattice& ux,
                      const upset_lattice& uy) {
  return dual_rel_formula(r, ux, uy);
}

weak_rel hoare_implementation(const weak_rel& spec, const upset_lattice& ux,
                              const upset_lattice& uy) {
  require_same(spec.dom(), *ux.carrier, "specification domain");
  require_same(spec.cod(), *uy.carrier, "specification codomain");
  std::size_t nx = ux.base->size(), ny = uy.base->size();
  std::vector<bitset> rows(nx, bitset(ny));
  for (std::size_t x = 0; x < nx; ++x) {
    rows[x].set_all();
    for (std::size_t p = 0; p < ux.upsets.size(); ++p) {
      if (!ux.upsets[p].test(x)) continue;
      // x meets precondition p: y must land in every promised postcondition
      spec.row(p).for_each(
          [&](std::size_t q) { rows[x] &= uy.upsets[q]; });
    }
  }
  return weak_rel(ux.base, uy.base, std::move(rows));
}

galois_verdict hoare_galois_check(const weak_rel& spec, const weak_rel& r,
                                  const upset_lattice& ux,
                                  const upset_lattice& uy) {
  galois_verdict v;
  v.spec_below_theory = spec.subset_of(hoare_theory(r, ux, uy));
  v.rel_below_implementation = r.subset_of(hoare_implementation(spec, ux, uy));
  return v;
}

monotone_map quotient_by_preorder(const weak_rel& r) {
  require_same(r.cod(), r.dom(), "endorelation endpoints");
  if (!identity_rel(r.dom_ptr()).subset_of(r))
    fail(errc::not_a_preorder, "relation is not reflexive");
  if (!compose_rel(r, r).subset_of(r))
    fail(errc::not_a_preorder, "relation is not transitive");
  reflection refl = poset_reflection(r.dom().names(), r.rows());
  return monotone_map(r.dom_ptr(), refl.quotient, refl.cls);
}

std::vector<bitset> reflexive_elements(const weak_rel& r) {
  require_same(r.cod(), r.dom(), "endorelation endpoints");
  std::vector<bitset> out;
  enumerate_upsets(r.dom(), [&](const bitset& a) {
    if (r.image(a).subset_of(a)) out.push_back(a);
  });
  return out;
}

interpolative_result interpolative_check(const weak_rel& r) {
  require_same(r.cod(), r.dom(), "endorelation endpoints");
  interpolative_result res;
  res.below_identity = r.subset_of(identity_rel(r.dom_ptr()));
  res.interpolative = r.subset_of(compose_rel(r, r));
  return res;
}

weak_rel framed_restriction(const weak_rel& r, const monotone_map& f,
                            const monotone_map& g) {
  require_same(f.cod(), r.dom(), "left frame codomain");
  require_same(g.cod(), r.cod(), "right frame codomain");
  std::size_t na = f.dom().size(), nb = g.dom().size();
  std::vector<bitset> rows(na, bitset(nb));
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      if (r.contains(f(a), g(b))) rows[a].set(b);
  return weak_rel(f.dom_ptr(), g.dom_ptr(), std::move(rows));
}

weak_rel framed_extension(const weak_rel& m, const monotone_map& f,
                          const monotone_map& g) {
  require_same(f.dom(), m.dom(), "left frame domain");
  require_same(g.dom(), m.cod(), "right frame domain");
  return compose_rel(compose_rel(conjoint(f), m), companion(g));
}

framed_cell_verdict framed_cell_check(const weak_rel& s, const monotone_map& f,
                                      const monotone_map& g,
                                      const weak_rel& r) {
  require_same(s.dom(), f.dom(), "cell top-left");
  require_same(s.cod(), g.dom(), "cell top-right");
  require_same(r.dom(), f.cod(), "cell bottom-left");
  require_same(r.cod(), g.cod(), "cell bottom-right");

  framed_cell_verdict v;
  v.by_restriction = s.subset_of(framed_restriction(r, f, g));
  v.by_square =
      compose_rel(s, companion(g)).subset_of(compose_rel(companion(f), r));
  v.by_extension = framed_extension(s, f, g).subset_of(r);
  v.by_graph = s.subset_of(
      compose_rel(compose_rel(companion(f), r), conjoint(g)));
  if (v.by_restriction != v.by_square || v.by_square != v.by_extension ||
      v.by_extension != v.by_graph)
    fail(errc::formulation_disagreement,
         "cell formulations disagree: restriction=" +
             std::to_string(v.by_restriction) +
             " square=" + std::to_string(v.by_square) +
             " extension=" + std::to_string(v.by_extension) +
             " graph=" + std::to_string(v.by_graph));
  v.holds = v.by_restriction;
  return v;
}

fin_dl order_dual_via_inserter(poset_ptr x, const limits& lim) {
  std::size_t n = x->size();
  std::vector<bitset> diag(n, bitset(n));
  for (std::size_t i = 0; i < n; ++i) diag[i].set(i);
  poset_ptr discrete = share(poset::from_order(x->names(), std::move(diag)));

  std::vector<bitset> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(x->up(i));
  weak_rel order_rel(discrete, discrete, std::move(rows));

  span g = graph(order_rel);
  upset_lattice ud = dual_space(discrete, lim);
  upset_lattice ug =
      upset_poset_of(g.left().dom_ptr(), lim.max_internal_upsets);
  monotone_map j = dual_map_space(g.left(), ug, ud);
  monotone_map k = dual_map_space(g.right(), ug, ud);
  monotone_map incl = inserter(j, k);

  upset_lattice expected = dual_space(x, lim);
  if (!(incl.dom() == *expected.carrier))
    fail(errc::formulation_disagreement,
         "inserter of the dualized order differs from the upset lattice");
  return *expected.dl;
}

} // namespace ordrel
