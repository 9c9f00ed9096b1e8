#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ordrel/duality.hpp"

namespace ordrel {

// --- serializable documents --------------------------------------------------
// Relations, spans and cospans optionally carry lattice structure on their
// endpoints; the dl_ptr members are null for the plain order-level forms.

struct rel_doc {
  weak_rel rel;
  dl_ptr dom_dl, cod_dl;
  bool is_dl() const { return dom_dl != nullptr; }
};

struct span_doc {
  span sp;
  dl_ptr apex_dl, left_dl, right_dl;
  bool is_dl() const { return apex_dl != nullptr; }
};

struct cospan_doc {
  cospan csp;
  dl_ptr coapex_dl, left_dl, right_dl;
  bool is_dl() const { return coapex_dl != nullptr; }
};

using document = std::variant<poset_ptr, monotone_map, rel_doc, dl_ptr,
                              span_doc, cospan_doc, square, check_report>;

// Parses one JSON document.  Malformed input raises errc::schema_error with
// a JSON-path location; structurally sound input that fails a mathematical
// check (acyclicity, closure, distributivity, ...) raises the corresponding
// domain error.
document parse_document(const std::string& text);

// Canonical form: listed element order, cover pairs only for posets, the
// full closed pair set for relations, pairs sorted by name.  Idempotent:
// serialize(parse(serialize(d))) == serialize(d).
std::string serialize_document(const document& doc);

// Graphviz rendering.  Posets render as Hasse diagrams; relations as their
// collage (two solid Hasse columns, dashed minimal cross edges); spans and
// cospans render the collage of the relation they represent.  Everything
// else raises errc::unsupported_document.
std::string export_dot(const document& doc);

// all weakening relations dom -|-> cod (upsets of dom^op x cod), guarded by
// lim.max_hom_product on |dom|*|cod|
std::vector<weak_rel> enumerate_relations(poset_ptr dom, poset_ptr cod,
                                          const limits& lim = default_limits());

} // namespace ordrel
