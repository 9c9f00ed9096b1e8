#include "ordrel/io.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "ordrel/error.hpp"

namespace ordrel {

using njson = nlohmann::ordered_json;

namespace {

// --- parsing ---------------------------------------------------------------

[[noreturn]] void bad(const std::string& path, const std::string& reason) {
  fail(errc::schema_error, path + ": " + reason);
}

const njson& field(const njson& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const njson& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

bool as_bool(const njson& j, const std::string& path) {
  if (!j.is_boolean()) bad(path, "expected a boolean");
  return j.get<bool>();
}

bool flag(const njson& j, const char* key, bool dflt, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) return dflt;
  return as_bool(*it, path + "." + key);
}

std::pair<std::string, std::string> as_name_pair(const njson& j,
                                                 const std::string& path) {
  if (!j.is_array() || j.size() != 2) bad(path, "expected a [from,to] pair");
  return {as_string(j[0], path + "[0]"), as_string(j[1], path + "[1]")};
}

std::string doc_type(const njson& j, const std::string& path) {
  return as_string(field(j, "type", path), path + ".type");
}

poset_ptr parse_poset_body(const njson& j, const std::string& path) {
  const njson& el = field(j, "elements", path);
  if (!el.is_array()) bad(path + ".elements", "expected an array");
  std::vector<std::string> names;
  names.reserve(el.size());
  for (std::size_t i = 0; i < el.size(); ++i)
    names.push_back(
        as_string(el[i], path + ".elements[" + std::to_string(i) + "]"));
  const njson& le = field(j, "le", path);
  if (!le.is_array()) bad(path + ".le", "expected an array");
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(le.size());
  for (std::size_t i = 0; i < le.size(); ++i)
    pairs.push_back(as_name_pair(le[i], path + ".le[" + std::to_string(i) + "]"));
  return share(validate_poset(names, pairs));
}

struct carrier {
  poset_ptr p;
  dl_ptr d; // null when given as a bare poset
};

carrier parse_carrier(const njson& j, const std::string& path) {
  std::string t = doc_type(j, path);
  if (t == "poset") return {parse_poset_body(j, path), nullptr};
  if (t == "dl") {
    poset_ptr p = parse_poset_body(field(j, "poset", path), path + ".poset");
    return {p, share(validate_dl(p))};
  }
  bad(path + ".type", "expected 'poset' or 'dl', got '" + t + "'");
}

struct parsed_map {
  monotone_map f;
  dl_ptr dom_dl, cod_dl;
};

parsed_map parse_map_body(const njson& j, const std::string& path) {
  carrier dom = parse_carrier(field(j, "dom", path), path + ".dom");
  carrier cod = parse_carrier(field(j, "cod", path), path + ".cod");
  const njson& g = field(j, "graph", path);
  if (!g.is_object()) bad(path + ".graph", "expected an object");
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(g.size());
  for (auto& [key, val] : g.items())
    pairs.emplace_back(key, as_string(val, path + ".graph." + key));
  return {monotone_map::by_name(dom.p, cod.p, pairs), dom.d, cod.d};
}

dl_ptr lattice_of(const carrier& c) {
  return c.d ? c.d : share(validate_dl(c.p));
}

rel_doc parse_rel_body(const njson& j, const std::string& path) {
  carrier dom = parse_carrier(field(j, "dom", path), path + ".dom");
  carrier cod = parse_carrier(field(j, "cod", path), path + ".cod");
  const njson& pj = field(j, "pairs", path);
  if (!pj.is_array()) bad(path + ".pairs", "expected an array");
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(pj.size());
  for (std::size_t i = 0; i < pj.size(); ++i)
    pairs.push_back(
        as_name_pair(pj[i], path + ".pairs[" + std::to_string(i) + "]"));
  bool closed = flag(j, "closed", true, path);
  weak_rel r = rel_from_pairs(dom.p, cod.p, pairs, /*close=*/!closed);
  if (!flag(j, "dl", false, path)) return {std::move(r), nullptr, nullptr};
  dl_ptr dd = lattice_of(dom), cd = lattice_of(cod);
  dl_rel checked = make_dl_rel(dd, cd, std::move(r));
  return {std::move(checked.rel), std::move(dd), std::move(cd)};
}

span_doc parse_span_body(const njson& j, const std::string& path) {
  parsed_map l = parse_map_body(field(j, "left", path), path + ".left");
  parsed_map r = parse_map_body(field(j, "right", path), path + ".right");
  span s(std::move(l.f), std::move(r.f));
  if (!flag(j, "dl", false, path)) return {std::move(s), nullptr, nullptr, nullptr};
  dl_ptr apex = l.dom_dl ? l.dom_dl : share(validate_dl(s.left().dom_ptr()));
  dl_ptr lc = l.cod_dl ? l.cod_dl : share(validate_dl(s.left().cod_ptr()));
  dl_ptr rc = r.cod_dl ? r.cod_dl : share(validate_dl(s.right().cod_ptr()));
  dl_span checked = make_dl_span(apex, lc, rc, std::move(s));
  return {std::move(checked.carrier), std::move(apex), std::move(lc),
          std::move(rc)};
}

cospan_doc parse_cospan_body(const njson& j, const std::string& path) {
  parsed_map l = parse_map_body(field(j, "left", path), path + ".left");
  parsed_map r = parse_map_body(field(j, "right", path), path + ".right");
  cospan c(std::move(l.f), std::move(r.f));
  if (!flag(j, "dl", false, path)) return {std::move(c), nullptr, nullptr, nullptr};
  dl_ptr coapex = l.cod_dl ? l.cod_dl : share(validate_dl(c.left().cod_ptr()));
  dl_ptr ld = l.dom_dl ? l.dom_dl : share(validate_dl(c.left().dom_ptr()));
  dl_ptr rd = r.dom_dl ? r.dom_dl : share(validate_dl(c.right().dom_ptr()));
  dl_cospan checked = make_dl_cospan(coapex, ld, rd, std::move(c));
  return {std::move(checked.carrier), std::move(coapex), std::move(ld),
          std::move(rd)};
}

square parse_square_body(const njson& j, const std::string& path) {
  span_doc s = parse_span_body(field(j, "span", path), path + ".span");
  cospan_doc c = parse_cospan_body(field(j, "cospan", path), path + ".cospan");
  return square(std::move(s.sp), std::move(c.csp));
}

check_report parse_report_body(const njson& j, const std::string& path) {
  const njson& ej = field(j, "entries", path);
  if (!ej.is_array()) bad(path + ".entries", "expected an array");
  check_report rep;
  rep.entries.reserve(ej.size());
  for (std::size_t i = 0; i < ej.size(); ++i) {
    std::string p = path + ".entries[" + std::to_string(i) + "]";
    const njson& e = ej[i];
    check_entry ce;
    ce.check = as_string(field(e, "check", p), p + ".check");
    ce.instance = as_string(field(e, "instance", p), p + ".instance");
    ce.pass = as_bool(field(e, "pass", p), p + ".pass");
    ce.witness = as_string(field(e, "witness", p), p + ".witness");
    rep.entries.push_back(std::move(ce));
  }
  return rep;
}

// --- serializing -------------------------------------------------------------

njson poset_json(const poset& p) {
  njson j;
  j["type"] = "poset";
  njson el = njson::array();
  for (auto& n : p.names()) el.push_back(n);
  j["elements"] = std::move(el);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto& [a, b] : p.covers()) pairs.emplace_back(p.name(a), p.name(b));
  std::sort(pairs.begin(), pairs.end());
  njson le = njson::array();
  for (auto& [a, b] : pairs) le.push_back(njson::array({a, b}));
  j["le"] = std::move(le);
  return j;
}

njson dl_json(const fin_dl& a) {
  njson j;
  j["type"] = "dl";
  j["poset"] = poset_json(a.carrier());
  return j;
}

njson carrier_json(const poset& p, const dl_ptr& d) {
  return d ? dl_json(*d) : poset_json(p);
}

njson map_json(const monotone_map& f, const dl_ptr& dd, const dl_ptr& cd) {
  njson j;
  j["type"] = "map";
  j["dom"] = carrier_json(f.dom(), dd);
  j["cod"] = carrier_json(f.cod(), cd);
  njson g = njson::object();
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    g[f.dom().name(i)] = f.cod().name(f(i));
  j["graph"] = std::move(g);
  return j;
}

njson rel_json(const rel_doc& d) {
  njson j;
  j["type"] = "rel";
  j["dom"] = carrier_json(d.rel.dom(), d.dom_dl);
  j["cod"] = carrier_json(d.rel.cod(), d.cod_dl);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t a = 0; a < d.rel.dom().size(); ++a)
    d.rel.row(a).for_each([&](std::size_t b) {
      pairs.emplace_back(d.rel.dom().name(a), d.rel.cod().name(b));
    });
  std::sort(pairs.begin(), pairs.end());
  njson pj = njson::array();
  for (auto& [a, b] : pairs) pj.push_back(njson::array({a, b}));
  j["pairs"] = std::move(pj);
  j["closed"] = true;
  if (d.is_dl()) j["dl"] = true;
  return j;
}

njson span_json(const span_doc& d) {
  njson j;
  j["type"] = "span";
  j["left"] = map_json(d.sp.left(), d.apex_dl, d.left_dl);
  j["right"] = map_json(d.sp.right(), d.apex_dl, d.right_dl);
  if (d.is_dl()) j["dl"] = true;
  return j;
}

njson cospan_json(const cospan_doc& d) {
  njson j;
  j["type"] = "cospan";
  j["left"] = map_json(d.csp.left(), d.left_dl, d.coapex_dl);
  j["right"] = map_json(d.csp.right(), d.right_dl, d.coapex_dl);
  if (d.is_dl()) j["dl"] = true;
  return j;
}

njson square_json(const square& sq) {
  njson j;
  j["type"] = "square";
  j["span"] = span_json({sq.inner(), nullptr, nullptr, nullptr});
  j["cospan"] = cospan_json({sq.outer(), nullptr, nullptr, nullptr});
  return j;
}

njson report_json(const check_report& rep) {
  njson j;
  j["type"] = "report";
  njson ej = njson::array();
  for (auto& e : rep.entries) {
    njson item;
    item["check"] = e.check;
    item["instance"] = e.instance;
    item["pass"] = e.pass;
    item["witness"] = e.witness;
    ej.push_back(std::move(item));
  }
  j["entries"] = std::move(ej);
  return j;
}

// --- DOT rendering -----------------------------------------------------------

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

// node declarations and Hasse edges, with ids prefix+name, in listed order
void dot_hasse(std::ostringstream& os, const poset& p, const std::string& prefix,
               const std::string& indent) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << indent << dot_quote(prefix + p.name(i));
    if (!prefix.empty()) os << " [label=" << dot_quote(p.name(i)) << "]";
    os << ";\n";
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto& [a, b] : p.covers()) edges.emplace_back(p.name(a), p.name(b));
  std::sort(edges.begin(), edges.end());
  for (auto& [a, b] : edges)
    os << indent << dot_quote(prefix + a) << " -> " << dot_quote(prefix + b)
       << ";\n";
}

std::string dot_poset(const poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  dot_hasse(os, p, "", "  ");
  os << "}\n";
  return os.str();
}

std::string dot_collage(const weak_rel& r) {
  const poset& a = r.dom();
  const poset& b = r.cod();
  std::ostringstream os;
  os << "digraph collage {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  os << "  subgraph cluster_dom {\n    label=\"dom\";\n";
  dot_hasse(os, a, "L:", "    ");
  os << "  }\n";
  os << "  subgraph cluster_cod {\n    label=\"cod\";\n";
  dot_hasse(os, b, "R:", "    ");
  os << "  }\n";
  // minimal cross edges: (x,y) not implied by another pair and the orders
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t x = 0; x < a.size(); ++x)
    r.row(x).for_each([&](std::size_t y) {
      bool redundant = false;
      a.up(x).for_each([&](std::size_t x2) {
        if (x2 != x && r.contains(x2, y)) redundant = true;
      });
      b.down(y).for_each([&](std::size_t y2) {
        if (y2 != y && r.contains(x, y2)) redundant = true;
      });
      if (!redundant) edges.emplace_back(a.name(x), b.name(y));
    });
  std::sort(edges.begin(), edges.end());
  for (auto& [x, y] : edges)
    os << "  " << dot_quote("L:" + x) << " -> " << dot_quote("R:" + y)
       << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

} // namespace

document parse_document(const std::string& text) {
  njson j;
  try {
    j = njson::parse(text);
  } catch (const njson::parse_error& e) {
    bad("$", std::string("invalid JSON (") + e.what() + ")");
  }
  std::string t = doc_type(j, "$");
  if (t == "poset") return parse_poset_body(j, "$");
  if (t == "map") return parse_map_body(j, "$").f;
  if (t == "rel") return parse_rel_body(j, "$");
  if (t == "dl") return parse_carrier(j, "$").d;
  if (t == "span") return parse_span_body(j, "$");
  if (t == "cospan") return parse_cospan_body(j, "$");
  if (t == "square") return parse_square_body(j, "$");
  if (t == "report") return parse_report_body(j, "$");
  bad("$.type", "unknown document type '" + t + "'");
}

std::string serialize_document(const document& doc) {
  njson j = std::visit(
      [](const auto& v) -> njson {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, poset_ptr>) return poset_json(*v);
        else if constexpr (std::is_same_v<T, monotone_map>)
          return map_json(v, nullptr, nullptr);
        else if constexpr (std::is_same_v<T, rel_doc>) return rel_json(v);
        else if constexpr (std::is_same_v<T, dl_ptr>) return dl_json(*v);
        else if constexpr (std::is_same_v<T, span_doc>) return span_json(v);
        else if constexpr (std::is_same_v<T, cospan_doc>) return cospan_json(v);
        else if constexpr (std::is_same_v<T, square>) return square_json(v);
        else return report_json(v);
      },
      doc);
  return j.dump(2);
}

std::string export_dot(const document& doc) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, poset_ptr>) return dot_poset(*v);
        else if constexpr (std::is_same_v<T, rel_doc>) return dot_collage(v.rel);
        else if constexpr (std::is_same_v<T, span_doc>)
          return dot_collage(rel_of_span(v.sp));
        else if constexpr (std::is_same_v<T, cospan_doc>)
          return dot_collage(rel_of_cospan(v.csp));
        else {
          fail(errc::unsupported_document,
               "DOT export covers posets, relations, spans and cospans");
        }
      },
      doc);
}

std::vector<weak_rel> enumerate_relations(poset_ptr dom, poset_ptr cod,
                                          const limits& lim) {
  return all_relations(std::move(dom), std::move(cod), lim);
}

} // namespace ordrel
