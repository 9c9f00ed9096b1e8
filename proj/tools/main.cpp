#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordrel/apps.hpp"
#include "ordrel/error.hpp"
#include "ordrel/io.hpp"
#include "ordrel/suite.hpp"

namespace {

using ordrel::document;

struct io_opts {
  std::string in_path;  // empty: stdin
  std::string out_path; // empty: stdout
};

void add_io(CLI::App* cmd, io_opts& io) {
  cmd->add_option("--in", io.in_path, "input file (default: stdin)");
  cmd->add_option("--out", io.out_path, "output file (default: stdout)");
}

std::string read_input(const io_opts& io) {
  if (io.in_path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(io.in_path);
  if (!f) ordrel::fail(ordrel::errc::schema_error,
                       "cannot open input file '" + io.in_path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const io_opts& io, const std::string& text) {
  std::string payload = text;
  if (payload.empty() || payload.back() != '\n') payload += '\n';
  if (io.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(io.out_path);
  if (!f) ordrel::fail(ordrel::errc::schema_error,
                       "cannot open output file '" + io.out_path + "'");
  f << payload;
}

document parse_one(const io_opts& io) {
  return ordrel::parse_document(read_input(io));
}

// commands taking several documents read a top-level JSON array
std::vector<document> parse_many(const io_opts& io, std::size_t expect) {
  std::string text = read_input(io);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    ordrel::fail(ordrel::errc::schema_error,
                 std::string("$: invalid JSON (") + e.what() + ")");
  }
  if (!j.is_array())
    ordrel::fail(ordrel::errc::schema_error,
                 "$: expected an array of " + std::to_string(expect) +
                     " documents");
  if (j.size() != expect)
    ordrel::fail(ordrel::errc::schema_error,
                 "$: expected " + std::to_string(expect) + " documents, got " +
                     std::to_string(j.size()));
  std::vector<document> docs;
  docs.reserve(j.size());
  for (auto& el : j) docs.push_back(ordrel::parse_document(el.dump()));
  return docs;
}

template <class T>
const T& expect_doc(const document& d, const char* what) {
  const T* p = std::get_if<T>(&d);
  if (!p) ordrel::fail(ordrel::errc::type_mismatch,
                       std::string("this command expects a ") + what +
                           " document");
  return *p;
}

ordrel::limits effective_limits(std::size_t max_size) {
  return max_size > 0 ? ordrel::limits_for_size(max_size)
                      : ordrel::default_limits();
}

// --- individual commands ----------------------------------------------------

void cmd_validate(const io_opts& io) {
  write_output(io, ordrel::serialize_document(parse_one(io)));
}

void cmd_dual(const io_opts& io, const ordrel::limits& lim) {
  document d = parse_one(io);
  if (auto* p = std::get_if<ordrel::poset_ptr>(&d)) {
    ordrel::upset_lattice u = ordrel::dual_space(*p, lim);
    write_output(io, ordrel::serialize_document(u.dl));
    return;
  }
  if (auto* a = std::get_if<ordrel::dl_ptr>(&d)) {
    ordrel::prime_filter_poset pf = ordrel::dual_algebra(*a, lim);
    write_output(io, ordrel::serialize_document(pf.pf));
    return;
  }
  ordrel::fail(ordrel::errc::type_mismatch,
               "dual expects a poset or dl document");
}

void cmd_dual_rel(const io_opts& io, const ordrel::limits& lim,
                  const std::string& via) {
  document doc = parse_one(io);
  const auto& rd = expect_doc<ordrel::rel_doc>(doc, "rel");
  if (!rd.is_dl()) {
    ordrel::upset_lattice ux = ordrel::dual_space(rd.rel.dom_ptr(), lim);
    ordrel::upset_lattice uy = ordrel::dual_space(rd.rel.cod_ptr(), lim);
    ordrel::weak_rel d =
        via == "span"     ? ordrel::dual_rel_via_span(rd.rel, ux, uy, lim)
        : via == "cospan" ? ordrel::dual_rel_via_cospan(rd.rel, ux, uy, lim)
                          : ordrel::dual_rel_formula(rd.rel, ux, uy);
    write_output(io, ordrel::serialize_document(
                         ordrel::rel_doc{std::move(d), ux.dl, uy.dl}));
    return;
  }
  ordrel::dl_rel r{rd.dom_dl, rd.cod_dl, rd.rel};
  ordrel::prime_filter_poset pa = ordrel::dual_algebra(rd.dom_dl, lim);
  ordrel::prime_filter_poset pb = ordrel::dual_algebra(rd.cod_dl, lim);
  ordrel::weak_rel d =
      via == "span"     ? ordrel::dual_rel_via_span(r, pa, pb, lim)
      : via == "cospan" ? ordrel::dual_rel_via_cospan(r, pa, pb, lim)
                        : ordrel::dual_rel_formula(r, pa, pb);
  write_output(io, ordrel::serialize_document(
                       ordrel::rel_doc{std::move(d), nullptr, nullptr}));
}

void cmd_comma(const io_opts& io) {
  document doc = parse_one(io);
  const auto& cd = expect_doc<ordrel::cospan_doc>(doc, "cospan");
  if (cd.is_dl()) {
    ordrel::dl_span s = ordrel::dl_comma(ordrel::dl_cospan{
        cd.coapex_dl, cd.left_dl, cd.right_dl, cd.csp});
    write_output(io, ordrel::serialize_document(ordrel::span_doc{
                         s.carrier, s.apex, s.left_cod, s.right_cod}));
    return;
  }
  write_output(io, ordrel::serialize_document(ordrel::span_doc{
                       ordrel::comma(cd.csp), nullptr, nullptr, nullptr}));
}

void cmd_cocomma(const io_opts& io, const ordrel::limits& lim) {
  document doc = parse_one(io);
  const auto& sd = expect_doc<ordrel::span_doc>(doc, "span");
  if (sd.is_dl()) {
    ordrel::dl_cospan c = ordrel::dl_cocomma_via_duality(
        ordrel::dl_span{sd.apex_dl, sd.left_dl, sd.right_dl, sd.sp}, lim);
    write_output(io, ordrel::serialize_document(ordrel::cospan_doc{
                         c.carrier, c.coapex, c.left_dom, c.right_dom}));
    return;
  }
  write_output(io, ordrel::serialize_document(ordrel::cospan_doc{
                       ordrel::cocomma(sd.sp), nullptr, nullptr, nullptr}));
}

void cmd_parallel(const io_opts& io, bool co) {
  std::vector<document> docs = parse_many(io, 2);
  const auto& f = expect_doc<ordrel::monotone_map>(docs[0], "map");
  const auto& g = expect_doc<ordrel::monotone_map>(docs[1], "map");
  ordrel::monotone_map out =
      co ? ordrel::coinserter(f, g) : ordrel::inserter(f, g);
  write_output(io, ordrel::serialize_document(out));
}

void cmd_compose(const io_opts& io, const ordrel::limits& lim) {
  std::vector<document> docs = parse_many(io, 2);
  // maps: diagrammatic order, first then second
  if (auto* f = std::get_if<ordrel::monotone_map>(&docs[0])) {
    const auto& g = expect_doc<ordrel::monotone_map>(docs[1], "map");
    write_output(io, ordrel::serialize_document(ordrel::compose(g, *f)));
    return;
  }
  if (auto* r = std::get_if<ordrel::rel_doc>(&docs[0])) {
    const auto& s = expect_doc<ordrel::rel_doc>(docs[1], "rel");
    ordrel::weak_rel rs = ordrel::compose_rel(r->rel, s.rel);
    if (r->is_dl() && s.is_dl()) {
      ordrel::dl_rel checked =
          ordrel::make_dl_rel(r->dom_dl, s.cod_dl, std::move(rs));
      write_output(io, ordrel::serialize_document(ordrel::rel_doc{
                           std::move(checked.rel), r->dom_dl, s.cod_dl}));
    } else {
      write_output(io, ordrel::serialize_document(
                           ordrel::rel_doc{std::move(rs), nullptr, nullptr}));
    }
    return;
  }
  if (auto* s1 = std::get_if<ordrel::span_doc>(&docs[0])) {
    const auto& s2 = expect_doc<ordrel::span_doc>(docs[1], "span");
    if (s1->is_dl() && s2.is_dl()) {
      ordrel::dl_cospan mid = ordrel::make_dl_cospan(
          s1->right_dl, s1->apex_dl, s2.apex_dl,
          ordrel::cospan(s1->sp.right(), s2.sp.left()));
      ordrel::dl_span m = ordrel::dl_comma(mid);
      write_output(
          io, ordrel::serialize_document(ordrel::span_doc{
                  ordrel::span(
                      ordrel::compose(s1->sp.left(), m.carrier.left()),
                      ordrel::compose(s2.sp.right(), m.carrier.right())),
                  m.apex, s1->left_dl, s2.right_dl}));
    } else {
      write_output(io, ordrel::serialize_document(
                           ordrel::span_doc{ordrel::compose_spans(s1->sp, s2.sp),
                                            nullptr, nullptr, nullptr}));
    }
    return;
  }
  if (auto* c1 = std::get_if<ordrel::cospan_doc>(&docs[0])) {
    const auto& c2 = expect_doc<ordrel::cospan_doc>(docs[1], "cospan");
    if (c1->is_dl() && c2.is_dl()) {
      ordrel::dl_span mid = ordrel::make_dl_span(
          c1->right_dl, c1->coapex_dl, c2.coapex_dl,
          ordrel::span(c1->csp.right(), c2.csp.left()));
      ordrel::dl_cospan q = ordrel::dl_cocomma_via_duality(mid, lim);
      write_output(
          io, ordrel::serialize_document(ordrel::cospan_doc{
                  ordrel::cospan(
                      ordrel::compose(q.carrier.left(), c1->csp.left()),
                      ordrel::compose(q.carrier.right(), c2.csp.right())),
                  q.coapex, c1->left_dl, c2.right_dl}));
    } else {
      write_output(io, ordrel::serialize_document(ordrel::cospan_doc{
                           ordrel::compose_cospans(c1->csp, c2.csp), nullptr,
                           nullptr, nullptr}));
    }
    return;
  }
  ordrel::fail(ordrel::errc::type_mismatch,
               "compose expects two maps, rels, spans, or cospans");
}

void cmd_roundtrip(const io_opts& io, const ordrel::limits& lim) {
  document doc = parse_one(io);
  const auto& rd = expect_doc<ordrel::rel_doc>(doc, "rel");
  ordrel::roundtrip_report rt = ordrel::roundtrip_relation(rd.rel, lim);
  ordrel::check_report rep;
  rep.entries.push_back(
      {"roundtrip", std::to_string(rd.rel.pair_count()) + " pairs", rt.equal,
       rt.witness});
  write_output(io, ordrel::serialize_document(rep));
  if (!rt.equal) std::exit(1);
}

void cmd_exact_check(const io_opts& io) {
  document doc = parse_one(io);
  const auto& sq = expect_doc<ordrel::square>(doc, "square");
  ordrel::exact_result ex = ordrel::is_exact(sq);
  ordrel::check_report rep;
  rep.entries.push_back({"exact-square", "1 square", ex.exact, ex.witness});
  write_output(io, ordrel::serialize_document(rep));
}

void cmd_classify(const io_opts& io) {
  document d = parse_one(io);
  ordrel::check_report rep;
  if (auto* f = std::get_if<ordrel::monotone_map>(&d)) {
    ordrel::map_class mc = ordrel::classify_map(*f);
    rep.entries = {{"injective", "map", mc.injective, ""},
                   {"surjective", "map", mc.surjective, ""},
                   {"embedding", "map", mc.embedding, ""},
                   {"iso", "map", mc.iso, ""}};
  } else if (auto* s = std::get_if<ordrel::span_doc>(&d)) {
    ordrel::span_class sc = ordrel::classify_span(s->sp);
    rep.entries = {{"weakening-closed", "span", sc.weakening_closed, ""},
                   {"embedding", "span", sc.embedding, ""},
                   {"graph", "span", sc.graph, ""}};
  } else if (auto* c = std::get_if<ordrel::cospan_doc>(&d)) {
    ordrel::cospan_class cc = ordrel::classify_cospan(c->csp);
    rep.entries = {{"bipartite", "cospan", cc.bipartite, ""},
                   {"onto", "cospan", cc.onto, ""},
                   {"collage", "cospan", cc.collage, ""}};
  } else {
    ordrel::fail(ordrel::errc::type_mismatch,
                 "classify expects a map, span, or cospan document");
  }
  write_output(io, ordrel::serialize_document(rep));
}

void cmd_hoare_theory(const io_opts& io, const ordrel::limits& lim) {
  document doc = parse_one(io);
  const auto& rd = expect_doc<ordrel::rel_doc>(doc, "rel");
  ordrel::upset_lattice ux = ordrel::dual_space(rd.rel.dom_ptr(), lim);
  ordrel::upset_lattice uy = ordrel::dual_space(rd.rel.cod_ptr(), lim);
  ordrel::weak_rel theory = ordrel::hoare_theory(rd.rel, ux, uy);
  write_output(io, ordrel::serialize_document(
                       ordrel::rel_doc{std::move(theory), ux.dl, uy.dl}));
}

void cmd_hoare_impl(const io_opts& io, const ordrel::limits& lim) {
  std::vector<document> docs = parse_many(io, 3);
  const auto& spec = expect_doc<ordrel::rel_doc>(docs[0], "rel");
  const auto& x = expect_doc<ordrel::poset_ptr>(docs[1], "poset");
  const auto& y = expect_doc<ordrel::poset_ptr>(docs[2], "poset");
  ordrel::upset_lattice ux = ordrel::dual_space(x, lim);
  ordrel::upset_lattice uy = ordrel::dual_space(y, lim);
  ordrel::weak_rel impl = ordrel::hoare_implementation(spec.rel, ux, uy);
  write_output(io, ordrel::serialize_document(
                       ordrel::rel_doc{std::move(impl), nullptr, nullptr}));
}

void cmd_quotient(const io_opts& io) {
  document doc = parse_one(io);
  const auto& rd = expect_doc<ordrel::rel_doc>(doc, "rel");
  write_output(io, ordrel::serialize_document(
                       ordrel::quotient_by_preorder(rd.rel)));
}

void cmd_framed_check(const io_opts& io) {
  std::vector<document> docs = parse_many(io, 4);
  const auto& s = expect_doc<ordrel::rel_doc>(docs[0], "rel");
  const auto& f = expect_doc<ordrel::monotone_map>(docs[1], "map");
  const auto& g = expect_doc<ordrel::monotone_map>(docs[2], "map");
  const auto& r = expect_doc<ordrel::rel_doc>(docs[3], "rel");
  ordrel::framed_cell_verdict v = ordrel::framed_cell_check(s.rel, f, g, r.rel);
  ordrel::check_report rep;
  rep.entries = {{"cell-restriction", "S <= R(f,g)", v.by_restriction, ""},
                 {"cell-square", "S;g* <= f*;R", v.by_square, ""},
                 {"cell-extension", "f*;S;g* <= R", v.by_extension, ""},
                 {"cell-graph", "S <= f*;R;g*", v.by_graph, ""},
                 {"cell-holds", "all formulations", v.holds, ""}};
  write_output(io, ordrel::serialize_document(rep));
}

void cmd_dl_cocomma(const io_opts& io, const ordrel::limits& lim) {
  document doc = parse_one(io);
  const auto& sd = expect_doc<ordrel::span_doc>(doc, "span");
  if (!sd.is_dl())
    ordrel::fail(ordrel::errc::type_mismatch,
                 "dl-cocomma expects a span document with \"dl\": true");
  ordrel::dl_cospan c = ordrel::dl_cocomma_via_duality(
      ordrel::dl_span{sd.apex_dl, sd.left_dl, sd.right_dl, sd.sp}, lim);
  write_output(io, ordrel::serialize_document(ordrel::cospan_doc{
                       c.carrier, c.coapex, c.left_dom, c.right_dom}));
}

void cmd_dot(const io_opts& io) {
  write_output(io, ordrel::export_dot(parse_one(io)));
}

int cmd_suite(const io_opts& io, const ordrel::suite_config& cfg, bool json) {
  ordrel::check_report rep = ordrel::run_suite(cfg);
  if (json)
    write_output(io, ordrel::serialize_document(rep));
  else
    write_output(io, ordrel::format_report(rep));
  return rep.all_pass() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite posets, weakening relations, and the upset-lattice "
               "duality"};
  app.require_subcommand(1);

  std::size_t max_size = 0;
  app.add_option("--max-size", max_size,
                 "override size guards (like ORDREL_MAX_SIZE)");

  io_opts io;
  std::string via = "formula";
  ordrel::suite_config scfg;
  bool suite_json = false;

  CLI::App* validate = app.add_subcommand("validate", "parse and re-serialize");
  CLI::App* dual = app.add_subcommand("dual", "dualize a poset or lattice");
  CLI::App* dual_rel = app.add_subcommand("dual-rel", "dualize a relation");
  dual_rel->add_option("--via", via, "construction: formula|span|cospan")
      ->check(CLI::IsMember({"formula", "span", "cospan"}));
  CLI::App* comma = app.add_subcommand("comma", "comma of a cospan");
  CLI::App* cocomma = app.add_subcommand("cocomma", "cocomma of a span");
  CLI::App* coinserter =
      app.add_subcommand("coinserter", "coinserter of a parallel pair [f,g]");
  CLI::App* inserter =
      app.add_subcommand("inserter", "inserter of a parallel pair [j,k]");
  CLI::App* compose =
      app.add_subcommand("compose", "compose two documents [first,second]");
  CLI::App* roundtrip =
      app.add_subcommand("roundtrip", "double-dualize and transport back");
  CLI::App* exact_check =
      app.add_subcommand("exact-check", "test a square for exactness");
  CLI::App* classify =
      app.add_subcommand("classify", "classify a map, span, or cospan");
  CLI::App* hoare_theory =
      app.add_subcommand("hoare-theory", "all valid triples of a relation");
  CLI::App* hoare_impl = app.add_subcommand(
      "hoare-impl", "largest relation satisfying a spec [spec,X,Y]");
  CLI::App* quotient =
      app.add_subcommand("quotient", "quotient map of a preorder relation");
  CLI::App* framed_check =
      app.add_subcommand("framed-check", "check a framed cell [S,f,g,R]");
  CLI::App* dl_cocomma =
      app.add_subcommand("dl-cocomma", "cocomma of a lattice span via duality");
  CLI::App* dot = app.add_subcommand("dot", "Graphviz rendering");
  CLI::App* suite = app.add_subcommand("suite", "run the acceptance suite");
  suite->add_option("--size", scfg.max_poset_size, "exhaustive tier bound");
  suite->add_option("--sampled-size", scfg.sampled_size, "random tier size");
  suite->add_option("--seed", scfg.random_seed, "random tier seed");
  suite->add_option("--samples", scfg.sample_count, "random tier count");
  suite->add_flag("--json", suite_json, "emit the report as JSON");

  for (CLI::App* cmd :
       {validate, dual, dual_rel, comma, cocomma, coinserter, inserter,
        compose, roundtrip, exact_check, classify, hoare_theory, hoare_impl,
        quotient, framed_check, dl_cocomma, dot, suite})
    add_io(cmd, io);

  CLI11_PARSE(app, argc, argv);

  try {
    ordrel::limits lim = effective_limits(max_size);
    if (*validate) cmd_validate(io);
    else if (*dual) cmd_dual(io, lim);
    else if (*dual_rel) cmd_dual_rel(io, lim, via);
    else if (*comma) cmd_comma(io);
    else if (*cocomma) cmd_cocomma(io, lim);
    else if (*coinserter) cmd_parallel(io, /*co=*/true);
    else if (*inserter) cmd_parallel(io, /*co=*/false);
    else if (*compose) cmd_compose(io, lim);
    else if (*roundtrip) cmd_roundtrip(io, lim);
    else if (*exact_check) cmd_exact_check(io);
    else if (*classify) cmd_classify(io);
    else if (*hoare_theory) cmd_hoare_theory(io, lim);
    else if (*hoare_impl) cmd_hoare_impl(io, lim);
    else if (*quotient) cmd_quotient(io);
    else if (*framed_check) cmd_framed_check(io);
    else if (*dl_cocomma) cmd_dl_cocomma(io, lim);
    else if (*dot) cmd_dot(io);
    else if (*suite) {
      scfg.lim = lim;
      return cmd_suite(io, scfg, suite_json);
    }
  } catch (const ordrel::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
