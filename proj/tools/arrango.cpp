// Command-line front end. Every verb reads its input through load(), calls
// the library and renders the result as text or, with --json, as a sorted
// JSON document carrying "schema": 1.
//
// Exit codes: 0 success, 1 a check suite failed, 2 usage, parse or
// precondition error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arrango/checks.hpp"
#include "arrango/classify.hpp"
#include "arrango/plot.hpp"
#include "arrango/report.hpp"
#include "json.hpp"

using namespace arrango;
using json = nlohmann::json;

namespace {

struct Options {
  bool json = false;
  std::vector<std::string> inputs;
  std::string name, output, gallery, suite;
  std::size_t start = 1, chamber = 0;
  bool signs = false, closure = false, diagram = false, list = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A readable file wins over a catalog name of the same spelling.
Arrangement load(const std::string &input) {
  std::vector<std::string> warnings;
  Arrangement a = std::filesystem::is_regular_file(input) ? read_arrangement_file(input, &warnings)
                                                          : gen::by_name(input);
  for (const auto &w : warnings) std::cerr << "warning: " << w << "\n";
  return a;
}

json set_json(const IndexSet &s) {
  json out = json::array();
  for (auto i : s.items()) out.push_back(i + 1);
  return out;
}

json covector_json(const Covector &v) {
  json out = json::array();
  for (const auto &x : v) out.push_back(x.to_string());
  return out;
}

json matrix_json(const IntMatrix &m) { return m; }

json matrix_json(const Matrix &m) {
  json out = json::array();
  for (const auto &row : m) out.push_back(covector_json(row));
  return out;
}

json graph_json(const CoxeterGraph &g) {
  json edges = json::array();
  for (const auto &[e, m] : g.edges) edges.push_back({e.first + 1, e.second + 1, m});
  return {{"vertices", g.vertices}, {"edges", edges}};
}

json multiset_json(const std::map<std::size_t, std::size_t> &m) {
  json out = json::object();
  for (const auto &[k, v] : m) out[std::to_string(k)] = v;
  return out;
}

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
  std::string out;
  for (const auto &p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

void emit(const Options &o, json doc, const std::string &text) {
  if (o.json) {
    doc["schema"] = 1;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

json certificate_json(const IntersectionLattice &L, const std::optional<SupersolvableCertificate> &c) {
  if (!c) return nullptr;
  json chain = json::array();
  for (auto x : c->chain) chain.push_back(set_json(L.set(x)));
  return {{"chain", chain}, {"exponents", c->exponents}};
}

std::string certificate_text(const IntersectionLattice &L, const SupersolvableCertificate &c) {
  std::ostringstream s;
  s << "modular chain:";
  for (auto x : c.chain) s << " " << format_set(L.set(x));
  std::vector<std::string> e;
  for (auto b : c.exponents) e.push_back(std::to_string(b));
  s << "\nexponents: " << join(e, ", ") << "\n";
  return s.str();
}

int cmd_gen(const Options &o) {
  if (o.list) {
    json names = gen::catalog_names();
    emit(o, {{"catalog", names}}, join(gen::catalog_names(), "\n") + "\n");
    return 0;
  }
  if (o.name.empty()) throw UsageError("gen needs a catalog name (see gen --list)");
  std::string text = write_arrangement(gen::by_name(o.name));
  if (!o.output.empty()) {
    std::ofstream(o.output) << text;
    return 0;
  }
  emit(o, {{"name", o.name}, {"arrangement", text}}, text);
  return 0;
}

int cmd_info(const Options &o) {
  Arrangement a = load(o.inputs[0]);
  Decomposition d = decompose(a);
  json blocks = json::array();
  std::vector<std::string> bt;
  for (const auto &b : d.blocks) {
    blocks.push_back(set_json(b));
    bt.push_back(format_set(b));
  }
  json doc = {{"dim", a.dim()},     {"size", a.size()},           {"rank", a.rank()},
              {"field", a.field().tag()}, {"real", a.is_real()},  {"essential", a.is_essential()},
              {"irreducible", d.irreducible}, {"blocks", blocks}};
  std::ostringstream s;
  s << "dim " << a.dim() << ", " << a.size() << " hyperplanes, rank " << a.rank() << ", field " << a.field().tag()
    << "\nreal: " << (a.is_real() ? "yes" : "no") << "\nessential: " << (a.is_essential() ? "yes" : "no")
    << "\nirreducible: " << (d.irreducible ? "yes" : "no") << "\nblocks: " << join(bt, " ") << "\n";
  emit(o, doc, s.str());
  return 0;
}

int cmd_lattice(const Options &o) {
  IntersectionLattice L(load(o.inputs[0]));
  json ranks = json::array();
  std::ostringstream s;
  for (std::size_t q = 0; q <= L.rank(); ++q) {
    json level = json::array();
    s << "rank " << q << " (" << L.level(q).size() << " flats):";
    for (auto x : L.level(q)) {
      level.push_back({{"hyperplanes", set_json(L.set(x))}, {"mobius", L.mobius(x)}});
      if (q <= 2 || q == L.rank()) s << " " << format_set(L.set(x)) << ":" << L.mobius(x);
    }
    if (q > 2 && q < L.rank()) s << " ...";
    s << "\n";
    ranks.push_back(level);
  }
  json modular = json::array();
  std::vector<std::string> mt;
  for (auto x : modular_flats(L)) {
    modular.push_back(set_json(L.set(x)));
    if (L.rank_of(x) > 0 && x != L.top()) mt.push_back(format_set(L.set(x)));
  }
  auto cert = supersolvable_certificate(L);
  CharPoly chi = L.char_poly();
  long long s_val = s_value(L);
  s << "chi(t) = " << chi.to_string() << "\ns(A) = " << s_val << "\nproper modular flats: " << join(mt, " ") << "\n";
  if (cert)
    s << certificate_text(L, *cert);
  else
    s << "not supersolvable\n";
  emit(o,
       {{"flats_by_rank", ranks},
        {"charpoly", chi.coefficients},
        {"s", s_val},
        {"modular_flats", modular},
        {"rank2_multiset", L.rank() >= 2 ? multiset_json(rank2_multiset(L)) : json(nullptr)},
        {"supersolvable", certificate_json(L, cert)}},
       s.str());
  return 0;
}

int cmd_charpoly(const Options &o) {
  IntersectionLattice L(load(o.inputs[0]));
  CharPoly chi = L.char_poly();
  auto roots = chi.integer_roots();
  json doc = {{"coefficients", chi.coefficients}, {"text", chi.to_string()}, {"roots", nullptr}};
  std::string text = "chi(t) = " + chi.to_string() + "\n";
  if (roots) {
    doc["roots"] = *roots;
    std::vector<std::string> r;
    for (auto x : *roots) r.push_back(std::to_string(x));
    text += "integer roots: " + join(r, ", ") + "\n";
  }
  emit(o, doc, text);
  return 0;
}

int cmd_simplicial(const Options &o) {
  Arrangement a = load(o.inputs[0]);
  IntersectionLattice L(a);
  long long s = s_value(L);
  json doc = {{"s", s}, {"combinatorial", s == 0}, {"geometric", nullptr}};
  std::string text = "s(A) = " + std::to_string(s) + "\ncombinatorially simplicial: " + (s == 0 ? "yes" : "no") + "\n";
  if (a.is_real()) {
    std::vector<std::string> notes;
    ChamberComplex cc = ChamberComplex::of(a, &notes);
    for (const auto &n : notes) std::cerr << "note: " << n << "\n";
    bool g = is_simplicial_geometric(cc);
    doc["geometric"] = g;
    doc["chambers"] = cc.size();
    text += "simplicial (chambers are simplicial cones): " + std::string(g ? "yes" : "no") + ", " +
            std::to_string(cc.size()) + " chambers\n";
  } else {
    text += "not real: only the combinatorial test applies\n";
  }
  emit(o, doc, text);
  return 0;
}

int cmd_supersolvable(const Options &o) {
  IntersectionLattice L(load(o.inputs[0]));
  auto cert = supersolvable_certificate(L);
  emit(o, {{"supersolvable", cert.has_value()}, {"certificate", certificate_json(L, cert)}},
       cert ? "supersolvable\n" + certificate_text(L, *cert) : "not supersolvable\n");
  return 0;
}

ChamberComplex complex_of(const Arrangement &a) {
  if (!a.is_real()) throw ChamberError("chambers need a real arrangement");
  std::vector<std::string> notes;
  ChamberComplex cc = ChamberComplex::of(a, &notes);
  for (const auto &n : notes) std::cerr << "note: " << n << "\n";
  return cc;
}

std::size_t chamber_index(const ChamberComplex &cc, std::size_t one_based) {
  if (one_based < 1 || one_based > cc.size())
    throw UsageError("chamber " + std::to_string(one_based) + " out of range 1.." + std::to_string(cc.size()));
  return one_based - 1;
}

std::vector<std::size_t> parse_list(const std::string &text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception &) {
      pos = 0;
    }
    if (pos != item.size() || v == 0) throw UsageError("bad gallery entry '" + item + "'");
    out.push_back(v - 1);
  }
  return out;
}

json frame_json(const Frame &f) {
  json roots = json::array();
  for (const auto &r : f.roots) roots.push_back(covector_json(r));
  json walls = json::array();
  for (auto h : f.hyperplanes) walls.push_back(h + 1);
  return {{"chamber", f.chamber + 1}, {"roots", roots}, {"walls", walls}};
}

std::string frame_text(const Frame &f) {
  std::string s = "chamber " + std::to_string(f.chamber + 1) + ":";
  for (std::size_t j = 0; j < f.roots.size(); ++j)
    s += " a" + std::to_string(j + 1) + "=H" + std::to_string(f.hyperplanes[j] + 1) + format_covector(f.roots[j]);
  return s + "\n";
}

int cmd_chambers(const Options &o) {
  ChamberComplex cc = complex_of(load(o.inputs[0]));
  json list = json::array();
  std::ostringstream s;
  s << cc.size() << " chambers\n";
  for (std::size_t k = 0; k < cc.size(); ++k) {
    const Chamber &c = cc.chamber(k);
    json walls = json::array();
    std::vector<std::string> wt;
    for (auto h : c.walls) {
      walls.push_back(h + 1);
      wt.push_back(std::to_string(h + 1));
    }
    json entry = {{"walls", walls}};
    s << k + 1 << ": walls " << join(wt, " ");
    if (o.signs) {
      entry["signs"] = c.signs;
      s << "  " << c.signs;
    }
    s << "\n";
    list.push_back(entry);
  }
  json doc = {{"count", cc.size()}, {"chambers", list}};
  if (!o.gallery.empty()) {
    Frame f = canonical_frame(cc, chamber_index(cc, o.start));
    json steps = json::array({frame_json(f)});
    s << "gallery from chamber " << o.start << ":\n" << frame_text(f);
    for (auto i : parse_list(o.gallery)) {
      if (i >= f.roots.size()) throw UsageError("wall " + std::to_string(i + 1) + " out of range");
      f = sigma(cc, f, i);
      steps.push_back(frame_json(f));
      s << frame_text(f);
    }
    doc["gallery"] = steps;
  }
  emit(o, doc, s.str());
  return 0;
}

int cmd_coxeter(const Options &o) {
  ChamberComplex cc = complex_of(load(o.inputs[0]));
  json doc = json::object();
  std::ostringstream s;
  std::vector<std::size_t> which;
  if (o.chamber)
    which.push_back(chamber_index(cc, o.chamber));
  else
    for (std::size_t k = 0; k < cc.size(); ++k) which.push_back(k);
  json list = json::array();
  for (auto k : which) {
    Frame f = canonical_frame(cc, k);
    CoxeterGraph g = coxeter_graph(cc, f);
    json entry = {{"chamber", k + 1}, {"graph", graph_json(g)}, {"cartan", nullptr}};
    s << k + 1 << ": " << g.to_string();
    if (auto c = cartan_matrix(cc, f)) {
      entry["cartan"] = {{"matrix", matrix_json(c->entries)}, {"type", to_string(c->type)}};
      s << "  cartan " << format_matrix(c->entries) << " type " << to_string(c->type);
    }
    s << "\n";
    list.push_back(entry);
  }
  doc["chambers"] = list;
  Frame start = canonical_frame(cc, which.front());
  if (o.closure) {
    ClosureResult r = root_system_closure(cc, start);
    if (r.system) {
      json roots = json::array();
      s << "closure from chamber " << which.front() + 1 << ": " << r.system->roots.size() << " roots, "
        << (is_reduced(cc, *r.system) ? "reduced" : "not reduced") << ", "
        << (in_integer_span(*r.system) ? "in the integer span of every basis" : "not integral") << "\n";
      for (const auto &v : r.system->roots) {
        roots.push_back(covector_json(v));
        s << "  " << format_covector(v) << "\n";
      }
      doc["closure"] = {{"roots", roots},
                        {"reduced", is_reduced(cc, *r.system)},
                        {"integral", in_integer_span(*r.system)}};
    } else {
      auto [k, from] = *r.conflict;
      s << "closure inconsistent: chamber " << k + 1 << " reached again from chamber " << from + 1
        << " with a different basis\n";
      doc["closure"] = {{"conflict", {{"chamber", k + 1}, {"from", from + 1}}}};
    }
  }
  if (o.diagram) {
    GraphChangeDiagram d = graph_change_diagram(cc, start);
    json classes = json::array();
    s << "graph-change diagram (" << d.classes.size() << " classes"
      << (d.deterministic ? "" : ", not deterministic") << "):\n";
    for (std::size_t c = 0; c < d.classes.size(); ++c) {
      json next = json::array();
      std::vector<std::string> nt;
      for (auto t : d.next[c]) {
        next.push_back(t + 1);
        nt.push_back(std::to_string(t + 1));
      }
      classes.push_back({{"graph", graph_json(d.classes[c])}, {"next", next}, {"frames", d.frames[c]}});
      s << "  " << c + 1 << ": " << d.classes[c].to_string() << "  -> " << join(nt, " ") << "\n";
    }
    doc["diagram"] = {{"classes", classes}, {"deterministic", d.deterministic}};
  }
  emit(o, doc, s.str());
  return 0;
}

int cmd_iso(const Options &o) {
  if (o.inputs.size() != 2) throw UsageError("iso needs two arrangements");
  IntersectionLattice l1(load(o.inputs[0])), l2(load(o.inputs[1]));
  auto perm = lattice_isomorphism(l1, l2);
  json doc = {{"isomorphic", perm.has_value()}, {"map", nullptr}};
  std::string text = perm ? "isomorphic\n" : "not isomorphic\n";
  if (perm) {
    json m = json::array();
    std::vector<std::string> mt;
    for (std::size_t i = 0; i < perm->size(); ++i) {
      m.push_back((*perm)[i] + 1);
      mt.push_back(std::to_string(i + 1) + "->" + std::to_string((*perm)[i] + 1));
    }
    doc["map"] = m;
    text += "hyperplanes: " + join(mt, " ") + "\n";
  }
  emit(o, doc, text);
  return 0;
}

int cmd_classify(const Options &o) {
  Classification c = classify(load(o.inputs[0]));
  auto opt = [](const std::optional<bool> &b) -> json { return b ? json(*b) : json(nullptr); };
  json doc = {{"dim", c.dim},
              {"rank", c.rank},
              {"size", c.size},
              {"real", c.real},
              {"irreducible", c.irreducible},
              {"simplicial", c.simplicial},
              {"simplicial_test", c.simplicial_test},
              {"supersolvable", c.supersolvable},
              {"crystallographic", opt(c.crystallographic)},
              {"identified", c.identified ? json(*c.identified) : json(nullptr)},
              {"notes", c.notes}};
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  std::ostringstream s;
  s << "rank " << c.rank << ", " << c.size << " hyperplanes\n"
    << "irreducible: " << yn(c.irreducible) << "\nsimplicial: " << yn(c.simplicial) << " (" << c.simplicial_test
    << ")\nsupersolvable: " << yn(c.supersolvable)
    << "\ncrystallographic: " << (c.crystallographic ? yn(*c.crystallographic) : "n/a")
    << "\nidentified: " << c.identified.value_or("none") << "\n";
  for (const auto &n : c.notes) s << "note: " << n << "\n";
  emit(o, doc, s.str());
  return 0;
}

int cmd_check(const Options &o) {
  if (o.list) {
    json list = json::array();
    std::string text;
    for (const auto &suite : check_suites()) {
      list.push_back({{"id", suite.id}, {"title", suite.title}});
      text += suite.id + "  " + suite.title + "\n";
    }
    emit(o, {{"suites", list}}, text);
    return 0;
  }
  if (o.suite.empty()) throw UsageError("check needs a suite id or 'all' (see check --list)");
  std::vector<std::string> ids;
  if (o.suite == "all")
    for (const auto &suite : check_suites()) ids.push_back(suite.id);
  else
    ids.push_back(o.suite);
  bool all = true;
  json results = json::array();
  std::ostringstream s;
  for (const auto &id : ids) {
    CheckResult r = run_check(id);
    all = all && r.passed;
    results.push_back({{"id", r.id}, {"passed", r.passed}, {"details", r.details}});
    s << (r.passed ? "PASS " : "FAIL ") << r.id << "\n";
    for (const auto &line : r.details) s << "  " << line << "\n";
  }
  emit(o, {{"passed", all}, {"results", results}}, s.str());
  return all ? 0 : 1;
}

int cmd_plot(const Options &o) {
  std::string svg = plot_svg(load(o.inputs[0]));
  if (o.output.empty())
    std::cout << svg;
  else
    std::ofstream(o.output) << svg;
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations with hyperplane arrangements"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  unsigned precision = 0;
  app.add_option("--precision", precision, "Initial bits for sign enclosures (default ARRANGO_PRECISION or 64)");

  auto input = [&](CLI::App *c) {
    c->add_option("input", o.inputs, "Arrangement file or catalog name")->required()->expected(1);
  };
  auto *gen = app.add_subcommand("gen", "Write a catalog arrangement");
  gen->add_option("name", o.name, "Catalog name, e.g. A(9,1), reflC:4, Alk:4:3");
  gen->add_option("-o,--output", o.output, "Output file");
  gen->add_flag("--list", o.list, "List catalog names");
  auto *info = app.add_subcommand("info", "Dimension, field, rank and irreducible blocks");
  input(info);
  auto *lattice = app.add_subcommand("lattice", "Intersection lattice, Moebius values, modular flats");
  input(lattice);
  auto *charpoly = app.add_subcommand("charpoly", "Characteristic polynomial");
  input(charpoly);
  auto *simplicial = app.add_subcommand("simplicial", "Geometric and combinatorial simpliciality");
  input(simplicial);
  auto *supersolvable = app.add_subcommand("supersolvable", "Supersolvability with a modular chain");
  input(supersolvable);
  auto *chambers = app.add_subcommand("chambers", "Chambers, walls and galleries");
  input(chambers);
  chambers->add_flag("--signs", o.signs, "Print sign vectors");
  chambers->add_option("--gallery", o.gallery, "Comma-separated wall numbers to cross, 1-based");
  chambers->add_option("--start", o.start, "Start chamber of the gallery, 1-based");
  auto *coxeter = app.add_subcommand("coxeter", "Coxeter graphs and Cartan matrices of chambers");
  input(coxeter);
  coxeter->add_option("--chamber", o.chamber, "Only this chamber, 1-based; also the closure start");
  coxeter->add_flag("--closure", o.closure, "Root system closure from the chamber basis");
  coxeter->add_flag("--diagram", o.diagram, "Graph-change diagram");
  auto *iso = app.add_subcommand("iso", "Lattice isomorphism of two arrangements");
  iso->add_option("inputs", o.inputs, "Two arrangement files or catalog names")->required()->expected(2);
  auto *classify = app.add_subcommand("classify", "Place an arrangement in the classification");
  input(classify);
  auto *check = app.add_subcommand("check", "Run a property suite");
  check->add_option("suite", o.suite, "Suite id or 'all'");
  check->add_flag("--list", o.list, "List suites");
  auto *plot = app.add_subcommand("plot", "SVG projective picture of a real rank-3 arrangement");
  input(plot);
  plot->add_option("-o,--output", o.output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (precision) set_sign_precision(precision);

  const std::vector<std::pair<CLI::App *, int (*)(const Options &)>> verbs = {
      {gen, cmd_gen},           {info, cmd_info},         {lattice, cmd_lattice},   {charpoly, cmd_charpoly},
      {simplicial, cmd_simplicial}, {supersolvable, cmd_supersolvable}, {chambers, cmd_chambers},
      {coxeter, cmd_coxeter},   {iso, cmd_iso},           {classify, cmd_classify}, {check, cmd_check},
      {plot, cmd_plot}};
  try {
    for (const auto &[sub, run] : verbs)
      if (sub->parsed()) return run(o);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
