#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <string>

#include "arrango/chambers.hpp"
#include "arrango/checks.hpp"
#include "arrango/classify.hpp"
#include "arrango/plot.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace arrango;
using json = nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string &args) {
  std::string cmd = std::string(ARRANGO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

json run_json(const std::string &args) {
  Run r = run("--json " + args);
  REQUIRE(r.status == 0);
  return json::parse(r.out);
}

std::string temp_path(const std::string &name) { return "/tmp/arrango_test_cli_" + name; }

std::size_t count(const std::string &text, const std::string &what) {
  std::size_t n = 0;
  for (auto p = text.find(what); p != std::string::npos; p = text.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("info").status == 2);
  CHECK(run("info no-such-arrangement").status == 2);
  CHECK(run("check no-such-suite").status == 2);
  CHECK(run("iso 'A(9,1)'").status == 2);
  CHECK(run("plot boolean:4").status == 2);
  CHECK(run("chambers g314-D").status == 2);
  CHECK(run("chambers 'A(6,1)' --gallery 1,x").status == 2);
  CHECK(run("check s-values").status == 0);
  CHECK(run("--help").status == 0);
  std::ofstream(temp_path("bad.txt")) << "dim 2\nfield QQ\n1 0\n0 0\n";
  CHECK(run(temp_path("bad.txt") + " info").status == 2);
  CHECK(run("info " + temp_path("bad.txt")).status == 2);
}

TEST_CASE("gen writes a file that reads back") {
  const std::string path = temp_path("a91.txt");
  REQUIRE(run("gen 'A(9,1)' -o " + path).status == 0);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == write_arrangement(gen::A_4n1_1(2)));
  CHECK(run_json("charpoly " + path) == run_json("charpoly 'A(9,1)'"));
  std::ofstream(temp_path("b2.txt")) << "dim 2\n1 0\n0 1\n";
  CHECK(run_json("info " + temp_path("b2.txt"))["size"] == 2);
}

TEST_CASE("json output is versioned and stable") {
  json doc = run_json("lattice braidA:3");
  CHECK(doc["schema"] == 1);
  Run again = run("--json lattice braidA:3");
  CHECK(json::parse(again.out) == doc);
  // keys come out sorted
  std::string text = again.out;
  CHECK(text.find("\"charpoly\"") < text.find("\"flats_by_rank\""));
  CHECK(text.find("\"s\"") < text.find("\"schema\""));
}

TEST_CASE("verbs agree with the library") {
  for (const std::string name : {"A(6,1)", "A(9,1)", "reflC:3", "generic:3:5"}) {
    Arrangement a = gen::by_name(name);
    IntersectionLattice L(a);
    json lat = run_json("lattice '" + name + "'");
    CHECK(lat["charpoly"].get<std::vector<long long>>() == L.char_poly().coefficients);
    CHECK(lat["s"] == s_value(L));
    CHECK(lat["flats_by_rank"].size() == L.rank() + 1);
    for (std::size_t q = 0; q <= L.rank(); ++q) CHECK(lat["flats_by_rank"][q].size() == L.level(q).size());
    CHECK(lat["supersolvable"].is_null() == !supersolvable_certificate(L).has_value());
    ChamberComplex cc(a);
    json ch = run_json("chambers '" + name + "'");
    CHECK(ch["count"] == cc.size());
    for (std::size_t k = 0; k < cc.size(); ++k) {
      std::vector<std::size_t> walls;
      for (auto h : cc.chamber(k).walls) walls.push_back(h + 1);
      CHECK(ch["chambers"][k]["walls"].get<std::vector<std::size_t>>() == walls);
    }
    json simp = run_json("simplicial '" + name + "'");
    CHECK(simp["geometric"] == is_simplicial_geometric(cc));
    CHECK(simp["s"] == s_value(L));
  }
  CHECK(run_json("iso 'A(9,1)' reflC:3")["isomorphic"] == true);
  CHECK(run_json("iso 'A(8,1)' reflC:3")["isomorphic"] == false);
}

TEST_CASE("classify") {
  json a9 = run_json("classify 'A(9,1)'");
  CHECK(a9["identified"] == "A(9,1)");
  CHECK(a9["supersolvable"] == true);
  json alk = run_json("classify Alk:4:3");
  CHECK(alk["identified"] == "A_4^3");
  json d4 = run_json("classify reflD:4");
  CHECK(d4["simplicial"] == true);
  CHECK(d4["irreducible"] == true);
  CHECK(d4["supersolvable"] == false);
  CHECK(d4["identified"].is_null());
  json g = run_json("classify g314-D");
  CHECK(g["real"] == false);
  CHECK(g["crystallographic"].is_null());
}

TEST_CASE("coxeter verb") {
  json one = run_json("coxeter 'A(8,1)' --chamber 1 --diagram");
  CHECK(one["chambers"].size() == 1);
  CHECK(one["diagram"]["classes"].size() == 5);
  CHECK(one["diagram"]["deterministic"] == true);
  json closure = run_json("coxeter braidA:3 --closure");
  CHECK(closure["closure"]["roots"].size() == 12);
  CHECK(closure["closure"]["reduced"] == true);
  json c4 = run_json("coxeter reflC:3 --chamber 2");
  CHECK(c4["chambers"][0]["chamber"] == 2);
  CHECK(c4["chambers"][0]["cartan"]["matrix"].size() == 3);
  json gal = run_json("chambers 'A(6,1)' --gallery 1,2,1 --start 3");
  REQUIRE(gal["gallery"].size() == 4);
  CHECK(gal["gallery"][0]["chamber"] == 3);
  ChamberComplex cc(gen::A_2n_1(3));
  Frame f = gallery_basis(cc, canonical_frame(cc, 2), {0, 1, 0});
  CHECK(gal["gallery"][3]["chamber"] == f.chamber + 1);
}

TEST_CASE("check verb") {
  json r = run_json("check charpoly-iso");
  CHECK(r["passed"] == true);
  CHECK(r["results"][0]["id"] == "charpoly-iso");
  CHECK(run_json("check --list")["suites"].size() == check_suites().size());
}

TEST_CASE("plot") {
  Run a6 = run("plot 'A(6,1)'");
  REQUIRE(a6.status == 0);
  CHECK(a6.out == plot_svg(gen::A_2n_1(3)));
  CHECK(count(a6.out, "<line class=\"hyperplane\"") == 6);
  CHECK(count(a6.out, "class=\"ideal\"") == 0);
  Run a9 = run("plot 'A(9,1)'");
  CHECK(count(a9.out, "<line class=\"hyperplane\"") == 8);
  CHECK(count(a9.out, "<circle class=\"ideal\"") == 1);
  CHECK(run("plot 'A(9,1)'").out == a9.out);
  const std::string path = temp_path("a9.svg");
  REQUIRE(run("plot 'A(9,1)' -o " + path).status == 0);
  std::ifstream in(path);
  CHECK(std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>()) == a9.out);
}
