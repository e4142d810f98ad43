#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lieclass/cli.hpp"
#include "lieclass/workspace.hpp"
#include "support.hpp"

using namespace lieclass;
using namespace lieclass::testing;

namespace {

std::string fixture_path(const std::string& name) { return std::string(LIECLASS_FIXTURES) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lieclass");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

template <typename E>
std::string message_of(const std::string& text) {
  try {
    (void)parse_workspace(text);
  } catch (const E& ex) {
    return ex.what();
  }
  FAIL("expected an exception");
  return {};
}

}  // namespace

TEST_CASE("canonical fixtures round-trip byte for byte") {
  for (const char* name : {"oscillator.json", "heisenberg.json"}) {
    const std::string text = read_file(fixture_path(name));
    const Workspace w = parse_workspace(text);
    CHECK(serialize_workspace(w) == text);
    CHECK(parse_workspace(serialize_workspace(w)) == w);
  }
}

TEST_CASE("oscillator fixture contents") {
  const Workspace w = parse_workspace(read_file(fixture_path("oscillator.json")));
  const Extension& e = w.extension("osc");
  CHECK(e.total() == oscillator());
  CHECK(e.base().dim() == 1);
  CHECK(e.kernel() == heisenberg3());
  CHECK(w.rational_section("s0", "osc").map == RatMatrix::from_rows({{0}, {0}, {0}, {1}}));
  CHECK(w.rational_section("sz", "osc").map == RatMatrix::from_rows({{0}, {0}, {1}, {1}}));
  const SymMultiMap fz = w.polynomial_on_kernel("fz", "osc");
  CHECK(fz.degree() == 1);
  CHECK(fz.evaluate({2}) == Vec<Rational>{Rational(1)});
  CHECK(fz.evaluate({0}) == Vec<Rational>{Rational(0)});
}

TEST_CASE("empty and non-canonical documents") {
  const Workspace empty = parse_workspace("{}");
  CHECK(empty.algebras.empty());
  CHECK(empty.extensions.empty());
  CHECK(serialize_workspace(empty) == "{}\n");

  const std::string loose = R"({"algebras":{"h":{"brackets":[{"j":1,"i":0,"coeffs":{"2":"2/4"}}],"basis":["p","q","z"],"dim":3}}})";
  const Workspace w = parse_workspace(loose);
  CHECK(w.algebra("h").structure_constant(0, 1, 2) == Rational(1, 2));
  const std::string canon = serialize_workspace(w);
  CHECK(canon != loose);
  CHECK(serialize_workspace(parse_workspace(canon)) == canon);
  CHECK(canon.find("\"1/2\"") != std::string::npos);
  CHECK(canon.find('\r') == std::string::npos);
}

TEST_CASE("random workspaces survive parse after serialize") {
  Rng rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    Workspace w;
    const LieAlgebra g = random_algebra(rng);
    w.algebras["g"] = g;
    const Representation rep = random_representation(rng, g);
    w.representations["m"] = {"g", rep};
    const Extension e = trial % 2 ? heisenberg_extension() : sl2_affine_extension();
    w.algebras["n"] = e.kernel();
    w.extensions["e"] = e;
    const Section a = random_section(rng, e), b = random_section(rng, e);
    w.sections["a"] = {"e", a};
    w.sections["b"] = {"e", b};
    w.sections["ab"] = {"e", param_section(e, {a, b})};
    SymMultiMap f(e.kernel(), 2, 1);
    for (std::size_t r = 0; r < f.size(); ++r) f.at(r) = {rng.rational()};
    w.polynomials["f"] = {"n", f};
    const std::string text = serialize_workspace(w);
    const Workspace back = parse_workspace(text);
    CHECK(back == w);
    CHECK(serialize_workspace(back) == text);
  }
}

TEST_CASE("polynomial sections are written in graded-lex term order") {
  const Workspace w = parse_workspace(read_file(fixture_path("heisenberg.json")));
  const NamedSection& st = w.section("st");
  REQUIRE(st.is_polynomial());
  const json doc = json::parse(serialize_workspace(w));
  const json& z_row = doc["sections"]["st"]["matrix"][2];
  for (const auto& entry : z_row) {
    for (std::size_t t = 1; t < entry.size(); ++t) {
      const auto prev = entry[t - 1]["exponents"].get<Exponents>();
      const auto next = entry[t]["exponents"].get<Exponents>();
      const unsigned dp = prev[0] + prev[1], dn = next[0] + next[1];
      CHECK((dp < dn || (dp == dn && prev > next)));
    }
  }
  // t1 before t2 within degree one
  CHECK(z_row[0][0]["exponents"] == json::array({1, 0}));
  CHECK(z_row[0][1]["exponents"] == json::array({0, 1}));
  // the parametric section interpolates the three vertex sections
  const PolySection& ps = std::get<PolySection>(st.map);
  CHECK(specialize(ps, {Rational(1), Rational(0)}).map == w.rational_section("s1", "heis").map);
  CHECK(specialize(ps, {Rational(0), Rational(1)}).map == w.rational_section("s2", "heis").map);
}

TEST_CASE("validation errors name the object") {
  const std::string jacobi = message_of<ValidationError>(read_file(fixture_path("jacobi_violation.json")));
  CHECK(jacobi.find("algebra 'broken'") != std::string::npos);
  CHECK(jacobi.find("(a,b,c)") != std::string::npos);

  const std::string osc = read_file(fixture_path("oscillator.json"));
  json doc = json::parse(osc);
  json column = json::array();
  for (const char* v : {"0", "0", "1", "2"}) column.push_back(json::array({v}));
  doc["sections"]["bad"] = {{"extension", "osc"}, {"matrix", column}};
  const std::string bad = message_of<ValidationError>(doc.dump());
  CHECK(bad.find("section 'bad'") != std::string::npos);
  CHECK(bad.find("identity") != std::string::npos);

  doc = json::parse(osc);
  doc["sections"]["s0"]["extension"] = "nowhere";
  const std::string unresolved = message_of<ValidationError>(doc.dump());
  CHECK(unresolved.find("section 's0'") != std::string::npos);
  CHECK(unresolved.find("nowhere") != std::string::npos);

  doc = json::parse(osc);
  doc["extensions"]["osc"]["q"] = json::array({json::array({"0", "0", "0", "0"})});
  CHECK(message_of<ValidationError>(doc.dump()).find("extension 'osc'") != std::string::npos);

  doc = json::parse(osc);
  doc["representations"]["rot"]["action"][0] = json::array({json::array({"1", "0"}), json::array({"0", "1"})});
  CHECK_NOTHROW((void)parse_workspace(doc.dump()));  // one generator: any matrix is a module
  doc["representations"]["trivial"] = doc["representations"]["rot"];
  CHECK(message_of<ValidationError>(doc.dump()).find("reserved") != std::string::npos);

  doc = json::parse(osc);
  doc["polynomials"]["fz"]["entries"][0]["tuple"] = json::array({7});
  CHECK(message_of<ValidationError>(doc.dump()).find("polynomial 'fz'") != std::string::npos);
}

TEST_CASE("parse errors carry a location") {
  const std::string malformed = message_of<ParseError>(read_file(fixture_path("malformed.json")));
  CHECK(malformed.find("/algebras/h3/brackets/0/coeffs/2") != std::string::npos);
  CHECK(message_of<ParseError>("{\"algebras\": {").find("line") != std::string::npos);
  CHECK(message_of<ParseError>("[]").find("top level") != std::string::npos);
  CHECK(message_of<ParseError>(R"({"algebra": {}})").find("unknown key 'algebra'") != std::string::npos);
  CHECK(message_of<ParseError>(R"({"algebras": {"g": {"dim": 1, "basis": ["x"]}}})").find("missing key 'brackets'") !=
        std::string::npos);
  CHECK(message_of<ParseError>(R"({"algebras": {"g": {"dim": 1, "basis": ["x"], "brackets": [], "extra": 0}}})")
            .find("unknown key 'extra'") != std::string::npos);
  CHECK(message_of<ParseError>(R"({"algebras": {"g": {"dim": 2, "basis": ["x","y"], "brackets": [{"i":0,"j":1,"coeffs":{"0":"1/0"}}]}}})")
            .find("/algebras/g/brackets/0/coeffs/0") != std::string::npos);
}

TEST_CASE("command line exit codes and outputs") {
  const std::string osc = fixture_path("oscillator.json");
  const std::string heis = fixture_path("heisenberg.json");

  CHECK(run({"validate", osc}).code == exit_ok);
  CHECK(run({"validate", heis}).code == exit_ok);
  const Run jac = run({"validate", fixture_path("jacobi_violation.json")});
  CHECK(jac.code == exit_validation);
  CHECK(jac.err.find("broken") != std::string::npos);
  CHECK(run({"validate", fixture_path("malformed.json")}).code == exit_parse);
  CHECK(run({"validate", fixture_path("no_such_file.json")}).code == exit_parse);
  CHECK(run({"frobnicate", osc}).code == exit_parse);
  CHECK(run({"secondary", osc, "--extension", "osc", "--poly", "fz"}).code == exit_parse);
  CHECK(run({"secondary", osc, "--extension", "osc", "--poly", "fz", "--sections", "s0"}).code == exit_parse);

  const Run sec = run({"secondary", osc, "--extension", "osc", "--poly", "fz", "--sections", "s0,sz", "--output=json"});
  REQUIRE(sec.code == exit_ok);
  const json j = json::parse(sec.out);
  CHECK(j["coordinates"] == json::array({"1"}));
  CHECK(j["degree"] == 1);
  CHECK(j["h_dim"] == 1);

  const Run swapped = run({"secondary", osc, "--extension", "osc", "--poly", "fz", "--sections", "sz,s0", "--output=json"});
  CHECK(json::parse(swapped.out)["coordinates"] == json::array({"-1"}));

  const Run thm = run({"verify-theorem", heis, "--extension", "heis", "--poly", "fz2", "--sections", "s0,s1,s2"});
  CHECK(thm.code == exit_ok);
  CHECK(thm.out.find("equal: true") != std::string::npos);
  CHECK(thm.out.find("sign: ") != std::string::npos);

  const Run notinv = run({"secondary", osc, "--extension", "osc", "--poly", "pstar", "--sections", "s0,sz"});
  CHECK(notinv.code == exit_validation);
  CHECK(notinv.err.find("pstar") != std::string::npos);
  CHECK(run({"chern-weil", osc, "--extension", "osc", "--poly", "fz", "--section", "s0", "--invariance=strict"}).code ==
        exit_validation);
  CHECK(run({"chern-weil", osc, "--extension", "osc", "--poly", "fz", "--section", "s0", "--invariance=bogus"}).code ==
        exit_parse);
  const Run missing = run({"curvature", osc, "--extension", "osc", "--section", "s9"});
  CHECK(missing.code == exit_validation);
  CHECK(missing.err.find("section 's9'") != std::string::npos);
  CHECK(run({"cohomology", osc, "--algebra", "osc", "--rep", "rot", "--degree", "1"}).code == exit_validation);
}

TEST_CASE("command results equal the library calls") {
  const std::string osc = fixture_path("oscillator.json");
  const std::string heis = fixture_path("heisenberg.json");
  const Workspace wo = parse_workspace(read_file(osc));
  const Workspace wh = parse_workspace(read_file(heis));

  const Extension& h = wh.extension("heis");
  const SymMultiMap fz = wh.polynomial_on_kernel("fz", "heis");
  const auto cw = chern_weil(h, fz, wh.rational_section("s1", "heis"), trivial_representation(h.base()));
  CHECK(run({"chern-weil", heis, "--extension", "heis", "--poly", "fz", "--section", "s1", "--output=json"}).out ==
        canonical_text(to_json(cw)));
  CHECK(cw.coordinates == Vec<Rational>{Rational(1)});

  const auto curv = section_curvature(wo.extension("osc"), wo.rational_section("sz", "osc"));
  CHECK(curv.is_zero());
  CHECK(run({"curvature", osc, "--extension", "osc", "--section", "sz", "--output=json"}).out ==
        canonical_text(to_json(curv)));

  const auto pcurv = param_curvature(h, std::get<PolySection>(wh.section("st").map));
  CHECK(run({"curvature", heis, "--extension", "heis", "--section", "st", "--output=json"}).out ==
        canonical_text(to_json(pcurv)));

  const auto hs = cohomology_space(wo.representation("rot").rep, 1);
  CHECK(hs.h_dim() == 0);
  CHECK(run({"cohomology", osc, "--algebra", "R", "--rep", "rot", "--degree", "1", "--output=json"}).out ==
        canonical_text(to_json(hs)));
  const Run trivial = run({"cohomology", osc, "--algebra", "R", "--rep", "trivial", "--degree", "1", "--output=json"});
  CHECK(json::parse(trivial.out)["h_dim"] == 1);

  std::vector<Section> sigmas;
  for (const char* s : {"s0", "s1", "s2"}) sigmas.push_back(wh.rational_section(s, "heis"));
  const auto report = verify_main_theorem(h, wh.polynomial_on_kernel("fz2", "heis"), sigmas, trivial_representation(h.base()));
  json expected = to_json(report);
  expected["convention"] = "(k-n+1) d Delta_f(s_0..s_n) = sum_i (-1)^i Delta_f(s_0..^s_i..s_n)";
  CHECK(run({"verify-theorem", heis, "--extension", "heis", "--poly", "fz2", "--sections", "s0,s1,s2", "--output=json"})
            .out == canonical_text(expected));
}
