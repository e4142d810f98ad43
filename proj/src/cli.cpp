#include "lieclass/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lieclass/workspace.hpp"

namespace lieclass {

namespace {

std::string poly_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(v + 1);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    Rational mag = c.sign() < 0 ? -c : c;
    std::string term = mono.empty() ? mag.str() : (mag.is_one() ? mono : mag.str() + "*" + mono);
    if (out.empty()) out = c.sign() < 0 ? "-" + term : term;
    else out += (c.sign() < 0 ? " - " : " + ") + term;
  }
  return out;
}

std::string scalar_text(const Rational& r) { return r.str(); }
std::string scalar_text(const MultiPoly& p) { return poly_text(p); }

template <typename S>
std::string vector_text(const Vec<S>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
  return out + "]";
}

template <typename S>
void cochain_text(std::ostream& out, const Cochain<S>& c, const std::string& indent) {
  const auto tuples = c.tuples();
  const auto& names = c.source().basis_names();
  bool any = false;
  for (std::size_t r = 0; r < c.size(); ++r) {
    if (is_zero_vector(c.at(r))) continue;
    any = true;
    out << indent << "(";
    for (std::size_t k = 0; k < tuples[r].size(); ++k) out << (k ? ", " : "") << names[tuples[r][k]];
    out << "): " << vector_text(c.at(r)) << "\n";
  }
  if (!any) out << indent << "0\n";
}

void class_text(std::ostream& out, const CharacteristicClass& c) {
  out << "degree: " << c.degree << "\n"
      << "h_dim: " << c.coordinates.size() << "\n"
      << "coordinates: " << vector_text(c.coordinates) << "\n"
      << "representative:\n";
  cochain_text(out, c.representative, "  ");
}

Workspace load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_workspace(buf.str());
  } catch (const ParseError& ex) {
    throw ParseError(path + ": " + ex.what());
  }
}

std::string quoted(const std::string& kind, const std::string& name) { return kind + " '" + name + "'"; }

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie algebra cohomology and characteristic classes of extensions", "lieclass"};
  app.require_subcommand(1);
  std::string output = "text";
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string file, algebra, rep, extension, poly, section, invariance = "section";
  std::size_t degree = 0;
  std::vector<std::string> sections;
  std::function<void()> action;
  std::string context;

  auto* validate = app.add_subcommand("validate", "Parse and validate a workspace");
  validate->add_option("file", file)->required();

  auto* cohomology = app.add_subcommand("cohomology", "H^p(A, R) with a basis of classes");
  cohomology->add_option("file", file)->required();
  cohomology->add_option("--algebra", algebra)->required();
  cohomology->add_option("--rep", rep, "Representation name, or trivial / adjoint")->required();
  cohomology->add_option("--degree", degree)->required();

  auto* curvature = app.add_subcommand("curvature", "Curvature of a section, in kernel coordinates");
  curvature->add_option("file", file)->required();
  curvature->add_option("--extension", extension)->required();
  curvature->add_option("--section", section)->required();

  auto* chern = app.add_subcommand("chern-weil", "Primary class (1/p!)[f_sigma]");
  chern->add_option("file", file)->required();
  chern->add_option("--extension", extension)->required();
  chern->add_option("--poly", poly)->required();
  chern->add_option("--section", section)->required();
  chern->add_option("--invariance", invariance)->check(CLI::IsMember({"section", "strict"}));

  auto* secondary = app.add_subcommand("secondary", "Secondary class [Delta_f(s1, s2)]");
  secondary->add_option("file", file)->required();
  secondary->add_option("--extension", extension)->required();
  secondary->add_option("--poly", poly)->required();
  secondary->add_option("--sections", sections)->required()->delimiter(',')->expected(2);

  auto* theorem = app.add_subcommand("verify-theorem", "Check (k-n+1) d Delta_f(s0..sn) = sum_i (-1)^i Delta_f(..^si..)");
  theorem->add_option("file", file)->required();
  theorem->add_option("--extension", extension)->required();
  theorem->add_option("--poly", poly)->required();
  theorem->add_option("--sections", sections)->required()->delimiter(',');

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    std::ostringstream msg;
    const int code = app.exit(ex, out, msg);
    err << msg.str();
    return code == 0 ? exit_ok : exit_parse;
  }

  int status = exit_ok;
  const bool as_json = output == "json";
  try {
    const Workspace w = load(file);
    if (validate->parsed()) {
      if (as_json) {
        out << canonical_text({{"valid", true},
                               {"algebras", w.algebras.size()},
                               {"representations", w.representations.size()},
                               {"extensions", w.extensions.size()},
                               {"sections", w.sections.size()},
                               {"polynomials", w.polynomials.size()}});
      } else {
        out << "valid: " << w.algebras.size() << " algebras, " << w.representations.size() << " representations, "
            << w.extensions.size() << " extensions, " << w.sections.size() << " sections, " << w.polynomials.size()
            << " polynomials\n";
      }
    } else if (cohomology->parsed()) {
      context = "cohomology of " + quoted("algebra", algebra) + " with " + quoted("representation", rep);
      const LieAlgebra& g = w.algebra(algebra);
      Representation module;
      if (rep == "trivial") {
        module = trivial_representation(g);
      } else if (rep == "adjoint") {
        module = adjoint_representation(g);
      } else {
        const NamedRepresentation& r = w.representation(rep);
        if (r.algebra != algebra) throw ValidationError(quoted("representation", rep) + " acts on " + quoted("algebra", r.algebra));
        module = r.rep;
      }
      const CohomologySpace h = cohomology_space(module, degree);
      if (as_json) {
        out << canonical_text(to_json(h));
      } else {
        out << "degree: " << h.degree() << "\nh_dim: " << h.h_dim() << "\ncocycle_dim: " << h.cocycle_basis().size()
            << "\ncoboundary_dim: " << h.coboundary_basis().size() << "\n";
        for (std::size_t i = 0; i < h.h_dim(); ++i) {
          out << "class " << i + 1 << ":\n";
          cochain_text(out, h.class_representatives()[i], "  ");
        }
      }
    } else if (curvature->parsed()) {
      context = "curvature of " + quoted("section", section) + " on " + quoted("extension", extension);
      const Extension& e = w.extension(extension);
      const NamedSection& s = w.section(section);
      if (s.extension != extension)
        throw ValidationError(quoted("section", section) + " belongs to " + quoted("extension", s.extension));
      std::visit(
          [&](const auto& sigma) {
            const auto r = section_curvature(e, sigma);
            if (as_json) out << canonical_text(to_json(r));
            else {
              out << "degree: 2\n";
              cochain_text(out, r, "");
            }
          },
          s.map);
    } else if (chern->parsed() || secondary->parsed()) {
      const bool primary = chern->parsed();
      context = std::string(primary ? "chern-weil" : "secondary") + " for " + quoted("polynomial", poly) + " on " +
                quoted("extension", extension);
      const Extension& e = w.extension(extension);
      const SymMultiMap f = w.polynomial_on_kernel(poly, extension);
      const Representation module = trivial_representation(e.base(), f.target_dim());
      const CharacteristicClass c =
          primary ? chern_weil(e, f, w.rational_section(section, extension), module,
                               invariance == "strict" ? InvariancePolicy::Mode::strict_total : InvariancePolicy::Mode::section)
                  : secondary_class(e, f, w.rational_section(sections[0], extension),
                                    w.rational_section(sections[1], extension), module);
      if (as_json) out << canonical_text(to_json(c));
      else class_text(out, c);
    } else if (theorem->parsed()) {
      context = "verify-theorem for " + quoted("polynomial", poly) + " on " + quoted("extension", extension);
      const Extension& e = w.extension(extension);
      const SymMultiMap f = w.polynomial_on_kernel(poly, extension);
      std::vector<Section> sigmas;
      for (const auto& name : sections) sigmas.push_back(w.rational_section(name, extension));
      const TheoremReport r = verify_main_theorem(e, f, sigmas, trivial_representation(e.base(), f.target_dim()));
      if (as_json) {
        json j = to_json(r);
        j["convention"] = "(k-n+1) d Delta_f(s_0..s_n) = sum_i (-1)^i Delta_f(s_0..^s_i..s_n)";
        out << canonical_text(j);
      } else {
        out << "equal: " << (r.equal() ? "true" : "false") << "\n"
            << "sign: " << to_string(r.sign) << "\n"
            << "convention: (k-n+1) d Delta_f(s_0..s_n) = sum_i (-1)^i Delta_f(s_0..^s_i..s_n)\n"
            << "invariance_warning: " << (r.invariance_warning ? "true" : "false") << "\n"
            << "lhs:\n";
        cochain_text(out, r.lhs, "  ");
        out << "rhs:\n";
        cochain_text(out, r.rhs, "  ");
      }
      if (!r.equal()) {
        err << "error: " << context << ": the two sides differ\n";
        status = exit_validation;
      }
    }
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return exit_parse;
  } catch (const std::exception& ex) {
    err << "error: " << (context.empty() ? "" : context + ": ") << ex.what() << "\n";
    return exit_validation;
  }
  return status;
}

}  // namespace lieclass
