#include "lieclass/workspace.hpp"

#include <algorithm>
#include <set>

namespace lieclass {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

// Object with exactly the given keys.
void require_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) schema_error(path, "expected an object");
  for (const char* k : keys)
    if (!j.contains(k)) schema_error(path, std::string("missing key '") + k + "'");
  for (const auto& [k, v] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* allowed) { return k == allowed; }))
      schema_error(path, "unknown key '" + k + "'");
  }
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

std::size_t read_index(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) schema_error(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

Rational read_rational(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a rational written as a string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& ex) {
    schema_error(path, ex.what());
  }
}

MultiPoly read_poly(const json& j, const std::string& path, std::size_t& nvars) {
  array_at(j, path);
  std::vector<std::pair<Exponents, Rational>> terms;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = child(path, t);
    require_keys(j[t], tp, {"exponents", "coeff"});
    Exponents e;
    for (std::size_t v = 0; v < array_at(j[t]["exponents"], child(tp, "exponents")).size(); ++v)
      e.push_back(static_cast<unsigned>(read_index(j[t]["exponents"][v], child(child(tp, "exponents"), v))));
    if (t > 0 && e.size() != terms.front().first.size()) schema_error(tp, "exponent vectors of different lengths");
    terms.emplace_back(std::move(e), read_rational(j[t]["coeff"], child(tp, "coeff")));
  }
  if (terms.empty()) return MultiPoly();
  nvars = std::max(nvars, terms.front().first.size());
  return MultiPoly::from_terms(terms.front().first.size(), terms);
}

template <typename Fn>
auto validated(const std::string& what, Fn fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& ex) {
    throw ValidationError(what + ": " + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ValidationError(what + ": " + ex.what());
  }
}

RatMatrix read_matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols,
                      const std::string& what) {
  array_at(j, path);
  if (j.size() != rows)
    throw ValidationError(what + ": " + path + " has " + std::to_string(j.size()) + " rows, expected " +
                          std::to_string(rows));
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = child(path, i);
    array_at(j[i], rp);
    if (j[i].size() != cols)
      throw ValidationError(what + ": " + rp + " has " + std::to_string(j[i].size()) + " entries, expected " +
                            std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = read_rational(j[i][c], child(rp, c));
  }
  return m;
}

Vec<Rational> read_vector(const json& j, const std::string& path, std::size_t len, const std::string& what) {
  array_at(j, path);
  if (j.size() != len) throw ValidationError(what + ": " + path + " must have " + std::to_string(len) + " entries");
  Vec<Rational> v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = read_rational(j[i], child(path, i));
  return v;
}

LieAlgebra read_algebra(const json& j, const std::string& path, const std::string& what) {
  require_keys(j, path, {"dim", "basis", "brackets"});
  const std::size_t dim = read_index(j["dim"], child(path, "dim"));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < array_at(j["basis"], child(path, "basis")).size(); ++i)
    names.push_back(read_string(j["basis"][i], child(child(path, "basis"), i)));
  if (names.size() != dim) throw ValidationError(what + ": basis has " + std::to_string(names.size()) + " names but dim is " + std::to_string(dim));

  StructureConstants c(dim);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const std::string bpath = child(path, "brackets");
  for (std::size_t b = 0; b < array_at(j["brackets"], bpath).size(); ++b) {
    const std::string ep = child(bpath, b);
    const json& entry = j["brackets"][b];
    require_keys(entry, ep, {"i", "j", "coeffs"});
    const std::size_t i = read_index(entry["i"], child(ep, "i"));
    const std::size_t k = read_index(entry["j"], child(ep, "j"));
    if (i >= k) throw ValidationError(what + ": " + ep + " needs i < j");
    if (k >= dim) throw ValidationError(what + ": " + ep + " index out of range");
    if (!seen.insert({i, k}).second) throw ValidationError(what + ": " + ep + " repeats the pair (" + std::to_string(i) + "," + std::to_string(k) + ")");
    if (!entry["coeffs"].is_object()) schema_error(child(ep, "coeffs"), "expected an object");
    for (const auto& [key, value] : entry["coeffs"].items()) {
      const std::string cp = child(child(ep, "coeffs"), key);
      if (key.empty() || !std::all_of(key.begin(), key.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        schema_error(cp, "coefficient key must be a basis index");
      const std::size_t out = std::stoul(key);
      if (out >= dim) throw ValidationError(what + ": " + cp + " index out of range");
      c.set_antisymmetric(i, k, out, read_rational(value, cp));
    }
  }
  return validated(what, [&] { return LieAlgebra(std::move(names), std::move(c)); });
}

std::string quoted(const std::string& kind, const std::string& name) { return kind + " '" + name + "'"; }

const std::set<std::string> reserved_representations = {"trivial", "adjoint"};

}  // namespace

const LieAlgebra& Workspace::algebra(const std::string& name) const {
  auto it = algebras.find(name);
  if (it == algebras.end()) throw ValidationError("unknown " + quoted("algebra", name));
  return it->second;
}

const NamedRepresentation& Workspace::representation(const std::string& name) const {
  auto it = representations.find(name);
  if (it == representations.end()) throw ValidationError("unknown " + quoted("representation", name));
  return it->second;
}

const Extension& Workspace::extension(const std::string& name) const {
  auto it = extensions.find(name);
  if (it == extensions.end()) throw ValidationError("unknown " + quoted("extension", name));
  return it->second;
}

const NamedSection& Workspace::section(const std::string& name) const {
  auto it = sections.find(name);
  if (it == sections.end()) throw ValidationError("unknown " + quoted("section", name));
  return it->second;
}

const NamedPolynomial& Workspace::polynomial(const std::string& name) const {
  auto it = polynomials.find(name);
  if (it == polynomials.end()) throw ValidationError("unknown " + quoted("polynomial", name));
  return it->second;
}

Section Workspace::rational_section(const std::string& name, const std::string& ext) const {
  const NamedSection& s = section(name);
  if (s.extension != ext)
    throw ValidationError(quoted("section", name) + " belongs to " + quoted("extension", s.extension) + ", not '" + ext + "'");
  if (s.is_polynomial()) throw ValidationError(quoted("section", name) + " has polynomial entries");
  return std::get<Section>(s.map);
}

SymMultiMap Workspace::polynomial_on_kernel(const std::string& name, const std::string& ext) const {
  const NamedPolynomial& p = polynomial(name);
  const Extension& e = extension(ext);
  if (!same_algebra(p.map.source_ref(), e.kernel_ref()))
    throw ValidationError(quoted("polynomial", name) + " is not defined on the kernel of " + quoted("extension", ext));
  SymMultiMap f(e.kernel_ref(), p.map.degree(), p.map.target_dim());
  for (std::size_t r = 0; r < f.size(); ++r) f.at(r) = p.map.at(r);
  return f;
}

bool operator==(const Workspace& a, const Workspace& b) {
  auto same_rep = [](const NamedRepresentation& x, const NamedRepresentation& y) {
    return x.algebra == y.algebra && x.rep.algebra() == y.rep.algebra() && x.rep.space_dim() == y.rep.space_dim() &&
           x.rep.action() == y.rep.action();
  };
  auto same_ext = [](const Extension& x, const Extension& y) {
    return x.total() == y.total() && x.base() == y.base() && x.kernel() == y.kernel() && x.iota() == y.iota() &&
           x.q() == y.q();
  };
  auto same_section = [](const NamedSection& x, const NamedSection& y) {
    if (x.extension != y.extension || x.map.index() != y.map.index()) return false;
    if (x.is_polynomial()) return std::get<PolySection>(x.map).map == std::get<PolySection>(y.map).map;
    return std::get<Section>(x.map).map == std::get<Section>(y.map).map;
  };
  auto same_poly = [](const NamedPolynomial& x, const NamedPolynomial& y) {
    return x.algebra == y.algebra && x.map.source() == y.map.source() && x.map == y.map;
  };
  auto same_maps = [](const auto& x, const auto& y, auto eq) {
    if (x.size() != y.size()) return false;
    for (const auto& [k, v] : x) {
      auto it = y.find(k);
      if (it == y.end() || !eq(v, it->second)) return false;
    }
    return true;
  };
  return a.algebras == b.algebras && same_maps(a.representations, b.representations, same_rep) &&
         same_maps(a.extensions, b.extensions, same_ext) && same_maps(a.sections, b.sections, same_section) &&
         same_maps(a.polynomials, b.polynomials, same_poly);
}

Workspace parse_workspace(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  if (!doc.is_object()) schema_error("", "top level must be an object");
  for (const auto& [k, v] : doc.items()) {
    static const std::set<std::string> known = {"algebras", "representations", "extensions", "sections", "polynomials"};
    if (!known.contains(k)) schema_error("", "unknown key '" + k + "'");
    if (!v.is_object()) schema_error("/" + k, "expected an object keyed by name");
  }
  auto group = [&](const char* key) { return doc.contains(key) ? doc[key] : json::object(); };
  const json algebras = group("algebras"), representations = group("representations"),
             extensions = group("extensions"), sections = group("sections"), polynomials = group("polynomials");

  Workspace w;
  for (const auto& [name, j] : algebras.items())
    w.algebras.emplace(name, read_algebra(j, "/algebras/" + name, quoted("algebra", name)));

  for (const auto& [name, j] : representations.items()) {
    const std::string path = "/representations/" + name;
    const std::string what = quoted("representation", name);
    if (reserved_representations.contains(name)) throw ValidationError(what + ": the name is reserved");
    require_keys(j, path, {"algebra", "dim", "action"});
    const std::string alg = read_string(j["algebra"], child(path, "algebra"));
    const std::size_t dim = read_index(j["dim"], child(path, "dim"));
    const LieAlgebra& g = validated(what, [&]() -> const LieAlgebra& { return w.algebra(alg); });
    array_at(j["action"], child(path, "action"));
    if (j["action"].size() != g.dim())
      throw ValidationError(what + ": needs one action matrix per basis element of " + quoted("algebra", alg));
    std::vector<RatMatrix> action;
    for (std::size_t i = 0; i < g.dim(); ++i)
      action.push_back(read_matrix(j["action"][i], child(child(path, "action"), i), dim, dim, what));
    w.representations.emplace(name, NamedRepresentation{alg, validated(what, [&] { return Representation(g, dim, action); })});
  }

  for (const auto& [name, j] : extensions.items()) {
    const std::string path = "/extensions/" + name;
    const std::string what = quoted("extension", name);
    require_keys(j, path, {"total", "base", "kernel", "iota", "q"});
    LieAlgebra total = read_algebra(j["total"], child(path, "total"), what + " total algebra");
    LieAlgebra base = read_algebra(j["base"], child(path, "base"), what + " base algebra");
    LieAlgebra kernel = read_algebra(j["kernel"], child(path, "kernel"), what + " kernel algebra");
    RatMatrix iota = read_matrix(j["iota"], child(path, "iota"), total.dim(), kernel.dim(), what);
    RatMatrix q = read_matrix(j["q"], child(path, "q"), base.dim(), total.dim(), what);
    w.extensions.emplace(name, validated(what, [&] {
                           return make_extension(std::move(total), std::move(base), std::move(kernel), std::move(iota), std::move(q));
                         }));
  }

  for (const auto& [name, j] : sections.items()) {
    const std::string path = "/sections/" + name;
    const std::string what = quoted("section", name);
    require_keys(j, path, {"extension", "matrix"});
    const std::string ext = read_string(j["extension"], child(path, "extension"));
    const Extension& e = validated(what, [&]() -> const Extension& { return w.extension(ext); });
    const json& m = j["matrix"];
    const std::string mp = child(path, "matrix");
    array_at(m, mp);
    bool polynomial = false;
    for (const auto& row : m)
      if (row.is_array())
        for (const auto& entry : row) polynomial = polynomial || entry.is_array();
    NamedSection s{ext, Section{}};
    if (!polynomial) {
      s.map = Section{read_matrix(m, mp, e.total().dim(), e.base().dim(), what)};
    } else {
      if (m.size() != e.total().dim()) throw ValidationError(what + ": matrix must have " + std::to_string(e.total().dim()) + " rows");
      PolyMatrix pm(e.total().dim(), e.base().dim());
      std::size_t nvars = 0;
      for (std::size_t r = 0; r < pm.rows(); ++r) {
        const std::string rp = child(mp, r);
        if (array_at(m[r], rp).size() != pm.cols())
          throw ValidationError(what + ": " + rp + " must have " + std::to_string(pm.cols()) + " entries");
        for (std::size_t c = 0; c < pm.cols(); ++c) {
          const json& entry = m[r][c];
          pm(r, c) = entry.is_array() ? read_poly(entry, child(rp, c), nvars) : MultiPoly(read_rational(entry, child(rp, c)));
        }
      }
      for (std::size_t r = 0; r < pm.rows(); ++r)
        for (std::size_t c = 0; c < pm.cols(); ++c) pm(r, c) = pm(r, c).widened(nvars);
      s.map = PolySection{std::move(pm)};
    }
    const bool ok = std::visit([&](const auto& sigma) { return validated(what, [&] { return validate_section(e, sigma); }); }, s.map);
    if (!ok) throw ValidationError(what + ": q composed with the section is not the identity of the base");
    w.sections.emplace(name, std::move(s));
  }

  for (const auto& [name, j] : polynomials.items()) {
    const std::string path = "/polynomials/" + name;
    const std::string what = quoted("polynomial", name);
    require_keys(j, path, {"algebra", "degree", "target_dim", "entries"});
    const std::string alg = read_string(j["algebra"], child(path, "algebra"));
    const LieAlgebra& g = validated(what, [&]() -> const LieAlgebra& { return w.algebra(alg); });
    const std::size_t degree = read_index(j["degree"], child(path, "degree"));
    const std::size_t target = read_index(j["target_dim"], child(path, "target_dim"));
    SymMultiMap f(g, degree, target);
    std::set<IndexTuple> seen;
    const std::string ep = child(path, "entries");
    for (std::size_t n = 0; n < array_at(j["entries"], ep).size(); ++n) {
      const std::string np = child(ep, n);
      const json& entry = j["entries"][n];
      require_keys(entry, np, {"tuple", "value"});
      IndexTuple t;
      for (std::size_t k = 0; k < array_at(entry["tuple"], child(np, "tuple")).size(); ++k)
        t.push_back(read_index(entry["tuple"][k], child(child(np, "tuple"), k)));
      if (t.size() != degree) throw ValidationError(what + ": " + np + " tuple must have " + std::to_string(degree) + " indices");
      if (!std::is_sorted(t.begin(), t.end())) throw ValidationError(what + ": " + np + " tuple must be non-decreasing");
      if (!t.empty() && t.back() >= g.dim()) throw ValidationError(what + ": " + np + " index out of range");
      if (!seen.insert(t).second) throw ValidationError(what + ": " + np + " repeats a tuple");
      f.set(t, read_vector(entry["value"], child(np, "value"), target, what));
    }
    w.polynomials.emplace(name, NamedPolynomial{alg, std::move(f)});
  }
  return w;
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", c.str()}});
  return terms;
}

json to_json(const LieAlgebra& g) {
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      json coeffs = json::object();
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!g.structure_constant(i, j, k).is_zero()) coeffs[std::to_string(k)] = g.structure_constant(i, j, k).str();
      if (!coeffs.empty()) brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  return {{"dim", g.dim()}, {"basis", g.basis_names()}, {"brackets", brackets}};
}

json to_json(const Extension& e) {
  return {{"total", to_json(e.total())}, {"base", to_json(e.base())}, {"kernel", to_json(e.kernel())},
          {"iota", matrix_to_json(e.iota())}, {"q", matrix_to_json(e.q())}};
}

namespace {

template <typename S>
json vector_json(const Vec<S>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

template <typename S>
json cochain_json(const Cochain<S>& c) {
  json entries = json::array();
  const auto tuples = c.tuples();
  for (std::size_t r = 0; r < c.size(); ++r)
    if (!is_zero_vector(c.at(r))) entries.push_back({{"tuple", tuples[r]}, {"value", vector_json(c.at(r))}});
  return {{"degree", c.degree()}, {"target_dim", c.target_dim()}, {"entries", entries}};
}

}  // namespace

json to_json(const SymMultiMap& f) {
  json entries = json::array();
  const auto tuples = f.tuples();
  for (std::size_t r = 0; r < f.size(); ++r)
    if (!is_zero_vector(f.at(r))) entries.push_back({{"tuple", tuples[r]}, {"value", vector_json(f.at(r))}});
  return {{"degree", f.degree()}, {"target_dim", f.target_dim()}, {"entries", entries}};
}

json to_json(const RatCochain& c) { return cochain_json(c); }
json to_json(const PolyCochain& c) { return cochain_json(c); }

json to_json(const CharacteristicClass& c) {
  return {{"degree", c.degree},
          {"h_dim", c.coordinates.size()},
          {"coordinates", vector_json(c.coordinates)},
          {"representative", to_json(c.representative)}};
}

json to_json(const CohomologySpace& h) {
  json reps = json::array();
  for (const auto& c : h.class_representatives()) reps.push_back(to_json(c));
  return {{"degree", h.degree()},
          {"h_dim", h.h_dim()},
          {"cocycle_dim", h.cocycle_basis().size()},
          {"coboundary_dim", h.coboundary_basis().size()},
          {"representatives", reps}};
}

json to_json(const TheoremReport& r) {
  return {{"equal", r.equal()},
          {"sign", to_string(r.sign)},
          {"invariance_warning", r.invariance_warning},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"difference", to_json(r.difference)}};
}

std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

std::string serialize_workspace(const Workspace& w) {
  json doc = json::object();
  for (const auto& [name, g] : w.algebras) doc["algebras"][name] = to_json(g);
  for (const auto& [name, r] : w.representations) {
    json action = json::array();
    for (const auto& m : r.rep.action()) action.push_back(matrix_to_json(m));
    doc["representations"][name] = {{"algebra", r.algebra}, {"dim", r.rep.space_dim()}, {"action", action}};
  }
  for (const auto& [name, e] : w.extensions) doc["extensions"][name] = to_json(e);
  for (const auto& [name, s] : w.sections) {
    const json m = std::visit([](const auto& sigma) { return matrix_to_json(sigma.map); }, s.map);
    doc["sections"][name] = {{"extension", s.extension}, {"matrix", m}};
  }
  for (const auto& [name, p] : w.polynomials) {
    json j = to_json(p.map);
    j["algebra"] = p.algebra;
    doc["polynomials"][name] = std::move(j);
  }
  return canonical_text(doc);
}

}  // namespace lieclass
