#include "qhall/json_io.hpp"

#include <cstdint>
#include <sstream>

#include "qhall/errors.hpp"

namespace qhall {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw DomainError("malformed JSON field '" + field + "': " + why);
}

const Json& field(const Json& j, const char* name, const std::string& ctx) {
  if (!j.is_object()) bad(ctx, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) bad(ctx + "." + name, "missing");
  return *it;
}

int as_int(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer()) bad(ctx, "expected an integer");
  auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) bad(ctx, "integer out of range");
  return static_cast<int>(v);
}

std::vector<int> as_int_array(const Json& j, const std::string& ctx) {
  if (!j.is_array()) bad(ctx, "expected an array");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_int(j[k], ctx + "[" + std::to_string(k) + "]"));
  return out;
}

template <class F>
auto guarded(const std::string& ctx, F&& f) {
  try {
    return f();
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& e) {
    bad(ctx, e.what());
  }
}

}  // namespace

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<long long>(z.get_si()));
  return Json(z.get_str());
}

Json to_json(const Rational& r) {
  if (r.get_den() == 1) return to_json(Integer(r.get_num()));
  return Json(r.get_str());
}

Json to_json(const Partition& p) {
  Json a = Json::array();
  for (int x : p.parts()) a.push_back(x);
  return a;
}

Json to_json(const MultiPartition& pi) {
  Json j;
  j["n"] = pi.n();
  Json parts = Json::array();
  for (const auto& c : pi.components()) parts.push_back(to_json(c));
  j["parts"] = parts;
  return j;
}

Json to_json(const Word& w) {
  Json j;
  j["n"] = w.n();
  Json a = Json::array();
  for (int x : w.letters()) a.push_back(x);
  j["letters"] = a;
  return j;
}

Json to_json(const DimVector& d) {
  Json a = Json::array();
  for (int x : d.coords()) a.push_back(x);
  return a;
}

Json to_json(const ModuleSummands& m) {
  Json j;
  j["n"] = m.n();
  Json a = Json::array();
  for (const auto& s : m.summands()) a.push_back(Json::array({s.vertex, s.length}));
  j["summands"] = a;
  return j;
}

Json to_json(const IntPoly& p, const std::string& var) {
  Json j;
  j["var"] = var;
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  j["coeffs"] = a;
  return j;
}

Json to_json(const RatPoly& p, const std::string& var) {
  Json j;
  j["var"] = var;
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  j["coeffs"] = a;
  return j;
}

Json to_json(const LaurentPoly& p) {
  Json j;
  j["var"] = "v";
  j["lo"] = p.lo();
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  j["coeffs"] = a;
  return j;
}

Json to_json(const RatFunc& f) {
  Json j;
  j["num"] = to_json(f.num(), "v");
  j["den"] = to_json(f.den(), "v");
  return j;
}

Json to_json(const Step& s) {
  Json j;
  j["target"] = to_json(s.target);
  j["coeff"] = to_json(s.coeff);
  return j;
}

namespace {

template <class C>
Json hall_vector_json(const HallVector<C>& x) {
  Json j;
  j["n"] = x.n;
  j["dim"] = to_json(x.d);
  Json terms = Json::array();
  for (const auto& [pi, c] : x.entries) {
    Json t;
    t["pi"] = to_json(pi);
    t["coeff"] = to_json(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

}  // namespace

Json to_json(const HallVector<LaurentPoly>& x) { return hall_vector_json(x); }
Json to_json(const HallVector<RatFunc>& x) { return hall_vector_json(x); }

Json to_json(const Poset& p) {
  Json j;
  Json el = Json::array();
  for (const auto& pi : p.elements) el.push_back(to_json(pi));
  j["elements"] = el;
  Json leq = Json::array();
  for (const auto& row : p.leq) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    leq.push_back(r);
  }
  j["leq"] = leq;
  Json cov = Json::array();
  for (const auto& [a, b] : p.covers) cov.push_back(Json::array({a, b}));
  j["covers"] = cov;
  return j;
}

Json to_json(const TransitionMatrix& t) {
  Json j;
  Json rows = Json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Json row;
    row["pi"] = to_json(t.rows[r]);
    row["word"] = to_json(t.words[r]);
    rows.push_back(row);
  }
  j["rows"] = rows;
  Json cols = Json::array();
  for (const auto& c : t.cols) cols.push_back(to_json(c));
  j["cols"] = cols;
  Json m = Json::array();
  for (const auto& row : t.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    m.push_back(r);
  }
  j["matrix"] = m;
  return j;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(what, std::string("not valid JSON (") + e.what() + ")");
  }
}

MultiPartition multipartition_from_json(const Json& j, int n, const std::string& name) {
  const Json* parts = &j;
  if (j.is_object()) {
    n = as_int(field(j, "n", name), name + ".n");
    parts = &field(j, "parts", name);
  }
  if (n <= 0) bad(name + ".n", "vertex count not given");
  if (!parts->is_array()) bad(name + ".parts", "expected an array of partitions");
  if (static_cast<int>(parts->size()) != n) {
    bad(name + ".parts", "expected " + std::to_string(n) + " components, got " + std::to_string(parts->size()));
  }
  std::vector<Partition> comps;
  for (std::size_t k = 0; k < parts->size(); ++k) {
    const std::string ctx = name + ".parts[" + std::to_string(k) + "]";
    auto v = as_int_array((*parts)[k], ctx);
    comps.push_back(guarded(ctx, [&] { return Partition(v); }));
  }
  return guarded(name, [&] { return MultiPartition::from_parts(n, std::move(comps)); });
}

Word word_from_json(const Json& j, int n) {
  const Json* letters = &j;
  if (j.is_object()) {
    n = as_int(field(j, "n", "word"), "word.n");
    letters = &field(j, "letters", "word");
  }
  if (n <= 0) bad("word.n", "vertex count not given");
  auto v = as_int_array(*letters, "word.letters");
  return guarded("word.letters", [&] { return Word(n, v); });
}

DimVector dim_vector_from_json(const Json& j) {
  auto v = as_int_array(j, "dim");
  return guarded("dim", [&] { return DimVector(v); });
}

ModuleSummands module_from_json(const Json& j) {
  const int n = as_int(field(j, "n", "module"), "module.n");
  const Json& s = field(j, "summands", "module");
  if (!s.is_array()) bad("module.summands", "expected an array");
  std::vector<Summand> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    auto pair = as_int_array(s[k], "module.summands[" + std::to_string(k) + "]");
    if (pair.size() != 2) bad("module.summands[" + std::to_string(k) + "]", "expected [vertex, length]");
    out.push_back({pair[0], pair[1]});
  }
  return guarded("module", [&] { return ModuleSummands(n, std::move(out)); });
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) bad("coeff", "not an integer string");
    return z;
  }
  bad("coeff", "expected an integer");
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0 || r.get_den() == 0) bad("coeff", "not a rational string");
    r.canonicalize();
    return r;
  }
  return Rational(integer_from_json(j));
}

IntPoly int_poly_from_json(const Json& j) {
  const Json& c = field(j, "coeffs", "poly");
  if (!c.is_array()) bad("poly.coeffs", "expected an array");
  std::vector<Integer> v;
  for (const auto& x : c) v.push_back(integer_from_json(x));
  return IntPoly(std::move(v));
}

LaurentPoly laurent_from_json(const Json& j) {
  const int lo = as_int(field(j, "lo", "laurent"), "laurent.lo");
  return LaurentPoly(lo, int_poly_from_json(j));
}

namespace {

RatPoly rat_poly_from_json(const Json& j, const std::string& ctx) {
  const Json& c = field(j, "coeffs", ctx);
  if (!c.is_array()) bad(ctx + ".coeffs", "expected an array");
  std::vector<Rational> v;
  for (const auto& x : c) v.push_back(rational_from_json(x));
  return RatPoly(std::move(v));
}

}  // namespace

RatFunc ratfunc_from_json(const Json& j) {
  if (j.is_object() && j.contains("lo")) return RatFunc(laurent_from_json(j));
  if (j.is_object() && j.contains("coeffs")) return RatFunc(rat_poly_from_json(j, "coeff"));
  RatPoly num = rat_poly_from_json(field(j, "num", "coeff"), "coeff.num");
  RatPoly den = rat_poly_from_json(field(j, "den", "coeff"), "coeff.den");
  return guarded("coeff.den", [&] { return RatFunc(num, den); });
}

HallVector<RatFunc> hall_vector_from_json(const Json& j) {
  const int n = as_int(field(j, "n", "vector"), "vector.n");
  HallVector<RatFunc> out(dim_vector_from_json(field(j, "dim", "vector")));
  if (out.n != n) bad("vector.dim", "length differs from n");
  const Json& terms = field(j, "terms", "vector");
  if (!terms.is_array()) bad("vector.terms", "expected an array");
  for (const auto& t : terms) {
    MultiPartition pi = multipartition_from_json(field(t, "pi", "vector.terms"), n, "vector.terms.pi");
    if (dim_vector(pi) != out.d) bad("vector.terms.pi", "dimension vector differs from vector.dim");
    out.add(pi, ratfunc_from_json(field(t, "coeff", "vector.terms")));
  }
  return out;
}

std::string to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph degeneration {\n";
  for (std::size_t k = 0; k < p.elements.size(); ++k) {
    Json label = to_json(p.elements[k]);
    os << "  n" << k << " [label=" << Json(label.dump()).dump() << "];\n";
  }
  for (const auto& [a, b] : p.covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace qhall
