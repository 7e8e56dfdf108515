#include "heckeforge/io/json.hpp"

#include <regex>

#include "heckeforge/error.hpp"

namespace heckeforge::io {

using exact::Cyclotomic;
using exact::Field;
using exact::Poly;
using exact::RatFunc;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw SchemaError(path + ": " + what); }

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path + "." + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

long long int_field(const json& j, const char* key, const std::string& path) {
  const auto& v = field(j, key, path);
  if (!v.is_number_integer()) fail(sub(path, key), "expected an integer");
  return v.get<long long>();
}

int positive_int(const json& j, const char* key, const std::string& path) {
  auto v = int_field(j, key, path);
  if (v < 1 || v > (1LL << 30)) fail(sub(path, key), "expected a positive integer");
  return static_cast<int>(v);
}

std::string string_field(const json& j, const char* key, const std::string& path) {
  const auto& v = field(j, key, path);
  if (!v.is_string()) fail(sub(path, key), "expected a string");
  return v.get<std::string>();
}

const json& array_field(const json& j, const char* key, const std::string& path) {
  const auto& v = field(j, key, path);
  if (!v.is_array()) fail(sub(path, key), "expected an array");
  return v;
}

json poly_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Poly poly_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a coefficient array");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], sub(path, i)));
  return Poly(std::move(c));
}

template <class F>
auto wrap(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) fail(path, "expected a rational \"p/q\"");
  return wrap(path, [&] { return Rational::parse(j.get<std::string>()); });
}

json to_json(const Rational& r) { return r.to_string(); }

Scalar scalar_from_json(const json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "q") return Scalar(RatFunc::q());
  if (j.is_string() || j.is_number_integer()) return Scalar(rational_from_json(j, path));
  if (!j.is_object()) fail(path, "expected a scalar");
  if (j.contains("zeta")) {
    int n = positive_int(j, "zeta", path);
    if (n > Cyclotomic::kMaxConductor) fail(sub(path, "zeta"), "conductor exceeds 16");
    if (j.contains("power")) {
      Rational scale = j.contains("scale") ? rational_from_json(j["scale"], sub(path, "scale")) : Rational(1);
      return Scalar(scale) * Scalar(Cyclotomic::zeta(n, int_field(j, "power", path)));
    }
    const auto& c = array_field(j, "coeffs", path);
    std::vector<Rational> v;
    for (std::size_t i = 0; i < c.size(); ++i) v.push_back(rational_from_json(c[i], sub(sub(path, "coeffs"), i)));
    return wrap(path, [&] { return Scalar(Cyclotomic(v, n)); });
  }
  if (j.contains("num")) {
    Poly num = poly_from_json(j["num"], sub(path, "num"));
    Poly den = j.contains("den") ? poly_from_json(j["den"], sub(path, "den")) : Poly(Rational(1));
    return wrap(path, [&] { return Scalar(RatFunc(num, den)); });
  }
  fail(path, "expected a scalar");
}

json to_json(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return to_json(v);
        } else if constexpr (std::is_same_v<T, Cyclotomic>) {
          json c = json::array();
          for (const auto& x : v.coeffs()) c.push_back(to_json(x));
          return json{{"zeta", v.conductor()}, {"coeffs", c}};
        } else {
          return json{{"num", poly_json(v.num())}, {"den", poly_json(v.den())}};
        }
      },
      s.value());
}

Matrix matrix_from_json(const json& j, const Field& f, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of rows");
  std::size_t cols = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) fail(sub(path, i), "expected a row array");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) fail(sub(path, i), "ragged row");
  }
  Matrix m(j.size(), cols, f);
  for (std::size_t i = 0; i < j.size(); ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      auto p = sub(sub(path, i), k);
      Scalar s = scalar_from_json(j[i][k], p);
      m.set(i, k, wrap(p, [&] { return s.to_field(f); }));
    }
  return m;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m.at(i, k)));
    rows.push_back(row);
  }
  return rows;
}

segments::CuspidalInvariants line_from_json(const json& j, const std::string& path) {
  segments::CuspidalInvariants l;
  l.label = string_field(j, "label", path);
  l.k = positive_int(j, "k", path);
  l.b = positive_int(j, "b", path);
  l.n_torsion = positive_int(j, "n_torsion", path);
  l.f_residue = positive_int(j, "f_residue", path);
  l.dagger_label = string_field(j, "dagger_label", path);
  const auto& u = field(j, "unitary_base", path);
  if (!u.is_boolean()) fail(sub(path, "unitary_base"), "expected a boolean");
  l.unitary_base = u.get<bool>();
  return l;
}

json to_json(const segments::CuspidalInvariants& l) {
  return json{{"label", l.label},         {"k", l.k},
              {"b", l.b},                 {"n_torsion", l.n_torsion},
              {"f_residue", l.f_residue}, {"dagger_label", l.dagger_label},
              {"unitary_base", l.unitary_base}};
}

segments::Segment segment_from_json(const json& j, const std::string& path) {
  return {string_field(j, "line", path), positive_int(j, "n", path), rational_from_json(field(j, "e", path), sub(path, "e"))};
}

json to_json(const segments::Segment& s) { return json{{"line", s.line}, {"n", s.n}, {"e", to_json(s.e)}}; }

segments::Multisegment multisegment_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of segments");
  std::vector<segments::Segment> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(segment_from_json(j[i], sub(path, i)));
  return segments::Multisegment(std::move(v));
}

json to_json(const segments::Multisegment& d) {
  json a = json::array();
  for (const auto& s : d.segments()) a.push_back(to_json(s));
  return a;
}

json to_json(const segments::PointMultiset& p) {
  json a = json::array();
  for (const auto& [l, e] : p) a.push_back(json{{"line", l}, {"e", to_json(e)}});
  return a;
}

json to_json(const grothendieck::ProductVerdict& v) {
  json out{{"verdict", grothendieck::to_string(v.kind)}};
  out["rule"] = v.rule ? json(grothendieck::to_string(*v.rule)) : json(nullptr);
  if (v.result) out["result"] = to_json(*v.result);
  return out;
}

json to_json(const grothendieck::RingElement& x) {
  json a = json::array();
  for (const auto& [d, c] : x.terms()) a.push_back(json{{"coef", c}, {"multisegment", to_json(d)}});
  return a;
}

grothendieck::RingElement ring_element_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of terms");
  grothendieck::RingElement x;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto p = sub(path, i);
    x.add_term(multisegment_from_json(field(j[i], "multisegment", p), sub(p, "multisegment")), int_field(j[i], "coef", p));
  }
  return x;
}

hecke::HeckeAlgebra algebra_from_json(const json& j, const std::optional<std::string>& q_override, const std::string& path) {
  int r = positive_int(j, "rank", path);
  if (r > 8) fail(sub(path, "rank"), "rank above 8 is not supported");
  int conductor = j.contains("conductor") ? positive_int(j, "conductor", path) : 1;
  if (conductor > Cyclotomic::kMaxConductor) fail(sub(path, "conductor"), "conductor exceeds 16");
  std::string q = "generic";
  if (q_override) {
    q = *q_override;
  } else if (j.contains("q")) {
    q = j["q"].is_number_integer() ? std::to_string(j["q"].get<long long>()) : j["q"].is_string() ? j["q"].get<std::string>() : "";
    if (q.empty()) fail(sub(path, "q"), "expected \"generic\" or a rational");
  }
  if (q == "generic") {
    if (conductor != 1) fail(sub(path, "conductor"), "generic q works over Q(q) only");
    return hecke::HeckeAlgebra::generic(r);
  }
  Rational qv = rational_from_json(json(q), sub(path, "q"));
  if (qv.is_zero()) fail(sub(path, "q"), "q must be nonzero");
  return hecke::HeckeAlgebra::specialized(r, qv, conductor);
}

weyl::AffinePermutation affine_from_json(const json& j, int r, const std::string& path) {
  if (j.contains("window")) {
    const auto& w = array_field(j, "window", path);
    std::vector<long> v;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].is_number_integer()) fail(sub(sub(path, "window"), i), "expected an integer");
      v.push_back(w[i].get<long>());
    }
    if (static_cast<int>(v.size()) != r) fail(sub(path, "window"), "window length must equal the rank");
    return wrap(path, [&] { return weyl::AffinePermutation::from_window(v); });
  }
  if (j.contains("word")) {
    weyl::ReducedWord rw;
    rw.rotation_power = j.contains("rotation") ? int_field(j, "rotation", path) : 0;
    const auto& w = array_field(j, "word", path);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].is_number_integer() || w[i].get<int>() < 0 || w[i].get<int>() >= r)
        fail(sub(sub(path, "word"), i), "expected a generator index in 0..r-1");
      rw.word.push_back(w[i].get<int>());
    }
    return wrap(path, [&] { return weyl::from_reduced_word(r, rw); });
  }
  fail(path, "expected \"window\" or \"word\"");
}

json to_json(const weyl::AffinePermutation& w) {
  auto rw = weyl::reduced_word(w);
  return json{{"window", w.window()}, {"rotation", rw.rotation_power}, {"word", rw.word}};
}

hecke::HeckeElement element_from_json(const hecke::HeckeAlgebra& alg, const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of terms");
  hecke::HeckeElement x(alg);
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto p = sub(path, i);
    auto w = affine_from_json(j[i], alg.rank(), p);
    Scalar c = j[i].contains("coef") ? scalar_from_json(j[i]["coef"], sub(p, "coef")) : Scalar(Rational(1));
    x.add_term(w, wrap(sub(p, "coef"), [&] { return c.to_field(alg.field()); }));
  }
  return x;
}

json to_json(const hecke::HeckeElement& x) {
  json a = json::array();
  for (const auto& [w, c] : x.terms()) {
    json t = to_json(w);
    t["coef"] = to_json(c);
    a.push_back(t);
  }
  return a;
}

hecke::LeviModule levi_module_from_json(const hecke::HeckeAlgebra& alg, const json& j, const std::string& path) {
  const auto& s = array_field(j, "shape", path);
  std::vector<int> parts;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].is_number_integer() || s[i].get<int>() < 1) fail(sub(sub(path, "shape"), i), "expected a positive integer");
    parts.push_back(s[i].get<int>());
  }
  auto l = wrap(sub(path, "shape"), [&] { return hecke::LeviAlgebra(alg, hecke::LeviShape(parts)); });
  const auto& fs = array_field(j, "factors", path);
  if (fs.size() != parts.size()) fail(sub(path, "factors"), "one module per Levi factor is required");
  std::vector<hecke::HModule> mods;
  for (std::size_t i = 0; i < fs.size(); ++i) mods.push_back(module_from_json(l.factor(i), fs[i], sub(sub(path, "factors"), i)));
  return wrap(path, [&] { return hecke::LeviModule::tensor(l, mods); });
}

hecke::HModule module_from_json(const hecke::HeckeAlgebra& alg, const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a module description");
  const auto& f = alg.field();
  if (j.contains("character")) {
    auto p = sub(path, "character");
    const auto& c = j["character"];
    auto t = string_field(c, "T", p);
    if (t != "q" && t != "-1") fail(sub(p, "T"), "expected \"q\" or \"-1\"");
    Scalar z = scalar_from_json(field(c, "rot", p), sub(p, "rot"));
    return wrap(p, [&] {
      return hecke::HModule::character(alg, t == "q" ? alg.q() : Scalar(Rational(-1)), z.to_field(f));
    });
  }
  if (j.contains("principal_series")) {
    auto p = sub(path, "principal_series");
    const auto& zs = array_field(j, "principal_series", path);
    std::vector<Scalar> z;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      Scalar s = scalar_from_json(zs[i], sub(p, i));
      z.push_back(wrap(sub(p, i), [&] { return s.to_field(f); }));
    }
    if (static_cast<int>(z.size()) != alg.rank()) fail(p, "one parameter per coordinate is required");
    return wrap(p, [&] { return hecke::principal_series(alg, z); });
  }
  if (j.contains("finite")) {
    const auto& fin = array_field(j, "finite", path);
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < fin.size(); ++i) gens.push_back(matrix_from_json(fin[i], f, sub(sub(path, "finite"), i)));
    Matrix rot = matrix_from_json(field(j, "rotation", path), f, sub(path, "rotation"));
    bool half = j.contains("half_twist") && j["half_twist"].is_boolean() && j["half_twist"].get<bool>();
    return wrap(path, [&] { return hecke::HModule::from_finite(alg, gens, rot, half); });
  }
  if (j.contains("induced")) return wrap(path, [&] { return hecke::induce(levi_module_from_json(alg, j["induced"], sub(path, "induced"))); });
  fail(path, "expected one of \"character\", \"principal_series\", \"finite\", \"induced\"");
}

json to_json(const hecke::HModule& m) {
  json gens = json::array();
  for (const auto& g : m.generators()) gens.push_back(to_json(g));
  return json{{"dim", m.dim()},
              {"field", m.field().to_string()},
              {"generators", gens},
              {"rotation", to_json(m.rotation())},
              {"half_twist", m.half_twist()}};
}

json to_json(const hecke::IrreducibilityVerdict& v, std::uint64_t seed) {
  json out{{"verdict", hecke::to_string(v.kind)}, {"method", v.method}, {"attempts", v.attempts}, {"seed", seed}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

json to_json(const hecke::UnitarityVerdict& v) {
  json out{{"verdict", hecke::to_string(v.kind)}, {"form_space_dim", v.form_space_dim}};
  if (!v.reason.empty()) out["reason"] = v.reason;
  if (v.gram) out["gram"] = to_json(*v.gram);
  return out;
}

transfer::TransferContext context_from_json(const json& j, const std::string& path) {
  transfer::TransferContext ctx;
  if (j.contains("line")) {
    ctx.invariants = line_from_json(j["line"], sub(path, "line"));
  } else {
    ctx.invariants.label = "rho";
    ctx.invariants.dagger_label = "rho";
    ctx.invariants.f_residue = positive_int(j, "f_residue", path);
    ctx.invariants.n_torsion = positive_int(j, "n_torsion", path);
    ctx.invariants.b = j.contains("b") ? positive_int(j, "b", path) : ctx.invariants.f_residue % ctx.invariants.n_torsion == 0 ? ctx.invariants.f_residue / ctx.invariants.n_torsion : 1;
  }
  ctx.r = j.contains("r") ? positive_int(j, "r", path) : 2;
  ctx.q_F = rational_from_json(field(j, "q_F", path), sub(path, "q_F"));
  wrap(path, [&] {
    ctx.validate();
    return 0;
  });
  return ctx;
}

json to_json(const transfer::TransferContext& ctx) {
  return json{{"line", to_json(ctx.invariants)}, {"r", ctx.r}, {"q_F", to_json(ctx.q_F)}};
}

json to_json(const transfer::CuspidalPairReport& r, std::uint64_t seed) {
  return json{{"s", to_json(r.s)},
              {"chi", to_json(r.chi)},
              {"verdict", hecke::to_string(r.verdict.kind)},
              {"method", r.verdict.method},
              {"seed", seed},
              {"expected", r.expected_reducible ? "Reducible" : "Irreducible"},
              {"counterexample", r.counterexample}};
}

json to_json(const transfer::S0Report& r, bool timing) {
  json chars = json::array();
  for (const auto& c : r.characters) chars.push_back(c.to_string());
  json out{{"context", to_json(r.context)},
           {"shape", r.shape},
           {"characters", chars},
           {"induced_dim", r.induced_dim},
           {"unitarity", hecke::to_string(r.unitarity.kind)},
           {"hypothesis_met", r.hypothesis_met}};
  if (!r.hypothesis_met) {
    out["status"] = "hypothesis not met";
    out["verdict"] = nullptr;
  } else {
    out["verdict"] = hecke::to_string(r.verdict->kind);
    out["method"] = r.verdict->method;
  }
  out["seed"] = r.seed;
  out["counterexample"] = r.counterexample;
  if (timing) out["elapsed_us"] = static_cast<long long>(r.elapsed_ms * 1000);
  return out;
}

transfer::CharacterSpec character_from_string(const std::string& text) {
  static const std::regex re(R"(^\s*(q|-1)\s*:\s*(?:([-0-9]+(?:/[0-9]+)?)\s*\*?\s*)?(?:zeta([0-9]+)\^(-?[0-9]+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re) || (!m[2].matched && !m[3].matched))
    throw InvalidArgument("malformed character \"" + text + "\" (expected e.g. q:1, -1:zeta8^3, q:2/3*zeta4^1)");
  transfer::CharacterSpec c;
  c.steinberg = m[1] == "-1";
  if (m[2].matched) c.scale = Rational::parse(m[2].str());
  if (m[3].matched) {
    c.conductor = std::stoi(m[3].str());
    c.k = std::stol(m[4].str());
    if (c.conductor < 1 || c.conductor > Cyclotomic::kMaxConductor) throw InvalidArgument("conductor must lie in 1..16");
  }
  return c;
}

}  // namespace heckeforge::io
