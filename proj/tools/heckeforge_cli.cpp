#include <CLI11.hpp>

#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <future>
#include <mutex>
#include <iostream>
#include <sstream>
#include <thread>

#include "heckeforge/error.hpp"
#include "heckeforge/io/json.hpp"

using namespace heckeforge;
using exact::Rational;
using io::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kSchema = 2, kCounterexample = 3 };

struct RunConfig {
  std::uint64_t seed = 0;
  std::optional<std::string> q;
  int conductor_cap = 16;
  int retries = 32;
  std::string format = "json";
  unsigned jobs = 1;
  bool timing = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void render_text(std::ostream& os, const json& j, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty() && !(v.is_array() && !v.front().is_structured())) {
        os << indent << k << ":\n";
        render_text(os, v, indent + "  ");
      } else {
        os << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << indent << "-\n";
        render_text(os, v, indent + "  ");
      } else {
        os << indent << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const RunConfig& cfg, const json& j, bool line = false) {
  if (cfg.format == "text") {
    render_text(std::cout, j, "");
    if (line) std::cout << "\n";
  } else {
    std::cout << (line ? j.dump() : j.dump(2)) << "\n";
  }
  std::cout.flush();
}

// Evaluates points with up to cfg.jobs in flight, emitting in index order.
bool scan(const RunConfig& cfg, std::size_t count, const std::function<json(std::size_t)>& point) {
  bool flagged = false;
  std::deque<std::future<json>> inflight;
  std::size_t next = 0;
  auto launch = [&] {
    while (next < count && inflight.size() < std::max(1u, cfg.jobs)) {
      std::size_t i = next++;
      inflight.push_back(std::async(cfg.jobs > 1 ? std::launch::async : std::launch::deferred, point, i));
    }
  };
  launch();
  while (!inflight.empty()) {
    json j = inflight.front().get();
    inflight.pop_front();
    launch();
    if (j.value("counterexample", false)) flagged = true;
    emit(cfg, j, true);
  }
  return flagged;
}

void check_conductor(const RunConfig& cfg, int n) {
  if (n > cfg.conductor_cap) throw UsageError("conductor " + std::to_string(n) + " exceeds the cap " + std::to_string(cfg.conductor_cap));
}

hecke::HeckeAlgebra algebra(const RunConfig& cfg, const json& j) {
  auto alg = io::algebra_from_json(j, cfg.q, "$");
  if (alg.field().kind == exact::Field::Kind::Cyclotomic) check_conductor(cfg, alg.field().conductor);
  return alg;
}

segments::LineRegistry registry_from(const json& lines, const std::string& path, std::vector<std::string>* warnings) {
  const json& arr = lines.is_object() && lines.contains("lines") ? lines["lines"] : lines;
  if (!arr.is_array()) throw SchemaError(path + ": expected an array of lines");
  std::vector<segments::CuspidalInvariants> ls;
  for (std::size_t i = 0; i < arr.size(); ++i) ls.push_back(io::line_from_json(arr[i], path + "[" + std::to_string(i) + "]"));
  segments::LineRegistry reg;
  auto w = reg.register_lines(ls);
  if (warnings) *warnings = w;
  return reg;
}

int cmd_lines_register(const RunConfig& cfg, const std::string& file) {
  std::vector<std::string> warnings;
  auto reg = registry_from(read_json(file), "$.lines", &warnings);
  emit(cfg, json{{"registered", reg.size()}, {"labels", reg.labels()}, {"warnings", warnings}});
  return kOk;
}

int cmd_product(const RunConfig& cfg, const std::string& file, const std::optional<std::string>& lines_file) {
  json in = read_json(file);
  json lines = lines_file ? read_json(*lines_file) : in.contains("lines") ? in["lines"] : json::array();
  auto reg = registry_from(lines, "$.lines", nullptr);
  grothendieck::UnitaryNames unitary;
  if (in.contains("unitary")) {
    if (!in["unitary"].is_array()) throw SchemaError("$.unitary: expected an array of multisegments");
    for (std::size_t i = 0; i < in["unitary"].size(); ++i)
      unitary.insert(io::multisegment_from_json(in["unitary"][i], "$.unitary[" + std::to_string(i) + "]"));
  }
  if (in.contains("x")) {
    auto x = io::ring_element_from_json(in["x"], "$.x");
    auto y = io::ring_element_from_json(in.at("y"), "$.y");
    auto res = grothendieck::multiply(reg, x, y, unitary);
    json pending = json::array();
    for (const auto& p : res.pending) {
      json v = io::to_json(p.verdict);
      pending.push_back(json{{"d", io::to_json(p.a)}, {"d_prime", io::to_json(p.b)}, {"coef", p.coefficient}, {"verdict", v["verdict"]}, {"rule", v["rule"]}});
    }
    emit(cfg, json{{"product", io::to_json(res.value)}, {"pending", pending}, {"partial", !res.pending.empty()}});
    return kOk;
  }
  if (!in.contains("d") || !in.contains("d_prime")) throw SchemaError("$: expected \"d\" and \"d_prime\" (or \"x\" and \"y\")");
  auto d = io::multisegment_from_json(in["d"], "$.d");
  auto dp = io::multisegment_from_json(in["d_prime"], "$.d_prime");
  auto v = grothendieck::classify_product(reg, d, dp, unitary);
  json out = io::to_json(v);
  if (v.result) out["support"] = io::to_json(segments::support(reg, *v.result));
  emit(cfg, out);
  return kOk;
}

int cmd_reducibility(const RunConfig& cfg, const std::string& file) {
  auto ctx = io::context_from_json(read_json(file), "$");
  auto [a, b] = transfer::reducibility_points(ctx);
  auto p = transfer::hecke_parameters(ctx);
  emit(cfg, json{{"points", {io::to_json(a), io::to_json(b)}}, {"hecke", {{"r", p.r}, {"q", io::to_json(p.q)}}}});
  return kOk;
}

transfer::TransferContext flag_context(int f, int n, const std::string& qf, int r) {
  transfer::TransferContext ctx;
  ctx.invariants = {"rho", 1, f % n == 0 ? f / n : 1, n, f, "rho", true};
  ctx.r = r;
  try {
    ctx.q_F = Rational::parse(qf);
  } catch (const Error& e) {
    throw UsageError(std::string("--qf: ") + e.what());
  }
  ctx.validate();
  return ctx;
}

Rational flag_rational(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError(name + ": " + e.what());
  }
}

struct PairFlags {
  int f = 1, n = 1;
  std::string qf = "2", from = "-3", to = "3";
  std::optional<std::string> step;
};

int cmd_verify_pair(const RunConfig& cfg, const PairFlags& fl) {
  auto ctx = flag_context(fl.f, fl.n, fl.qf, 2);
  Rational from = flag_rational("--s-from", fl.from), to = flag_rational("--s-to", fl.to);
  Rational step = fl.step ? flag_rational("--s-step", *fl.step) : Rational(1, fl.n);
  if (step.sign() <= 0) throw UsageError("--s-step must be positive");
  if (from > to) throw UsageError("--s-from exceeds --s-to");
  Rational span = (to - from) / step;
  if (!span.is_integer()) throw UsageError("grid from --s-from to --s-to is not a whole number of steps");
  if (!(from * Rational(fl.n)).is_integer() || !(step * Rational(fl.n)).is_integer())
    throw UsageError("grid points must satisfy n * s integral");
  std::size_t count = span.numerator().get_ui() + 1;
  if (count > 100000) throw UsageError("grid too large");
  hecke::IrreducibilityOptions opts{cfg.retries};
  std::vector<Rational> reducible;
  std::mutex mu;
  bool flagged = scan(cfg, count, [&](std::size_t i) -> json {
    Rational s = from + step * Rational(static_cast<std::int64_t>(i));
    std::uint64_t seed = transfer::point_seed(cfg.seed, i);
    auto rep = transfer::verify_cuspidal_pair(ctx, s, seed, opts);
    json j{{"index", i}};
    j.update(io::to_json(rep, seed));
    if (rep.verdict.kind == hecke::IrreducibilityVerdict::Kind::Reducible) {
      std::lock_guard lock(mu);
      reducible.push_back(s);
    }
    return j;
  });
  std::sort(reducible.begin(), reducible.end());
  json red = json::array();
  for (const auto& s : reducible) red.push_back(io::to_json(s));
  auto [a, b] = transfer::reducibility_points(ctx);
  emit(cfg, json{{"summary", {{"points", count}, {"reducible_at", red}, {"expected", {io::to_json(a), io::to_json(b)}}, {"counterexample", flagged}}}}, true);
  return flagged ? kCounterexample : kOk;
}

struct S0Flags {
  int f = 1, n = 1, r = 2;
  std::string qf = "2", shape = "1,1";
  std::optional<std::string> chars;
  std::optional<int> scan_conductor;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int cmd_verify_s0(const RunConfig& cfg, const S0Flags& fl) {
  auto ctx = flag_context(fl.f, fl.n, fl.qf, fl.r);
  std::vector<int> shape;
  for (const auto& p : split(fl.shape, ',')) {
    try {
      shape.push_back(std::stoi(p));
    } catch (const std::exception&) {
      throw UsageError("--shape: malformed part \"" + p + "\"");
    }
    if (shape.back() < 1) throw UsageError("--shape: parts must be positive");
  }
  int total = 0;
  for (int m : shape) total += m;
  if (total != fl.r) throw UsageError("--shape must sum to --r");
  hecke::IrreducibilityOptions opts{cfg.retries};

  if (fl.chars) {
    std::vector<transfer::CharacterSpec> chars;
    for (const auto& c : split(*fl.chars, ';')) {
      chars.push_back(io::character_from_string(c));
      check_conductor(cfg, chars.back().conductor);
    }
    auto rep = transfer::verify_S0(ctx, shape, chars, cfg.seed, opts);
    emit(cfg, io::to_json(rep, cfg.timing));
    return rep.counterexample ? kCounterexample : kOk;
  }
  if (!fl.scan_conductor) throw UsageError("verify s0 needs --chars or --scan-conductor");
  int n = *fl.scan_conductor;
  if (n < 1) throw UsageError("--scan-conductor must be positive");
  check_conductor(cfg, n);
  // Per factor: T -> q or -1 (rank one factors have no T), rotation -> zeta_n^k.
  std::vector<std::vector<transfer::CharacterSpec>> per;
  for (int m : shape) {
    std::vector<transfer::CharacterSpec> opts_k;
    for (bool st : m == 1 ? std::vector<bool>{false} : std::vector<bool>{false, true})
      for (long k = 0; k < n; ++k) opts_k.push_back({st, n, k, Rational(1)});
    per.push_back(opts_k);
  }
  std::size_t count = 1;
  for (const auto& p : per) count *= p.size();
  std::size_t unitary = 0;
  std::mutex mu;
  bool flagged = scan(cfg, count, [&](std::size_t idx) -> json {
    std::vector<transfer::CharacterSpec> chars;
    std::size_t rest = idx;
    for (std::size_t k = per.size(); k-- > 0;) {
      chars.insert(chars.begin(), per[k][rest % per[k].size()]);
      rest /= per[k].size();
    }
    std::uint64_t seed = transfer::point_seed(cfg.seed, idx);
    auto rep = transfer::verify_S0(ctx, shape, chars, seed, opts);
    if (rep.hypothesis_met) {
      std::lock_guard lock(mu);
      ++unitary;
    }
    json j{{"index", idx}};
    j.update(io::to_json(rep, cfg.timing));
    return j;
  });
  emit(cfg, json{{"summary", {{"points", count}, {"certified_unitary", unitary}, {"counterexample", flagged}}}}, true);
  return flagged ? kCounterexample : kOk;
}

int cmd_hecke(const RunConfig& cfg, const std::string& sub, const std::string& file) {
  json in = read_json(file);
  auto alg = algebra(cfg, in);
  if (sub == "multiply") {
    auto x = io::element_from_json(alg, in.at("x"), "$.x");
    auto y = io::element_from_json(alg, in.at("y"), "$.y");
    emit(cfg, json{{"product", io::to_json(hecke::im_multiply(x, y))}});
  } else if (sub == "invert") {
    auto w = io::affine_from_json(in.at("w"), alg.rank(), "$.w");
    auto inv = hecke::invert_basis_element(alg, w);
    bool ok = hecke::im_multiply(hecke::HeckeElement::basis(alg, w), inv) == hecke::HeckeElement::one(alg);
    emit(cfg, json{{"inverse", io::to_json(inv)}, {"verified", ok}});
  } else if (sub == "induce") {
    emit(cfg, io::to_json(hecke::induce(io::levi_module_from_json(alg, in, "$"))));
  } else if (sub == "irreducible") {
    auto m = io::module_from_json(alg, in.at("module"), "$.module");
    auto v = hecke::is_irreducible(m, cfg.seed, {cfg.retries});
    json out{{"dim", m.dim()}};
    out.update(io::to_json(v, cfg.seed));
    emit(cfg, out);
  } else if (sub == "unitary") {
    hecke::UnitarityVerdict v;
    if (in.contains("levi")) {
      v = hecke::is_unitary(io::levi_module_from_json(alg, in["levi"], "$.levi"));
    } else {
      v = hecke::is_unitary(io::module_from_json(alg, in.at("module"), "$.module"));
    }
    emit(cfg, io::to_json(v));
  } else {
    throw UsageError("unknown hecke subcommand " + sub);
  }
  return kOk;
}

int fail(const std::string& kind, const std::string& msg, int code) {
  std::cerr << json{{"error", kind}, {"message", msg}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heckeforge: exact verification for affine Hecke algebra modules and multisegment products"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "64-bit seed (fallback: HECKEFORGE_SEED, then 0)");
  app.add_option("--q", cfg.q, "q specialization: \"generic\" or a rational");
  app.add_option("--retries", cfg.retries, "randomized irreducibility attempts")->check(CLI::PositiveNumber);
  app.add_option("--conductor-cap", cfg.conductor_cap, "largest cyclotomic conductor accepted")->check(CLI::Range(1, 16));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", cfg.jobs, "scan workers")->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", cfg.timing, "include elapsed microseconds in reports");

  std::function<int()> run;

  auto* lines = app.add_subcommand("lines", "cuspidal line registry");
  lines->require_subcommand(1);
  std::string lines_file;
  lines->add_subcommand("register", "validate and register lines")->add_option("file", lines_file)->required();
  lines->get_subcommand("register")->callback([&] { run = [&] { return cmd_lines_register(cfg, lines_file); }; });

  std::string product_file;
  std::optional<std::string> product_lines;
  auto* product = app.add_subcommand("product", "classify a product of Langlands names");
  product->add_option("file", product_file)->required();
  product->add_option("--lines", product_lines, "line registry file");
  product->callback([&] { run = [&] { return cmd_product(cfg, product_file, product_lines); }; });

  std::string red_file;
  auto* red = app.add_subcommand("reducibility", "reducibility points of rho x nu^s rho");
  red->add_option("file", red_file)->required();
  red->callback([&] { run = [&] { return cmd_reducibility(cfg, red_file); }; });

  auto* verify = app.add_subcommand("verify", "verification runs");
  verify->require_subcommand(1);
  PairFlags pf;
  auto* pair = verify->add_subcommand("cuspidal-pair", "scan s for the rank-two principal series");
  pair->add_option("--f", pf.f)->check(CLI::PositiveNumber);
  pair->add_option("--n", pf.n)->check(CLI::PositiveNumber);
  pair->add_option("--qf", pf.qf);
  pair->add_option("--s-from", pf.from);
  pair->add_option("--s-to", pf.to);
  pair->add_option("--s-step", pf.step);
  pair->callback([&] { run = [&] { return cmd_verify_pair(cfg, pf); }; });
  S0Flags sf;
  auto* s0 = verify->add_subcommand("s0", "induce unitary characters and test irreducibility");
  s0->add_option("--f", sf.f)->check(CLI::PositiveNumber);
  s0->add_option("--n", sf.n)->check(CLI::PositiveNumber);
  s0->add_option("--qf", sf.qf);
  s0->add_option("--r", sf.r)->check(CLI::Range(1, 6));
  s0->add_option("--shape", sf.shape, "comma separated parts");
  s0->add_option("--chars", sf.chars, "semicolon separated, e.g. \"q:zeta8^1;-1:1\"");
  s0->add_option("--scan-conductor", sf.scan_conductor, "enumerate all characters with rotation in mu_N");
  s0->callback([&] { run = [&] { return cmd_verify_s0(cfg, sf); }; });

  auto* hk = app.add_subcommand("hecke", "Hecke algebra operations");
  std::string hk_sub, hk_file;
  hk->add_option("sub", hk_sub)->required()->check(CLI::IsMember({"multiply", "invert", "induce", "irreducible", "unitary"}));
  hk->add_option("file", hk_file)->required();
  hk->callback([&] { run = [&] { return cmd_hecke(cfg, hk_sub, hk_file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (seed) {
    cfg.seed = *seed;
  } else if (const char* env = std::getenv("HECKEFORGE_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      return fail("usage", "HECKEFORGE_SEED is not an unsigned integer", kUsage);
    }
  }
  try {
    return run();
  } catch (const SchemaError& e) {
    return fail("schema", e.what(), kSchema);
  } catch (const RegistryError& e) {
    return fail("schema", e.what(), kSchema);
  } catch (const json::exception& e) {
    return fail("schema", e.what(), kSchema);
  } catch (const UsageError& e) {
    return fail("usage", e.what(), kUsage);
  } catch (const InvalidArgument& e) {
    return fail("usage", e.what(), kUsage);
  } catch (const Error& e) {
    return fail("math", e.what(), kUsage);
  }
}
