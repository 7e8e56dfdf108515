#include "heckeforge/transfer/transfer.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "heckeforge/error.hpp"

namespace heckeforge::transfer {

using namespace heckeforge::hecke;

namespace {

bool is_prime_power(const Rational& q) {
  if (!q.is_integer()) return false;
  mpz_class n = q.numerator();
  if (n < 2) return false;
  mpz_class p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) return true;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

void TransferContext::validate() const {
  if (r < 1) throw InvalidArgument("r must be at least 1");
  if (!is_prime_power(q_F)) throw InvalidArgument("q_F must be a prime power, got " + q_F.to_string());
  const auto& v = invariants;
  if (v.k < 1 || v.b < 1 || v.n_torsion < 1 || v.f_residue < 1)
    throw InvalidArgument("line invariants must be positive");
}

HeckeParameters hecke_parameters(const TransferContext& ctx) {
  ctx.validate();
  return {ctx.r, ctx.q_F.pow(ctx.invariants.f_residue)};
}

Rational twist_value(const TransferContext& ctx, const Rational& s) {
  ctx.validate();
  Rational ns = s * Rational(ctx.invariants.n_torsion);
  if (!ns.is_integer())
    throw InvalidArgument("n_torsion * s = " + ns.to_string() +
                          " is not an integer; scale s so that the twist value stays rational");
  return ctx.q_F.pow(-ns.numerator().get_si());
}

std::pair<Rational, Rational> reducibility_points(const TransferContext& ctx) {
  Rational p(ctx.invariants.f_residue, ctx.invariants.n_torsion);
  return {p, -p};
}

CuspidalPairReport verify_cuspidal_pair(const TransferContext& ctx, const Rational& s, std::uint64_t seed,
                                        const IrreducibilityOptions& opts) {
  if (ctx.r != 2) throw InvalidArgument("the cuspidal pair lives at r = 2");
  CuspidalPairReport rep;
  rep.s = s;
  rep.chi = twist_value(ctx, s);
  auto alg = HeckeAlgebra::specialized(2, hecke_parameters(ctx).q);
  auto m = principal_series(alg, {Scalar(Rational(1)), Scalar(rep.chi.inverse())});
  rep.verdict = is_irreducible(m, seed, opts);
  auto pts = reducibility_points(ctx);
  rep.expected_reducible = s == pts.first || s == pts.second;
  using K = IrreducibilityVerdict::Kind;
  rep.counterexample = (rep.verdict.kind == K::Reducible) != rep.expected_reducible ||
                       rep.verdict.kind == K::Inconclusive;
  return rep;
}

Scalar CharacterSpec::rotation_value() const {
  if (conductor < 1 || conductor > exact::Cyclotomic::kMaxConductor)
    throw InvalidArgument("rotation conductor must lie in 1..16");
  if (conductor == 1) return Scalar(scale);
  return Scalar(scale) * Scalar(exact::Cyclotomic::zeta(conductor, k));
}

std::string CharacterSpec::to_string() const {
  std::string t = steinberg ? "T->-1" : "T->q";
  std::string z = conductor == 1 ? scale.to_string()
                                 : (scale == Rational(1) ? "" : scale.to_string() + "*") + "zeta" +
                                       std::to_string(conductor) + "^" + std::to_string(k);
  return t + ",rot->" + z;
}

S0Report verify_S0(const TransferContext& ctx, const std::vector<int>& shape, const std::vector<CharacterSpec>& chars,
                   std::uint64_t seed, const IrreducibilityOptions& opts) {
  if (shape.size() != chars.size()) throw InvalidArgument("one character per Levi factor is required");
  auto fld = exact::Field::rational();
  for (const auto& c : chars) fld = exact::join(fld, c.rotation_value().field());
  int conductor = fld.kind == exact::Field::Kind::Cyclotomic ? fld.conductor : 1;
  auto params = hecke_parameters(ctx);
  // Factors of mixed parity are normalized by odd powers of sqrt(q).
  bool mixed = std::any_of(shape.begin(), shape.end(), [&](int m) { return (m - shape.front()) % 2 != 0; });
  if (mixed && !exact::Cyclotomic::sqrt_rational(params.q, conductor)) {
    for (int n = 1; n <= exact::Cyclotomic::kMaxConductor; ++n) {
      int joint = std::lcm(conductor, n);
      if (joint <= exact::Cyclotomic::kMaxConductor && exact::Cyclotomic::sqrt_rational(params.q, joint)) {
        conductor = joint;
        break;
      }
    }
  }
  auto alg = HeckeAlgebra::specialized(params.r, params.q, conductor);
  LeviAlgebra l(alg, LeviShape(shape));
  std::vector<HModule> factors;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const auto& f = l.factor(i);
    Scalar t = chars[i].steinberg ? Scalar(Rational(-1)) : f.q();
    factors.push_back(HModule::character(f, t, chars[i].rotation_value().to_field(f.field())));
  }
  auto rep = verify_S0(ctx, LeviModule::tensor(l, factors), seed, opts);
  rep.characters = chars;
  return rep;
}

S0Report verify_S0(const TransferContext& ctx, const LeviModule& inducing, std::uint64_t seed,
                   const IrreducibilityOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  auto params = hecke_parameters(ctx);
  const auto& amb = inducing.algebra().ambient();
  if (amb.rank() != params.r || !amb.q_value() || *amb.q_value() != params.q)
    throw InvalidArgument("inducing module does not live over H_r(q_K~) of the context");
  S0Report rep;
  rep.context = ctx;
  rep.shape = inducing.algebra().shape().parts();
  rep.seed = seed;
  rep.unitarity = is_unitary(inducing);
  rep.hypothesis_met = rep.unitarity.kind == UnitarityVerdict::Kind::Unitary;
  auto m = induce(inducing);
  rep.induced_dim = m.dim();
  if (rep.hypothesis_met) {
    rep.verdict = is_irreducible(m, seed, opts);
    rep.counterexample = rep.verdict->kind == IrreducibilityVerdict::Kind::Reducible;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::uint64_t point_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace heckeforge::transfer
