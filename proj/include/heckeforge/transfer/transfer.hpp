#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heckeforge/hecke/irreducibility.hpp"
#include "heckeforge/hecke/unitarity.hpp"
#include "heckeforge/segments/segments.hpp"

namespace heckeforge::transfer {

using exact::Rational;
using exact::Scalar;
using segments::CuspidalInvariants;

struct TransferContext {
  CuspidalInvariants invariants;
  int r = 1;
  Rational q_F{2};
  // Throws InvalidArgument unless r >= 1 and q_F is a prime power.
  void validate() const;
};

struct HeckeParameters {
  int r = 1;
  Rational q;
};

HeckeParameters hecke_parameters(const TransferContext& ctx);
// chi(varpi) = q_F^{-n s}; n s must be an integer.
Rational twist_value(const TransferContext& ctx, const Rational& s);
// {+f/n, -f/n}
std::pair<Rational, Rational> reducibility_points(const TransferContext& ctx);

struct CuspidalPairReport {
  Rational s;
  Rational chi;
  hecke::IrreducibilityVerdict verdict;
  bool expected_reducible = false;
  // The verdict disagrees with the reducibility points.
  bool counterexample = false;
};

CuspidalPairReport verify_cuspidal_pair(const TransferContext& ctx, const Rational& s, std::uint64_t seed,
                                        const hecke::IrreducibilityOptions& opts = {});

// One-dimensional factor character: every T_i -> q (or -1), rotation -> scale * zeta_conductor^k.
struct CharacterSpec {
  bool steinberg = false;  // T -> -1
  int conductor = 1;
  long k = 0;
  Rational scale{1};
  Scalar rotation_value() const;
  std::string to_string() const;
  friend bool operator==(const CharacterSpec&, const CharacterSpec&) = default;
};

struct S0Report {
  TransferContext context;
  std::vector<int> shape;
  std::vector<CharacterSpec> characters;
  std::size_t induced_dim = 0;
  hecke::UnitarityVerdict unitarity;
  bool hypothesis_met = false;
  std::optional<hecke::IrreducibilityVerdict> verdict;
  std::uint64_t seed = 0;
  // Certified-unitary input whose induction is reducible.
  bool counterexample = false;
  double elapsed_ms = 0;
};

S0Report verify_S0(const TransferContext& ctx, const std::vector<int>& shape, const std::vector<CharacterSpec>& chars,
                   std::uint64_t seed, const hecke::IrreducibilityOptions& opts = {});
// Variant with an explicitly supplied module over the Levi subalgebra of H_r(q_K~).
S0Report verify_S0(const TransferContext& ctx, const hecke::LeviModule& inducing, std::uint64_t seed,
                   const hecke::IrreducibilityOptions& opts = {});

// Seed for scan point `index`.
std::uint64_t point_seed(std::uint64_t base, std::uint64_t index);

}  // namespace heckeforge::transfer
