#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "heckeforge/hecke/module.hpp"

namespace heckeforge::hecke {

struct IrreducibilityOptions {
  int retries = 32;  // random algebra elements tried by the Norton test
};

struct IrreducibilityVerdict {
  enum class Kind { Irreducible, Reducible, Inconclusive };
  Kind kind = Kind::Inconclusive;
  // Rows spanning a proper nonzero invariant subspace (Reducible only).
  std::optional<Matrix> witness;
  // commutant, norton, theta-weight, burnside or trivial.
  std::string method;
  int attempts = 0;
};

std::string to_string(IrreducibilityVerdict::Kind k);

// Dimension of {X : X A = A X for all generators and the rotation}.
std::size_t commutant_dim(const HModule& m);

IrreducibilityVerdict is_irreducible(const HModule& m, std::uint64_t seed, const IrreducibilityOptions& opts = {});

}  // namespace heckeforge::hecke
