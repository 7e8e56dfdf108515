#pragma once

#include <optional>
#include <string>

#include "heckeforge/hecke/module.hpp"

namespace heckeforge::hecke {

struct UnitarityVerdict {
  enum class Kind { Unitary, NotUnitary, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<Matrix> gram;  // positive definite invariant form (Unitary only)
  std::string reason;          // "no invariant form" or "indefinite" for NotUnitary
  std::size_t form_space_dim = 0;
};

std::string to_string(UnitarityVerdict::Kind k);

// Hermitian S with <v f, w> = <v, w f*> for <v, w> = v S w^H.
UnitarityVerdict is_unitary(const HModule& m);
// Each Levi factor acting on the common space.
UnitarityVerdict is_unitary(const LeviModule& v);

}  // namespace heckeforge::hecke
