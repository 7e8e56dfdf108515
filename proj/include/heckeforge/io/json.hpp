#pragma once

#include <json.hpp>

#include "heckeforge/grothendieck/ring.hpp"
#include "heckeforge/hecke/irreducibility.hpp"
#include "heckeforge/hecke/unitarity.hpp"
#include "heckeforge/segments/segments.hpp"
#include "heckeforge/transfer/transfer.hpp"

namespace heckeforge::io {

using json = nlohmann::ordered_json;
using exact::Matrix;
using exact::Rational;
using exact::Scalar;

// Parsers throw SchemaError with the offending path.
Rational rational_from_json(const json& j, const std::string& path);
json to_json(const Rational& r);

// Rationals as "p/q"; cyclotomics as {"zeta": N, "coeffs": [...]} in the basis
// 1, zeta, ...; rational functions as {"num": [...], "den": [...]}.
// Input also accepts {"zeta": N, "power": k, "scale": "p/q"} and the string "q".
Scalar scalar_from_json(const json& j, const std::string& path);
json to_json(const Scalar& s);

Matrix matrix_from_json(const json& j, const exact::Field& f, const std::string& path);
json to_json(const Matrix& m);

segments::CuspidalInvariants line_from_json(const json& j, const std::string& path);
json to_json(const segments::CuspidalInvariants& l);
segments::Segment segment_from_json(const json& j, const std::string& path);
json to_json(const segments::Segment& s);
segments::Multisegment multisegment_from_json(const json& j, const std::string& path);
json to_json(const segments::Multisegment& d);
json to_json(const segments::PointMultiset& p);

json to_json(const grothendieck::ProductVerdict& v);
json to_json(const grothendieck::RingElement& x);
grothendieck::RingElement ring_element_from_json(const json& j, const std::string& path);

// {"rank": r, "q": "generic" | "p/q", "conductor": N}; `q_override` replaces "q".
hecke::HeckeAlgebra algebra_from_json(const json& j, const std::optional<std::string>& q_override,
                                      const std::string& path);
weyl::AffinePermutation affine_from_json(const json& j, int r, const std::string& path);
json to_json(const weyl::AffinePermutation& w);
// [{"window": [...]} | {"word": [...], "rotation": c}, "coef": scalar}, ...]
hecke::HeckeElement element_from_json(const hecke::HeckeAlgebra& alg, const json& j, const std::string& path);
json to_json(const hecke::HeckeElement& x);

// {"character": {"T": "q" | "-1", "rot": scalar}} | {"principal_series": [z...]}
// | {"finite": [A_1..A_{r-1}], "rotation": P} | {"induced": levi}
hecke::HModule module_from_json(const hecke::HeckeAlgebra& alg, const json& j, const std::string& path);
// {"shape": [r_1, ...], "factors": [module, ...]}
hecke::LeviModule levi_module_from_json(const hecke::HeckeAlgebra& alg, const json& j, const std::string& path);
json to_json(const hecke::HModule& m);

json to_json(const hecke::IrreducibilityVerdict& v, std::uint64_t seed);
json to_json(const hecke::UnitarityVerdict& v);

// {"line": {...}} or {"f_residue": f, "n_torsion": n}, plus "q_F" and "r".
transfer::TransferContext context_from_json(const json& j, const std::string& path);
json to_json(const transfer::TransferContext& ctx);
json to_json(const transfer::CuspidalPairReport& r, std::uint64_t seed);
json to_json(const transfer::S0Report& r, bool timing = false);
// "q:1", "-1:zeta8^3", "q:2/3*zeta4^1"
transfer::CharacterSpec character_from_string(const std::string& text);

}  // namespace heckeforge::io
