#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "heckeforge/segments/segments.hpp"

namespace heckeforge::grothendieck {

using segments::LineRegistry;
using segments::Multisegment;
using segments::PointMultiset;

// Multisegments the caller asserts to name unitary representations.
using UnitaryNames = std::set<Multisegment>;

struct ProductVerdict {
  enum class Kind { Irreducible, Reducible, Unknown };
  enum class Rule { TrivialFactor, NonAligned, UnitaryU0, ReducibilityPoint };
  Kind kind = Kind::Unknown;
  std::optional<Rule> rule;
  std::optional<Multisegment> result;
  friend bool operator==(const ProductVerdict&, const ProductVerdict&) = default;
};

std::string to_string(ProductVerdict::Kind k);
std::string to_string(ProductVerdict::Rule r);

ProductVerdict classify_product(const LineRegistry& reg, const Multisegment& a, const Multisegment& b,
                                const UnitaryNames& unitary = {});

class RingElement {
 public:
  RingElement() = default;
  static RingElement basis(const Multisegment& d, long long coef = 1);
  static RingElement one() { return basis(Multisegment{}); }

  void add_term(const Multisegment& d, long long coef);
  long long coeff(const Multisegment& d) const;
  const std::map<Multisegment, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement scaled(long long c) const;
  friend bool operator==(const RingElement&, const RingElement&) = default;

  // Common degree of all terms, or nullopt when not homogeneous.
  std::optional<long> degree(const LineRegistry& reg) const;
  std::string to_string() const;

 private:
  std::map<Multisegment, long long> terms_;
};

struct PendingProduct {
  Multisegment a;
  Multisegment b;
  long long coefficient = 0;
  ProductVerdict verdict;
};

struct ProductResult {
  RingElement value;
  std::vector<PendingProduct> pending;
};

ProductResult multiply(const LineRegistry& reg, const RingElement& x, const RingElement& y,
                       const UnitaryNames& unitary = {});

std::map<PointMultiset, long long> supp_of_element(const LineRegistry& reg, const RingElement& x);

}  // namespace heckeforge::grothendieck
