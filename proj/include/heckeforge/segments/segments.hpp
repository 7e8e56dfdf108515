#pragma once

#include <compare>
#include <map>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "heckeforge/exact/rational.hpp"

namespace heckeforge::segments {

using exact::Rational;

struct CuspidalInvariants {
  std::string label;
  int k = 1;          // degree
  int b = 1;          // nu_rho = nu^b
  int n_torsion = 1;
  int f_residue = 1;
  std::string dagger_label;
  bool unitary_base = true;
  friend bool operator==(const CuspidalInvariants&, const CuspidalInvariants&) = default;
};

// Append-only registry of cuspidal lines; dagger is validated as an involution
// preserving k, b, n_torsion and f_residue.
class LineRegistry {
 public:
  LineRegistry() = default;
  LineRegistry(const LineRegistry& o);
  LineRegistry& operator=(const LineRegistry& o);

  // Registers a batch atomically; returns warnings (f != b n).
  std::vector<std::string> register_lines(const std::vector<CuspidalInvariants>& lines);
  bool contains(const std::string& label) const;
  const CuspidalInvariants& get(const std::string& label) const;
  std::vector<std::string> labels() const;
  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::map<std::string, CuspidalInvariants> lines_;
};

// nu^e * delta(rho, n) on the line `line`.
struct Segment {
  std::string line;
  int n = 1;
  Rational e;
  friend bool operator==(const Segment&, const Segment&) = default;
  friend std::strong_ordering operator<=>(const Segment& a, const Segment& b);
  std::string to_string() const;
};

// Multiset of segments, kept sorted.
class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(std::vector<Segment> segs);  // NOLINT(google-explicit-constructor)
  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  std::size_t size() const { return segs_.size(); }
  friend Multisegment operator+(const Multisegment& a, const Multisegment& b);
  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b);
  std::string to_string() const;

 private:
  std::vector<Segment> segs_;
};

// (line, exponent) with multiplicity, sorted.
using CuspidalPoint = std::pair<std::string, Rational>;
using PointMultiset = std::vector<CuspidalPoint>;

PointMultiset support(const LineRegistry& reg, const Multisegment& d);
PointMultiset merge(const PointMultiset& a, const PointMultiset& b);

Multisegment dagger(const LineRegistry& reg, const Multisegment& d);
bool is_hermitian(const LineRegistry& reg, const Multisegment& d);

struct LanglandsBlock {
  Rational e;
  Multisegment segments;
};
// Grouped by exponent, strictly decreasing.
std::vector<LanglandsBlock> langlands_blocks(const Multisegment& d);

bool aligned(const Segment& a, const Segment& b);
bool is_simple(const Multisegment& d);
// Sub-multisegments per line, ordered by label.
std::vector<Multisegment> partition_by_lines(const Multisegment& d);

long degree(const LineRegistry& reg, const Multisegment& d);

}  // namespace heckeforge::segments
