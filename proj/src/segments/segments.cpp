#include "heckeforge/segments/segments.hpp"

#include <algorithm>
#include <mutex>

#include "heckeforge/error.hpp"

namespace heckeforge::segments {

LineRegistry::LineRegistry(const LineRegistry& o) {
  std::shared_lock lock(o.mu_);
  lines_ = o.lines_;
}

LineRegistry& LineRegistry::operator=(const LineRegistry& o) {
  if (this == &o) return *this;
  std::map<std::string, CuspidalInvariants> copy;
  {
    std::shared_lock lock(o.mu_);
    copy = o.lines_;
  }
  std::unique_lock lock(mu_);
  lines_ = std::move(copy);
  return *this;
}

std::vector<std::string> LineRegistry::register_lines(const std::vector<CuspidalInvariants>& lines) {
  std::unique_lock lock(mu_);
  auto merged = lines_;
  for (const auto& l : lines) {
    if (l.label.empty()) throw RegistryError("line label must be nonempty");
    if (l.k < 1 || l.b < 1 || l.n_torsion < 1 || l.f_residue < 1)
      throw RegistryError("line " + l.label + ": k, b, n_torsion and f_residue must be positive");
    if (!merged.emplace(l.label, l).second) throw RegistryError("line " + l.label + " is already registered");
  }
  std::vector<std::string> warnings;
  for (const auto& l : lines) {
    auto it = merged.find(l.dagger_label);
    if (it == merged.end()) throw RegistryError("line " + l.label + ": dagger partner " + l.dagger_label + " is not registered");
    const auto& d = it->second;
    if (d.dagger_label != l.label) throw RegistryError("line " + l.label + ": dagger is not an involution");
    if (d.k != l.k || d.b != l.b || d.n_torsion != l.n_torsion || d.f_residue != l.f_residue)
      throw RegistryError("line " + l.label + ": dagger partner " + d.label + " has different invariants");
    if (l.f_residue != l.b * l.n_torsion)
      warnings.push_back("line " + l.label + ": f_residue " + std::to_string(l.f_residue) + " != b * n_torsion = " +
                         std::to_string(l.b * l.n_torsion));
  }
  lines_ = std::move(merged);
  return warnings;
}

bool LineRegistry::contains(const std::string& label) const {
  std::shared_lock lock(mu_);
  return lines_.count(label) > 0;
}

const CuspidalInvariants& LineRegistry::get(const std::string& label) const {
  std::shared_lock lock(mu_);
  auto it = lines_.find(label);
  if (it == lines_.end()) throw RegistryError("unregistered line " + label);
  return it->second;
}

std::vector<std::string> LineRegistry::labels() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> out;
  for (const auto& [k, v] : lines_) out.push_back(k);
  return out;
}

std::size_t LineRegistry::size() const {
  std::shared_lock lock(mu_);
  return lines_.size();
}

std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
  if (auto c = a.line <=> b.line; c != 0) return c;
  if (auto c = a.n <=> b.n; c != 0) return c;
  return a.e <=> b.e;
}

std::string Segment::to_string() const { return "(" + line + "," + std::to_string(n) + "," + e.to_string() + ")"; }

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  for (const auto& s : segs_)
    if (s.n < 1) throw InvalidArgument("segment length must be positive");
  std::sort(segs_.begin(), segs_.end());
}

Multisegment operator+(const Multisegment& a, const Multisegment& b) {
  Multisegment out;
  std::merge(a.segs_.begin(), a.segs_.end(), b.segs_.begin(), b.segs_.end(), std::back_inserter(out.segs_));
  return out;
}

std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b) {
  return std::lexicographical_compare_three_way(a.segs_.begin(), a.segs_.end(), b.segs_.begin(), b.segs_.end());
}

std::string Multisegment::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < segs_.size(); ++i) s += (i ? "," : "") + segs_[i].to_string();
  return s + "}";
}

PointMultiset support(const LineRegistry& reg, const Multisegment& d) {
  PointMultiset out;
  for (const auto& s : d.segments()) {
    Rational b(reg.get(s.line).b);
    Rational top = s.e + b * Rational(s.n - 1, 2);
    for (int j = 0; j < s.n; ++j) out.emplace_back(s.line, top - b * Rational(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointMultiset merge(const PointMultiset& a, const PointMultiset& b) {
  PointMultiset out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Multisegment dagger(const LineRegistry& reg, const Multisegment& d) {
  std::vector<Segment> out;
  for (const auto& s : d.segments()) out.push_back({reg.get(s.line).dagger_label, s.n, -s.e});
  return Multisegment(std::move(out));
}

bool is_hermitian(const LineRegistry& reg, const Multisegment& d) { return dagger(reg, d) == d; }

std::vector<LanglandsBlock> langlands_blocks(const Multisegment& d) {
  std::map<Rational, std::vector<Segment>, std::greater<>> groups;
  for (const auto& s : d.segments()) groups[s.e].push_back(s);
  std::vector<LanglandsBlock> out;
  for (auto& [e, segs] : groups) out.push_back({e, Multisegment(std::move(segs))});
  return out;
}

bool aligned(const Segment& a, const Segment& b) { return a.line == b.line; }

bool is_simple(const Multisegment& d) {
  const auto& s = d.segments();
  return std::all_of(s.begin(), s.end(), [&](const Segment& x) { return x.line == s.front().line; });
}

std::vector<Multisegment> partition_by_lines(const Multisegment& d) {
  std::map<std::string, std::vector<Segment>> groups;
  for (const auto& s : d.segments()) groups[s.line].push_back(s);
  std::vector<Multisegment> out;
  for (auto& [l, segs] : groups) out.emplace_back(std::move(segs));
  return out;
}

long degree(const LineRegistry& reg, const Multisegment& d) {
  long total = 0;
  for (const auto& s : d.segments()) total += static_cast<long>(s.n) * reg.get(s.line).k;
  return total;
}

}  // namespace heckeforge::segments
