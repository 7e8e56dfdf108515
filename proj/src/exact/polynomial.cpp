#include "heckeforge/exact/polynomial.hpp"

#include <algorithm>

#include "heckeforge/error.hpp"

namespace heckeforge::exact {

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidArgument("negative monomial degree");
  Poly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational());
  p.c_.back() = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational();
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] += b.c_[i];
  }
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly();
  Poly p = *this;
  for (auto& x : p.c_) x *= c;
  return p;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
  Rational inv_lead = b.leading().inverse();
  for (int i = a.degree(); i >= b.degree(); --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    Rational f = top * inv_lead;
    int shift = i - b.degree();
    quo[static_cast<std::size_t>(shift)] = f;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(shift + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return scaled(leading().inverse());
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<std::int64_t>(i));
  return Poly(std::move(d));
}

Poly Poly::compose_neg() const {
  Poly p = *this;
  for (std::size_t i = 1; i < p.c_.size(); i += 2) p.c_[i] = -p.c_[i];
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly result(Rational(1)), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = c.sign() < 0;
    if (neg) cs.erase(cs.begin());
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    bool unit = cs == "1";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (!unit) out += (cs.find('/') != std::string::npos ? "(" + cs + ")" : cs) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

int sign_changes(const std::vector<Rational>& seq) {
  int changes = 0, last = 0;
  for (const auto& c : seq) {
    int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = Poly::divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  return seq;
}

namespace {

int variations_at(const std::vector<Poly>& sturm, const Rational& x) {
  std::vector<Rational> vals;
  vals.reserve(sturm.size());
  for (const auto& s : sturm) vals.push_back(s.eval(x));
  return sign_changes(vals);
}

}  // namespace

int count_real_roots(const std::vector<Poly>& sturm, const Rational& a, const Rational& b) {
  return variations_at(sturm, a) - variations_at(sturm, b);
}

Rational root_bound(const Poly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational lead = p.leading().abs(), m;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = p.coeff(i).abs() / lead;
    if (r > m) m = r;
  }
  return m + Rational(1);
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("isolating roots of the zero polynomial");
  Poly sq = Poly::divmod(p, Poly::gcd(p, p.derivative())).first;
  std::vector<std::pair<Rational, Rational>> out;
  if (sq.degree() < 1) return out;
  auto sturm = sturm_sequence(sq);
  Rational b = root_bound(sq);
  // Endpoints must avoid roots; nudge by a shrinking amount until they do.
  auto avoid_root = [&](Rational x, const Rational& lo, const Rational& hi) {
    Rational step = (hi - lo) / Rational(4);
    while (sq.eval(x).is_zero()) {
      x += step;
      step /= Rational(2);
    }
    return x;
  };
  std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int n = count_real_roots(sturm, lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = avoid_root((lo + hi) / Rational(2), lo, hi);
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// The fraction with smallest denominator in the closed interval [a, b], a <= b.
mpq_class simplest_between(mpq_class a, mpq_class b) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  if (mpq_class(fl) == a) return a;
  if (mpq_class(fl + 1) <= b) return mpq_class(fl + 1);
  mpq_class fa = a - fl, fb = b - fl;
  mpq_class inner = simplest_between(1 / fb, 1 / fa);
  return mpq_class(fl) + 1 / inner;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p, bool* complete) {
  if (complete) *complete = true;
  std::vector<Rational> roots;
  if (p.is_zero()) throw InvalidArgument("rational roots of the zero polynomial");
  Poly sq = Poly::divmod(p, Poly::gcd(p, p.derivative())).first;
  if (sq.degree() < 1) return roots;
  if (sq.coeff(0).is_zero()) {
    roots.emplace_back(0);
    sq = Poly::divmod(sq, Poly::x()).first;
  }
  // Integer-primitive leading coefficient bounds root denominators.
  mpz_class lcm = 1;
  for (const auto& c : sq.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  mpq_class lead_q = sq.leading().to_mpq() * lcm;
  mpz_class lead = abs(lead_q.get_num());
  mpq_class sep = mpq_class(1, 2) / (lead * lead);
  for (auto [lo, hi] : isolate_real_roots(sq)) {
    auto sturm = sturm_sequence(sq);
    mpq_class l = lo.to_mpq(), h = hi.to_mpq();
    while (h - l >= sep) {
      mpq_class mid = (l + h) / 2;
      Rational rm(mid);
      if (sq.eval(rm).is_zero()) {
        l = mid;
        h = mid;
        break;
      }
      if (count_real_roots(sturm, Rational(l), rm) == 1) h = mid;
      else l = mid;
    }
    Rational cand(simplest_between(l, h));
    if (sq.eval(cand).is_zero()) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace heckeforge::exact
