#include "heckeforge/exact/cyclotomic.hpp"

#include <numeric>

#include "heckeforge/error.hpp"

namespace heckeforge::exact {

namespace {

struct Table {
  int phi = 1;
  // zeta^k for 0 <= k < N as integer coefficient vectors of length phi.
  std::vector<std::array<std::int64_t, Cyclotomic::kMaxDegree>> power;
};

std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  // b monic.
  std::vector<std::int64_t> q(a.size() - b.size() + 1, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    std::int64_t f = a[static_cast<std::size_t>(i)];
    if (f == 0) continue;
    int shift = i - static_cast<int>(b.size()) + 1;
    q[static_cast<std::size_t>(shift)] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(shift) + j] -= f * b[j];
  }
  return q;
}

const std::array<Table, Cyclotomic::kMaxConductor + 1>& tables() {
  static const auto t = [] {
    std::array<Table, Cyclotomic::kMaxConductor + 1> out{};
    std::array<std::vector<std::int64_t>, Cyclotomic::kMaxConductor + 1> cyc{};
    for (int n = 1; n <= Cyclotomic::kMaxConductor; ++n) {
      std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
      p[0] = -1;
      p[static_cast<std::size_t>(n)] = 1;
      for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide_exact(p, cyc[static_cast<std::size_t>(d)]);
      cyc[static_cast<std::size_t>(n)] = p;
      Table& tb = out[static_cast<std::size_t>(n)];
      tb.phi = static_cast<int>(p.size()) - 1;
      std::array<std::int64_t, Cyclotomic::kMaxDegree> cur{};
      cur[0] = 1;
      for (int k = 0; k < n; ++k) {
        tb.power.push_back(cur);
        std::array<std::int64_t, Cyclotomic::kMaxDegree> next{};
        std::int64_t top = cur[static_cast<std::size_t>(tb.phi - 1)];
        for (int j = tb.phi - 1; j > 0; --j) next[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
        for (int j = 0; j < tb.phi; ++j) next[static_cast<std::size_t>(j)] -= top * p[static_cast<std::size_t>(j)];
        cur = next;
      }
    }
    return out;
  }();
  return t;
}

const Table& table(int n) { return tables()[static_cast<std::size_t>(n)]; }

void check_conductor(int n) {
  if (n < 1 || n > Cyclotomic::kMaxConductor)
    throw UnsupportedField("cyclotomic conductor " + std::to_string(n) + " outside 1..16");
}

long mod(long a, long n) { return ((a % n) + n) % n; }

// zeta_m^k inside Q(zeta_n), if it lies there.
std::optional<Cyclotomic> root_of_unity(int m, long k, int n) {
  if (n % m == 0) return Cyclotomic::zeta(n, k * (n / m));
  if (n % 2 == 1 && (2 * n) % m == 0) {
    long j = mod(k * (2 * n / m), 2 * n);
    Cyclotomic z = Cyclotomic::zeta(n, j * (n + 1) / 2);
    return j % 2 ? -z : z;
  }
  return std::nullopt;
}

int legendre(long a, long p) {
  long r = 1, base = mod(a, p), e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

}  // namespace

int Cyclotomic::phi(int conductor) {
  check_conductor(conductor);
  return table(conductor).phi;
}

Cyclotomic::Cyclotomic(int conductor) {
  check_conductor(conductor);
  n_ = static_cast<std::uint8_t>(conductor);
}

Cyclotomic::Cyclotomic(const Rational& c, int conductor) : Cyclotomic(conductor) { c_[0] = c; }

Cyclotomic::Cyclotomic(const std::vector<Rational>& coeffs, int conductor) : Cyclotomic(conductor) {
  const Table& tb = table(conductor);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    const auto& pw = tb.power[k % static_cast<std::size_t>(conductor)];
    for (int j = 0; j < tb.phi; ++j)
      if (pw[static_cast<std::size_t>(j)] != 0) c_[static_cast<std::size_t>(j)] += coeffs[k] * Rational(pw[static_cast<std::size_t>(j)]);
  }
}

Cyclotomic Cyclotomic::zeta(int conductor, long k) {
  Cyclotomic z(conductor);
  const auto& pw = table(conductor).power[static_cast<std::size_t>(mod(k, conductor))];
  for (int j = 0; j < table(conductor).phi; ++j) z.c_[static_cast<std::size_t>(j)] = Rational(pw[static_cast<std::size_t>(j)]);
  return z;
}

int Cyclotomic::degree() const { return table(n_).phi; }

std::vector<Rational> Cyclotomic::coeffs() const {
  return std::vector<Rational>(c_.begin(), c_.begin() + degree());
}

bool Cyclotomic::is_zero() const {
  for (int j = 0; j < degree(); ++j)
    if (!c_[static_cast<std::size_t>(j)].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (int j = 1; j < degree(); ++j)
    if (!c_[static_cast<std::size_t>(j)].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0].is_one(); }

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw InvalidArgument("cyclotomic value " + to_string() + " is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::embed(int conductor) const {
  check_conductor(conductor);
  if (conductor == n_) return *this;
  if (is_rational()) return Cyclotomic(c_[0], conductor);
  Cyclotomic out(conductor);
  for (int j = 0; j < degree(); ++j) {
    if (c_[static_cast<std::size_t>(j)].is_zero()) continue;
    auto z = root_of_unity(n_, j, conductor);
    if (!z) throw FieldMismatch("Q(zeta_" + std::to_string(n_) + ") does not embed in Q(zeta_" + std::to_string(conductor) + ")");
    out += z->scaled(c_[static_cast<std::size_t>(j)]);
  }
  return out;
}

int Cyclotomic::common_conductor(int a, int b) {
  if (a == b) return a;
  int l = std::lcm(a, b);
  // Q(zeta_n) = Q(zeta_2n) for odd n.
  if (l > kMaxConductor && l % 2 == 0 && (l / 2) % 2 == 1) l /= 2;
  if (l > kMaxConductor)
    throw FieldMismatch("no common cyclotomic field for conductors " + std::to_string(a) + " and " + std::to_string(b));
  return l;
}

Cyclotomic Cyclotomic::conj() const {
  if (is_rational()) return *this;
  Cyclotomic out(n_);
  const Table& tb = table(n_);
  for (int k = 0; k < tb.phi; ++k) {
    const Rational& a = c_[static_cast<std::size_t>(k)];
    if (a.is_zero()) continue;
    const auto& pw = tb.power[static_cast<std::size_t>(mod(-k, n_))];
    for (int j = 0; j < tb.phi; ++j)
      if (pw[static_cast<std::size_t>(j)] != 0) out.c_[static_cast<std::size_t>(j)] += a * Rational(pw[static_cast<std::size_t>(j)]);
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (int j = 0; j < degree(); ++j) out.c_[static_cast<std::size_t>(j)] = -out.c_[static_cast<std::size_t>(j)];
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  if (b.n_ != n_) {
    int n = common_conductor(n_, b.n_);
    *this = embed(n);
    return *this += b.embed(n);
  }
  for (int j = 0; j < degree(); ++j)
    if (!b.c_[static_cast<std::size_t>(j)].is_zero()) c_[static_cast<std::size_t>(j)] += b.c_[static_cast<std::size_t>(j)];
  return *this;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic r = a;
  r += b;
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  Cyclotomic out(n_);
  if (r.is_zero()) return out;
  for (int j = 0; j < degree(); ++j)
    if (!c_[static_cast<std::size_t>(j)].is_zero()) out.c_[static_cast<std::size_t>(j)] = c_[static_cast<std::size_t>(j)] * r;
  return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    int n = Cyclotomic::common_conductor(a.n_, b.n_);
    return a.embed(n) * b.embed(n);
  }
  if (b.is_rational()) return a.scaled(b.c_[0]);
  if (a.is_rational()) return b.scaled(a.c_[0]);
  const Table& tb = table(a.n_);
  int phi = tb.phi;
  std::array<Rational, 2 * Cyclotomic::kMaxDegree - 1> prod{};
  for (int i = 0; i < phi; ++i) {
    const Rational& x = a.c_[static_cast<std::size_t>(i)];
    if (x.is_zero()) continue;
    for (int j = 0; j < phi; ++j) {
      const Rational& y = b.c_[static_cast<std::size_t>(j)];
      if (!y.is_zero()) prod[static_cast<std::size_t>(i + j)] += x * y;
    }
  }
  Cyclotomic out(a.n_);
  for (int k = 0; k < phi; ++k) out.c_[static_cast<std::size_t>(k)] = prod[static_cast<std::size_t>(k)];
  for (int k = phi; k <= 2 * phi - 2; ++k) {
    const Rational& x = prod[static_cast<std::size_t>(k)];
    if (x.is_zero()) continue;
    const auto& pw = tb.power[static_cast<std::size_t>(k % a.n_)];
    for (int j = 0; j < phi; ++j) {
      std::int64_t m = pw[static_cast<std::size_t>(j)];
      if (m == 1) out.c_[static_cast<std::size_t>(j)] += x;
      else if (m == -1) out.c_[static_cast<std::size_t>(j)] -= x;
      else if (m != 0) out.c_[static_cast<std::size_t>(j)] += x * Rational(m);
    }
  }
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  if (is_rational()) return Cyclotomic(c_[0].inverse(), n_);
  // Solve M x = e_0 where column j of M is this * zeta^j.
  int phi = degree();
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(phi), std::vector<Rational>(static_cast<std::size_t>(phi) + 1));
  for (int j = 0; j < phi; ++j) {
    Cyclotomic col = *this * zeta(n_, j);
    for (int i = 0; i < phi; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.c_[static_cast<std::size_t>(i)];
  }
  m[0][static_cast<std::size_t>(phi)] = Rational(1);
  for (int c = 0; c < phi; ++c) {
    int p = c;
    while (m[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)].is_zero()) ++p;
    std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(c)]);
    Rational inv = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)].inverse();
    for (auto& x : m[static_cast<std::size_t>(c)]) x *= inv;
    for (int i = 0; i < phi; ++i) {
      if (i == c) continue;
      Rational f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (f.is_zero()) continue;
      for (int k = c; k <= phi; ++k)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -= f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
    }
  }
  Cyclotomic out(n_);
  for (int i = 0; i < phi; ++i) out.c_[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(phi)];
  return out;
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(Rational(1), n_), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
    int n = Cyclotomic::common_conductor(a.n_, b.n_);
    return a.embed(n) == b.embed(n);
  }
  for (int j = 0; j < a.degree(); ++j)
    if (a.c_[static_cast<std::size_t>(j)] != b.c_[static_cast<std::size_t>(j)]) return false;
  return true;
}

std::optional<Cyclotomic> Cyclotomic::sqrt_rational(const Rational& c, int conductor) {
  check_conductor(conductor);
  if (c.is_zero()) return Cyclotomic(conductor);
  // c = (s/b)^2 * m with m a squarefree integer.
  mpz_class a = c.numerator() * c.denominator();
  mpz_class b = c.denominator();
  mpz_class m = a < 0 ? mpz_class(-a) : a;
  mpz_class square = 1, sqfree = 1;
  for (unsigned long p = 2; p * p <= m; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p * p)) {
      m /= p * p;
      square *= p;
    }
    if (p > 1000000) return std::nullopt;
  }
  sqfree = m;
  Cyclotomic root(Rational(mpq_class(square, b)), conductor);
  if (a < 0) {
    auto i = root_of_unity(4, 1, conductor);
    if (!i) return std::nullopt;
    root *= *i;
  }
  mpz_class rest = sqfree;
  for (unsigned long p = 2; rest > 1; ++p) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    rest /= p;
    if (p == 2) {
      auto z = root_of_unity(8, 1, conductor);
      if (!z) return std::nullopt;
      root *= *z + z->conj();
      continue;
    }
    if (p > static_cast<unsigned long>(kMaxConductor)) return std::nullopt;
    Cyclotomic g(conductor);
    for (long k = 1; k < static_cast<long>(p); ++k) {
      auto z = root_of_unity(static_cast<int>(p), k, conductor);
      if (!z) return std::nullopt;
      g += z->scaled(Rational(legendre(k, static_cast<long>(p))));
    }
    if (p % 4 == 3) {
      auto i = root_of_unity(4, 1, conductor);
      if (!i) return std::nullopt;
      g = -(g * *i);
    }
    root *= g;
  }
  if (!(root * root == Cyclotomic(c, conductor))) throw Error("internal: cyclotomic square root check failed");
  return root;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return c_[0].to_string();
  std::string out;
  for (int j = 0; j < degree(); ++j) {
    const Rational& a = c_[static_cast<std::size_t>(j)];
    if (a.is_zero()) continue;
    std::string s = a.to_string();
    bool neg = a.sign() < 0;
    if (neg) s.erase(s.begin());
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string z = "z" + std::to_string(n_);
    if (j == 0) out += s;
    else out += (s == "1" ? "" : s + "*") + z + (j > 1 ? "^" + std::to_string(j) : "");
  }
  return out;
}

}  // namespace heckeforge::exact
