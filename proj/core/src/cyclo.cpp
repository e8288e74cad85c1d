#include "hopfkit/cyclo.hpp"

#include <array>
#include <atomic>
#include <cctype>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hopfkit {

namespace {

using i128 = __int128;

[[noreturn]] void overflow() {
  throw ArithmeticError("integer overflow in exact arithmetic");
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    overflow();
  }
  return static_cast<std::int64_t>(v);
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mul64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

int lcm_int(int a, int b) {
  long long l = std::lcm(static_cast<long long>(a), static_cast<long long>(b));
  if (l > CycloScalar::kMaxConductor) {
    throw ArithmeticError("cyclotomic conductor " + std::to_string(l) + " exceeds supported maximum");
  }
  return static_cast<int>(l);
}

// Integer polynomials, lowest degree first.
using IntPoly = std::vector<std::int64_t>;

IntPoly cyclotomic_polynomial(int n) {
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    IntPoly q = cyclotomic_polynomial(d);
    // exact division of p by monic q
    std::size_t dq = q.size() - 1;
    IntPoly quot(p.size() - dq, 0);
    for (std::size_t i = p.size(); i-- > dq;) {
      std::int64_t c = p[i];
      quot[i - dq] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
    }
    p = quot;
  }
  return p;
}

struct FieldTables {
  int n = 1;
  int phi = 1;
  // pow[k] = x^k mod Phi_n, k < max(n, 2 phi)
  std::vector<std::vector<std::int64_t>> pow;
};

std::unique_ptr<FieldTables> build_tables(int n) {
  auto t = std::make_unique<FieldTables>();
  t->n = n;
  IntPoly cyc = cyclotomic_polynomial(n);
  t->phi = static_cast<int>(cyc.size()) - 1;
  const auto phi = static_cast<std::size_t>(t->phi);
  const std::size_t count = std::max<std::size_t>(static_cast<std::size_t>(n), 2 * phi);
  t->pow.assign(count, std::vector<std::int64_t>(phi, 0));
  t->pow[0][0] = 1;
  if (phi == 1 && n <= 2) {
    // x = -cyc[0]
    for (std::size_t k = 1; k < count; ++k) t->pow[k][0] = mul64(t->pow[k - 1][0], -cyc[0]);
    return t;
  }
  for (std::size_t k = 1; k < count; ++k) {
    const auto& prev = t->pow[k - 1];
    auto& cur = t->pow[k];
    std::int64_t top = prev[phi - 1];
    for (std::size_t i = phi; i-- > 1;) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < phi; ++i) cur[i] -= mul64(top, cyc[i]);
    }
  }
  return t;
}

std::array<std::atomic<const FieldTables*>, CycloScalar::kMaxConductor + 1> g_tables{};
std::mutex g_tables_mutex;

const FieldTables& tables(int n) {
  if (n < 1 || n > CycloScalar::kMaxConductor) {
    throw ArithmeticError("cyclotomic conductor " + std::to_string(n) + " out of range");
  }
  const FieldTables* t = g_tables[static_cast<std::size_t>(n)].load(std::memory_order_acquire);
  if (t != nullptr) return *t;
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  t = g_tables[static_cast<std::size_t>(n)].load(std::memory_order_acquire);
  if (t == nullptr) {
    t = build_tables(n).release();  // lives for the whole program
    g_tables[static_cast<std::size_t>(n)].store(t, std::memory_order_release);
  }
  return *t;
}

// Dense rational solve a x = b (a given by rows); false when inconsistent.
bool solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                    std::vector<Rational>& x) {
  const std::size_t rows = b.size();
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = Rational(1) / a[r][c];
    for (auto& v : a[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return false;
  }
  x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return true;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw ArithmeticError("division by zero");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  i128 g = gcd128(nn, dd);
  if (g > 1) {
    nn /= g;
    dd /= g;
  }
  num_ = narrow(nn);
  den_ = narrow(dd);
}

namespace {
Rational make_rational(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n), narrow(d));
}
}  // namespace

Rational Rational::operator-() const { return Rational(narrow(-static_cast<i128>(num_)), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return make_rational(static_cast<i128>(a.num_) + b.num_, a.den_);
  return make_rational(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                       static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.num_ == 0 || b.num_ == 0) return Rational(0);
  return make_rational(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw ArithmeticError("division by zero");
  return make_rational(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {
std::int64_t parse_int(std::string_view s) {
  if (s.empty()) throw ArithmeticError("empty integer");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ArithmeticError("malformed integer '" + std::string(s) + "'");
  i128 v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ArithmeticError("malformed integer '" + std::string(s) + "'");
    }
    v = v * 10 + (s[i] - '0');
    if (v > std::numeric_limits<std::int64_t>::max()) overflow();
  }
  return narrow(neg ? -v : v);
}
}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ------------------------------------------------------------- CycloScalar

int CycloScalar::euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

CycloScalar::CycloScalar(const Rational& r) : den_(r.den()), num_{r.num()} {}

void CycloScalar::normalize() {
  bool all_zero = true;
  for (auto v : num_) {
    if (v != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    conductor_ = 1;
    den_ = 1;
    num_.assign(1, 0);
    return;
  }
  if (den_ < 0) {
    den_ = narrow(-static_cast<i128>(den_));
    for (auto& v : num_) v = narrow(-static_cast<i128>(v));
  }
  i128 g = den_;
  for (auto v : num_) {
    if (g == 1) break;
    if (v != 0) g = gcd128(g, v);
  }
  if (g > 1) {
    den_ /= static_cast<std::int64_t>(g);
    for (auto& v : num_) v /= static_cast<std::int64_t>(g);
  }
  if (conductor_ > 1) {
    bool rational = true;
    for (std::size_t i = 1; i < num_.size(); ++i) {
      if (num_[i] != 0) {
        rational = false;
        break;
      }
    }
    if (rational) {
      conductor_ = 1;
      num_.resize(1);
    }
  }
}

CycloScalar CycloScalar::root_of_unity(int n, std::int64_t k) {
  const FieldTables& t = tables(n);
  std::int64_t kk = ((k % n) + n) % n;
  CycloScalar r;
  r.conductor_ = n;
  r.den_ = 1;
  const auto& p = t.pow[static_cast<std::size_t>(kk)];
  r.num_.assign(p.begin(), p.end());
  r.normalize();
  return r;
}

CycloScalar CycloScalar::from_coefficients(int n, const std::vector<Rational>& coeffs) {
  CycloScalar sum;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    sum += CycloScalar(coeffs[i]) * root_of_unity(n, static_cast<std::int64_t>(i));
  }
  return sum;
}

Rational CycloScalar::coefficient(std::size_t i) const {
  if (i >= num_.size()) return Rational(0);
  return Rational(num_[i], den_);
}

Rational CycloScalar::to_rational() const {
  if (!is_rational()) throw ArithmeticError("scalar " + to_string() + " is not rational");
  return Rational(num_[0], den_);
}

CycloScalar CycloScalar::lifted(int m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) {
    throw ArithmeticError("cannot lift conductor " + std::to_string(conductor_) + " to " +
                          std::to_string(m));
  }
  const FieldTables& t = tables(m);
  const std::size_t phi = static_cast<std::size_t>(t.phi);
  const std::size_t step = static_cast<std::size_t>(m / conductor_);
  std::vector<i128> acc(phi, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const auto& p = t.pow[i * step];
    for (std::size_t j = 0; j < phi; ++j) acc[j] += static_cast<i128>(num_[i]) * p[j];
  }
  CycloScalar r;
  r.conductor_ = m;
  r.den_ = den_;
  r.num_.resize(phi);
  for (std::size_t j = 0; j < phi; ++j) r.num_[j] = narrow(acc[j]);
  return r;  // deliberately not normalized: callers compare coefficientwise
}

CycloScalar CycloScalar::galois(std::int64_t k) const {
  if (conductor_ == 1) return *this;
  const int n = conductor_;
  std::int64_t kk = ((k % n) + n) % n;
  if (std::gcd(kk, static_cast<std::int64_t>(n)) != 1) {
    throw ArithmeticError("galois exponent must be a unit modulo the conductor");
  }
  const FieldTables& t = tables(n);
  const std::size_t phi = static_cast<std::size_t>(t.phi);
  std::vector<i128> acc(phi, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const auto& p = t.pow[static_cast<std::size_t>((static_cast<std::int64_t>(i) * kk) % n)];
    for (std::size_t j = 0; j < phi; ++j) acc[j] += static_cast<i128>(num_[i]) * p[j];
  }
  CycloScalar r;
  r.conductor_ = n;
  r.den_ = den_;
  r.num_.resize(phi);
  for (std::size_t j = 0; j < phi; ++j) r.num_[j] = narrow(acc[j]);
  r.normalize();
  return r;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (conductor_ == 1) return CycloScalar(Rational(den_, num_[0]));
  // product of the non-identity conjugates, divided by the norm
  CycloScalar others(1);
  for (int k = 2; k < conductor_; ++k) {
    if (std::gcd(k, conductor_) != 1) continue;
    others *= galois(k);
  }
  CycloScalar norm = *this * others;
  if (!norm.is_rational()) throw ArithmeticError("internal error: field norm is not rational");
  return others * CycloScalar(Rational(norm.den_, norm.num_[0]));
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& v : r.num_) v = narrow(-static_cast<i128>(v));
  return r;
}

CycloScalar CycloScalar::add_scaled(const CycloScalar& a, const CycloScalar& b, int sign) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return sign > 0 ? b : -b;
  const int m = a.conductor_ == b.conductor_ ? a.conductor_ : lcm_int(a.conductor_, b.conductor_);
  CycloScalar la_copy;
  CycloScalar lb_copy;
  const CycloScalar* pa = &a;
  const CycloScalar* pb = &b;
  if (a.conductor_ != m) {
    la_copy = a.lifted(m);
    pa = &la_copy;
  }
  if (b.conductor_ != m) {
    lb_copy = b.lifted(m);
    pb = &lb_copy;
  }
  i128 g = gcd128(pa->den_, pb->den_);
  i128 fa = pb->den_ / g;
  i128 fb = pa->den_ / g;
  CycloScalar r;
  r.conductor_ = m;
  r.den_ = narrow(static_cast<i128>(pa->den_) * fa);
  r.num_.resize(pa->num_.size());
  for (std::size_t i = 0; i < r.num_.size(); ++i) {
    i128 v = static_cast<i128>(pa->num_[i]) * fa;
    i128 w = static_cast<i128>(pb->num_[i]) * fb;
    r.num_[i] = narrow(sign > 0 ? v + w : v - w);
  }
  r.normalize();
  return r;
}

CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
  return CycloScalar::add_scaled(a, b, 1);
}

CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) {
  return CycloScalar::add_scaled(a, b, -1);
}

CycloScalar CycloScalar::multiply_same(const CycloScalar& a, const CycloScalar& b) {
  const FieldTables& t = tables(a.conductor_);
  const std::size_t phi = static_cast<std::size_t>(t.phi);
  std::vector<std::int64_t> prod(2 * phi - 1, 0);
  {
    std::vector<i128> acc(2 * phi - 1, 0);
    for (std::size_t i = 0; i < phi; ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < phi; ++j) {
        acc[i + j] += static_cast<i128>(a.num_[i]) * b.num_[j];
      }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) prod[k] = narrow(acc[k]);
  }
  std::vector<i128> red(phi, 0);
  for (std::size_t i = 0; i < phi; ++i) red[i] = prod[i];
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& p = t.pow[k];
    for (std::size_t i = 0; i < phi; ++i) red[i] += static_cast<i128>(prod[k]) * p[i];
  }
  CycloScalar r;
  r.conductor_ = a.conductor_;
  r.den_ = narrow(static_cast<i128>(a.den_) * b.den_);
  r.num_.resize(phi);
  for (std::size_t i = 0; i < phi; ++i) r.num_[i] = narrow(red[i]);
  r.normalize();
  return r;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  if (a.is_zero() || b.is_zero()) return CycloScalar();
  if (a.is_rational() || b.is_rational()) {
    const CycloScalar& q = a.is_rational() ? a : b;
    const CycloScalar& v = a.is_rational() ? b : a;
    if (q.is_one()) return v;
    i128 g1 = gcd128(q.num_[0], v.den_);
    CycloScalar r = v;
    i128 qn = q.num_[0] / g1;
    i128 vd = v.den_ / g1;
    r.den_ = narrow(vd * q.den_);
    for (auto& x : r.num_) x = narrow(static_cast<i128>(x) * qn);
    r.normalize();
    return r;
  }
  if (a.conductor_ == b.conductor_) return CycloScalar::multiply_same(a, b);
  const int m = lcm_int(a.conductor_, b.conductor_);
  return CycloScalar::multiply_same(a.lifted(m), b.lifted(m));
}

CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (a.conductor_ == b.conductor_) return a.den_ == b.den_ && a.num_ == b.num_;
  if (a.is_rational() || b.is_rational()) return false;
  const int m = lcm_int(a.conductor_, b.conductor_);
  CycloScalar la = a.lifted(m);
  CycloScalar lb = b.lifted(m);
  la.normalize();
  lb.normalize();
  return la.den_ == lb.den_ && la.num_ == lb.num_;
}

CycloScalar CycloScalar::minimal_form() const {
  if (conductor_ == 1) return *this;
  const int n = conductor_;
  const FieldTables& tn = tables(n);
  for (int d = 3; d < n; ++d) {
    if (n % d != 0 || d % 4 == 2) continue;
    bool fixed = true;
    for (int k = 1 + d; k < n && fixed; k += d) {
      if (std::gcd(k, n) != 1) continue;
      if (!(galois(k) == *this)) fixed = false;
    }
    if (!fixed) continue;
    const std::size_t phi_d = static_cast<std::size_t>(euler_phi(d));
    const std::size_t phi_n = static_cast<std::size_t>(tn.phi);
    const std::size_t step = static_cast<std::size_t>(n / d);
    std::vector<std::vector<Rational>> a(phi_n, std::vector<Rational>(phi_d));
    for (std::size_t i = 0; i < phi_d; ++i) {
      const auto& p = tn.pow[i * step];
      for (std::size_t j = 0; j < phi_n; ++j) a[j][i] = Rational(p[j]);
    }
    std::vector<Rational> b(phi_n);
    for (std::size_t j = 0; j < phi_n; ++j) b[j] = coefficient(j);
    std::vector<Rational> x;
    if (!solve_rational(a, b, x)) throw ArithmeticError("internal error: subfield solve failed");
    return from_coefficients(d, x);
  }
  return *this;
}

std::string CycloScalar::to_string() const {
  CycloScalar m = minimal_form();
  if (m.conductor_ == 1) return Rational(m.num_[0], m.den_).to_string();
  std::string out;
  for (std::size_t i = 0; i < m.num_.size(); ++i) {
    if (m.num_[i] == 0) continue;
    Rational c(m.num_[i], m.den_);
    bool neg = c.num() < 0;
    Rational mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += mag.to_string();
    if (i > 0) out += "*z" + std::to_string(m.conductor_) + "^" + std::to_string(i);
  }
  return out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  CycloScalar run() {
    if (s_.empty()) fail("empty scalar");
    CycloScalar sum;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      CycloScalar t = term();
      sum += sign > 0 ? t : -t;
      first = false;
    }
    return sum;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ArithmeticError("cannot parse scalar '" + s_ + "': " + why);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  CycloScalar term() {
    if (pos_ >= s_.size()) fail("dangling sign");
    Rational coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        num += "/" + digits();
      }
      coef = Rational::parse(num);
      have_coef = true;
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        if (pos_ >= s_.size() || s_[pos_] != 'z') fail("expected 'z' after '*'");
      }
    }
    if (pos_ < s_.size() && s_[pos_] == 'z') {
      ++pos_;
      std::int64_t n = Rational::parse(digits()).num();
      if (n < 1) fail("conductor must be positive");
      std::int64_t k = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
          neg = s_[pos_] == '-';
          ++pos_;
        }
        k = Rational::parse(digits()).num();
        if (neg) k = -k;
      }
      if (n > CycloScalar::kMaxConductor) fail("conductor too large");
      return CycloScalar(coef) * CycloScalar::root_of_unity(static_cast<int>(n), k);
    }
    if (!have_coef) fail("expected a number or 'z'");
    return CycloScalar(coef);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

CycloScalar CycloScalar::parse(std::string_view text) { return ScalarParser(text).run(); }

std::ostream& operator<<(std::ostream& os, const CycloScalar& s) { return os << s.to_string(); }

// -------------------------------------------------------------------- Vec

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = CycloScalar(1);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!b[i].is_zero()) r[i] += b[i];
  }
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!b[i].is_zero()) r[i] -= b[i];
  }
  return r;
}

Vec operator*(const CycloScalar& s, const Vec& v) {
  Vec r(v.size());
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) r[i] = s * v[i];
  }
  return r;
}

void axpy(Vec& v, const CycloScalar& s, const Vec& w) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!w[i].is_zero()) v[i] += s * w[i];
  }
}

}  // namespace hopfkit
