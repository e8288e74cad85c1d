#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfkit {

/// Raised when exact arithmetic cannot proceed (overflow, division by zero,
/// malformed scalar text, conductor out of range).
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduced fraction over 64-bit integers. Every operation is overflow checked.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b);

  std::string to_string() const;
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Element of the cyclotomic field Q(zeta_N).
///
/// Stored in the power basis 1, z, ..., z^(phi(N)-1) with a single common
/// positive denominator. The representation is canonical for a fixed
/// conductor: coefficients are reduced modulo the N-th cyclotomic polynomial,
/// gcd(den, numerators) = 1, and rational values always carry conductor 1.
/// Binary operations on different conductors work in Q(zeta_lcm).
class CycloScalar {
 public:
  static constexpr int kMaxConductor = 1024;

  CycloScalar() : num_{0} {}
  CycloScalar(std::int64_t v) : num_{v} {}  // NOLINT(google-explicit-constructor)
  CycloScalar(const Rational& r);           // NOLINT(google-explicit-constructor)

  /// zeta_n^k for any integer k.
  static CycloScalar root_of_unity(int n, std::int64_t k = 1);
  /// Build from power-basis coefficients in Q(zeta_n). Accepts any length;
  /// entries beyond phi(n) are reduced.
  static CycloScalar from_coefficients(int n, const std::vector<Rational>& coeffs);

  int conductor() const { return conductor_; }
  std::size_t degree() const { return num_.size(); }
  Rational coefficient(std::size_t i) const;

  bool is_zero() const { return conductor_ == 1 && num_[0] == 0; }
  bool is_one() const { return conductor_ == 1 && num_[0] == 1 && den_ == 1; }
  bool is_rational() const { return conductor_ == 1; }
  Rational to_rational() const;

  /// Same value expressed in Q(zeta_m); m must be a multiple of the
  /// current conductor.
  CycloScalar lifted(int m) const;
  /// The automorphism zeta -> zeta^k of Q(zeta_conductor); k must be a unit.
  CycloScalar galois(std::int64_t k) const;
  CycloScalar conj() const { return galois(-1); }
  CycloScalar inverse() const;
  /// Same value in the smallest cyclotomic field containing it.
  CycloScalar minimal_form() const;

  CycloScalar operator-() const;
  friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b);
  CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
  CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
  CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }
  CycloScalar& operator/=(const CycloScalar& o) { return *this = *this / o; }
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

  /// Canonical text, e.g. "1/2*z8^1 - 1/2*z8^3". Uses the minimal conductor,
  /// so equal values print identically.
  std::string to_string() const;
  /// Accepts sums of terms "q", "q*zN^k", "zN^k", "zN", "-zN^k"; any N >= 1,
  /// any integer k.
  static CycloScalar parse(std::string_view text);

  static int euler_phi(int n);

 private:
  using Coeffs = boost::container::small_vector<std::int64_t, 4>;

  void normalize();
  static CycloScalar add_scaled(const CycloScalar& a, const CycloScalar& b, int sign);
  static CycloScalar multiply_same(const CycloScalar& a, const CycloScalar& b);

  int conductor_ = 1;
  std::int64_t den_ = 1;
  Coeffs num_;
};

std::ostream& operator<<(std::ostream& os, const CycloScalar& s);
std::ostream& operator<<(std::ostream& os, const Rational& r);

using Vec = std::vector<CycloScalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const CycloScalar& s, const Vec& v);
/// v += s * w
void axpy(Vec& v, const CycloScalar& s, const Vec& w);

}  // namespace hopfkit
