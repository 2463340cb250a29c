#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace packinglab {

/// Exact number a + b*sqrt(d) in Q or in a real quadratic field Q(sqrt d).
///
/// Canonical form: when b != 0, d is square-free and at least 2; when b == 0,
/// d is stored as 0. Rationals are kept reduced with positive denominator
/// (GMP does this for us). Arithmetic between two values whose surd parts are
/// both nonzero with different d raises DiscMismatch: a computation lives in
/// one field at a time.
///
/// Text form: "p/q", "p/q+r/s*sqrt(d)", "r/s*sqrt(d)", "sqrt(d)", "-sqrt(d)".
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long value);                 // NOLINT(google-explicit-constructor)
  QuadExt(const mpq_class& rational);  // NOLINT(google-explicit-constructor)
  QuadExt(mpq_class rat, mpq_class surd, unsigned long disc);

  /// sqrt(n) with the square part of n pulled out, e.g. sqrt(12) = 2*sqrt(3).
  static QuadExt sqrt(unsigned long n);
  static QuadExt fraction(long num, long den);
  static QuadExt parse(std::string_view text);

  const mpq_class& rat_part() const noexcept { return rat_; }
  const mpq_class& surd_part() const noexcept { return surd_; }
  unsigned long disc() const noexcept { return disc_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(surd_) == 0; }
  bool is_rational() const { return sgn(surd_) == 0; }
  bool is_rational_integer() const {
    return sgn(surd_) == 0 && rat_.get_den() == 1;
  }

  /// Sign under the real embedding sqrt(d) > 0, decided without floating point.
  int sign() const;

  QuadExt conjugate() const;
  /// Field norm a^2 - b^2 d.
  mpq_class norm() const;
  QuadExt inverse() const;
  QuadExt abs() const { return sign() < 0 ? -*this : *this; }

  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }

  std::string str() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.disc_ == b.disc_ && a.rat_ == b.rat_ && a.surd_ == b.surd_;
  }
  /// Throws DiscMismatch when the two values live in different fields.
  friend std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b);

  std::size_t hash() const;

 private:
  void canonicalize();
  static unsigned long common_disc(const QuadExt& a, const QuadExt& b);

  mpq_class rat_{0};
  mpq_class surd_{0};
  unsigned long disc_ = 0;
};

std::strong_ordering compare(const QuadExt& x, const QuadExt& y);
inline bool is_rational_integer(const QuadExt& x) { return x.is_rational_integer(); }
inline QuadExt inverse(const QuadExt& x) { return x.inverse(); }

/// Extended-precision value of a rational (about 100 significant bits are
/// formed before rounding to long double).
long double to_long_double(const mpq_class& q);

/// True when n has no square factor > 1.
bool is_square_free(unsigned long n);

}  // namespace packinglab

template <>
struct std::hash<packinglab::QuadExt> {
  std::size_t operator()(const packinglab::QuadExt& x) const { return x.hash(); }
};
