#include "packinglab/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <utility>

#include "packinglab/error.hpp"

namespace packinglab {

namespace {

// Splits n = k^2 * m with m square-free.
std::pair<unsigned long, unsigned long> split_square(unsigned long n) {
  unsigned long k = 1;
  unsigned long m = n;
  for (unsigned long p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      k *= p;
    }
  }
  return {k, m};
}

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    const auto limb = static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
    h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t hash_mpq(const mpq_class& q) {
  std::size_t h = hash_mpz(q.get_num());
  return h ^ (hash_mpz(q.get_den()) * 0x100000001b3ULL);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : raw_(text) {
    bool gap = false;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        gap = !text_.empty();
        continue;
      }
      if (gap && std::isalnum(static_cast<unsigned char>(c)) &&
          std::isalnum(static_cast<unsigned char>(text_.back()))) {
        throw Error(ErrorKind::ParseError,
                    "cannot parse number '" + std::string(text) + "': stray space");
      }
      gap = false;
      text_.push_back(c);
    }
  }

  QuadExt parse() {
    if (text_.empty()) fail("empty number");
    QuadExt total;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      QuadExt term = parse_term();
      total += sign > 0 ? term : -term;
      first = false;
    }
    return total;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                "cannot parse number '" + std::string(raw_) + "': " + why);
  }

  mpz_class parse_digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits at offset " + std::to_string(start));
    return mpz_class(text_.substr(start, pos_ - start), 10);
  }

  unsigned long parse_sqrt() {
    if (text_.compare(pos_, 5, "sqrt(") != 0) fail("expected 'sqrt('");
    pos_ += 5;
    const mpz_class d = parse_digits();
    if (get() != ')') fail("expected ')'");
    if (!d.fits_ulong_p()) fail("radicand too large");
    return d.get_ui();
  }

  QuadExt parse_term() {
    if (peek() == 's') return QuadExt::sqrt(parse_sqrt());
    const mpz_class num = parse_digits();
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      den = parse_digits();
      if (den == 0) fail("zero denominator");
    }
    mpq_class coef(num, den);
    coef.canonicalize();
    if (peek() == '*') {
      ++pos_;
      return QuadExt(coef) * QuadExt::sqrt(parse_sqrt());
    }
    return QuadExt(coef);
  }

  std::string_view raw_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_square_free(unsigned long n) {
  if (n == 0) return false;
  return split_square(n).first == 1;
}

long double to_long_double(const mpq_class& q) {
  if (sgn(q) == 0) return 0.0L;
  mpf_class f(q, 256);
  const double hi = f.get_d();
  mpf_class rest(f - hi, 256);
  const double lo = rest.get_d();
  return static_cast<long double>(hi) + static_cast<long double>(lo);
}

QuadExt::QuadExt(long value) : rat_(value) {}

QuadExt::QuadExt(const mpq_class& rational) : rat_(rational) {
  rat_.canonicalize();
}

QuadExt::QuadExt(mpq_class rat, mpq_class surd, unsigned long disc)
    : rat_(std::move(rat)), surd_(std::move(surd)), disc_(disc) {
  rat_.canonicalize();
  surd_.canonicalize();
  if (sgn(surd_) != 0) {
    if (disc_ == 0) {
      throw Error(ErrorKind::InvalidInput, "surd part given with radicand 0");
    }
    const auto [k, m] = split_square(disc_);
    surd_ *= k;
    disc_ = m;
    if (disc_ == 1) {
      rat_ += surd_;
      surd_ = 0;
    }
  }
  canonicalize();
}

QuadExt QuadExt::sqrt(unsigned long n) {
  if (n == 0) return QuadExt();
  return QuadExt(mpq_class(0), mpq_class(1), n);
}

QuadExt QuadExt::fraction(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return QuadExt(q);
}

QuadExt QuadExt::parse(std::string_view text) { return Parser(text).parse(); }

void QuadExt::canonicalize() {
  if (sgn(surd_) == 0) disc_ = 0;
}

unsigned long QuadExt::common_disc(const QuadExt& a, const QuadExt& b) {
  if (a.disc_ == 0) return b.disc_;
  if (b.disc_ == 0 || a.disc_ == b.disc_) return a.disc_;
  throw Error(ErrorKind::DiscMismatch,
              "mixing sqrt(" + std::to_string(a.disc_) + ") and sqrt(" +
                  std::to_string(b.disc_) + ")");
}

int QuadExt::sign() const {
  const int sa = sgn(rat_);
  const int sb = sgn(surd_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and b^2 d wins. Equality would make d a
  // rational square, which canonical form excludes.
  const mpq_class a2 = rat_ * rat_;
  const mpq_class b2d = surd_ * surd_ * disc_;
  return a2 > b2d ? sa : sb;
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.surd_ = -r.surd_;
  return r;
}

mpq_class QuadExt::norm() const { return rat_ * rat_ - surd_ * surd_ * disc_; }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const mpq_class n = norm();
  QuadExt r;
  r.rat_ = rat_ / n;
  r.surd_ = -surd_ / n;
  r.disc_ = disc_;
  r.canonicalize();
  return r;
}

long double QuadExt::to_long_double() const {
  long double v = packinglab::to_long_double(rat_);
  if (disc_ != 0) {
    v += packinglab::to_long_double(surd_) *
         std::sqrt(static_cast<long double>(disc_));
  }
  return v;
}

std::string QuadExt::str() const {
  if (sgn(surd_) == 0) return rat_.get_str();
  std::string surd_text;
  const std::string radical = "sqrt(" + std::to_string(disc_) + ")";
  if (surd_ == 1) {
    surd_text = radical;
  } else if (surd_ == -1) {
    surd_text = "-" + radical;
  } else {
    surd_text = surd_.get_str() + "*" + radical;
  }
  if (sgn(rat_) == 0) return surd_text;
  return rat_.get_str() + (sgn(surd_) > 0 ? "+" : "") + surd_text;
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.rat_ = -r.rat_;
  r.surd_ = -r.surd_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  const unsigned long d = common_disc(*this, o);
  rat_ += o.rat_;
  surd_ += o.surd_;
  disc_ = d;
  canonicalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  const unsigned long d = common_disc(*this, o);
  rat_ -= o.rat_;
  surd_ -= o.surd_;
  disc_ = d;
  canonicalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  const unsigned long d = common_disc(*this, o);
  if (d == 0) {
    rat_ *= o.rat_;
    return *this;
  }
  mpq_class r = rat_ * o.rat_ + surd_ * o.surd_ * d;
  mpq_class s = rat_ * o.surd_ + surd_ * o.rat_;
  rat_ = std::move(r);
  surd_ = std::move(s);
  disc_ = d;
  canonicalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const QuadExt& x, const QuadExt& y) {
  return x <=> y;
}

std::size_t QuadExt::hash() const {
  std::size_t h = hash_mpq(rat_);
  h ^= hash_mpq(surd_) * 31 + disc_;
  return h;
}

}  // namespace packinglab
