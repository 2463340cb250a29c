#include <optional>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "packinglab/error.hpp"
#include "packinglab/exactnum.hpp"

using packinglab::ErrorKind;
using packinglab::QuadExt;

namespace {

QuadExt q(const char* s) { return QuadExt::parse(s); }

}  // namespace

TEST_CASE("addition") {
  CHECK(q("1+sqrt(3)") + q("1-sqrt(3)") == QuadExt(2));
  const QuadExt two_over_r3 = QuadExt(2) / QuadExt::sqrt(3);
  const QuadExt sum = two_over_r3 + QuadExt(4) / QuadExt::sqrt(3);
  CHECK(sum.rat_part() == 0);
  CHECK(sum.surd_part() == 2);
  CHECK(sum.disc() == 3);
  const QuadExt x = q("3/7-2/5*sqrt(5)");
  CHECK(x + QuadExt(0) == x);
  CHECK(kind_of([] { (void)(QuadExt::sqrt(2) + QuadExt::sqrt(3)); }) == ErrorKind::DiscMismatch);
}

TEST_CASE("multiplication") {
  CHECK(q("1+sqrt(3)") * q("1-sqrt(3)") == QuadExt(-2));
  CHECK(q("2/3*sqrt(3)") * q("2*sqrt(3)") == QuadExt(4));
  const QuadExt w = QuadExt(4) / QuadExt::sqrt(3);
  CHECK(w * w == QuadExt::fraction(16, 3));
  CHECK(kind_of([] { (void)(QuadExt::sqrt(2) * QuadExt::sqrt(5)); }) == ErrorKind::DiscMismatch);
  // A rational times anything is fine.
  CHECK(QuadExt(3) * QuadExt::sqrt(5) == q("3*sqrt(5)"));
}

TEST_CASE("inverse") {
  CHECK(QuadExt::sqrt(3).inverse() == q("1/3*sqrt(3)"));
  CHECK(QuadExt(2).inverse() == QuadExt::fraction(1, 2));
  CHECK(q("1+sqrt(3)").inverse() == q("-1/2+1/2*sqrt(3)"));
  CHECK(kind_of([] { (void)QuadExt(0).inverse(); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([] { (void)(QuadExt(1) / QuadExt(0)); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("comparison") {
  CHECK(QuadExt(2) / QuadExt::sqrt(3) > QuadExt(1));
  CHECK((QuadExt(1) <=> QuadExt(1)) == std::strong_ordering::equal);
  CHECK(q("1/2*sqrt(2)") < QuadExt(1));
  CHECK(packinglab::compare(q("1/2*sqrt(2)"), QuadExt(1)) == std::strong_ordering::less);
  CHECK(q("-3+2*sqrt(2)").sign() < 0);
  CHECK(q("3-2*sqrt(2)").sign() > 0);
  CHECK(q("-1+sqrt(2)").sign() > 0);
  CHECK(kind_of([] { (void)(QuadExt::sqrt(2) < QuadExt::sqrt(3)); }) == ErrorKind::DiscMismatch);
}

TEST_CASE("integrality") {
  CHECK_FALSE(packinglab::is_rational_integer(QuadExt::fraction(16, 3)));
  CHECK(packinglab::is_rational_integer(QuadExt(64)));
  CHECK(packinglab::is_rational_integer(QuadExt(0)));
  CHECK_FALSE(packinglab::is_rational_integer(q("2*sqrt(3)")));
  // 2/sqrt(3), 1, 2 sqrt(3), 1 around a 4-cycle, each doubled.
  const QuadExt p = QuadExt(2) * q("2/3*sqrt(3)") * QuadExt(2) * QuadExt(2) * q("2*sqrt(3)") *
                    QuadExt(2);
  CHECK(p == QuadExt(64));
}

TEST_CASE("canonical form") {
  CHECK(QuadExt::sqrt(12) == q("2*sqrt(3)"));
  CHECK(QuadExt::sqrt(16) == QuadExt(4));
  CHECK(QuadExt(mpq_class(1), mpq_class(0), 7).disc() == 0);
  CHECK((q("sqrt(3)") - q("sqrt(3)")).disc() == 0);
  CHECK(QuadExt(mpq_class(6, 4), mpq_class(0), 0).rat_part().get_den() == 2);
  CHECK(packinglab::is_square_free(30));
  CHECK_FALSE(packinglab::is_square_free(18));
}

TEST_CASE("text round trip") {
  for (const char* s : {"0", "-5", "7/3", "sqrt(3)", "-sqrt(3)", "2/3*sqrt(3)",
                        "1-1/2*sqrt(3)", "-4/9+11/2*sqrt(6)"}) {
    CHECK(q(s).str() == s);
    CHECK(QuadExt::parse(q(s).str()) == q(s));
  }
  CHECK(q(" 1 + sqrt(3) ") == q("1+sqrt(3)"));
  CHECK(q("sqrt(8)") == q("2*sqrt(2)"));
  for (const char* bad : {"", "abc", "1/0", "1+", "sqrt(3", "1*2", "2 3"}) {
    CHECK(kind_of([&] { (void)q(bad); }) == ErrorKind::ParseError);
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (unsigned long d : {2ul, 3ul, 5ul, 6ul}) {
    for (int k = 0; k < 300; ++k) {
      const QuadExt a = oracle::random_quad(rng, d);
      const QuadExt b = oracle::random_quad(rng, d);
      const QuadExt c = oracle::random_quad(rng, d);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == QuadExt(1));
      CHECK(a.norm() == (a * a.conjugate()).rat_part());
      const QuadExt re(a.rat_part(), a.surd_part(), a.disc() ? a.disc() : d);
      CHECK(re == a);
    }
  }
}

TEST_CASE("order agrees with a 100-digit evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 3);
  const unsigned long fields[] = {2, 3, 5, 6};
  int checked = 0;
  for (int k = 0; k < 10000; ++k) {
    const unsigned long d = fields[pick(rng)];
    const QuadExt a = oracle::random_quad(rng, d);
    // Some pairs are deliberately close: b = a + tiny rational.
    QuadExt b = oracle::random_quad(rng, d);
    if (k % 5 == 0) b = a + QuadExt::fraction(1, 1000003);
    if (k % 7 == 0) b = a;
    const auto ord = a <=> b;
    const auto fa = oracle::big_value(a), fb = oracle::big_value(b);
    if (fa < fb) {
      CHECK(ord == std::strong_ordering::less);
    } else if (fa > fb) {
      CHECK(ord == std::strong_ordering::greater);
    } else {
      CHECK(ord == std::strong_ordering::equal);
    }
    ++checked;
  }
  CHECK(checked == 10000);
}

TEST_CASE("long double conversion") {
  CHECK(static_cast<double>(q("2/3*sqrt(3)").to_long_double()) ==
        doctest::Approx(1.1547005383792515).epsilon(1e-15));
  const mpq_class tiny("1/340282366920938463463374607431768211456");
  CHECK(packinglab::to_long_double(tiny) > 0);
  CHECK(q("-1/3").to_double() == doctest::Approx(-1.0 / 3));
}

TEST_CASE("hash is consistent with equality") {
  std::hash<QuadExt> h;
  CHECK(h(q("2/4+3/6*sqrt(3)")) == h(q("1/2+1/2*sqrt(3)")));
}
