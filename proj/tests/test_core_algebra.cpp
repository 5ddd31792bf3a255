#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncpainleve/rng.hpp"
#include "ncpainleve/series.hpp"

using namespace ncp;

namespace {

// scalar series from integer coefficients, c0 first
RingElem scalar_series(std::vector<long> coeffs, const Rational& x0 = Rational(0)) {
    std::vector<CoefMatrix> c;
    for (long v : coeffs) {
        CoefMatrix m(1);
        m.at(0, 0) = Rational(v);
        c.push_back(m);
    }
    return RingElem(x0, std::move(c));
}

CoefMatrix mat2(long a, long b, long c, long d) {
    CoefMatrix m(2);
    m.at(0, 0) = Rational(a);
    m.at(0, 1) = Rational(b);
    m.at(1, 0) = Rational(c);
    m.at(1, 1) = Rational(d);
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a.str() == "1/2");
    CHECK(a.str_frac() == "1/2");
    CHECK(Rational(5).str_frac() == "5/1");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(-4, 6)).str() == "-2/3");
    CHECK(Rational::parse("7/21") == Rational(1, 3));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK(Rational::binomial(5, 2) == Rational(10));
}

TEST_CASE("product truncates to the smaller valid order") {
    RingElem a = scalar_series({1, 1, 0, 0, 0, 0});  // 1 + t, K = 5
    RingElem b = scalar_series({1, -1, 0, 0});       // 1 - t, K = 3
    RingElem p = a * b;
    CHECK(p.valid_order() == 3);
    CHECK(p == scalar_series({1, 0, -1, 0}));  // 1 - t^2
}

TEST_CASE("one is a two-sided unit") {
    Rng rng(7);
    RingElem a = rng.elem(2, Rational(1), 6, false);
    RingElem one = RingElem::one(2, Rational(1), 6);
    CHECK((a * one) == a);
    CHECK((one * a) == a);
}

TEST_CASE("matrix coefficients do not commute") {
    const Rational x0(0);
    RingElem a = RingElem::constant(mat2(0, 1, 0, 0), x0, 2);
    RingElem b = RingElem::constant(mat2(0, 0, 1, 0), x0, 2);
    CHECK((a * b).coeff(0) == mat2(1, 0, 0, 0));
    CHECK((b * a).coeff(0) == mat2(0, 0, 0, 1));
    CHECK((a * b) != (b * a));
}

TEST_CASE("termwise derivative") {
    RingElem p = scalar_series({1, 2, 3});  // 1 + 2t + 3t^2
    RingElem d = p.derive();
    CHECK(d.valid_order() == 1);
    CHECK(d == scalar_series({2, 6}));

    RingElem c = RingElem::scalar(Rational(5, 3), 2, Rational(1), 4);
    CHECK(c.derive().is_zero());

    RingElem k0 = scalar_series({4});
    CHECK_THROWS_AS(k0.derive(), OrderExhausted);
}

TEST_CASE("Leibniz rule on random elements") {
    Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        RingElem a = rng.elem(2, Rational(1), 8, false);
        RingElem b = rng.elem(2, Rational(1), 8, false);
        RingElem lhs = (a * b).derive();
        RingElem rhs = a.derive() * b + a * b.derive();
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("geometric series inverse") {
    RingElem a = scalar_series({1, -1, 0, 0});  // 1 - t, K = 3
    RingElem inv = a.invert();
    CHECK(inv.valid_order() == 3);
    CHECK(inv == scalar_series({1, 1, 1, 1}));
}

TEST_CASE("nilpotent perturbation of the identity") {
    const Rational x0(0);
    std::vector<CoefMatrix> c = {CoefMatrix::identity(2), mat2(0, 1, 0, 0), CoefMatrix(2)};
    RingElem a(x0, std::move(c));  // I + N t, N^2 = 0
    RingElem inv = a.invert();
    CHECK(inv.coeff(0) == CoefMatrix::identity(2));
    CHECK(inv.coeff(1) == mat2(0, -1, 0, 0));
    CHECK(inv.coeff(2) == CoefMatrix(2));
    CHECK((a * inv) == RingElem::one(2, x0, 2));
}

TEST_CASE("singular constant term is rejected") {
    RingElem a = RingElem::constant(mat2(1, 1, 1, 1), Rational(0), 3);
    CHECK_THROWS_AS(a.invert(), SingularConstantTerm);
}

TEST_CASE("two-sided inverse on random elements") {
    Rng rng(13);
    for (int dim : {1, 2, 3}) {
        RingElem a = rng.elem(dim, Rational(1), 8, true);
        RingElem inv = a.invert();
        CHECK(inv.valid_order() == a.valid_order());
        RingElem one = RingElem::one(dim, Rational(1), 8);
        CHECK((a * inv) == one);
        CHECK((inv * a) == one);
    }
}

TEST_CASE("derivative of the inverse") {
    Rng rng(17);
    RingElem v = rng.elem(2, Rational(1), 8, true);
    RingElem inv = v.invert();
    RingElem lhs = inv.derive();
    RingElem rhs = -(inv * v.derive() * inv);
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("recentering the variable moves the base point") {
    RingElem x = RingElem::variable(1, Rational(3), 4);
    RingElem moved = x.recentered(Rational(7));
    CHECK(moved.base_point() == Rational(7));
    CHECK(moved == RingElem::variable(1, Rational(7), 4));
}

TEST_CASE("recentering t^2 from 0 to 1") {
    RingElem t2 = scalar_series({0, 0, 1});
    RingElem moved = t2.recentered(Rational(1));
    CHECK(moved == scalar_series({1, 2, 1}, Rational(1)));
}

TEST_CASE("recentering x^3 - 1 about 1") {
    // about 0 the polynomial is -1 + 0 t + 0 t^2 + t^3
    RingElem p = scalar_series({-1, 0, 0, 1});
    RingElem moved = p.recentered(Rational(1));
    CHECK(moved == scalar_series({0, 3, 3, 1}, Rational(1)));
}

TEST_CASE("ring axioms on random elements") {
    Rng rng(19);
    for (int dim : {1, 2, 3}) {
        RingElem a = rng.elem(dim, Rational(1), 12, false);
        RingElem b = rng.elem(dim, Rational(1), 12, false);
        RingElem c = rng.elem(dim, Rational(1), 12, false);
        CHECK(((a * b) * c - a * (b * c)).is_zero());
        CHECK((a * (b + c) - (a * b + a * c)).is_zero());
        CHECK(((a + b) * c - (a * c + b * c)).is_zero());
    }
}

TEST_CASE("scalar entries commute") {
    Rng rng(23);
    RingElem a = rng.elem(1, Rational(2), 10, false);
    RingElem b = rng.elem(1, Rational(2), 10, false);
    CHECK((a * b - b * a).is_zero());
}

TEST_CASE("mismatched operands are rejected") {
    RingElem a = RingElem::one(2, Rational(0), 4);
    RingElem b = RingElem::one(3, Rational(0), 4);
    RingElem c = RingElem::one(2, Rational(1), 4);
    CHECK_THROWS_AS(a * b, DimensionMismatch);
    CHECK_THROWS_AS(a + c, BasePointMismatch);
}

TEST_CASE("first nonzero coefficient location") {
    RingElem z = RingElem::zero(2, Rational(0), 3);
    CHECK(!z.first_nonzero().has_value());
    std::vector<CoefMatrix> c(4, CoefMatrix(2));
    c[2].at(1, 0) = Rational(5);
    RingElem e(Rational(0), std::move(c));
    auto loc = e.first_nonzero();
    REQUIRE(loc.has_value());
    CHECK(loc->coeff == 2);
    CHECK(loc->row == 1);
    CHECK(loc->col == 0);
}
