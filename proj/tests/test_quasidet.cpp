#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncpainleve/rng.hpp"
#include "oracles.hpp"

using namespace ncp;

namespace {

RingElem rat_entry(const Rational& v, const Rational& x0 = Rational(0)) {
    CoefMatrix m(1);
    m.at(0, 0) = v;
    return RingElem::constant(m, x0, 0);
}

NCMat rational_matrix(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<RingElem>> out;
    for (const auto& r : rows) {
        std::vector<RingElem> row;
        for (long v : r) row.push_back(rat_entry(Rational(v)));
        out.push_back(std::move(row));
    }
    return NCMat(std::move(out));
}

NCMat random_mat(Rng& rng, int n, int dim, int order, const Rational& x0 = Rational(1)) {
    NCMat a(n, RingElem::zero(dim, x0, order));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = rng.elem(dim, x0, order, false);
    return a;
}

Rational rat_value(const RingElem& e) { return e.coeff(0).at(0, 0); }

}  // namespace

TEST_CASE("1x1 quasideterminant is the entry") {
    Rng rng(3);
    RingElem a = rng.elem(2, Rational(1), 5, false);
    NCMat m(1, a);
    CHECK(quasidet(m, 0, 0) == a);
}

TEST_CASE("2x2 rational example") {
    NCMat a = rational_matrix({{1, 2}, {3, 4}});
    CHECK(rat_value(quasidet(a, 0, 0)) == Rational(-1, 2));
    // commutative ratio: (-1)^{i+j} det A / det A^{ij} = (4 - 6) / 4
    CHECK(rat_value(quasidet(a, 0, 1)) == Rational(2, 3));
    CHECK(rat_value(quasidet(a, 1, 0)) == Rational(1));
    CHECK(rat_value(quasidet(a, 1, 1)) == Rational(-2));
}

TEST_CASE("2x2 closed forms at every position") {
    Rng rng(5);
    NCMat a = random_mat(rng, 2, 2, 6);
    auto inv = [](const RingElem& e) { return e.invert(); };
    CHECK((quasidet(a, 0, 0) - (a.at(0, 0) - a.at(0, 1) * inv(a.at(1, 1)) * a.at(1, 0))).is_zero());
    CHECK((quasidet(a, 0, 1) - (a.at(0, 1) - a.at(0, 0) * inv(a.at(1, 0)) * a.at(1, 1))).is_zero());
    CHECK((quasidet(a, 1, 0) - (a.at(1, 0) - a.at(1, 1) * inv(a.at(0, 1)) * a.at(0, 0))).is_zero());
    CHECK((quasidet(a, 1, 1) - (a.at(1, 1) - a.at(1, 0) * inv(a.at(0, 0)) * a.at(0, 1))).is_zero());
}

TEST_CASE("3x3 four-term expansion of the corner quasideterminant") {
    Rng rng(7);
    NCMat a = random_mat(rng, 3, 2, 8);
    auto inv = [](const RingElem& e) { return e.invert(); };
    RingElem expanded =
        a.at(0, 0) -
        a.at(0, 1) * inv(a.at(1, 1) - a.at(1, 2) * inv(a.at(2, 2)) * a.at(2, 1)) * a.at(1, 0) -
        a.at(0, 1) * inv(a.at(2, 1) - a.at(2, 2) * inv(a.at(1, 2)) * a.at(1, 1)) * a.at(2, 0) -
        a.at(0, 2) * inv(a.at(1, 2) - a.at(1, 1) * inv(a.at(2, 1)) * a.at(2, 2)) * a.at(1, 0) -
        a.at(0, 2) * inv(a.at(2, 2) - a.at(2, 1) * inv(a.at(1, 1)) * a.at(1, 2)) * a.at(2, 0);
    CHECK((quasidet(a, 0, 0) - expanded).is_zero());
}

TEST_CASE("quasideterminant agrees with the recursive oracle") {
    Rng rng(9);
    for (int n : {2, 3}) {
        NCMat a = random_mat(rng, n, 2, 6);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK((quasidet(a, i, j) - oracles::quasidet_recursive(a, i, j)).is_zero());
    }
}

TEST_CASE("identity inverts to identity") {
    NCMat id = NCMat::identity(3, 2, Rational(1), 4);
    NCMat inv = nc_invert_matrix(id);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK((inv.at(i, j) - id.at(i, j)).is_zero());
}

TEST_CASE("rational 2x2 inverse and the inverse-entry relation") {
    NCMat a = rational_matrix({{1, 2}, {3, 4}});
    NCMat inv = nc_invert_matrix(a);
    CHECK(rat_value(inv.at(0, 0)) == Rational(-2));
    CHECK(rat_value(inv.at(0, 1)) == Rational(1));
    CHECK(rat_value(inv.at(1, 0)) == Rational(3, 2));
    CHECK(rat_value(inv.at(1, 1)) == Rational(-1, 2));
    CHECK(rat_value(quasidet(a, 0, 0).invert()) == Rational(-2));
}

TEST_CASE("multiply-back on a random 3x3 over matrix series") {
    Rng rng(11);
    NCMat a = random_mat(rng, 3, 2, 8);
    NCMat inv = nc_invert_matrix(a);
    NCMat left = inv * a;
    NCMat right = a * inv;
    NCMat id = NCMat::identity(3, 2, Rational(1), left.min_order());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK((left.at(i, j) - id.at(i, j)).is_zero());
            CHECK((right.at(i, j) - id.at(i, j)).is_zero());
        }
}

TEST_CASE("inverse entries are inverse transposed-position quasideterminants") {
    Rng rng(13);
    for (int n : {2, 3}) {
        NCMat a = random_mat(rng, n, 2, 6);
        NCMat inv = nc_invert_matrix(a);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                CHECK((inv.at(p, q) - quasidet(a, q, p).invert()).is_zero());
    }
}

TEST_CASE("cross-ratio identity reduces to the definition for n = 2") {
    Rng rng(15);
    NCMat a = random_mat(rng, 2, 2, 6);
    RingElem rhs = sylvester_rhs(a);
    RingElem def = a.at(1, 1) - a.at(1, 0) * a.at(0, 0).invert() * a.at(0, 1);
    CHECK((rhs - def).is_zero());
}

TEST_CASE("cross-ratio identity on random matrices") {
    Rng rng(17);
    NCMat r3 = random_mat(rng, 3, 1, 0);
    CHECK((sylvester_rhs(r3) - quasidet(r3, 2, 2)).is_zero());
    NCMat r4 = random_mat(rng, 4, 2, 6);
    CHECK((sylvester_rhs(r4) - quasidet(r4, 3, 3)).is_zero());
}

TEST_CASE("commutative determinant ratio") {
    Rng rng(19);
    for (int n : {2, 3, 4}) {
        NCMat a = random_mat(rng, n, 1, 0);
        RingElem det = det_cofactor(a);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RingElem minor_det = det_cofactor(a.minor_matrix(i, j));
                if (rat_value(minor_det).is_zero()) continue;
                RingElem expect = det * minor_det.invert();
                if ((i + j) % 2 == 1) expect = -expect;
                CHECK((quasidet(a, i, j) - expect).is_zero());
            }
    }
}

TEST_CASE("invariance under permutations away from the marked position") {
    Rng rng(21);
    NCMat a = random_mat(rng, 4, 2, 6);
    const int i = 1, j = 2;
    NCMat p = a;
    // swap rows 0 and 3 (both != i), columns 1 and 3 (both != j)
    for (int c = 0; c < 4; ++c) std::swap(p.at(0, c), p.at(3, c));
    for (int r = 0; r < 4; ++r) std::swap(p.at(r, 1), p.at(r, 3));
    CHECK((quasidet(a, i, j) - quasidet(p, i, j)).is_zero());
}

TEST_CASE("row and column scaling") {
    Rng rng(23);
    NCMat a = random_mat(rng, 3, 2, 6);
    RingElem lam = rng.elem(2, Rational(1), 6, true);
    RingElem mu = rng.elem(2, Rational(1), 6, true);
    const int i = 0, j = 1;

    NCMat b = a;
    for (int c = 0; c < 3; ++c) b.at(i, c) = lam * a.at(i, c);
    CHECK((quasidet(b, i, j) - lam * quasidet(a, i, j)).is_zero());
    CHECK((quasidet(b, 2, j) - quasidet(a, 2, j)).is_zero());

    NCMat c = a;
    for (int r = 0; r < 3; ++r) c.at(r, j) = a.at(r, j) * mu;
    CHECK((quasidet(c, i, j) - quasidet(a, i, j) * mu).is_zero());
    CHECK((quasidet(c, i, 0) - quasidet(a, i, 0)).is_zero());
}

TEST_CASE("adding one row to another") {
    Rng rng(25);
    NCMat a = random_mat(rng, 3, 2, 6);
    const int i = 0, j = 1;
    const int k = 2, l = 1;  // replace row k by row k + row l; k != i
    NCMat b = a;
    for (int c = 0; c < 3; ++c) b.at(k, c) = a.at(k, c) + a.at(l, c);
    CHECK((quasidet(a, i, j) - quasidet(b, i, j)).is_zero());
}

TEST_CASE("failing submatrix is identified") {
    NCMat a = rational_matrix({{5, 1}, {1, 0}});
    // A^{0,0} = [0] has no inverse
    CHECK_THROWS_AS(quasidet(a, 0, 0), SubmatrixNotInvertible);
    try {
        quasidet(a, 0, 0);
    } catch (const SubmatrixNotInvertible& e) {
        CHECK(std::string(e.what()).find("A^{0,0}") != std::string::npos);
    }
    NCMat singular = rational_matrix({{1, 1}, {1, 1}});
    CHECK_THROWS_AS(nc_invert_matrix(singular), MatrixNotInvertible);
}
