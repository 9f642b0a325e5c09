#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efm/family.hpp"

using namespace efm;

namespace {

const BigFloat kTol("1e-20");

/// Series-expansion oracle for the Gaussian binomial generating function:
/// coefficient of T^i in 1 / ((1-T)(1-yT)(1-y^2 T)(1-y^3 T)), as an element
/// of Q[x]/(x^m+1) with y = x^2.
CycloElem series_coefficient(int i, int m) {
    // Multiply out sum_{a+b+c+d=i} y^{b + 2c + 3d} one geometric factor at
    // a time, truncating at degree i in T.
    std::vector<CycloElem> series(i + 1, CycloElem(m));
    series[0] = CycloElem::monomial(m, 0);
    for (int factor = 0; factor < 4; ++factor) {
        std::vector<CycloElem> next(i + 1, CycloElem(m));
        for (int deg = 0; deg <= i; ++deg) {
            // (y^factor T)^k contributes monomial x^{2 factor k} at T^k.
            for (int k = 0; deg - k >= 0; ++k)
                next[deg] = next[deg] + series[deg - k] * CycloElem::monomial(m, 2L * factor * k);
        }
        series = std::move(next);
    }
    return series[i];
}

}  // namespace

TEST_CASE("cyclotomic ring arithmetic") {
    // x^m = -1 and x^{-1} = -x^{m-1}.
    CHECK(CycloElem::monomial(6, 6) == CycloElem::monomial(6, 0) * Rational(-1));
    CHECK(CycloElem::monomial(6, -1) == CycloElem::monomial(6, 5, Rational(-1)));
    CHECK(CycloElem::monomial(6, 12) == CycloElem::monomial(6, 0));
    CHECK(CycloElem::monomial(6, 1) * CycloElem::monomial(6, -1) == CycloElem::monomial(6, 0));

    // [0] = [m] = 0 exactly in the ring.
    CHECK(CycloElem::quantum(8, 0).is_zero());
    CHECK(CycloElem::quantum(8, 8).is_zero());
    CHECK_FALSE(CycloElem::quantum(8, 3).is_zero());

    // [k] evaluates to 2i sin(k pi / m).
    const auto v = CycloElem::quantum(5, 2).eval_at_root();
    CHECK(abs(v.re) < kTol);
    CHECK(abs(v.im - 2 * sin(2 * big_pi() / 5)) < kTol);
}

TEST_CASE("gauss_binom3") {
    // [3 choose 3]_y = 1 for every admissible n = 2.
    for (int m : {4, 6, 9, 12}) CHECK(gauss_binom3(2, m) == CycloElem::monomial(m, 0));

    // n = 3, m = 6: 1 + y + y^2 at y = x^2 mod x^6 + 1.
    const CycloElem expected = CycloElem::monomial(6, 0) + CycloElem::monomial(6, 2) +
                               CycloElem::monomial(6, 4);
    CHECK(gauss_binom3(3, 6) == expected);

    CHECK_THROWS_AS(gauss_binom3(1, 6), DomainError);
    CHECK_THROWS_AS(gauss_binom3(5, 6), DomainError);

    // Cross-check against the generating-function series (n = i + 2).
    for (int m = 5; m <= 12; ++m)
        for (int i = 0; i + 2 <= m - 2 && i <= 6; ++i)
            CHECK(gauss_binom3(i + 2, m) == series_coefficient(i, m));
}

TEST_CASE("family coefficients") {
    // m = 4: the single coefficient u_2 = 1, i.e. f = cos 2theta.
    const auto f4 = family_coefficients(4);
    CHECK(f4.u[2] == CycloElem::monomial(4, 0));
    CHECK(abs(f4.u_float[2] - 1) < kTol);

    // m = 6: u_2 = 1, u_3 = sqrt 3, u_4 = 1.
    const auto f6 = family_coefficients(6);
    CHECK(f6.u[2] == CycloElem::monomial(6, 0));
    CHECK(f6.u[4] == CycloElem::monomial(6, 0));
    CHECK(abs(f6.u_float[2] - 1) < kTol);
    CHECK(abs(f6.u_float[3] - sqrt(BigFloat(3))) < kTol);
    CHECK(abs(f6.u_float[4] - 1) < kTol);

    // m = 5: symmetry u_2 = u_3.
    const auto f5 = family_coefficients(5);
    CHECK(f5.u[2] == f5.u[3]);

    CHECK_THROWS_AS(family_coefficients(3), DomainError);

    // Ring values agree with the sine formula at the root, and the exact
    // symmetry holds for every order up to 64.
    for (int m : {7, 16, 33, 64}) {
        const auto fam = family_coefficients(m);
        for (int n = 2; n <= m - 2; ++n) {
            CHECK(fam.u[n] == fam.u[m - n]);
            const auto v = fam.u[n].eval_at_root();
            CHECK(abs(v.im) < kTol);
            CHECK(abs(v.re - fam.u_float[n]) < kTol);
        }
        // Degree window: [n-1][n][n+1] vanishes for n in {0, 1, m-1, m}.
        for (int n : {0, 1, m - 1, m}) {
            const auto triple = CycloElem::quantum(m, n - 1) * CycloElem::quantum(m, n) *
                                CycloElem::quantum(m, n + 1);
            CHECK(triple.is_zero());
            CHECK(fam.u[n].is_zero());
        }
    }
}

TEST_CASE("family identity") {
    for (int m = 4; m <= 32; ++m) CHECK(family_identity_check(m));

    // Perturbing u_3 at m = 6 must break the identity.
    auto u = family_coefficients(6).u;
    u[3] = u[3] + CycloElem::monomial(6, 0);
    CHECK_FALSE(family_identity_holds(u, 6));
}

TEST_CASE("family product formula") {
    CHECK(family_product_check(4, 50));
    CHECK(family_product_check(6, 50));
    CHECK(family_product_check(12, 50));

    // m = 6, theta = 0: sum u_n = 2 + sqrt3 = 2^3 prod (1 - cos (2k+1)pi/6).
    const auto f6 = family_coefficients(6);
    const BigFloat sum = f6.u_float[2] + f6.u_float[3] + f6.u_float[4];
    BigFloat prod = 8;
    for (int k = 2; k <= 5; ++k) prod *= 1 - cos((2 * k + 1) * big_pi() / 6);
    CHECK(abs(sum - (2 + sqrt(BigFloat(3)))) < kTol);
    CHECK(abs(sum - prod) < kTol);
}

TEST_CASE("parallel sweep matches the serial reference") {
    const auto serial = family_identity_sweep(4, 24, Exec::Serial);
    const auto parallel = family_identity_sweep(4, 24, Exec::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].m == parallel[i].m);
        CHECK(serial[i].identity_ok == parallel[i].identity_ok);
        CHECK(serial[i].identity_ok);
    }

    const BigFloat dev_s = family_product_max_deviation(10, 64, 123, Exec::Serial);
    const BigFloat dev_p = family_product_max_deviation(10, 64, 123, Exec::Parallel);
    CHECK(dev_s == dev_p);  // identical samples, identical arithmetic
}

TEST_CASE("thresholds") {
    // Suzuki: m = 4 over F_8 gives 65; the curve attains it.
    const auto suzuki = family_threshold(4, 8);
    CHECK(suzuki.threshold == QField(65));
    CHECK(suzuki.exact_path);
    REQUIRE(suzuki.certificate.has_value());
    CHECK(suzuki.certificate->bound.value == QField(65));
    CHECK(QField(65) <= suzuki.threshold);  // attains, does not exceed

    // Ree: m = 6 over F_3 gives 28.
    const auto ree = family_threshold(6, 3);
    CHECK(ree.threshold == QField(28));
    CHECK(ree.exact_path);
    REQUIRE(ree.certificate.has_value());
    CHECK(ree.certificate->bound.value == QField(28));

    // m = 2: threshold q + 1 for any q.
    for (long q : {2L, 3L, 4L, 7L}) {
        const auto t = family_threshold(2, q);
        CHECK(t.threshold == QField(q + 1));
        CHECK(t.exact_path);
    }

    // m = 3 over F_4: threshold r^3 + 1 = 9 (the Hermitian curve value).
    const auto herm = family_threshold(3, 4);
    CHECK(herm.threshold == QField(9));
    CHECK(herm.exact_path);

    // Orders whose band endpoints are irrational for the field: no exact
    // path, but ring identity and numeric product checks still certify.
    const auto m5 = family_threshold(5, 4);
    CHECK_FALSE(m5.exact_path);
    CHECK(m5.identity_ok);
    CHECK(m5.product_ok);
    CHECK(m5.threshold == QField(33));  // 2^5 + 1

    const auto m4q4 = family_threshold(4, 4);  // cos(pi/4) not in Q(sqrt 1)
    CHECK_FALSE(m4q4.exact_path);
    CHECK(m4q4.threshold == QField(17));

    // Odd m over a non-square q: the threshold is irrational.
    const auto m5q2 = family_threshold(5, 2);
    CHECK(m5q2.threshold == QField(Rational(1), Rational(4), 2));  // 4 sqrt2 + 1
}
