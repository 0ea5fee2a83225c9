#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "doctest.h"
#include "sl2reps/cyclotomic.hpp"

using namespace sl2reps;

namespace {

std::complex<double> e_of(double r) { return std::polar(1.0, 2 * M_PI * r); }

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

Cyclotomic random_element(std::mt19937_64& rng, long n)
{
    std::uniform_int_distribution<int> c(-4, 4);
    std::vector<mpq_class> co(n);
    for (auto& q : co) q = mpq_class(c(rng), 1 + std::abs(c(rng)));
    return Cyclotomic::from_coeffs(n, co);
}

}  // namespace

TEST_CASE("roots of unity reduce to canonical form")
{
    CHECK(root_of_unity(1, 4) == imag_unit());
    CHECK(imag_unit().conductor() == 4);
    CHECK(root_of_unity(1, 3) + root_of_unity(2, 3) == Cyclotomic(-1));
    // e(1/6) = -zeta_3^2, cross-checked against floating evaluation.
    Cyclotomic z6 = root_of_unity(1, 6);
    CHECK(z6 == -root_of_unity(2, 3));
    CHECK(near(z6.approx(), e_of(1.0 / 6)));
    CHECK(z6.conductor() == 3);
    CHECK(root_of_unity(5, 10) == Cyclotomic(-1));
    CHECK(root_of_unity(0, 7).is_one());
}

TEST_CASE("field operations")
{
    Cyclotomic s2 = root_of_unity(1, 8) + root_of_unity(7, 8);
    CHECK(s2 * s2 == Cyclotomic(2));
    CHECK(zeta(5).conj() == root_of_unity(4, 5));
    Cyclotomic x = Cyclotomic(1) + Cyclotomic(2) * zeta(3);
    // (1 + 2w)(1 + 2w^2) = 1 + 2(w + w^2) + 4 = 3
    CHECK(x * x.conj() == Cyclotomic(3));
    CHECK((x / x).is_one());
    CHECK_THROWS_AS(x / Cyclotomic(0), division_by_zero);
    CHECK(Cyclotomic(mpq_class(3, 6)).to_string() == "1/2");
}

TEST_CASE("inverse in a field without a rational norm shortcut")
{
    Cyclotomic x = Cyclotomic(2) + zeta(7) + Cyclotomic(3) * root_of_unity(3, 7);
    CHECK((x * x.inverse()).is_one());
    Cyclotomic y = Cyclotomic(1) + zeta(12) + root_of_unity(5, 24);
    CHECK((y * y.inverse()).is_one());
}

TEST_CASE("principal square roots")
{
    CHECK(principal_sqrt(Cyclotomic(-1)) == imag_unit());
    CHECK(principal_sqrt(Cyclotomic(2)) == root_of_unity(1, 8) + root_of_unity(7, 8));
    CHECK(principal_sqrt(root_of_unity(3, 4)) == root_of_unity(3, 8));
    CHECK(principal_sqrt(Cyclotomic(mpq_class(9, 4))) == Cyclotomic(mpq_class(3, 2)));
    CHECK_THROWS_AS(principal_sqrt(Cyclotomic(1) + zeta(5)), nonrepresentable_sqrt);

    for (long n = 1; n <= 48; ++n)
        for (long k = 0; k < n; ++k) {
            Cyclotomic u = root_of_unity(k, n);
            Cyclotomic r = principal_sqrt(u);
            REQUIRE(r * r == u);
            // argument halved from the [0, 2pi) representative
            CHECK(near(r.approx(), e_of(static_cast<double>(k) / (2.0 * n))));
        }
    for (long m = 1; m <= 30; ++m) {
        Cyclotomic r = principal_sqrt(Cyclotomic(m));
        REQUIRE(r * r == Cyclotomic(m));
        CHECK(near(r.approx(), std::sqrt(static_cast<double>(m))));
        CHECK(8 * m % r.conductor() == 0);
        Cyclotomic rn = principal_sqrt(Cyclotomic(-m));
        CHECK(rn * rn == Cyclotomic(-m));
    }
    Cyclotomic u = root_of_unity(5, 12).scaled(mpq_class(3, 7));
    Cyclotomic r = principal_sqrt(u);
    CHECK(r * r == u);
}

TEST_CASE("order of roots of unity")
{
    CHECK(order_of_root(imag_unit()) == 4);
    CHECK(order_of_root(Cyclotomic(1)) == 1);
    CHECK(order_of_root(root_of_unity(3, 12)) == 4);
    CHECK_THROWS_AS(order_of_root(Cyclotomic(2)), not_root_of_unity);
    CHECK_THROWS_AS(order_of_root(Cyclotomic(1) + zeta(5)), not_root_of_unity);
    CHECK(order_of_root(Cyclotomic(1) + zeta(3)) == 6);
    for (long n = 1; n <= 60; ++n)
        for (long k = 0; k < n; ++k) CHECK(order_of_root(root_of_unity(k, n)) == n / std::gcd(k, n));
}

TEST_CASE("arithmetic commutes with conductor embedding")
{
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> cond(1, 120);
    for (int it = 0; it < 120; ++it) {
        long n1 = cond(rng), n2 = cond(rng);
        if (std::lcm(n1, n2) > 240) {
            --it;
            continue;
        }
        Cyclotomic x = random_element(rng, n1), y = random_element(rng, n2);
        // Same element written over a larger conductor.
        long big = std::lcm(n1, n2) * 2;
        std::vector<mpq_class> xc(big);
        auto xq = x.coeffs();
        for (size_t k = 0; k < xq.size(); ++k) xc[k * (big / x.conductor())] = xq[k];
        Cyclotomic xe = Cyclotomic::from_coeffs(big, xc);
        REQUIRE(xe == x);
        CHECK(near((x + y).approx(), x.approx() + y.approx()));
        CHECK(near((x * y).approx(), x.approx() * y.approx()));
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK(x.conj().conj() == x);
        CHECK(xe * y == x * y);
        CHECK((x - y) + y == x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("-3/6") == mpq_class(-1, 2));
    CHECK(parse_rational("7") == mpq_class(7));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("a/2"));
    CHECK_THROWS(parse_rational("1/-2"));
}
