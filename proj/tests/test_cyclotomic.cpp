#include <doctest.h>

#include "vgc/cyclotomic.hpp"

#include <random>

using vgc::CycNum;
using vgc::Rational;

namespace {

const CycNum omega = CycNum::zeta(3);

CycNum random_element(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> c(static_cast<std::size_t>(vgc::euler_phi(n)));
    for (auto& q : c) q = Rational(num(rng), den(rng));
    return CycNum(n, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(vgc::cyclotomic_polynomial(1) == std::vector<vgc::Integer>{-1, 1});
    CHECK(vgc::cyclotomic_polynomial(3) == std::vector<vgc::Integer>{1, 1, 1});
    CHECK(vgc::cyclotomic_polynomial(4) == std::vector<vgc::Integer>{1, 0, 1});
    // Phi_12 = x^4 - x^2 + 1
    CHECK(vgc::cyclotomic_polynomial(12) == std::vector<vgc::Integer>{1, 0, -1, 0, 1});
    CHECK(vgc::euler_phi(12) == 4);
    CHECK_THROWS_AS(vgc::cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("cyc_make") {
    CycNum half(1, {Rational(5, 2)});
    CHECK(half == CycNum(Rational(5, 2)));
    CHECK(half.is_rational());

    CycNum w(3, {0, 1});
    CHECK(w.pow(3).is_one());
    CHECK(w.pow(3) == CycNum(1));

    // 1 + w + w^2 = 0, so -1 - w is w^2.
    CHECK(CycNum(3, {-1, -1}) == w * w);
    // Coefficients beyond the degree are reduced on construction.
    CHECK(CycNum(3, {0, 0, 1}).coeffs() == std::vector<Rational>{-1, -1});

    CHECK_THROWS_AS(CycNum(0, {1}), std::invalid_argument);
}

TEST_CASE("cyc_arith") {
    CHECK((omega * omega.pow(2)).is_one());
    // (1 + w) * w^2 = w^2 + 1 = -w
    CHECK((CycNum(1) + omega) / omega == -omega);
    const CycNum i = CycNum::zeta(4);
    CHECK(i * i == CycNum(-1));
    CHECK_THROWS_AS(omega / CycNum(0), vgc::DivisionByZero);
    CHECK_THROWS_AS(CycNum(0).inverse(), vgc::DivisionByZero);
}

TEST_CASE("mixed conductors embed into the lcm") {
    const CycNum i = CycNum::zeta(4);
    CycNum s = omega + i;
    CHECK(s.conductor() == 12);
    CHECK(s - i == omega);
    CHECK((s - i).conductor() == 12);
    CHECK(*(s - i).projected(3) == omega);
    CHECK(CycNum::zeta(12, 4) == omega);
    CHECK(CycNum::zeta(12, 3) == i);
    CHECK(CycNum::zeta(6, 2) == omega);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(20261018);
    for (int n : {1, 3, 4, 12}) {
        for (int trial = 0; trial < 40; ++trial) {
            CycNum a = random_element(rng, n);
            CycNum b = random_element(rng, n);
            CycNum c = random_element(rng, 3);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("embedding round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        CycNum a = random_element(rng, 3);
        CycNum up = a.promoted(12);
        auto back = up.projected(3);
        REQUIRE(back.has_value());
        CHECK(back->coeffs() == a.coeffs());
        CHECK(up.simplified().conductor() <= 3);
    }
    // zeta_12 itself does not lie in Q(zeta_3) or Q(zeta_4).
    CHECK_FALSE(CycNum::zeta(12).projected(3).has_value());
    CHECK_FALSE(CycNum::zeta(12).projected(4).has_value());
    CHECK(CycNum::zeta(12).simplified().conductor() == 12);
}

TEST_CASE("binomial_roots") {
    SUBCASE("cube roots of unity") {
        auto roots = vgc::binomial_roots(3, CycNum(1));
        REQUIRE(roots.size() == 3);
        CHECK(roots[0] == CycNum(1));
        CHECK(roots[1] == omega);
        CHECK(roots[2] == omega * omega);
    }
    SUBCASE("square roots of -1") {
        auto roots = vgc::binomial_roots(2, CycNum(-1));
        REQUIRE(roots.size() == 2);
        const CycNum i = CycNum::zeta(4);
        CHECK(roots[0].conductor() == 4);
        CHECK(roots[0] == i);
        CHECK(roots[1] == -i);
        for (const auto& r : roots) CHECK(r * r == CycNum(-1));
    }
    SUBCASE("cube roots of 8") {
        auto roots = vgc::binomial_roots(3, CycNum(8));
        REQUIRE(roots.size() == 3);
        CHECK(roots[0] == CycNum(2));
        CHECK(roots[1] == CycNum(2) * omega);
        CHECK(roots[2] == CycNum(2) * omega * omega);
    }
    SUBCASE("roots of roots of unity times rationals") {
        for (int k = 1; k <= 6; ++k) {
            for (const CycNum& c : {CycNum(Rational(-27, 8)), omega, -omega * CycNum(64), CycNum::zeta(4, 3)}) {
                auto roots = vgc::binomial_roots(k, c);
                for (const auto& t : roots) CHECK(t.pow(k) == c);
                if (!roots.empty()) {
                    CHECK(roots.size() == static_cast<std::size_t>(k));
                    for (std::size_t i = 0; i < roots.size(); ++i)
                        for (std::size_t j = i + 1; j < roots.size(); ++j) CHECK(roots[i] != roots[j]);
                }
            }
        }
    }
    SUBCASE("no rational root of the magnitude") {
        CHECK(vgc::binomial_roots(2, CycNum(2)).empty());
    }
    SUBCASE("unsupported radicands") {
        CHECK_THROWS_AS(vgc::binomial_roots(2, CycNum(1) + omega * CycNum(2)), vgc::UnsupportedRadicand);
        CHECK_THROWS_AS(vgc::binomial_roots(3, CycNum(0)), vgc::UnsupportedRadicand);
    }
}

TEST_CASE("printing and parsing") {
    CHECK(omega.to_string() == "z3");
    CHECK((omega * omega).to_string() == "-1 - z3");
    CHECK(CycNum(Rational(-3, 4)).to_string() == "-3/4");
    CHECK(vgc::parse_rational("-6/8") == Rational(-3, 4));
    CHECK_THROWS_AS(vgc::parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(vgc::parse_rational("abc"), std::invalid_argument);
}
