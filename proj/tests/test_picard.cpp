#include <doctest.h>

#include "vgc/picard.hpp"

#include <Eigen/Eigenvalues>

#include <random>

using namespace vgc;

namespace {

IntVector vec(std::initializer_list<long long> xs) {
    IntVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (long long x : xs) v(i++) = x;
    return v;
}

std::vector<SignedMonomialMap> s4_gens() {
    auto g = s4_surface_generators();
    return {g.at("s"), g.at("t"), g.at("l1"), g.at("l2")};
}

const std::vector<std::string> kLabels{"s", "t", "l1", "l2"};

// Integer solution of B x = v via doubles, or nullopt when x is not integral.
std::optional<Eigen::VectorXd> integral_coords(const IntMatrix& basis, const IntVector& v) {
    const Eigen::MatrixXd b = basis.cast<double>();
    Eigen::VectorXd x = b.colPivHouseholderQr().solve(v.cast<double>());
    if ((b * x - v.cast<double>()).norm() > 1e-8) return std::nullopt;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (std::abs(x(i) - std::round(x(i))) > 1e-8) return std::nullopt;
    return x;
}

}  // namespace

TEST_CASE("degree-6 lattice") {
    auto lat = PicLattice::dp6();
    CHECK(lat.rank() == 4);
    CHECK(lat.dot(lat.canonical(), lat.canonical()) == 6);
    CHECK(lat.format(lat.anticanonical()) == "2f1 + 2f2 - e - e'");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lat.gram().cast<double>());
    int pos = 0, neg = 0;
    for (Eigen::Index i = 0; i < 4; ++i) (es.eigenvalues()(i) > 0 ? pos : neg)++;
    CHECK(pos == 1);
    CHECK(neg == 3);
}

TEST_CASE("boundary hexagon") {
    auto dp6 = build_dp6();
    const auto& lat = dp6.lattice;
    REQUIRE(dp6.hexagon.size() == 6);
    IntVector sum = IntVector::Zero(4);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(lat.dot(dp6.hexagon[i].coords, dp6.hexagon[i].coords) == -1);
        CHECK(lat.dot(dp6.hexagon[i].coords, dp6.hexagon[(i + 1) % 6].coords) == 1);
        CHECK(lat.dot(dp6.hexagon[i].coords, dp6.hexagon[(i + 2) % 6].coords) == 0);
        CHECK(lat.dot(dp6.hexagon[i].coords, dp6.hexagon[(i + 3) % 6].coords) == 0);
        // Adjacency: every vertex of the boundary lies on exactly two of the curves.
        sum += dp6.hexagon[i].coords;
    }
    CHECK(sum == lat.anticanonical());
    CHECK(dp6.hexagon[0].locus->to_string() == "x0 = y1 = 0");
    CHECK(lat.format(dp6.hexagon[0].coords) == "e'");
    CHECK(lat.format(dp6.hexagon[1].coords) == "f1 - e'");

    // Geometric adjacency agrees with the intersection numbers: neighbours share a point of (P^1)^3.
    const ProjPoint p1({{CycNum(0), CycNum(1)}, {CycNum(1), CycNum(0)}, {CycNum(0), CycNum(1)}});
    int through = 0;
    for (const auto& c : dp6.hexagon) through += incidence(p1, c);
    CHECK(through == 2);
    CHECK(incidence(p1, dp6.hexagon[0]));
    CHECK(incidence(p1, dp6.hexagon[5]));
}

TEST_CASE("class_of rejects points and unblown contractions") {
    auto lat = PicLattice::dp6();
    CHECK_THROWS_AS(CurveLocus::boundary(0, 0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(CurveLocus::level(0, CycNum(0)), std::invalid_argument);
    // z = c is the (1,1) curve xy = 1/c through both blown points.
    auto diag = lat.class_of(CurveLocus::level(2, CycNum(5)));
    CHECK(diag.coords == vec({1, 1, -1, -1}));
    CHECK(lat.dot(diag.coords, diag.coords) == 0);
}

TEST_CASE("induced action") {
    auto dp6 = build_dp6();
    const auto& lat = dp6.lattice;
    auto action = induced_action(dp6, kLabels, s4_gens());
    REQUIRE(action.matrices.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        const IntMatrix& m = action.matrices[k].matrix();
        CHECK(m * lat.gram() * m.transpose() == lat.gram());
        CHECK(IntVector(lat.canonical().transpose() * m) == lat.canonical());
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(IntVector(dp6.hexagon[i].coords.transpose() * m) ==
                  dp6.hexagon[static_cast<std::size_t>(action.hexagon_perms[k][i])].coords);
        }
    }
    // Regression: tau rotates the hexagon by two steps, sigma reflects it, the sign changes fix each curve.
    CHECK(action.hexagon_perms[1] == std::vector<int>{4, 5, 0, 1, 2, 3});
    CHECK(action.hexagon_perms[0] == std::vector<int>{3, 2, 1, 0, 5, 4});
    CHECK(action.hexagon_perms[2] == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(action.hexagon_perms[3] == std::vector<int>{0, 1, 2, 3, 4, 5});

    // The relations of S4 hold for the matrices; the image is S4 / V4.
    auto table = closure(action.matrices, kDefaultClosureCap, kLabels);
    CHECK(table.order() == 6);
    CHECK(verify_presentation(table, action.as_map(), s4_relations()).ok());

    auto id = induced_action(dp6, {"e"}, {SignedMonomialMap::identity()});
    CHECK(id.matrices[0].matrix() == IntMatrix::Identity(4, 4));

    CHECK_THROWS_AS(induced_action(dp6, {"bad"}, {SignedMonomialMap({0, 1, 2}, {CycNum(-1), CycNum(1), CycNum(1)})}),
                    std::invalid_argument);
}

TEST_CASE("invariant sublattice") {
    auto dp6 = build_dp6();
    const auto& lat = dp6.lattice;
    auto action = induced_action(dp6, kLabels, s4_gens());
    auto inv = invariant_sublattice(action);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == lat.anticanonical());

    // Oracle: every invariant class in a box is a multiple of -K.
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b)
            for (long long c = -3; c <= 3; ++c)
                for (long long d = -3; d <= 3; ++d) {
                    IntVector v = vec({a, b, c, d});
                    bool fixed = true;
                    for (const auto& m : action.matrices) fixed = fixed && IntVector(v.transpose() * m.matrix()) == v;
                    if (!fixed) continue;
                    CHECK(v == (v(0) / 2) * lat.anticanonical());
                }

    // Orthogonal complement of the invariant line has rank 3 and meets it trivially (K^2 != 0).
    IntMatrix row = (lat.gram() * inv[0]).transpose();
    IntMatrix perp = integer_kernel(row);
    CHECK(perp.cols() == 3);
    CHECK(lat.dot(inv[0], inv[0]) != 0);

    auto trivial = induced_action(dp6, {"e"}, {SignedMonomialMap::identity()});
    CHECK(invariant_sublattice(trivial).size() == 4);

    auto tau_only = induced_action(dp6, {"t"}, {s4_gens()[1]});
    auto tau_inv = invariant_sublattice(tau_only);
    // tau has two orbits of length 3 on the hexagon: C1+C3+C5 and C2+C4+C6 are fixed.
    CHECK(tau_inv.size() == 2);
    IntMatrix basis(4, static_cast<Eigen::Index>(tau_inv.size()));
    for (std::size_t i = 0; i < tau_inv.size(); ++i) basis.col(static_cast<Eigen::Index>(i)) = tau_inv[i];
    CHECK(integral_coords(basis, IntVector(dp6.hexagon[0].coords + dp6.hexagon[2].coords + dp6.hexagon[4].coords)).has_value());
}

TEST_CASE("integer kernel is saturated") {
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix a(2, 4);
        for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = d(rng);
        IntMatrix ker = integer_kernel(a);
        CHECK((a * ker).isZero());
        Eigen::FullPivLU<Eigen::MatrixXd> lu(a.cast<double>());
        CHECK(ker.cols() == 4 - lu.rank());
        // Every small kernel vector is an integer combination of the basis.
        for (long long x = -2; x <= 2; ++x)
            for (long long y = -2; y <= 2; ++y)
                for (long long z = -2; z <= 2; ++z)
                    for (long long w = -2; w <= 2; ++w) {
                        IntVector v = vec({x, y, z, w});
                        if (!(a * v).isZero() || v.isZero()) continue;
                        CHECK(integral_coords(ker, v).has_value());
                    }
    }
}

TEST_CASE("fibers and incidence") {
    auto lat = PicLattice::dp6();
    auto fibers = fiber_classes(lat);
    REQUIRE(fibers.size() == 3);
    const ProjPoint blown_a({{CycNum(1), CycNum(0)}, {CycNum(0), CycNum(1)}, {CycNum(0), CycNum(1)}});
    for (const auto& e : fibers) {
        CHECK(e.coords == vec({1, 0, 0, 0}));
        CHECK(lat.dot(e.coords, e.coords) == 0);
        CHECK(lat.dot(lat.anticanonical(), e.coords) == 2);
        // The fiber x = w^i never reaches x = 0 or x = infinity, where the blown points sit.
        CHECK_FALSE(incidence(blown_a, e));
        for (const auto& p : e.locus->samples()) CHECK(incidence(p, e));
    }
    int on_e0 = 0;
    for (const auto& p : {ProjPoint::affine({1, 1, 1}), ProjPoint::affine({1, -1, -1}), ProjPoint::affine({-1, -1, 1}),
                          ProjPoint::affine({-1, 1, -1})}) {
        on_e0 += incidence(p, fibers[0]);
    }
    CHECK(on_e0 == 2);
    CHECK(incidence(ProjPoint::affine({1, 1, 1}), fibers[0]));

    auto dp6 = build_dp6();
    for (const auto& c : dp6.hexagon) CHECK_FALSE(incidence(ProjPoint::affine({2, 3, Rational(1, 6)}), c));
    DivClass bare{lat.anticanonical(), std::nullopt, "-K"};
    CHECK_THROWS_AS(incidence(ProjPoint::affine({1, 1, 1}), bare), UntaggedClass);
}
