#include <doctest.h>

#include "vgc/surface.hpp"

#include <random>
#include <set>
#include <unordered_set>

using namespace vgc;

namespace {

const CycNum w = CycNum::zeta(3);

ProjPoint pt(CycNum x, CycNum y, CycNum z) { return ProjPoint::affine({x, y, z}); }

// Factor [1,0] is the affine 0, [0,1] is infinity.
std::vector<CycNum> zero() { return {CycNum(1), CycNum(0)}; }
std::vector<CycNum> inf() { return {CycNum(0), CycNum(1)}; }

std::vector<ProjPoint> reference_points() {
    std::vector<ProjPoint> out;
    for (const CycNum& c : {CycNum(1), w, w * w}) {
        out.push_back(pt(c, c, c));
        out.push_back(pt(c, -c, -c));
        out.push_back(pt(-c, -c, c));
        out.push_back(pt(-c, c, -c));
    }
    out.push_back(ProjPoint({inf(), zero(), inf()}));
    out.push_back(ProjPoint({zero(), inf(), inf()}));
    out.push_back(ProjPoint({inf(), inf(), zero()}));
    out.push_back(ProjPoint({zero(), zero(), inf()}));
    out.push_back(ProjPoint({zero(), inf(), zero()}));
    out.push_back(ProjPoint({inf(), zero(), zero()}));
    return out;
}

// Oracle action on raw affine triples (nullopt = infinity), written without SignedMonomialMap.
using Triple = std::array<std::optional<CycNum>, 3>;
Triple raw_sigma(const Triple& p) { return {p[1], p[0], p[2]}; }
Triple raw_tau(const Triple& p) { return {p[1], p[2], p[0]}; }
Triple raw_neg(const Triple& p, int keep) {
    Triple q = p;
    for (int i = 0; i < 3; ++i)
        if (i != keep && q[static_cast<std::size_t>(i)]) q[static_cast<std::size_t>(i)] = -*q[static_cast<std::size_t>(i)];
    return q;
}
std::string key(const Triple& p) {
    std::string s;
    for (const auto& c : p) s += (c ? c->simplified().to_string() : "inf") + ";";
    return s;
}
std::size_t raw_orbit_size(const Triple& p) {
    std::set<std::string> seen{key(p)};
    std::vector<Triple> todo{p};
    while (!todo.empty()) {
        Triple q = todo.back();
        todo.pop_back();
        for (const Triple& r : {raw_sigma(q), raw_tau(q), raw_neg(q, 1), raw_neg(q, 2)}) {
            if (seen.insert(key(r)).second) todo.push_back(r);
        }
    }
    return seen.size();
}

}  // namespace

TEST_CASE("action examples") {
    auto g = s4_surface_generators();
    CHECK(act(g.at("l1"), pt(1, 1, 1)) == pt(-1, 1, -1));
    CHECK(act(g.at("t"), ProjPoint({inf(), zero(), inf()})) == ProjPoint({zero(), inf(), inf()}));
    CHECK(act(g.at("s"), pt(2, 3, Rational(1, 6))) == pt(3, 2, Rational(1, 6)));
    CHECK(g.at("l1").to_string() == "(x, y, z) -> (-x, y, -z)");
    CHECK(g.at("t").to_string() == "(x, y, z) -> (y, z, x)");
    CHECK_THROWS_AS(act(g.at("s"), ProjPoint({{CycNum(1), CycNum(0), CycNum(0)}})), DimensionMismatch);
    CHECK_THROWS_AS(SignedMonomialMap({0, 0, 2}, {CycNum(1), CycNum(1), CycNum(1)}), std::invalid_argument);
    CHECK_THROWS_AS(SignedMonomialMap({0, 1, 2}, {CycNum(2), CycNum(1), CycNum(1)}), std::invalid_argument);
    CHECK_THROWS_AS(ProjPoint({{CycNum(0), CycNum(0)}}), std::invalid_argument);
}

TEST_CASE("matrix action on P^2") {
    auto rho = s4_rho_generators();
    const ProjPoint p({{CycNum(1), CycNum(2), CycNum(3)}});
    CHECK(act(rho.at("s"), p) == ProjPoint({{CycNum(2), CycNum(1), CycNum(3)}}));
    // Projective normalization: scaling the row vector does not change the point.
    CHECK(ProjPoint({{CycNum(2), CycNum(4), CycNum(6)}}) == p);
    for (const auto& [k1, a] : rho)
        for (const auto& [k2, b] : rho) CHECK(act(a * b, p) == act(b, act(a, p)));
}

TEST_CASE("surface invariance") {
    auto g = s4_surface_generators();
    auto res = surface_invariance({g.at("s"), g.at("t"), g.at("l1"), g.at("l2"), SignedMonomialMap::identity()});
    CHECK(res.invariant);
    for (const auto& c : res.scalars) {
        REQUIRE(c.has_value());
        CHECK(c->is_one());
    }
    auto all = s4_surface_group();
    CHECK(all.order() == 24);
    CHECK(surface_invariance(all.elements()).invariant);

    // x -> -x alone sends F to x0*y0*z0 + x1*y1*z1.
    auto bad = surface_invariance({SignedMonomialMap({0, 1, 2}, {CycNum(-1), CycNum(1), CycNum(1)})});
    CHECK_FALSE(bad.invariant);
    CHECK_FALSE(bad.scalars[0].has_value());
    // Scaling all three by w multiplies x1*y1*z1 by w^3 = 1.
    auto rot = surface_invariance({SignedMonomialMap({0, 1, 2}, {w, w, w})});
    CHECK(rot.invariant);
}

TEST_CASE("orbits and stabilizers") {
    auto g = s4_surface_group();
    CHECK(orbit(pt(1, 1, 1), g).size() == 4);
    CHECK(orbit(ProjPoint({inf(), zero(), inf()}), g).size() == 3);
    CHECK(orbit(pt(2, 3, Rational(1, 6)), g).size() == 24);
    CHECK(stabilizer(pt(1, 1, 1), g).size() == 6);
    CHECK(stabilizer(ProjPoint({inf(), zero(), inf()}), g).size() == 8);
    CHECK(stabilizer(pt(2, 3, Rational(1, 6)), g).size() == 1);
    CHECK_THROWS_AS(orbit(pt(1, 1, 2), g), PointOffSurface);
}

TEST_CASE("fixed_locus") {
    auto gens = s4_surface_generators();
    // l1 l2 = (x, -y, -z): nothing in the torus, six boundary points and two boundary curves.
    auto l12 = gens.at("l1") * gens.at("l2");
    CHECK(l12.to_string() == "(x, y, z) -> (x, -y, -z)");
    int points = 0, curves = 0;
    for (const auto& c : fixed_locus(l12)) {
        if (c.kind == FixedComponent::Kind::Point) {
            ++points;
            CHECK(on_surface(c.point));
            CHECK(act(l12, c.point) == c.point);
            CHECK_FALSE(c.point.affine_coords().has_value());
        } else {
            ++curves;
            REQUIRE(c.kind == FixedComponent::Kind::Curve);
            CHECK(c.curve[0].kind == MonomialCoord::Kind::Monomial);
        }
    }
    CHECK(points == 6);
    CHECK(curves == 2);

    // tau: the diagonal points with x^3 = 1 plus nothing on the boundary.
    auto tau = fixed_locus(gens.at("t"));
    REQUIRE(tau.size() == 3);
    std::set<std::string> got;
    for (const auto& c : tau) got.insert(c.point.to_string());
    CHECK(got == std::set<std::string>{pt(1, 1, 1).to_string(), pt(w, w, w).to_string(), pt(w * w, w * w, w * w).to_string()});

    auto id = fixed_locus(SignedMonomialMap::identity());
    REQUIRE(id.size() == 1);
    CHECK(id[0].kind == FixedComponent::Kind::All);

    // sigma fixes the curve x = y, z = 1/x^2 and two boundary points.
    auto sig = fixed_locus(gens.at("s"));
    curves = 0;
    for (const auto& c : sig) {
        if (c.kind != FixedComponent::Kind::Curve) continue;
        ++curves;
        for (int k = 1; k <= 4; ++k) {
            const ProjPoint p = c.sample(CycNum(k) + w);
            CHECK(on_surface(p));
            CHECK(act(gens.at("s"), p) == p);
        }
    }
    CHECK(curves >= 1);
}

TEST_CASE("fixed points agree with the brute-force check") {
    auto g = s4_surface_group();
    for (const auto& e : g.elements()) {
        for (const auto& c : fixed_locus(e)) {
            if (c.kind == FixedComponent::Kind::Point) {
                CHECK(act(e, c.point) == c.point);
                CHECK(on_surface(c.point));
            } else if (c.kind == FixedComponent::Kind::Curve) {
                const ProjPoint p = c.sample(CycNum(3) + CycNum::zeta(4));
                CHECK(act(e, p) == p);
                CHECK(on_surface(p));
            }
        }
    }
}

TEST_CASE("action law and orbit-stabilizer on random points") {
    auto g = s4_surface_group();
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<int> d(-7, 7);
    for (int trial = 0; trial < 20; ++trial) {
        int a = d(rng), b = d(rng);
        if (a == 0) a = 2;
        if (b == 0) b = 3;
        const ProjPoint p = pt(a, b, Rational(Rational(1) / (Rational(a) * Rational(b))));
        REQUIRE(on_surface(p));
        for (std::size_t i = 0; i < g.order(); i += 5)
            for (std::size_t j = 0; j < g.order(); j += 7) CHECK(act(g[i] * g[j], p) == act(g[j], act(g[i], p)));
        CHECK(orbit(p, g).size() * stabilizer(p, g).size() == g.order());
    }
}

TEST_CASE("classify_small_orbits") {
    auto g = s4_surface_group();
    auto cls = classify_small_orbits(g, 6);
    std::vector<std::size_t> sizes;
    for (const auto& o : cls.orbits) sizes.push_back(o.points.size());
    CHECK(sizes == std::vector<std::size_t>{4, 4, 4, 3, 3});
    CHECK(cls.total_points() == 18);
    CHECK(cls.positive_dimensional.empty());

    // Exactly the listed points, each orbit closed, orbits disjoint.
    std::unordered_set<ProjPoint> found;
    for (const auto& o : cls.orbits) {
        CHECK(o.stabilizer_order * o.points.size() == 24);
        for (const auto& p : o.points) {
            CHECK(found.insert(p).second);
            for (const auto& e : g.elements()) CHECK(std::find(o.points.begin(), o.points.end(), act(e, p)) != o.points.end());
        }
    }
    auto expected = reference_points();
    CHECK(found.size() == expected.size());
    for (const auto& p : expected) CHECK(found.count(p));

    CHECK(classify_small_orbits(g, 3).orbits.empty());
    CHECK(classify_small_orbits(g, 4).total_points() == 6);

    auto trivial = closure(std::vector{SignedMonomialMap::identity()});
    auto t = classify_small_orbits(trivial, 2);
    REQUIRE(t.positive_dimensional.size() == 1);
    CHECK(t.positive_dimensional[0].second.kind == FixedComponent::Kind::All);
}

TEST_CASE("small orbits match an exhaustive search over roots of unity") {
    // Coordinates among 0, infinity and the 12th roots of unity.
    std::vector<std::optional<CycNum>> values{std::nullopt, CycNum(0)};
    for (int k = 0; k < 12; ++k) values.push_back(CycNum::zeta(12, k).simplified());
    std::size_t small = 0;
    std::map<std::size_t, std::size_t> by_size;
    for (const auto& x : values)
        for (const auto& y : values)
            for (const auto& z : values) {
                // On the surface: xyz = 1, or the products with 0 and infinity both degenerate.
                const int zeros = (x && x->is_zero()) + (y && y->is_zero()) + (z && z->is_zero());
                const int infs = !x + !y + !z;
                bool on = false;
                if (zeros == 0 && infs == 0) on = (*x * *y * *z).is_one();
                else on = zeros > 0 && infs > 0;
                if (!on) continue;
                const std::size_t n = raw_orbit_size({x, y, z});
                if (n < 6) {
                    ++small;
                    ++by_size[n];
                }
            }
    CHECK(small == 18);
    CHECK(by_size == std::map<std::size_t, std::size_t>{{3, 6}, {4, 12}});
}
