#pragma once

#include "vgc/cyclotomic.hpp"
#include "vgc/group.hpp"
#include "vgc/matrix_group.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vgc {

/// A point of a product of projective spaces, one homogeneous factor each.
///
/// Three factors of length 2 give a point of (P^1)^3, one factor of length 3
/// a point of P^2. Each factor is scaled so its last nonzero coordinate is 1.
class ProjPoint {
public:
    ProjPoint() = default;
    explicit ProjPoint(std::vector<std::vector<CycNum>> factors);

    /// The point [1 : x] x [1 : y] x [1 : z] of (P^1)^3.
    static ProjPoint affine(const std::array<CycNum, 3>& xyz);

    const std::vector<std::vector<CycNum>>& factors() const { return factors_; }
    std::size_t num_factors() const { return factors_.size(); }

    /// Affine coordinates x_i = X_i1 / X_i0 of a (P^1)^k point, if none is at infinity.
    std::optional<std::vector<CycNum>> affine_coords() const;

    /// "(1, -1, -1)" when affine, otherwise "([0,1], [1,0], [0,1])".
    std::string to_string() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    std::size_t hash() const;

private:
    std::vector<std::vector<CycNum>> factors_;
};

/// Coordinate permutation composed with root-of-unity scalings on (P^1)^3.
///
/// In affine coordinates the image of (x_0, x_1, x_2) has i-th coordinate
/// scalars[i] * x_{perm[i]}. The product g * h applies g first, then h,
/// matching the exponent notation p^(gh) = (p^g)^h.
class SignedMonomialMap {
public:
    SignedMonomialMap();
    SignedMonomialMap(std::array<int, 3> perm, std::array<CycNum, 3> scalars);

    static SignedMonomialMap identity() { return {}; }

    const std::array<int, 3>& perm() const { return perm_; }
    const std::array<CycNum, 3>& scalars() const { return scalars_; }
    bool is_identity() const;

    /// e.g. "(x, y, z) -> (-y, x, z)".
    std::string to_string() const;

    friend SignedMonomialMap operator*(const SignedMonomialMap& g, const SignedMonomialMap& h);
    friend bool operator==(const SignedMonomialMap& a, const SignedMonomialMap& b) {
        return a.perm_ == b.perm_ && a.scalars_ == b.scalars_;
    }
    std::size_t hash() const;

private:
    std::array<int, 3> perm_;
    std::array<CycNum, 3> scalars_;
};

SignedMonomialMap inverse(const SignedMonomialMap& g);
inline SignedMonomialMap identity_like(const SignedMonomialMap&) { return SignedMonomialMap::identity(); }

using SurfaceGroup = GroupTable<SignedMonomialMap>;

/// sigma, tau, lambda1, lambda2 acting on (P^1)^3, keyed "s", "t", "l1", "l2".
std::map<std::string, SignedMonomialMap> s4_surface_generators();
SurfaceGroup s4_surface_group();

class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class PointOffSurface : public std::invalid_argument {
public:
    explicit PointOffSurface(const std::string& what) : std::invalid_argument(what) {}
};

ProjPoint act(const SignedMonomialMap& g, const ProjPoint& p);
/// Row-vector action [X] -> [X] * M on a point of P^2.
ProjPoint act(const GroupElement& g, const ProjPoint& p);

/// x0*y0*z0 == x1*y1*z1.
bool on_surface(const ProjPoint& p);

struct InvarianceResult {
    bool invariant = true;
    /// Per generator, c with F o g = c * F, or nullopt when no such scalar exists.
    std::vector<std::optional<CycNum>> scalars;
};

/// Pull x0*y0*z0 - x1*y1*z1 back along each map and compare with the original.
InvarianceResult surface_invariance(const std::vector<SignedMonomialMap>& gens);

/// Full orbit, in order of first appearance along the table.
std::vector<ProjPoint> orbit(const ProjPoint& p, const SurfaceGroup& group);
/// Table indices of the elements fixing p.
Subgroup stabilizer(const ProjPoint& p, const SurfaceGroup& group);

/// One coordinate of a monomial curve t -> (coef * t^exponent) in P^1, or a constant 0 / infinity.
struct MonomialCoord {
    enum class Kind { Zero, Infinity, Monomial };
    Kind kind = Kind::Monomial;
    CycNum coef{1};
    int exponent = 0;

    static MonomialCoord zero() { return {Kind::Zero, CycNum(0), 0}; }
    static MonomialCoord infinity() { return {Kind::Infinity, CycNum(0), 0}; }
    static MonomialCoord monomial(CycNum c, int e) { return {Kind::Monomial, std::move(c), e}; }

    /// Homogeneous [X0 : X1] at parameter t (t must be nonzero).
    std::vector<CycNum> at(const CycNum& t) const;
    std::string to_string() const;
};

/// A piece of the fixed locus of a signed-monomial map restricted to the surface.
struct FixedComponent {
    enum class Kind { Point, Curve, All };
    Kind kind = Kind::Point;
    ProjPoint point;                       // Kind::Point
    std::array<MonomialCoord, 3> curve{};  // Kind::Curve, parameter t in C*
    /// How the surface equation restricts to the ambient stratum, e.g. "identically satisfied" or "t^3 = 1".
    std::string restriction;

    /// Point of a curve component at parameter t != 0.
    ProjPoint sample(const CycNum& t) const;
    std::string to_string() const;
};

/// Fixed locus on the surface, decomposed along the cycles of the factor permutation.
std::vector<FixedComponent> fixed_locus(const SignedMonomialMap& g);

/// Common fixed locus of several maps: the first map's components cut down by the others.
std::vector<FixedComponent> common_fixed_locus(const std::vector<SignedMonomialMap>& maps);

struct SmallOrbit {
    std::vector<ProjPoint> points;
    std::size_t stabilizer_order = 0;
};

struct SmallOrbitClassification {
    std::size_t bound = 0;
    std::vector<SmallOrbit> orbits;  // sorted by size, largest first
    /// Positive-dimensional fixed components met while searching (stabilizer order, component).
    std::vector<std::pair<std::size_t, FixedComponent>> positive_dimensional;
    std::size_t subgroups_examined = 0;
    std::size_t total_points() const;
};

/// Every orbit of size < bound on the surface, found through fixed loci of
/// all subgroups H with |H| * bound > |G|.
SmallOrbitClassification classify_small_orbits(const SurfaceGroup& group, std::size_t bound);

struct LabeledPoint {
    std::string label;
    ProjPoint point;
};

/// The published list of points with orbit size below 6: R11..R34 (size 4), P1..P3 and Q1..Q3 (size 3).
std::vector<LabeledPoint> reference_small_orbit_points();

/// Label of p in the published list, or "" when it is not there.
std::string reference_label(const ProjPoint& p);

}  // namespace vgc

template <>
struct std::hash<vgc::ProjPoint> {
    std::size_t operator()(const vgc::ProjPoint& p) const noexcept { return p.hash(); }
};

template <>
struct std::hash<vgc::SignedMonomialMap> {
    std::size_t operator()(const vgc::SignedMonomialMap& g) const noexcept { return g.hash(); }
};
