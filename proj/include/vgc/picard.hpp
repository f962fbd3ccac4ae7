#pragma once

#include "vgc/surface.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vgc {

using IntVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// A curve on the surface given by coordinate conditions.
///
/// Boundary: two homogeneous coordinates vanish, X_{a,ja} = X_{b,jb} = 0.
/// Level: one factor is constant, x_f = value (value nonzero and finite).
struct CurveLocus {
    enum class Kind { Boundary, Level };
    Kind kind = Kind::Boundary;
    std::array<std::pair<int, int>, 2> vanishing{};  // Boundary: (factor, coordinate index)
    int factor = 0;                                  // Level
    CycNum value{1};                                 // Level

    static CurveLocus boundary(int a, int ja, int b, int jb);
    static CurveLocus level(int factor, CycNum value);

    bool contains(const ProjPoint& p) const;
    /// Two points of the curve away from the hexagon vertices.
    std::vector<ProjPoint> samples() const;
    /// e.g. "x0 = y1 = 0" or "x = -1".
    std::string to_string() const;

    friend bool operator==(const CurveLocus& a, const CurveLocus& b);
};

/// An integer class in a Picard lattice, optionally tagged with the curve it represents.
struct DivClass {
    IntVector coords;
    std::optional<CurveLocus> locus;
    std::string label;
};

class UntaggedClass : public std::invalid_argument {
public:
    explicit UntaggedClass(const std::string& what) : std::invalid_argument(what) {}
};

/// Integer lattice with a symmetric bilinear form and a canonical class.
class PicLattice {
public:
    PicLattice(IntMatrix gram, std::vector<std::string> basis, IntVector canonical);

    /// Blow-up of P^1 x P^1 at ([1,0],[0,1]) and ([0,1],[1,0]) in the basis f1, f2, e, e'.
    static PicLattice dp6();

    Eigen::Index rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }
    const std::vector<std::string>& basis() const { return basis_; }
    const IntVector& canonical() const { return canonical_; }
    IntVector anticanonical() const { return -canonical_; }

    long long dot(const IntVector& a, const IntVector& b) const;
    IntVector unit(Eigen::Index i) const;
    /// "2f1 + 2f2 - e - e'".
    std::string format(const IntVector& v) const;

    /// Class of a curve on the degree-6 surface: the image line or point under
    /// (x, y, z) -> (x, y), minus the exceptional classes over blown points it meets.
    DivClass class_of(const CurveLocus& locus) const;

private:
    IntMatrix gram_;
    std::vector<std::string> basis_;
    IntVector canonical_;
};

struct Dp6 {
    PicLattice lattice;
    /// C1, ..., C6 in cycle order, C1 = {x0 = y1 = 0}.
    std::vector<DivClass> hexagon;
};

/// The lattice plus the six boundary curves of x0*y0*z0 = 0. Throws std::logic_error
/// if the derived classes fail the hexagon intersection pattern or do not sum to -K.
Dp6 build_dp6();

/// Pushforward matrix acting on row vectors: the class of C^g is c * M_g, so M_{gh} = M_g * M_h.
class LatticeMatrix {
public:
    explicit LatticeMatrix(IntMatrix m) : m_(std::move(m)) {}
    const IntMatrix& matrix() const { return m_; }

    friend LatticeMatrix operator*(const LatticeMatrix& a, const LatticeMatrix& b) { return LatticeMatrix(a.m_ * b.m_); }
    friend bool operator==(const LatticeMatrix& a, const LatticeMatrix& b) { return a.m_ == b.m_; }
    std::size_t hash() const;

private:
    IntMatrix m_;
};

LatticeMatrix identity_like(const LatticeMatrix& a);
/// Inverse of a finite-order matrix (as a power of itself); throws if the order exceeds 1000.
LatticeMatrix inverse(const LatticeMatrix& a);

struct LatticeAction {
    std::vector<std::string> labels;
    std::vector<LatticeMatrix> matrices;
    /// perm[i] = j when the generator carries C_{i+1} onto C_{j+1}.
    std::vector<std::vector<int>> hexagon_perms;

    std::map<std::string, LatticeMatrix> as_map() const;
};

class HexagonNotPreserved : public std::runtime_error {
public:
    explicit HexagonNotPreserved(const std::string& what) : std::runtime_error(what) {}
};

LatticeAction induced_action(const Dp6& dp6, const std::vector<std::string>& labels, const std::vector<SignedMonomialMap>& gens);

/// Saturated basis (columns) of {v in Z^n : A v = 0}, by unimodular column reduction.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis of the classes fixed by every matrix; each vector primitive, first nonzero entry positive.
std::vector<IntVector> invariant_sublattice(const LatticeAction& action);

/// The three level curves x = w^i, i = 0, 1, 2.
std::vector<DivClass> fiber_classes(const PicLattice& lattice);

/// Membership of p in the curve behind c; throws UntaggedClass when c carries no locus.
bool incidence(const ProjPoint& p, const DivClass& c);

}  // namespace vgc

template <>
struct std::hash<vgc::LatticeMatrix> {
    std::size_t operator()(const vgc::LatticeMatrix& m) const noexcept { return m.hash(); }
};
