#pragma once

#include "vgc/group.hpp"
#include "vgc/picard.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vgc {

using Json = nlohmann::ordered_json;

/// Symbols of the bookkeeping: the anticanonical multiple a, the base multiplicity r, the adjoint level m.
enum class Symbol { a = 0, r = 1, m = 2 };

/// c_a * a + c_r * r + c_m * m with integer coefficients.
struct LinearForm {
    std::array<long long, 3> c{};

    static LinearForm of(Symbol s, long long k = 1);
    long long coeff(Symbol s) const { return c[static_cast<std::size_t>(s)]; }
    bool is_zero() const { return c == std::array<long long, 3>{}; }
    long long eval(long long a, long long r, long long m = 0) const { return c[0] * a + c[1] * r + c[2] * m; }
    /// "2a - 2r", "0".
    std::string to_string() const;

    friend LinearForm operator+(LinearForm x, const LinearForm& y);
    friend LinearForm operator-(LinearForm x, const LinearForm& y);
    friend LinearForm operator*(long long k, LinearForm x);
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Quadratic form in a, r, m; coefficient q[i][j] (i <= j) of s_i * s_j.
struct QuadraticForm {
    std::array<std::array<long long, 3>, 3> q{};
    long long coeff(Symbol s, Symbol t) const;
    long long eval(long long a, long long r, long long m = 0) const;
    /// "6a^2 - 4r^2".
    std::string to_string() const;
    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

/// A class whose coordinates are linear forms in the symbols, e.g. -a*K - r*(E1 + ... + E4).
struct SymbolicDivisor {
    std::vector<LinearForm> coeffs;

    static SymbolicDivisor zero(Eigen::Index rank);
    /// form * v.
    static SymbolicDivisor times(const LinearForm& form, const IntVector& v);
    Eigen::Index rank() const { return static_cast<Eigen::Index>(coeffs.size()); }

    friend SymbolicDivisor operator+(SymbolicDivisor x, const SymbolicDivisor& y);
    friend bool operator==(const SymbolicDivisor&, const SymbolicDivisor&) = default;
};

LinearForm intersect(const PicLattice& lattice, const SymbolicDivisor& d, const IntVector& c);
QuadraticForm self_intersection(const PicLattice& lattice, const SymbolicDivisor& d);
/// H + m*K on the given lattice.
SymbolicDivisor adjoint(const PicLattice& lattice, const SymbolicDivisor& h);
std::string format(const PicLattice& lattice, const SymbolicDivisor& d);

/// Blow-up of a G-orbit: Pic ⊕ Z^k with E_j^2 = -1, K^ = q*K + sum E_j.
struct BlowUp {
    PicLattice lattice;
    Eigen::Index base_rank = 0;
    std::vector<ProjPoint> points;
    Symbol mult = Symbol::r;
    SymbolicDivisor h;  // q*H - mult * sum E_j

    IntVector pullback(const IntVector& v) const;
    SymbolicDivisor pullback(const SymbolicDivisor& d) const;
    IntVector exceptional(std::size_t j) const;
    IntVector exceptional_sum() const;
    /// q*C minus the exceptional classes over the orbit points lying on C (C smooth there).
    IntVector proper_transform(const DivClass& c) const;
};

BlowUp blowup_bookkeeping(const PicLattice& base, const SymbolicDivisor& h, const std::vector<ProjPoint>& orbit,
                          Symbol mult = Symbol::r);

/// Checks H^ + mK^ = q*(H + mK) + sum (m - r) E_j exactly on the symbolic divisors.
bool adjoint_identity_holds(const PicLattice& base, const SymbolicDivisor& h, const BlowUp& b);

/// Largest d with a^2 * Ksq >= r^2 * d for some r > a >= 1; this is Ksq - 1. Throws for Ksq <= 0.
int orbit_size_bound(int ksq);

struct OrbitBoundCertificate {
    int ksq = 0;
    int bound = 0;
    /// Smallest a with a^2 * Ksq >= (a + 1)^2 * bound, showing the bound is attained (absent when bound is 0).
    std::optional<std::array<long long, 2>> witness;
    std::string derivation;
};
OrbitBoundCertificate orbit_size_bound_certificate(int ksq);

struct LabeledOrbit {
    std::string label;
    std::vector<ProjPoint> points;
    std::vector<std::string> point_labels;
};

struct ExclusionCertificate {
    std::string orbit;
    std::string curve;
    std::string curve_class;
    std::vector<std::string> points_on_curve;
    LinearForm form;  // c0 * a + c1 * r
    long long c0 = 0;
    long long c1 = 0;
    bool negative = false;
    std::string reason;
};

/// Exact test: c0*a + c1*r < 0 for every integer pair r > a >= 1.
bool negative_for_all_r_above_a(long long c0, long long c1);
/// Same question by evaluation over 1 <= a < r <= limit.
bool negative_on_grid(long long c0, long long c1, int limit);

Json to_json(const ExclusionCertificate& c);
/// Points labelled from the published list; the orbit is named after its smallest label, e.g. "O(P1)".
LabeledOrbit labeled_orbit(const std::vector<ProjPoint>& points);

ExclusionCertificate exclusion_test(const PicLattice& lattice, const LabeledOrbit& orbit, const DivClass& curve);

struct ProofStep {
    std::string id;
    std::string claim;
    std::string paper_ref;
    Json certificate;
    std::string status;  // "pass", "fail", "skipped"
};

struct Proof {
    std::string name;
    std::vector<ProofStep> steps;
    std::vector<std::string> remarks;
    bool complete = false;
    std::string conclusion;

    Json to_json() const;
    /// FNV-1a over the compact JSON dump, as 16 hex digits.
    std::string hash() const;
};

struct S4ProofOptions {
    /// Overrides K^2 fed to the orbit bound.
    std::optional<int> ksq;
    /// Appended to the classified orbits before the cross-check.
    std::vector<LabeledOrbit> extra_orbits;
};

Proof prove_s4(const S4ProofOptions& options = {});

/// Group data the abstract small-orbit argument uses.
struct GroupSummary {
    std::string name;
    std::size_t order = 0;
    std::vector<std::size_t> class_sizes;
    std::size_t abelianization = 0;
    std::set<std::size_t> normal_orders;
};

template <typename E>
GroupSummary summarize(const std::string& name, const GroupTable<E>& g) {
    GroupSummary s;
    s.name = name;
    s.order = g.order();
    s.class_sizes = class_sizes(g);
    std::sort(s.class_sizes.begin(), s.class_sizes.end());
    s.abelianization = abelianization_order(g);
    s.normal_orders = normal_subgroup_orders(g);
    return s;
}

struct A5ProofOptions {
    /// Replaces the computed character-degree multisets.
    std::optional<std::vector<std::vector<int>>> multisets;
};

/// No orbit of size < 5 for a faithful action of the given group on a surface.
Proof prove_a5(const GroupSummary& group, const A5ProofOptions& options = {});

}  // namespace vgc
