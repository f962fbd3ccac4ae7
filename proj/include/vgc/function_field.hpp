#pragma once

#include "vgc/matrix_group.hpp"
#include "vgc/surface.hpp"

#include <string>
#include <vector>

namespace vgc {

/// Dense univariate polynomial in x over the cyclotomic numbers, lowest degree first.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<CycNum> coeffs);
    static UPoly constant(const CycNum& c) { return UPoly({c}); }
    static UPoly x() { return UPoly({CycNum(0), CycNum(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<CycNum>& coeffs() const { return c_; }
    const CycNum& lead() const { return c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const CycNum& k, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
    std::vector<CycNum> c_;
};

/// q, r with a = q*b + r, deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Polynomial in x and y stored as coefficients of y^j in K[x].
class BPoly {
public:
    BPoly() = default;
    explicit BPoly(std::vector<UPoly> by_y);
    static BPoly constant(const CycNum& c) { return BPoly({UPoly::constant(c)}); }
    static BPoly x() { return BPoly({UPoly::x()}); }
    static BPoly y() { return BPoly({UPoly(), UPoly::constant(CycNum(1))}); }
    /// c * x^i * y^j.
    static BPoly monomial(const CycNum& c, int i, int j);

    bool is_zero() const { return c_.empty(); }
    int degree_y() const { return static_cast<int>(c_.size()) - 1; }
    int degree_x() const;
    const std::vector<UPoly>& by_y() const { return c_; }
    /// Coefficient of x^i y^j.
    CycNum coeff(int i, int j) const;
    /// Leading coefficient for the lex order with x > y.
    CycNum lead() const;
    BPoly pow(int k) const;

    friend BPoly operator+(const BPoly& a, const BPoly& b);
    friend BPoly operator-(const BPoly& a, const BPoly& b);
    friend BPoly operator*(const BPoly& a, const BPoly& b);
    friend BPoly operator*(const CycNum& k, const BPoly& a);
    friend BPoly operator*(const UPoly& k, const BPoly& a);
    friend bool operator==(const BPoly& a, const BPoly& b) { return a.c_ == b.c_; }

    /// Terms in descending lex order, e.g. "x^2*y - (z3)*y + 1".
    std::string to_string() const;

private:
    std::vector<UPoly> c_;
};

UPoly content(const BPoly& p);
BPoly primitive_part(const BPoly& p);
/// gcd in K[x][y] up to a constant factor.
BPoly gcd(const BPoly& a, const BPoly& b);
/// a / b when b divides a exactly; throws std::domain_error otherwise.
BPoly exact_div(const BPoly& a, const BPoly& b);

/// Element of K(x, y) in lowest terms with the denominator's lex-leading coefficient 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(BPoly::constant(CycNum(1))) {}
    RatFunc(BPoly num, BPoly den);
    RatFunc(const BPoly& p) : RatFunc(p, BPoly::constant(CycNum(1))) {}
    RatFunc(const CycNum& c) : RatFunc(BPoly::constant(c)) {}
    RatFunc(int c) : RatFunc(CycNum(c)) {}

    static RatFunc x() { return RatFunc(BPoly::x()); }
    static RatFunc y() { return RatFunc(BPoly::y()); }

    const BPoly& num() const { return num_; }
    const BPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    RatFunc pow(int k) const;
    RatFunc inverse() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// "x^2/y", "(x + 1)/(x*y)".
    std::string to_string() const;

private:
    BPoly num_, den_;
};

/// Images of x and y under one group element.
struct SubstAction {
    RatFunc x_image;
    RatFunc y_image;

    /// [X0, X1, X2] -> [X0, X1, X2] * M, then x = X1/X0, y = X2/X0.
    static SubstAction from_matrix(const GroupElement& g);
};

/// f(x^g, y^g). For matrices, substitute(g*h, f) == substitute(g, substitute(h, f)).
RatFunc substitute(const SubstAction& g, const RatFunc& f);
RatFunc substitute(const GroupElement& g, const RatFunc& f);

/// u = x^2/y, v = y^2/x, theta = y/x.
RatFunc func_u();
RatFunc func_v();
RatFunc func_theta();

struct UvRow {
    std::string generator;
    std::string u_image, v_image;
    std::string expected_u, expected_v;
    bool match = false;
};

struct UvTable {
    std::vector<UvRow> rows;
    bool all_match = false;
};

/// Images of (u, v) under A, B, C1, C2 against (v, u), (v, 1/(uv)), (-u, v), (-u, -v).
UvTable verify_uv_table(const std::map<std::string, GroupElement>& gens = g216_generators());

struct IdentityCheck {
    std::string statement;
    std::string lhs, rhs;
    bool holds = false;
};

struct TowerReport {
    IdentityCheck theta_cubed;              // theta^3 * u = v
    std::vector<IdentityCheck> recovery;    // the identities recovering x and y from u, v, theta
    bool generated = false;                 // x and y lie in K(u, v, theta) by identities that hold
    bool theta_eigen = false;               // theta^(D1 D2^2) = w * theta
    bool uv_fixed_by_h3 = false;
    std::size_t h3_order = 0;
    int degree_uv = 0;                      // [K(x, y) : K(u, v)]
    std::size_t h2_order = 0;
    bool h2_abelian = false;
    std::size_t h2_exponent = 0;
    int degree_h2 = 0;
    std::string galois_shape;
};

TowerReport tower_degrees(const std::map<std::string, GroupElement>& gens = g216_generators());

struct IdentifyRow {
    std::string pair;  // e.g. "A ~ s"
    std::vector<std::string> computed;
    std::vector<std::string> expected;  // e.g. "-v = -y^2/x": the signed coordinate the surface map puts there
    bool match = false;
};

struct IdentifyResult {
    bool product_is_one = false;
    std::vector<IdentifyRow> rows;
    bool all_match = false;
};

/// Transports (u, v, 1/(uv)) -> (x, y, z) and compares with the signed-monomial action on the surface.
IdentifyResult identify_with_x1(const std::map<std::string, GroupElement>& gens = g216_generators(),
                                const std::map<std::string, SignedMonomialMap>& surface = s4_surface_generators());

struct CompatibilityResult {
    std::size_t checked = 0;
    std::vector<std::string> failures;
};

/// substitute(g*h, x) == substitute(g, substitute(h, x)) (and for y) for every g in the table and h among gens.
CompatibilityResult check_action_compatibility(const MatrixGroup& table, const std::vector<GroupElement>& gens);

}  // namespace vgc
