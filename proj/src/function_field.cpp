#include "vgc/function_field.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace vgc {

// ---------------------------------------------------------------------------
// UPoly

namespace {

void trim(std::vector<CycNum>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void trim(std::vector<UPoly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

UPoly::UPoly(std::vector<CycNum> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x = x.simplified();
    trim(c_);
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<CycNum> c(std::max(a.c_.size(), b.c_.size()), CycNum(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + CycNum(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<CycNum> c(a.c_.size() + b.c_.size() - 1, CycNum(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
}

UPoly operator*(const CycNum& k, const UPoly& a) {
    std::vector<CycNum> c = a.c_;
    for (auto& x : c) x *= k;
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<CycNum> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<CycNum> q(static_cast<std::size_t>(a.degree() - db + 1), CycNum(0));
    const CycNum inv = b.lead().inverse();
    for (int i = a.degree(); i >= db; --i) {
        const CycNum f = r[static_cast<std::size_t>(i)] * inv;
        if (f.is_zero()) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly p = a, q = b;
    while (!q.is_zero()) {
        UPoly r = divmod(p, q).second;
        p = std::move(q);
        q = r.is_zero() ? r : r.lead().inverse() * r;
    }
    if (p.is_zero()) return p;
    return p.lead().inverse() * p;
}

// ---------------------------------------------------------------------------
// BPoly

BPoly::BPoly(std::vector<UPoly> by_y) : c_(std::move(by_y)) { trim(c_); }

BPoly BPoly::monomial(const CycNum& c, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("BPoly::monomial: negative exponent");
    std::vector<CycNum> xs(static_cast<std::size_t>(i) + 1, CycNum(0));
    xs.back() = c;
    std::vector<UPoly> ys(static_cast<std::size_t>(j) + 1);
    ys.back() = UPoly(std::move(xs));
    return BPoly(std::move(ys));
}

int BPoly::degree_x() const {
    int d = -1;
    for (const auto& u : c_) d = std::max(d, u.degree());
    return d;
}

CycNum BPoly::coeff(int i, int j) const {
    if (j < 0 || j > degree_y()) return CycNum(0);
    const auto& u = c_[static_cast<std::size_t>(j)];
    if (i < 0 || i > u.degree()) return CycNum(0);
    return u.coeffs()[static_cast<std::size_t>(i)];
}

CycNum BPoly::lead() const {
    if (is_zero()) return CycNum(0);
    const int dx = degree_x();
    for (int j = degree_y(); j >= 0; --j)
        if (c_[static_cast<std::size_t>(j)].degree() == dx) return c_[static_cast<std::size_t>(j)].lead();
    return CycNum(0);
}

BPoly BPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("BPoly::pow: negative exponent");
    BPoly result = constant(CycNum(1)), base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

BPoly operator+(const BPoly& a, const BPoly& b) {
    std::vector<UPoly> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t j = 0; j < a.c_.size(); ++j) c[j] = c[j] + a.c_[j];
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[j] = c[j] + b.c_[j];
    return BPoly(std::move(c));
}

BPoly operator-(const BPoly& a, const BPoly& b) { return a + CycNum(-1) * b; }

BPoly operator*(const BPoly& a, const BPoly& b) {
    if (a.is_zero() || b.is_zero()) return BPoly();
    std::vector<UPoly> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return BPoly(std::move(c));
}

BPoly operator*(const CycNum& k, const BPoly& a) {
    std::vector<UPoly> c = a.c_;
    for (auto& u : c) u = k * u;
    return BPoly(std::move(c));
}

BPoly operator*(const UPoly& k, const BPoly& a) {
    std::vector<UPoly> c = a.c_;
    for (auto& u : c) u = k * u;
    return BPoly(std::move(c));
}

std::string BPoly::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::array<int, 2>> mons;
    for (int j = 0; j <= degree_y(); ++j)
        for (int i = 0; i <= c_[static_cast<std::size_t>(j)].degree(); ++i)
            if (!coeff(i, j).is_zero()) mons.push_back({i, j});
    std::sort(mons.begin(), mons.end(), std::greater<>());
    std::string out;
    for (const auto& [i, j] : mons) {
        CycNum c = coeff(i, j);
        std::string mono;
        auto var = [&](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        var("x", i);
        var("y", j);
        bool negative = false;
        std::string cs = c.to_string();
        if (cs.find(' ') == std::string::npos && cs[0] == '-') {
            negative = true;
            cs = cs.substr(1);
        }
        std::string term;
        if (mono.empty()) {
            term = cs.find(' ') == std::string::npos ? cs : "(" + cs + ")";
        } else if (cs == "1") {
            term = mono;
        } else {
            term = (cs.find(' ') == std::string::npos ? cs : "(" + cs + ")") + "*" + mono;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

UPoly content(const BPoly& p) {
    UPoly g;
    for (const auto& u : p.by_y()) g = gcd(g, u);
    return g;
}

namespace {

BPoly divide_by(const BPoly& p, const UPoly& d) {
    std::vector<UPoly> c;
    for (const auto& u : p.by_y()) {
        auto [q, r] = divmod(u, d);
        if (!r.is_zero()) throw std::domain_error("BPoly: inexact division by content");
        c.push_back(q);
    }
    return BPoly(std::move(c));
}

// lc(b)^(deg a - deg b + 1) * a mod b, in y.
BPoly pseudo_remainder(BPoly a, const BPoly& b) {
    const int db = b.degree_y();
    const UPoly lb = b.by_y().back();
    while (!a.is_zero() && a.degree_y() >= db) {
        const int shift = a.degree_y() - db;
        const UPoly la = a.by_y().back();
        std::vector<UPoly> ys(static_cast<std::size_t>(shift) + 1);
        ys.back() = la;
        a = lb * a - BPoly(std::move(ys)) * b;
    }
    return a;
}

}  // namespace

BPoly primitive_part(const BPoly& p) {
    if (p.is_zero()) return p;
    BPoly q = divide_by(p, content(p));
    return q.lead().inverse() * q;
}

BPoly gcd(const BPoly& a, const BPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const UPoly cg = gcd(content(a), content(b));
    BPoly p = primitive_part(a), q = primitive_part(b);
    if (p.degree_y() < q.degree_y()) std::swap(p, q);
    // Subresultant remainder sequence: the divisions below are exact in K[x].
    UPoly g = UPoly::constant(CycNum(1)), h = UPoly::constant(CycNum(1));
    while (q.degree_y() > 0) {
        const int delta = p.degree_y() - q.degree_y();
        BPoly r = pseudo_remainder(p, q);
        if (r.is_zero()) break;
        UPoly beta = g;
        for (int k = 0; k < delta; ++k) beta = beta * h;
        p = std::move(q);
        q = divide_by(r, beta);
        g = p.by_y().back();
        if (delta > 0) {
            UPoly num = UPoly::constant(CycNum(1));
            for (int k = 0; k < delta; ++k) num = num * g;
            for (int k = 1; k < delta; ++k) num = divmod(num, h).first;
            h = num;
        }
    }
    // A remainder of y-degree 0 means the primitive parts are coprime.
    if (q.degree_y() == 0) return BPoly({cg});
    return cg * primitive_part(q);
}

BPoly exact_div(const BPoly& a, const BPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    BPoly rem = a;
    std::vector<UPoly> q(static_cast<std::size_t>(std::max(0, a.degree_y() - b.degree_y() + 1)));
    const UPoly& lb = b.by_y().back();
    while (!rem.is_zero()) {
        const int shift = rem.degree_y() - b.degree_y();
        if (shift < 0) throw std::domain_error("exact_div: " + b.to_string() + " does not divide " + a.to_string());
        auto [f, r] = divmod(rem.by_y().back(), lb);
        if (!r.is_zero()) throw std::domain_error("exact_div: " + b.to_string() + " does not divide " + a.to_string());
        std::vector<UPoly> ys(static_cast<std::size_t>(shift) + 1);
        ys.back() = f;
        q[static_cast<std::size_t>(shift)] = f;
        rem = rem - BPoly(std::move(ys)) * b;
    }
    return BPoly(std::move(q));
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(BPoly num, BPoly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        num_ = BPoly();
        den_ = BPoly::constant(CycNum(1));
        return;
    }
    const BPoly g = gcd(num, den);
    num = exact_div(num, g);
    den = exact_div(den, g);
    const CycNum k = den.lead().inverse();
    num_ = k * num;
    den_ = k * den;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    return RatFunc(num_.pow(k), den_.pow(k));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a) { return RatFunc(CycNum(-1) * a.num_, a.den_); }
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string() const {
    auto wrap = [](const BPoly& p, bool product_ok) {
        std::string s = p.to_string();
        bool single = s.find(' ') == std::string::npos && (product_ok || s.find('*') == std::string::npos);
        return single ? s : "(" + s + ")";
    };
    if (den_ == BPoly::constant(CycNum(1))) return num_.to_string();
    return wrap(num_, true) + "/" + wrap(den_, false);
}

// ---------------------------------------------------------------------------
// Substitution

SubstAction SubstAction::from_matrix(const GroupElement& g) {
    // X'_j = sum_i X_i M_ij with X = (1, x, y).
    std::array<RatFunc, 3> lin;
    for (int j = 0; j < 3; ++j)
        lin[static_cast<std::size_t>(j)] =
            RatFunc(BPoly::constant(g(0, j)) + g(1, j) * BPoly::x() + g(2, j) * BPoly::y());
    if (lin[0].is_zero()) throw DivisionByZero();
    return {lin[1] / lin[0], lin[2] / lin[0]};
}

namespace {

// p(x', y') for x' = p1/q1, y' = p2/q2 as an unreduced fraction.
std::pair<BPoly, BPoly> substitute_poly(const SubstAction& g, const BPoly& p) {
    const int a = std::max(p.degree_x(), 0), b = std::max(p.degree_y(), 0);
    const BPoly &p1 = g.x_image.num(), &q1 = g.x_image.den(), &p2 = g.y_image.num(), &q2 = g.y_image.den();
    std::vector<BPoly> p1p{BPoly::constant(1)}, q1p{BPoly::constant(1)}, p2p{BPoly::constant(1)}, q2p{BPoly::constant(1)};
    for (int k = 1; k <= a; ++k) {
        p1p.push_back(p1p.back() * p1);
        q1p.push_back(q1p.back() * q1);
    }
    for (int k = 1; k <= b; ++k) {
        p2p.push_back(p2p.back() * p2);
        q2p.push_back(q2p.back() * q2);
    }
    BPoly num;
    for (int j = 0; j <= p.degree_y(); ++j) {
        for (int i = 0; i <= p.by_y()[static_cast<std::size_t>(j)].degree(); ++i) {
            const CycNum c = p.coeff(i, j);
            if (c.is_zero()) continue;
            const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
            num = num + c * (p1p[ui] * q1p[static_cast<std::size_t>(a - i)] * p2p[uj] * q2p[static_cast<std::size_t>(b - j)]);
        }
    }
    return {num, q1p[static_cast<std::size_t>(a)] * q2p[static_cast<std::size_t>(b)]};
}

}  // namespace

RatFunc substitute(const SubstAction& g, const RatFunc& f) {
    auto [nn, nd] = substitute_poly(g, f.num());
    auto [dn, dd] = substitute_poly(g, f.den());
    if (dn.is_zero()) throw DivisionByZero();
    return RatFunc(nn * dd, nd * dn);
}

RatFunc substitute(const GroupElement& g, const RatFunc& f) { return substitute(SubstAction::from_matrix(g), f); }

RatFunc func_u() { return RatFunc::x().pow(2) / RatFunc::y(); }
RatFunc func_v() { return RatFunc::y().pow(2) / RatFunc::x(); }
RatFunc func_theta() { return RatFunc::y() / RatFunc::x(); }

// ---------------------------------------------------------------------------
// Checks

UvTable verify_uv_table(const std::map<std::string, GroupElement>& gens) {
    const RatFunc u = func_u(), v = func_v();
    const std::vector<std::pair<std::string, std::pair<RatFunc, RatFunc>>> expected{
        {"A", {v, u}},
        {"B", {v, (u * v).inverse()}},
        {"C1", {-u, v}},
        {"C2", {-u, -v}},
    };
    UvTable t;
    t.all_match = true;
    for (const auto& [name, want] : expected) {
        const SubstAction g = SubstAction::from_matrix(gens.at(name));
        const RatFunc gu = substitute(g, u), gv = substitute(g, v);
        UvRow row{name, gu.to_string(), gv.to_string(), want.first.to_string(), want.second.to_string(),
                  gu == want.first && gv == want.second};
        t.all_match = t.all_match && row.match;
        t.rows.push_back(std::move(row));
    }
    return t;
}

namespace {

IdentityCheck identity(std::string statement, const RatFunc& lhs, const RatFunc& rhs) {
    return {std::move(statement), lhs.to_string(), rhs.to_string(), lhs == rhs};
}

}  // namespace

TowerReport tower_degrees(const std::map<std::string, GroupElement>& gens) {
    const RatFunc x = RatFunc::x(), y = RatFunc::y(), u = func_u(), v = func_v(), th = func_theta();
    TowerReport r;
    r.theta_cubed = identity("theta^3 * u = v", th.pow(3) * u, v);
    r.recovery.push_back(identity("x = u * theta", x, u * th));
    r.recovery.push_back(identity("y = theta / v", y, th / v));
    r.recovery.push_back(identity("y = v / theta", y, v / th));
    r.recovery.push_back(identity("y = u * theta^2", y, u * th.pow(2)));
    r.generated = r.recovery[0].holds && (r.recovery[2].holds || r.recovery[3].holds);

    const GroupElement d1 = gens.at("D1"), d2 = gens.at("D2");
    const GroupElement h3gen = d1 * d2 * d2;
    const auto h3 = closure(std::vector<GroupElement>{h3gen});
    r.h3_order = h3.order();
    r.uv_fixed_by_h3 = true;
    for (const auto& g : h3.elements()) r.uv_fixed_by_h3 = r.uv_fixed_by_h3 && substitute(g, u) == u && substitute(g, v) == v;
    r.theta_eigen = substitute(h3gen, th) == RatFunc(CycNum::zeta(3)) * th;
    // theta is a root of t^3 - v/u; over a field with cube roots of unity that
    // polynomial is irreducible or splits, and theta is not fixed, so the degree is 3.
    if (r.theta_cubed.holds && r.generated && r.theta_eigen && r.uv_fixed_by_h3 && r.h3_order == 3) r.degree_uv = 3;

    const auto h2 = closure(std::vector<GroupElement>{d1, d2});
    Subgroup all(h2.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    r.h2_order = h2.order();
    r.h2_abelian = is_abelian(h2, all);
    r.h2_exponent = exponent(h2, all);
    // The action on K(x, y) is faithful (x, y are moved by every nontrivial element), so the degree is |H2|.
    bool faithful = true;
    for (std::size_t i = 1; i < h2.order(); ++i) faithful = faithful && !(substitute(h2[i], x) == x && substitute(h2[i], y) == y);
    if (faithful) r.degree_h2 = static_cast<int>(h2.order());
    if (r.h2_abelian && r.h2_exponent == 3 && r.h2_order == 9) r.galois_shape = "(Z/3)^2";
    return r;
}

IdentifyResult identify_with_x1(const std::map<std::string, GroupElement>& mats,
                                const std::map<std::string, SignedMonomialMap>& maps) {
    const RatFunc u = func_u(), v = func_v(), w = (u * v).inverse();
    const std::array<RatFunc, 3> coords{u, v, w};
    const std::array<const char*, 3> names{"u", "v", "1/(uv)"};
    IdentifyResult out;
    out.product_is_one = u * v * w == RatFunc(1);
    out.all_match = out.product_is_one;
    for (const auto& [m, s] : std::vector<std::pair<std::string, std::string>>{{"A", "s"}, {"B", "t"}, {"C1", "l1"}, {"C2", "l2"}}) {
        const SubstAction g = SubstAction::from_matrix(mats.at(m));
        const SignedMonomialMap& h = maps.at(s);
        IdentifyRow row{m + " ~ " + s, {}, {}, true};
        for (std::size_t i = 0; i < 3; ++i) {
            const RatFunc got = substitute(g, coords[i]);
            const auto src = static_cast<std::size_t>(h.perm()[i]);
            const RatFunc want = RatFunc(h.scalars()[i]) * coords[src];
            const CycNum& k = h.scalars()[i];
            std::string coord = names[src];
            if (k == CycNum(-1)) coord = "-" + coord;
            else if (k != CycNum(1)) coord = "(" + k.to_string() + ")*" + coord;
            row.computed.push_back(got.to_string());
            row.expected.push_back(coord + " = " + want.to_string());
            row.match = row.match && got == want;
        }
        out.all_match = out.all_match && row.match;
        out.rows.push_back(std::move(row));
    }
    return out;
}

CompatibilityResult check_action_compatibility(const MatrixGroup& table, const std::vector<GroupElement>& gens) {
    CompatibilityResult r;
    const RatFunc x = RatFunc::x(), y = RatFunc::y();
    std::vector<std::array<RatFunc, 2>> hx;
    for (const auto& h : gens) hx.push_back({substitute(h, x), substitute(h, y)});
    for (std::size_t gi = 0; gi < table.order(); ++gi) {
        const SubstAction g = SubstAction::from_matrix(table[gi]);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const SubstAction gh = SubstAction::from_matrix(table[gi] * gens[k]);
            for (int c = 0; c < 2; ++c) {
                ++r.checked;
                const RatFunc lhs = c == 0 ? gh.x_image : gh.y_image;
                const RatFunc rhs = substitute(g, hx[k][static_cast<std::size_t>(c)]);
                if (lhs != rhs) {
                    r.failures.push_back("element " + table.word_string(gi) + " times generator " + std::to_string(k) +
                                         ": " + lhs.to_string() + " != " + rhs.to_string());
                }
            }
        }
    }
    return r;
}

}  // namespace vgc
