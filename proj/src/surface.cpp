#include "vgc/surface.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace vgc {

namespace {

const char* const kVar[3] = {"x", "y", "z"};

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

bool is_root_of_unity(const CycNum& c) {
    if (c.is_zero()) return false;
    auto form = as_rational_times_root_of_unity(c);
    return form && (form->scale == 1 || form->scale == -1);
}

std::vector<CycNum> homogeneous(MonomialCoord::Kind kind) {
    if (kind == MonomialCoord::Kind::Zero) return {CycNum(1), CycNum(0)};
    return {CycNum(0), CycNum(1)};
}

std::vector<std::vector<int>> cycles_of(const std::array<int, 3>& perm) {
    std::vector<std::vector<int>> cycles;
    std::array<bool, 3> seen{};
    for (int i = 0; i < 3; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::vector<int> c;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            c.push_back(j);
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

// Polynomials in x0, x1, y0, y1, z0, z1 (variable 2*i + j is the j-th coordinate of factor i).
using Exponents = std::array<int, 6>;
using Poly6 = std::map<Exponents, CycNum>;

Poly6 surface_polynomial() {
    return {{{1, 0, 1, 0, 1, 0}, CycNum(1)}, {{0, 1, 0, 1, 0, 1}, CycNum(-1)}};
}

// F o g: coordinate j of factor i becomes (scalar^j) times coordinate j of factor perm[i].
Poly6 pull_back(const Poly6& f, const SignedMonomialMap& g) {
    Poly6 out;
    for (const auto& [exps, coef] : f) {
        Exponents e{};
        CycNum c = coef;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto src = static_cast<std::size_t>(g.perm()[i]);
            e[2 * src] += exps[2 * i];
            e[2 * src + 1] += exps[2 * i + 1];
            c *= g.scalars()[i].pow(exps[2 * i + 1]);
        }
        CycNum& slot = out[e];
        slot += c;
        if (slot.is_zero()) out.erase(e);
    }
    return out;
}

std::vector<CycNum> roots_or_throw(int k, const CycNum& c) {
    auto roots = binomial_roots(k, c);
    if (roots.empty()) {
        throw std::domain_error("fixed locus needs a root of " + c.to_string() + " outside the supported cyclotomic form");
    }
    return roots;
}

MonomialCoord scaled(const MonomialCoord& m, const CycNum& s) {
    if (m.kind != MonomialCoord::Kind::Monomial) return m;
    return MonomialCoord::monomial(m.coef * s, m.exponent);
}

// Solutions t in C* of lhs(t) == rhs(t): nullopt means every t.
enum class Match { Always, Never, Some };
Match solve_coord(const MonomialCoord& lhs, const MonomialCoord& rhs, std::vector<CycNum>& ts) {
    using K = MonomialCoord::Kind;
    if (lhs.kind != rhs.kind) return Match::Never;
    if (lhs.kind != K::Monomial) return Match::Always;
    if (lhs.exponent == rhs.exponent) return lhs.coef == rhs.coef ? Match::Always : Match::Never;
    const int d = lhs.exponent - rhs.exponent;
    ts = d > 0 ? roots_or_throw(d, rhs.coef / lhs.coef) : roots_or_throw(-d, lhs.coef / rhs.coef);
    return Match::Some;
}

}  // namespace

// ---------------------------------------------------------------------------
// ProjPoint

ProjPoint::ProjPoint(std::vector<std::vector<CycNum>> factors) : factors_(std::move(factors)) {
    for (auto& f : factors_) {
        auto last = std::find_if(f.rbegin(), f.rend(), [](const CycNum& c) { return !c.is_zero(); });
        if (last == f.rend()) throw std::invalid_argument("ProjPoint: zero vector is not a projective point");
        if (last->is_one()) continue;
        const CycNum inv = last->inverse();
        for (auto& c : f) c *= inv;
    }
}

ProjPoint ProjPoint::affine(const std::array<CycNum, 3>& xyz) {
    return ProjPoint({{CycNum(1), xyz[0]}, {CycNum(1), xyz[1]}, {CycNum(1), xyz[2]}});
}

std::optional<std::vector<CycNum>> ProjPoint::affine_coords() const {
    std::vector<CycNum> out;
    for (const auto& f : factors_) {
        if (f.size() != 2 || f[0].is_zero()) return std::nullopt;
        out.push_back(f[1] / f[0]);
    }
    return out;
}

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    os << '(';
    if (auto a = affine_coords()) {
        for (std::size_t i = 0; i < a->size(); ++i) os << (i ? ", " : "") << (*a)[i];
    } else {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            os << (i ? ", " : "") << '[';
            for (std::size_t j = 0; j < factors_[i].size(); ++j) os << (j ? "," : "") << factors_[i][j];
            os << ']';
        }
    }
    os << ')';
    return os.str();
}

std::size_t ProjPoint::hash() const {
    std::size_t h = factors_.size();
    for (const auto& f : factors_)
        for (const auto& c : f) h = mix(h, c.hash());
    return h;
}

// ---------------------------------------------------------------------------
// SignedMonomialMap

SignedMonomialMap::SignedMonomialMap() : perm_{0, 1, 2}, scalars_{CycNum(1), CycNum(1), CycNum(1)} {}

SignedMonomialMap::SignedMonomialMap(std::array<int, 3> perm, std::array<CycNum, 3> scalars)
    : perm_(perm), scalars_(std::move(scalars)) {
    std::array<bool, 3> seen{};
    for (int p : perm_) {
        if (p < 0 || p > 2 || seen[static_cast<std::size_t>(p)]) throw std::invalid_argument("SignedMonomialMap: not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    for (const auto& s : scalars_) {
        if (!is_root_of_unity(s)) throw std::invalid_argument("SignedMonomialMap: scalar " + s.to_string() + " is not a root of unity");
    }
}

bool SignedMonomialMap::is_identity() const {
    return *this == SignedMonomialMap();
}

std::string SignedMonomialMap::to_string() const {
    std::ostringstream os;
    os << "(x, y, z) -> (";
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) os << ", ";
        const CycNum& s = scalars_[i];
        if (s == CycNum(-1)) {
            os << '-';
        } else if (!s.is_one()) {
            os << '(' << s << ")*";
        }
        os << kVar[perm_[i]];
    }
    os << ')';
    return os.str();
}

SignedMonomialMap operator*(const SignedMonomialMap& g, const SignedMonomialMap& h) {
    std::array<int, 3> perm{};
    std::array<CycNum, 3> scalars;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto hi = static_cast<std::size_t>(h.perm_[i]);
        perm[i] = g.perm_[hi];
        scalars[i] = h.scalars_[i] * g.scalars_[hi];
    }
    return SignedMonomialMap(perm, scalars);
}

std::size_t SignedMonomialMap::hash() const {
    std::size_t h = static_cast<std::size_t>(perm_[0] * 9 + perm_[1] * 3 + perm_[2]);
    for (const auto& s : scalars_) h = mix(h, s.hash());
    return h;
}

SignedMonomialMap inverse(const SignedMonomialMap& g) {
    std::array<int, 3> perm{};
    for (int i = 0; i < 3; ++i) perm[static_cast<std::size_t>(g.perm()[static_cast<std::size_t>(i)])] = i;
    std::array<CycNum, 3> scalars;
    for (std::size_t i = 0; i < 3; ++i) scalars[i] = g.scalars()[static_cast<std::size_t>(perm[i])].inverse();
    return SignedMonomialMap(perm, scalars);
}

std::map<std::string, SignedMonomialMap> s4_surface_generators() {
    const CycNum one(1);
    const CycNum minus(-1);
    return {
        {"s", SignedMonomialMap({1, 0, 2}, {one, one, one})},
        {"t", SignedMonomialMap({1, 2, 0}, {one, one, one})},
        {"l1", SignedMonomialMap({0, 1, 2}, {minus, one, minus})},
        {"l2", SignedMonomialMap({0, 1, 2}, {minus, minus, one})},
    };
}

SurfaceGroup s4_surface_group() {
    auto g = s4_surface_generators();
    return closure(std::vector{g.at("s"), g.at("t"), g.at("l1"), g.at("l2")}, kDefaultClosureCap, {"s", "t", "l1", "l2"});
}

// ---------------------------------------------------------------------------
// Actions

ProjPoint act(const SignedMonomialMap& g, const ProjPoint& p) {
    if (p.num_factors() != 3) throw DimensionMismatch("signed-monomial maps act on (P^1)^3");
    std::vector<std::vector<CycNum>> out(3);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& src = p.factors()[static_cast<std::size_t>(g.perm()[i])];
        if (src.size() != 2) throw DimensionMismatch("signed-monomial maps act on (P^1)^3");
        out[i] = {src[0], g.scalars()[i] * src[1]};
    }
    return ProjPoint(std::move(out));
}

ProjPoint act(const GroupElement& g, const ProjPoint& p) {
    if (p.num_factors() != 1 || p.factors()[0].size() != 3) throw DimensionMismatch("3x3 matrices act on P^2");
    const auto& x = p.factors()[0];
    std::vector<CycNum> out(3);
    for (int j = 0; j < 3; ++j) {
        CycNum s(0);
        for (int i = 0; i < 3; ++i) s += x[static_cast<std::size_t>(i)] * g(i, j);
        out[static_cast<std::size_t>(j)] = s;
    }
    return ProjPoint({out});
}

bool on_surface(const ProjPoint& p) {
    if (p.num_factors() != 3) return false;
    CycNum lhs(1);
    CycNum rhs(1);
    for (const auto& f : p.factors()) {
        if (f.size() != 2) return false;
        lhs *= f[0];
        rhs *= f[1];
    }
    return lhs == rhs;
}

InvarianceResult surface_invariance(const std::vector<SignedMonomialMap>& gens) {
    const Poly6 f = surface_polynomial();
    const auto& [ref_exps, ref_coef] = *f.begin();
    InvarianceResult result;
    for (const auto& g : gens) {
        const Poly6 pulled = pull_back(f, g);
        std::optional<CycNum> scalar;
        if (auto it = pulled.find(ref_exps); it != pulled.cend()) {
            const CycNum c = it->second / ref_coef;
            Poly6 expected;
            for (const auto& [e, v] : f) expected.emplace(e, v * c);
            bool same = pulled.size() == expected.size();
            for (auto a = pulled.cbegin(), b = expected.cbegin(); same && a != pulled.end(); ++a, ++b) {
                same = a->first == b->first && a->second == b->second;
            }
            if (same) scalar = c;
        }
        if (!scalar) result.invariant = false;
        result.scalars.push_back(scalar);
    }
    return result;
}

std::vector<ProjPoint> orbit(const ProjPoint& p, const SurfaceGroup& group) {
    if (!on_surface(p)) throw PointOffSurface("point " + p.to_string() + " is not on the surface");
    std::vector<ProjPoint> out;
    std::unordered_set<ProjPoint> seen;
    for (const auto& g : group.elements()) {
        ProjPoint q = act(g, p);
        if (seen.insert(q).second) out.push_back(std::move(q));
    }
    return out;
}

Subgroup stabilizer(const ProjPoint& p, const SurfaceGroup& group) {
    if (!on_surface(p)) throw PointOffSurface("point " + p.to_string() + " is not on the surface");
    Subgroup out;
    for (std::size_t i = 0; i < group.order(); ++i) {
        if (act(group[i], p) == p) out.push_back(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fixed loci

std::vector<CycNum> MonomialCoord::at(const CycNum& t) const {
    if (kind != Kind::Monomial) return homogeneous(kind);
    return {CycNum(1), coef * t.pow(exponent)};
}

std::string MonomialCoord::to_string() const {
    switch (kind) {
        case Kind::Zero: return "0";
        case Kind::Infinity: return "inf";
        case Kind::Monomial: break;
    }
    std::string c = coef.is_one() ? "" : (coef == CycNum(-1) ? "-" : "(" + coef.to_string() + ")*");
    if (exponent == 0) return coef.to_string();
    return c + "t" + (exponent == 1 ? "" : "^" + std::to_string(exponent));
}

ProjPoint FixedComponent::sample(const CycNum& t) const {
    if (kind == Kind::Point) return point;
    if (kind != Kind::Curve) throw std::logic_error("FixedComponent::sample: the 'all' component has no parametrization");
    if (t.is_zero()) throw std::invalid_argument("FixedComponent::sample: parameter must be nonzero");
    return ProjPoint({curve[0].at(t), curve[1].at(t), curve[2].at(t)});
}

std::string FixedComponent::to_string() const {
    switch (kind) {
        case Kind::All: return "all of the surface";
        case Kind::Point: return "point " + point.to_string();
        case Kind::Curve: break;
    }
    return "curve t -> (" + curve[0].to_string() + ", " + curve[1].to_string() + ", " + curve[2].to_string() + "), " +
           restriction;
}

std::vector<FixedComponent> fixed_locus(const SignedMonomialMap& g) {
    if (g.is_identity()) {
        FixedComponent all;
        all.kind = FixedComponent::Kind::All;
        all.restriction = "identically satisfied";
        return {all};
    }

    // Along a cycle i -> perm[i] a fixed point has x_{perm[i]} = x_i / s_i.
    const auto cycles = cycles_of(g.perm());
    std::array<CycNum, 3> coef;
    std::vector<bool> torus_allowed;
    for (const auto& c : cycles) {
        CycNum running(1);
        CycNum product(1);
        for (int i : c) {
            coef[static_cast<std::size_t>(i)] = running;
            running /= g.scalars()[static_cast<std::size_t>(i)];
            product *= g.scalars()[static_cast<std::size_t>(i)];
        }
        torus_allowed.push_back(product.is_one());
    }

    // Each cycle sits at 0, at infinity, or (if its scalars multiply to 1) in the torus.
    enum class State { Zero, Infinity, Torus };
    std::vector<FixedComponent> out;
    std::vector<State> state(cycles.size(), State::Zero);
    auto visit = [&]() {
        bool has_zero = false;
        bool has_inf = false;
        std::vector<std::size_t> torus;
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            if (state[c] == State::Zero) has_zero = true;
            if (state[c] == State::Infinity) has_inf = true;
            if (state[c] == State::Torus) torus.push_back(c);
        }
        std::array<MonomialCoord, 3> coords;
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            for (int i : cycles[c]) {
                auto& m = coords[static_cast<std::size_t>(i)];
                if (state[c] == State::Zero) m = MonomialCoord::zero();
                if (state[c] == State::Infinity) m = MonomialCoord::infinity();
                if (state[c] == State::Torus) m = MonomialCoord::monomial(coef[static_cast<std::size_t>(i)], 1);
            }
        }
        if (has_zero && has_inf) {
            // Both sides of x0*y0*z0 = x1*y1*z1 vanish.
            FixedComponent comp;
            comp.restriction = "identically satisfied";
            if (torus.empty()) {
                comp.kind = FixedComponent::Kind::Point;
                comp.point = ProjPoint({coords[0].at(CycNum(1)), coords[1].at(CycNum(1)), coords[2].at(CycNum(1))});
            } else if (torus.size() == 1) {
                comp.kind = FixedComponent::Kind::Curve;
                comp.curve = coords;
            } else {
                throw std::logic_error("fixed_locus: unexpected stratum dimension");
            }
            out.push_back(std::move(comp));
            return;
        }
        if (has_zero || has_inf) return;  // exactly one side vanishes: off the surface

        // Inside the torus the equation is x*y*z = 1.
        CycNum k(1);
        for (const auto& m : coords) k *= m.coef;
        const CycNum rhs = k.inverse();
        if (cycles.size() == 1) {
            const int len = static_cast<int>(cycles[0].size());
            for (const auto& t : roots_or_throw(len, rhs)) {
                FixedComponent comp;
                comp.kind = FixedComponent::Kind::Point;
                comp.point = ProjPoint({coords[0].at(t), coords[1].at(t), coords[2].at(t)});
                comp.restriction = "t^" + std::to_string(len) + " = " + rhs.to_string();
                out.push_back(std::move(comp));
            }
            return;
        }
        if (cycles.size() == 2) {
            // Parametrize by the longer cycle; the fixed factor is solved as a monomial in t.
            const std::size_t a = cycles[0].size() >= cycles[1].size() ? 0 : 1;
            const std::size_t b = 1 - a;
            const int len_a = static_cast<int>(cycles[a].size());
            const auto single = static_cast<std::size_t>(cycles[b][0]);
            FixedComponent comp;
            comp.kind = FixedComponent::Kind::Curve;
            comp.curve = coords;
            // k * t^len_a * u = 1 with x_single = coef * u
            comp.curve[single] = MonomialCoord::monomial(coef[single] * rhs, -len_a);
            comp.restriction = "u = (" + rhs.to_string() + ")*t^-" + std::to_string(len_a);
            out.push_back(std::move(comp));
            return;
        }
        throw std::logic_error("fixed_locus: non-identity map with three torus cycles");
    };

    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cycles.size()) {
            visit();
            return;
        }
        for (State s : {State::Zero, State::Infinity, State::Torus}) {
            if (s == State::Torus && !torus_allowed[c]) continue;
            state[c] = s;
            rec(c + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<FixedComponent> common_fixed_locus(const std::vector<SignedMonomialMap>& maps) {
    std::vector<SignedMonomialMap> active;
    for (const auto& m : maps)
        if (!m.is_identity()) active.push_back(m);
    if (active.empty()) return fixed_locus(SignedMonomialMap::identity());

    std::vector<FixedComponent> comps = fixed_locus(active.front());
    for (std::size_t k = 1; k < active.size(); ++k) {
        const auto& h = active[k];
        std::vector<FixedComponent> next;
        for (auto& comp : comps) {
            if (comp.kind == FixedComponent::Kind::Point) {
                if (act(h, comp.point) == comp.point) next.push_back(std::move(comp));
                continue;
            }
            if (comp.kind == FixedComponent::Kind::All) {
                for (auto& c : fixed_locus(h)) next.push_back(std::move(c));
                continue;
            }
            // Curve: coordinate i of h(p(t)) is s_i * p_{perm[i]}(t).
            std::optional<std::vector<CycNum>> candidates;
            bool empty = false;
            for (std::size_t i = 0; i < 3 && !empty; ++i) {
                const MonomialCoord image = scaled(comp.curve[static_cast<std::size_t>(h.perm()[i])], h.scalars()[i]);
                std::vector<CycNum> ts;
                switch (solve_coord(comp.curve[i], image, ts)) {
                    case Match::Always: break;
                    case Match::Never: empty = true; break;
                    case Match::Some:
                        if (!candidates) {
                            candidates = std::move(ts);
                        } else {
                            std::vector<CycNum> kept;
                            for (const auto& t : *candidates)
                                if (std::find(ts.begin(), ts.end(), t) != ts.end()) kept.push_back(t);
                            candidates = std::move(kept);
                        }
                        break;
                }
            }
            if (empty) continue;
            if (!candidates) {
                next.push_back(std::move(comp));
                continue;
            }
            for (const auto& t : *candidates) {
                FixedComponent p;
                p.kind = FixedComponent::Kind::Point;
                p.point = comp.sample(t);
                p.restriction = comp.restriction;
                next.push_back(std::move(p));
            }
        }
        comps = std::move(next);
    }

    // Drop repeated points.
    std::vector<FixedComponent> out;
    std::unordered_set<ProjPoint> seen;
    for (auto& c : comps) {
        if (c.kind == FixedComponent::Kind::Point && !seen.insert(c.point).second) continue;
        out.push_back(std::move(c));
    }
    return out;
}

std::size_t SmallOrbitClassification::total_points() const {
    std::size_t n = 0;
    for (const auto& o : orbits) n += o.points.size();
    return n;
}

SmallOrbitClassification classify_small_orbits(const SurfaceGroup& group, std::size_t bound) {
    SmallOrbitClassification result;
    result.bound = bound;
    std::vector<ProjPoint> candidates;
    for (const auto& h : all_subgroups(group)) {
        // Orbit size |G|/|Stab| < bound iff |Stab| * bound > |G|.
        if (h.size() * bound <= group.order()) continue;
        ++result.subgroups_examined;
        std::vector<SignedMonomialMap> maps;
        for (std::size_t i : h) maps.push_back(group[i]);
        for (auto& comp : common_fixed_locus(maps)) {
            if (comp.kind == FixedComponent::Kind::Point) {
                candidates.push_back(comp.point);
            } else {
                result.positive_dimensional.emplace_back(h.size(), std::move(comp));
            }
        }
    }

    std::unordered_set<ProjPoint> assigned;
    for (const auto& p : candidates) {
        if (assigned.count(p)) continue;
        auto orb = orbit(p, group);
        for (const auto& q : orb) assigned.insert(q);
        if (orb.size() >= bound) continue;
        SmallOrbit o;
        o.stabilizer_order = group.order() / orb.size();
        o.points = std::move(orb);
        result.orbits.push_back(std::move(o));
    }
    std::stable_sort(result.orbits.begin(), result.orbits.end(),
                     [](const SmallOrbit& a, const SmallOrbit& b) { return a.points.size() > b.points.size(); });
    return result;
}

std::vector<LabeledPoint> reference_small_orbit_points() {
    const CycNum one(1);
    const CycNum w = CycNum::zeta(3);
    std::vector<LabeledPoint> out;
    int i = 1;
    for (const CycNum& c : {one, w, w * w}) {
        const std::string k = "R" + std::to_string(i++);
        out.push_back({k + "1", ProjPoint::affine({c, c, c})});
        out.push_back({k + "2", ProjPoint::affine({c, -c, -c})});
        out.push_back({k + "3", ProjPoint::affine({-c, -c, c})});
        out.push_back({k + "4", ProjPoint::affine({-c, c, -c})});
    }
    const std::vector<CycNum> zero{CycNum(1), CycNum(0)};
    const std::vector<CycNum> inf{CycNum(0), CycNum(1)};
    out.push_back({"P1", ProjPoint({inf, zero, inf})});
    out.push_back({"P2", ProjPoint({zero, inf, inf})});
    out.push_back({"P3", ProjPoint({inf, inf, zero})});
    out.push_back({"Q1", ProjPoint({zero, zero, inf})});
    out.push_back({"Q2", ProjPoint({zero, inf, zero})});
    out.push_back({"Q3", ProjPoint({inf, zero, zero})});
    return out;
}

std::string reference_label(const ProjPoint& p) {
    for (const auto& lp : reference_small_orbit_points())
        if (lp.point == p) return lp.label;
    return "";
}

}  // namespace vgc
