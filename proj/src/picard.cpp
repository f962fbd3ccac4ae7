#include "vgc/picard.hpp"

#include <numeric>
#include <sstream>

namespace vgc {

namespace {

const char* const kFactor[3] = {"x", "y", "z"};

// Value of a factor pinned by X_{f,j} = 0: j = 0 is infinity, j = 1 is 0.
std::vector<CycNum> pinned(int j) {
    if (j == 0) return {CycNum(0), CycNum(1)};
    return {CycNum(1), CycNum(0)};
}

struct BlownPoint {
    std::vector<CycNum> x, y;
    Eigen::Index exceptional;
};

// ([1,0],[0,1]) under e and ([0,1],[1,0]) under e'.
std::vector<BlownPoint> blown_points() {
    return {{pinned(1), pinned(0), 2}, {pinned(0), pinned(1), 3}};
}

long long content(const IntVector& v) {
    long long g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, v(i));
    return g;
}

IntVector normalized(IntVector v) {
    const long long g = content(v);
    if (g > 1) v /= g;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) == 0) continue;
        if (v(i) < 0) v = -v;
        break;
    }
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// CurveLocus

CurveLocus CurveLocus::boundary(int a, int ja, int b, int jb) {
    if (a < 0 || a > 2 || b < 0 || b > 2 || a == b || ja < 0 || ja > 1 || jb < 0 || jb > 1) {
        throw std::invalid_argument("CurveLocus::boundary: bad coordinate pair");
    }
    // One side of x0*y0*z0 = x1*y1*z1 must vanish through each condition, otherwise a third one is forced.
    if (ja == jb) throw std::invalid_argument("CurveLocus::boundary: the conditions cut out a point, not a curve");
    CurveLocus c;
    c.kind = Kind::Boundary;
    c.vanishing = {std::pair{a, ja}, std::pair{b, jb}};
    if (c.vanishing[1] < c.vanishing[0]) std::swap(c.vanishing[0], c.vanishing[1]);
    return c;
}

CurveLocus CurveLocus::level(int factor, CycNum value) {
    if (factor < 0 || factor > 2) throw std::invalid_argument("CurveLocus::level: bad factor");
    if (value.is_zero()) throw std::invalid_argument("CurveLocus::level: value must be nonzero");
    CurveLocus c;
    c.kind = Kind::Level;
    c.factor = factor;
    c.value = std::move(value);
    return c;
}

bool CurveLocus::contains(const ProjPoint& p) const {
    if (p.num_factors() != 3) throw DimensionMismatch("curve loci live in (P^1)^3");
    if (!on_surface(p)) return false;
    if (kind == Kind::Boundary) {
        for (const auto& [f, j] : vanishing)
            if (!p.factors()[static_cast<std::size_t>(f)][static_cast<std::size_t>(j)].is_zero()) return false;
        return true;
    }
    const auto& h = p.factors()[static_cast<std::size_t>(factor)];
    return h[1] == value * h[0];
}

std::vector<ProjPoint> CurveLocus::samples() const {
    std::vector<ProjPoint> out;
    for (int t : {2, 3}) {
        std::vector<std::vector<CycNum>> f(3);
        if (kind == Kind::Boundary) {
            int free = 3 - vanishing[0].first - vanishing[1].first;
            for (const auto& [k, j] : vanishing) f[static_cast<std::size_t>(k)] = pinned(j);
            f[static_cast<std::size_t>(free)] = {CycNum(1), CycNum(t)};
        } else {
            const auto a = static_cast<std::size_t>(factor);
            const auto b = static_cast<std::size_t>((factor + 1) % 3);
            const auto c = static_cast<std::size_t>((factor + 2) % 3);
            f[a] = {CycNum(1), value};
            f[b] = {CycNum(1), CycNum(t)};
            f[c] = {CycNum(1), (value * CycNum(t)).inverse()};
        }
        out.emplace_back(std::move(f));
    }
    return out;
}

std::string CurveLocus::to_string() const {
    if (kind == Kind::Level) return std::string(kFactor[factor]) + " = " + value.to_string();
    std::ostringstream os;
    os << kFactor[vanishing[0].first] << vanishing[0].second << " = " << kFactor[vanishing[1].first] << vanishing[1].second
       << " = 0";
    return os.str();
}

bool operator==(const CurveLocus& a, const CurveLocus& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == CurveLocus::Kind::Boundary) return a.vanishing == b.vanishing;
    return a.factor == b.factor && a.value == b.value;
}

// ---------------------------------------------------------------------------
// PicLattice

PicLattice::PicLattice(IntMatrix gram, std::vector<std::string> basis, IntVector canonical)
    : gram_(std::move(gram)), basis_(std::move(basis)), canonical_(std::move(canonical)) {
    if (gram_.rows() != gram_.cols() || gram_ != gram_.transpose()) throw std::invalid_argument("PicLattice: gram must be symmetric");
    if (static_cast<Eigen::Index>(basis_.size()) != gram_.rows() || canonical_.size() != gram_.rows()) {
        throw std::invalid_argument("PicLattice: dimension mismatch");
    }
}

PicLattice PicLattice::dp6() {
    IntMatrix g(4, 4);
    g << 0, 1, 0, 0,
         1, 0, 0, 0,
         0, 0, -1, 0,
         0, 0, 0, -1;
    IntVector k(4);
    k << -2, -2, 1, 1;
    return PicLattice(g, {"f1", "f2", "e", "e'"}, k);
}

long long PicLattice::dot(const IntVector& a, const IntVector& b) const {
    if (a.size() != rank() || b.size() != rank()) throw std::invalid_argument("PicLattice::dot: dimension mismatch");
    return a.dot(gram_ * b);
}

IntVector PicLattice::unit(Eigen::Index i) const {
    return IntVector::Unit(rank(), i);
}

std::string PicLattice::format(const IntVector& v) const {
    std::ostringstream os;
    bool first = true;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        long long c = v(i);
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        const long long a = c < 0 ? -c : c;
        if (a != 1) os << a;
        os << basis_[static_cast<std::size_t>(i)];
        first = false;
    }
    return first ? "0" : os.str();
}

DivClass PicLattice::class_of(const CurveLocus& locus) const {
    if (rank() != 4) throw std::logic_error("class_of: only defined on the degree-6 lattice");
    DivClass out;
    out.locus = locus;
    out.label = locus.to_string();
    IntVector v = IntVector::Zero(4);

    // Conditions on the image in P^1 x P^1: pinned x and/or y coordinates.
    std::optional<std::vector<CycNum>> x, y;
    CycNum level_xy(0);
    bool diagonal = false;  // z = c, i.e. x*y = 1/c
    if (locus.kind == CurveLocus::Kind::Boundary) {
        for (const auto& [f, j] : locus.vanishing) {
            if (f == 0) x = pinned(j);
            if (f == 1) y = pinned(j);
        }
    } else if (locus.factor == 0) {
        x = ProjPoint({{CycNum(1), locus.value}}).factors()[0];
    } else if (locus.factor == 1) {
        y = ProjPoint({{CycNum(1), locus.value}}).factors()[0];
    } else {
        diagonal = true;
        level_xy = locus.value.inverse();
    }

    if (x && y) {
        // Contracted to a point: must be one of the blown points.
        for (const auto& b : blown_points()) {
            if (*x == b.x && *y == b.y) {
                v(b.exceptional) = 1;
                out.coords = v;
                return out;
            }
        }
        throw std::invalid_argument("class_of: " + locus.to_string() + " contracts to a point that is not blown up");
    }

    auto on_image = [&](const BlownPoint& b) {
        if (x) return *x == b.x;
        if (y) return *y == b.y;
        // x1*y1 = c * x0*y0
        return b.x[1] * b.y[1] == level_xy * b.x[0] * b.y[0];
    };
    if (x) v(0) = 1;
    if (y) v(1) = 1;
    if (diagonal) v(0) = v(1) = 1;
    for (const auto& b : blown_points())
        if (on_image(b)) v(b.exceptional) -= 1;
    out.coords = v;
    return out;
}

// ---------------------------------------------------------------------------

Dp6 build_dp6() {
    PicLattice lat = PicLattice::dp6();
    // The components of x0*y0*z0 = 0: a factor with X_0 = 0 paired with another factor with X_1 = 0.
    std::vector<CurveLocus> loci;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) loci.push_back(CurveLocus::boundary(a, 0, b, 1));

    std::vector<DivClass> classes;
    for (const auto& l : loci) classes.push_back(lat.class_of(l));

    // Walk the intersection graph from x0 = y1 = 0 to put them in cycle order.
    std::vector<DivClass> hexagon{classes[0]};
    std::vector<bool> used(classes.size(), false);
    used[0] = true;
    while (hexagon.size() < classes.size()) {
        bool found = false;
        for (std::size_t j = 0; j < classes.size() && !found; ++j) {
            if (used[j] || lat.dot(hexagon.back().coords, classes[j].coords) != 1) continue;
            used[j] = true;
            hexagon.push_back(classes[j]);
            found = true;
        }
        if (!found) throw std::logic_error("build_dp6: boundary curves do not form a chain");
    }

    IntVector sum = IntVector::Zero(4);
    for (std::size_t i = 0; i < hexagon.size(); ++i) {
        hexagon[i].label = "C" + std::to_string(i + 1);
        sum += hexagon[i].coords;
        for (std::size_t j = 0; j < hexagon.size(); ++j) {
            const std::size_t gap = (j + 6 - i) % 6;
            const long long expected = gap == 0 ? -1 : (gap == 1 || gap == 5) ? 1 : 0;
            if (lat.dot(hexagon[i].coords, hexagon[j].coords) != expected) {
                throw std::logic_error("build_dp6: intersection pattern is not a hexagon");
            }
        }
    }
    if (sum != lat.anticanonical()) throw std::logic_error("build_dp6: boundary does not sum to -K");
    return {lat, hexagon};
}

std::size_t LatticeMatrix::hash() const {
    std::size_t h = static_cast<std::size_t>(m_.rows());
    for (Eigen::Index i = 0; i < m_.size(); ++i) h = h * 1000003u ^ static_cast<std::size_t>(m_.data()[i]);
    return h;
}

LatticeMatrix identity_like(const LatticeMatrix& a) {
    return LatticeMatrix(IntMatrix::Identity(a.matrix().rows(), a.matrix().cols()));
}

LatticeMatrix inverse(const LatticeMatrix& a) {
    const LatticeMatrix id = identity_like(a);
    LatticeMatrix prev = id;
    LatticeMatrix cur = a;
    for (int k = 1; k <= 1000; ++k) {
        if (cur == id) return prev;
        prev = cur;
        cur = cur * a;
    }
    throw std::domain_error("LatticeMatrix inverse: element of infinite or very large order");
}

std::map<std::string, LatticeMatrix> LatticeAction::as_map() const {
    std::map<std::string, LatticeMatrix> out;
    for (std::size_t i = 0; i < labels.size(); ++i) out.emplace(labels[i], matrices[i]);
    return out;
}

LatticeAction induced_action(const Dp6& dp6, const std::vector<std::string>& labels, const std::vector<SignedMonomialMap>& gens) {
    if (labels.size() != gens.size()) throw std::invalid_argument("induced_action: labels and generators differ in length");
    if (!surface_invariance(gens).invariant) throw std::invalid_argument("induced_action: a generator does not preserve the surface");
    const auto& hex = dp6.hexagon;
    const auto& lat = dp6.lattice;
    const Eigen::Index n = lat.rank();

    // Rows of C1..C4 are a Z-basis (determinant +-1 is checked below).
    IntMatrix basis(n, n);
    for (Eigen::Index i = 0; i < n; ++i) basis.row(i) = hex[static_cast<std::size_t>(i)].coords.transpose();
    const Eigen::MatrixXd basis_d = basis.cast<double>();
    const double det = basis_d.determinant();
    if (std::abs(std::abs(det) - 1.0) > 1e-9) throw std::logic_error("induced_action: C1..C4 are not a lattice basis");
    const IntMatrix basis_inv = basis_d.inverse().array().round().cast<long long>().matrix();
    if (basis * basis_inv != IntMatrix::Identity(n, n)) throw std::logic_error("induced_action: inverse basis is not integral");

    LatticeAction action;
    action.labels = labels;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<int> perm(hex.size(), -1);
        for (std::size_t i = 0; i < hex.size(); ++i) {
            std::vector<ProjPoint> images;
            for (const auto& p : hex[i].locus->samples()) images.push_back(act(gens[k], p));
            for (std::size_t j = 0; j < hex.size(); ++j) {
                bool all = true;
                for (const auto& q : images) all = all && hex[j].locus->contains(q);
                if (all) perm[i] = static_cast<int>(j);
            }
            if (perm[i] < 0) {
                throw HexagonNotPreserved("generator " + labels[k] + " sends " + hex[i].label + " off the boundary hexagon");
            }
        }
        IntMatrix images(n, n);
        for (Eigen::Index i = 0; i < n; ++i) images.row(i) = hex[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].coords.transpose();
        IntMatrix m = basis_inv * images;
        for (std::size_t i = 0; i < hex.size(); ++i) {
            if (IntVector(hex[i].coords.transpose() * m) != hex[static_cast<std::size_t>(perm[i])].coords) {
                throw HexagonNotPreserved("generator " + labels[k] + " does not extend linearly from the hexagon");
            }
        }
        if (m * lat.gram() * m.transpose() != lat.gram()) throw HexagonNotPreserved("generator " + labels[k] + " breaks the intersection form");
        action.matrices.emplace_back(std::move(m));
        action.hexagon_perms.push_back(std::move(perm));
    }
    return action;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    const Eigen::Index n = a.cols();
    IntMatrix work = a;
    IntMatrix u = IntMatrix::Identity(n, n);
    Eigen::Index pivot_col = 0;
    for (Eigen::Index row = 0; row < work.rows() && pivot_col < n; ++row) {
        // Euclid on the columns pivot_col.. of this row until at most one is nonzero.
        while (true) {
            Eigen::Index best = -1;
            for (Eigen::Index c = pivot_col; c < n; ++c) {
                if (work(row, c) != 0 && (best < 0 || std::llabs(work(row, c)) < std::llabs(work(row, best)))) best = c;
            }
            if (best < 0) break;
            work.col(best).swap(work.col(pivot_col));
            u.col(best).swap(u.col(pivot_col));
            bool done = true;
            for (Eigen::Index c = pivot_col + 1; c < n; ++c) {
                const long long q = work(row, c) / work(row, pivot_col);
                if (q != 0) {
                    work.col(c) -= q * work.col(pivot_col);
                    u.col(c) -= q * u.col(pivot_col);
                }
                if (work(row, c) != 0) done = false;
            }
            if (done) {
                ++pivot_col;
                break;
            }
        }
    }
    return u.rightCols(n - pivot_col);
}

std::vector<IntVector> invariant_sublattice(const LatticeAction& action) {
    if (action.matrices.empty()) throw std::invalid_argument("invariant_sublattice: empty action");
    const Eigen::Index n = action.matrices.front().matrix().rows();
    // c * M = c for all M  <=>  (M - I)^T c^T = 0.
    IntMatrix stacked(n * static_cast<Eigen::Index>(action.matrices.size()), n);
    for (std::size_t k = 0; k < action.matrices.size(); ++k) {
        stacked.middleRows(static_cast<Eigen::Index>(k) * n, n) = (action.matrices[k].matrix() - IntMatrix::Identity(n, n)).transpose();
    }
    const IntMatrix ker = integer_kernel(stacked);
    std::vector<IntVector> out;
    for (Eigen::Index c = 0; c < ker.cols(); ++c) out.push_back(normalized(ker.col(c)));
    return out;
}

std::vector<DivClass> fiber_classes(const PicLattice& lattice) {
    std::vector<DivClass> out;
    for (int i = 0; i < 3; ++i) {
        DivClass c = lattice.class_of(CurveLocus::level(0, CycNum::zeta(3, i).simplified()));
        c.label = "E" + std::to_string(i);
        out.push_back(std::move(c));
    }
    return out;
}

bool incidence(const ProjPoint& p, const DivClass& c) {
    if (!c.locus) throw UntaggedClass("incidence: class " + c.label + " has no defining locus");
    return c.locus->contains(p);
}

}  // namespace vgc
