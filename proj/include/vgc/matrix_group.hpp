#pragma once

#include "vgc/cyclotomic.hpp"
#include "vgc/group.hpp"

#include <Eigen/Core>
#include <Eigen/LU>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace vgc {

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

/// Invertible 3x3 matrix, optionally taken modulo scalars.
///
/// Projective elements are stored with the first nonzero entry (row-major)
/// equal to 1, so structural equality is equality in PGL(3). Elements act on
/// row vectors from the right: [X] -> [X] * M, hence (g * h) = M_g * M_h.
template <typename Scalar>
class MatrixElement {
public:
    using Matrix = Matrix3<Scalar>;

    MatrixElement() : m_(Matrix::Identity()), projective_(false) {}
    MatrixElement(Matrix m, bool projective) : m_(std::move(m)), projective_(projective) {
        if (is_zero(m_.determinant())) throw std::invalid_argument("MatrixElement: singular matrix");
        if (projective_) normalize();
    }

    static MatrixElement identity(bool projective) { return MatrixElement(Matrix::Identity(), projective); }

    const Matrix& matrix() const { return m_; }
    bool projective() const { return projective_; }
    const Scalar& operator()(int r, int c) const { return m_(r, c); }

    MatrixElement as_projective() const { return MatrixElement(m_, true); }

    friend MatrixElement operator*(const MatrixElement& a, const MatrixElement& b) {
        if (a.projective_ != b.projective_) throw std::invalid_argument("MatrixElement: mixing GL and PGL elements");
        Matrix p = a.m_ * b.m_;
        return MatrixElement(std::move(p), a.projective_, Trusted{});
    }

    friend bool operator==(const MatrixElement& a, const MatrixElement& b) {
        return a.projective_ == b.projective_ && a.m_ == b.m_;
    }
    friend bool operator!=(const MatrixElement& a, const MatrixElement& b) { return !(a == b); }

    friend MatrixElement inverse(const MatrixElement& a) {
        return MatrixElement(a.m_.inverse().eval(), a.projective_, Trusted{});
    }
    friend MatrixElement identity_like(const MatrixElement& a) { return identity(a.projective_); }

    std::size_t hash() const {
        std::size_t h = projective_ ? 0x51ed27ULL : 0x2545f49ULL;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) h ^= std::hash<Scalar>{}(m_(r, c)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (int r = 0; r < 3; ++r) {
            if (r) os << "; ";
            for (int c = 0; c < 3; ++c) {
                if (c) os << ", ";
                os << m_(r, c);
            }
        }
        os << ']';
        return os.str();
    }

private:
    struct Trusted {};
    // Products and inverses of invertible matrices stay invertible.
    MatrixElement(Matrix m, bool projective, Trusted) : m_(std::move(m)), projective_(projective) {
        if (projective_) normalize();
    }

    static bool is_zero(const Scalar& s) {
        if constexpr (std::is_same_v<Scalar, CycNum>) {
            return s.is_zero();
        } else {
            return s == Scalar(0);
        }
    }

    void normalize() {
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                if (is_zero(m_(r, c))) continue;
                if (m_(r, c) == Scalar(1)) return;
                const Scalar inv = Scalar(1) / m_(r, c);
                m_ = (m_ * inv).eval();
                return;
            }
        }
    }

    Matrix m_;
    bool projective_;
};

using GroupElement = MatrixElement<CycNum>;
using MatrixGroup = GroupTable<GroupElement>;

/// Build a matrix element from row-major entries.
GroupElement make_element(const std::vector<CycNum>& row_major, bool projective);

/// True iff g -> t g t^-1 sends each source generator to the corresponding
/// target element of the table (compared in PGL(3)).
bool conjugation_transport(const MatrixGroup& table, const GroupElement& t, const std::vector<GroupElement>& sources,
                           const std::vector<GroupElement>& targets);

// ---------------------------------------------------------------------------
// The two S4 models and the order-216 group.

/// Generators sigma, tau, lambda1, lambda2 of S4 as signed permutation matrices in GL(3).
std::map<std::string, GroupElement> s4_rho_generators();
/// A, B, C1, C2, D1, D2 in PGL(3) over Q(omega).
std::map<std::string, GroupElement> g216_generators();

/// Defining relations of S4 on the symbols s, t, l1, l2.
std::vector<Relation> s4_relations();

}  // namespace vgc

template <typename Scalar>
struct std::hash<vgc::MatrixElement<Scalar>> {
    std::size_t operator()(const vgc::MatrixElement<Scalar>& m) const noexcept { return m.hash(); }
};
