#include "vgc/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace vgc {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a / b over Q; b must be nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (a.size() < b.size()) return {Poly{}, a};
    Poly q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0) continue;
        Rational f = a[i] / lead;
        std::size_t shift = i - (b.size() - 1);
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

std::size_t hash_mpz(mpz_srcptr z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x9e3779b97f4a7c15ULL;
    const std::size_t limbs = mpz_size(z);
    for (std::size_t i = 0; i < limbs; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int i = 1; i <= n; ++i) {
        if (n % i == 0) d.push_back(i);
    }
    return d;
}

// Solve A x = b exactly (A given column-major as a list of columns); nullopt if inconsistent.
std::optional<Poly> solve_columns(const std::vector<Poly>& cols, const Poly& rhs) {
    const std::size_t rows = rhs.size();
    const std::size_t ncols = cols.size();
    std::vector<Poly> m(rows, Poly(ncols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < ncols; ++c) m[r][c] = r < cols[c].size() ? cols[c][r] : Rational(0);
        m[r][ncols] = rhs[r];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][c];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = c; k <= ncols; ++k) m[r][k] -= f * m[row][k];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r) {
        if (m[r][ncols] != 0) return std::nullopt;
    }
    Poly x(ncols);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][ncols];
    return x;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: conductor must be positive");
    static std::mutex mutex;
    static std::map<int, std::vector<Integer>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    Poly num(static_cast<std::size_t>(n) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (int d : divisors(n)) {
        if (d == n) continue;
        const auto& phi_d = cyclotomic_polynomial(d);
        Poly den(phi_d.begin(), phi_d.end());
        num = divmod(num, den).first;
    }
    std::vector<Integer> result;
    for (const auto& q : num) result.push_back(q.get_num());
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(result)).first->second;
}

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: argument must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

CycNum::CycNum(int conductor, std::vector<Rational> coeffs) : n_(conductor), c_(std::move(coeffs)) {
    if (conductor < 1) throw std::invalid_argument("CycNum: conductor must be positive");
    for (auto& q : c_) q.canonicalize();
    reduce();
}

CycNum CycNum::zeta(int n, long power) {
    if (n < 1) throw std::invalid_argument("CycNum::zeta: order must be positive");
    long p = power % n;
    if (p < 0) p += n;
    std::vector<Rational> c(static_cast<std::size_t>(p) + 1);
    c[static_cast<std::size_t>(p)] = 1;
    return CycNum(n, std::move(c));
}

void CycNum::reduce() {
    const auto& phi = cyclotomic_polynomial(n_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = c_.size(); i-- > deg;) {
        if (c_[i] == 0) continue;
        Rational f = c_[i];
        const std::size_t shift = i - deg;
        for (std::size_t j = 0; j <= deg; ++j) c_[shift + j] -= f * Rational(phi[j]);
    }
    c_.resize(deg);
}

bool CycNum::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool CycNum::is_one() const {
    return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

bool CycNum::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycNum::rational_value: element " + to_string() + " is not rational");
    return c_[0];
}

CycNum CycNum::promoted(int m) const {
    if (m < 1 || m % n_ != 0) {
        throw std::invalid_argument("CycNum::promoted: " + std::to_string(m) + " is not a multiple of " + std::to_string(n_));
    }
    if (m == n_) return *this;
    const std::size_t step = static_cast<std::size_t>(m / n_);
    std::vector<Rational> c(c_.empty() ? 1 : (c_.size() - 1) * step + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * step] = c_[i];
    return CycNum(m, std::move(c));
}

std::optional<CycNum> CycNum::projected(int d) const {
    if (d < 1 || n_ % d != 0) {
        throw std::invalid_argument("CycNum::projected: " + std::to_string(d) + " does not divide " + std::to_string(n_));
    }
    if (d == n_) return *this;
    const int phi_d = euler_phi(d);
    std::vector<Poly> cols;
    for (int i = 0; i < phi_d; ++i) cols.push_back(CycNum::zeta(d, i).promoted(n_).coeffs());
    auto sol = solve_columns(cols, c_);
    if (!sol) return std::nullopt;
    return CycNum(d, std::move(*sol));
}

CycNum CycNum::simplified() const {
    if (is_rational()) return CycNum(c_[0]);
    if (euler_phi(n_) == n_ - 1) return *this;  // prime conductor: the only proper subfield is Q
    for (int d : divisors(n_)) {
        if (auto p = projected(d)) return *p;
    }
    return *this;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (n_ <= 2) return CycNum(n_, {1 / c_[0]});
    // Extended Euclid: find s with s * a = 1 mod Phi_n.
    const auto& phi = cyclotomic_polynomial(n_);
    Poly r0(phi.begin(), phi.end());
    Poly r1 = c_;
    trim(r1);
    Poly s0;
    Poly s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is now a nonzero constant.
    Rational inv = 1 / r1[0];
    for (auto& v : s1) v *= inv;
    return CycNum(n_, std::move(s1));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum result = CycNum(1).promoted(n_);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (o.n_ != n_) {
        const int m = std::lcm(n_, o.n_);
        *this = promoted(m);
        return *this += o.promoted(m);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    if (o.n_ != n_) {
        const int m = std::lcm(n_, o.n_);
        *this = promoted(m);
        return *this -= o.promoted(m);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    if (o.n_ != n_) {
        const int m = std::lcm(n_, o.n_);
        *this = promoted(m);
        return *this *= o.promoted(m);
    }
    c_ = mul(c_, o.c_);
    if (c_.empty()) c_.resize(1);
    reduce();
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) {
    return *this *= o.inverse();
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    const int m = std::lcm(a.n_, b.n_);
    return a.promoted(m).c_ == b.promoted(m).c_;
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& q = c_[i];
        if (q == 0) continue;
        Rational mag = abs(q);
        if (first) {
            if (q < 0) os << "-";
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "z" << n_;
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

std::size_t CycNum::hash() const {
    if (is_rational()) return hash_mpz(c_[0].get_num_mpz_t()) * 31 + hash_mpz(c_[0].get_den_mpz_t());
    const bool minimal = euler_phi(n_) == n_ - 1;
    const CycNum s = minimal ? *this : simplified();
    if (s.n_ != n_) return s.hash();
    std::size_t h = std::hash<int>{}(n_);
    for (const auto& q : c_) {
        h ^= hash_mpz(q.get_num_mpz_t()) + (h << 6) + (h >> 2);
        h ^= hash_mpz(q.get_den_mpz_t()) + (h << 6) + (h >> 2);
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) {
    return os << a.to_string();
}

int common_conductor(const std::vector<CycNum>& values) {
    int m = 1;
    for (const auto& v : values) m = std::lcm(m, v.conductor());
    return m;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

std::optional<RootOfUnityForm> as_rational_times_root_of_unity(const CycNum& c) {
    const int n = c.conductor();
    const int order = n % 2 == 0 ? n : 2 * n;
    const CycNum lifted = c.promoted(order);
    for (int e = 0; e < order; ++e) {
        CycNum t = lifted * CycNum::zeta(order, -e);
        if (t.is_rational()) return RootOfUnityForm{t.rational_value(), order, e};
    }
    return std::nullopt;
}

std::vector<CycNum> binomial_roots(int k, const CycNum& c) {
    if (k < 1) throw std::invalid_argument("binomial_roots: exponent must be positive");
    if (c.is_zero()) throw UnsupportedRadicand("unsupported radicand: 0");
    auto form = as_rational_times_root_of_unity(c);
    if (!form) throw UnsupportedRadicand("unsupported radicand: " + c.to_string() + " is not a rational times a root of unity");

    // c = |q| * zeta_M^e2 with M = 2N.
    const long big = 2L * form->order;
    long e2 = 2 * form->exponent;
    Rational mag = form->scale;
    if (mag < 0) {
        mag = -mag;
        e2 += form->order;
    }

    Integer num_root, den_root;
    const bool num_exact = mpz_root(num_root.get_mpz_t(), mag.get_num_mpz_t(), static_cast<unsigned long>(k)) != 0;
    const bool den_exact = mpz_root(den_root.get_mpz_t(), mag.get_den_mpz_t(), static_cast<unsigned long>(k)) != 0;
    if (!num_exact || !den_exact) return {};
    const Rational scale(num_root, den_root);

    const long order = big * k;
    std::vector<CycNum> roots;
    int conductor = c.conductor();
    for (int i = 0; i < k; ++i) {
        const long f = e2 + big * i;
        const long g = std::gcd(f, order);
        CycNum root = (CycNum::zeta(static_cast<int>(order / g), f / g) * CycNum(scale)).simplified();
        conductor = std::lcm(conductor, root.conductor());
        roots.push_back(std::move(root));
    }
    for (auto& r : roots) r = r.promoted(conductor);
    return roots;
}

}  // namespace vgc
