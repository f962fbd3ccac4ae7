#include "vgc/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vgc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("Permutation: images do not form a bijection");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) images[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    }
    return Permutation(std::move(images));
}

bool Permutation::is_even() const {
    std::vector<char> seen(images_.size(), 0);
    int transpositions = 0;
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || images_[static_cast<std::size_t>(i)] == i) continue;
        os << '(';
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            if (j != i) os << ' ';
            os << j;
        }
        os << ')';
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<int> images(p.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = q(p.images_[i]);
    return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> images(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) images[static_cast<std::size_t>(p(i))] = i;
    return Permutation(std::move(images));
}

PermGroup symmetric_group(int degree) {
    if (degree < 2) return closure(std::vector{Permutation::identity(std::max(degree, 1))});
    std::vector<int> all(static_cast<std::size_t>(degree));
    std::iota(all.begin(), all.end(), 0);
    return closure(std::vector{Permutation::from_cycles(degree, {{0, 1}}), Permutation::from_cycles(degree, {all})}, kDefaultClosureCap,
                   {"s", "c"});
}

PermGroup alternating_group(int degree) {
    if (degree < 3) return closure(std::vector{Permutation::identity(std::max(degree, 1))});
    std::vector<Permutation> gens;
    std::vector<std::string> labels;
    // The 3-cycles (0 1 k) generate A_n.
    for (int k = 2; k < degree; ++k) {
        gens.push_back(Permutation::from_cycles(degree, {{0, 1, k}}));
        labels.push_back("c" + std::to_string(k));
    }
    return closure(gens, kDefaultClosureCap, labels);
}

PermGroup cyclic_perm_group(int degree) {
    std::vector<int> all(static_cast<std::size_t>(degree));
    std::iota(all.begin(), all.end(), 0);
    return closure(std::vector{Permutation::from_cycles(degree, {all})}, kDefaultClosureCap, {"c"});
}

}  // namespace vgc
