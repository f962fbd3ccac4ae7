#pragma once

#include "vgc/group.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace vgc {

/// Permutation of {0, ..., n-1}. The product p * q applies p first, then q.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int degree);
    /// Built from cycles, e.g. {{0, 1, 2}} for the 3-cycle 0 -> 1 -> 2 -> 0.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }
    bool is_even() const;
    std::string to_string() const;

    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend bool operator==(const Permutation& p, const Permutation& q) { return p.images_ == q.images_; }

private:
    std::vector<int> images_;
};

Permutation inverse(const Permutation& p);
inline Permutation identity_like(const Permutation& p) { return Permutation::identity(p.degree()); }

using PermGroup = GroupTable<Permutation>;

PermGroup symmetric_group(int degree);
PermGroup alternating_group(int degree);
PermGroup cyclic_perm_group(int degree);

}  // namespace vgc

template <>
struct std::hash<vgc::Permutation> {
    std::size_t operator()(const vgc::Permutation& p) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
        return h;
    }
};
