#pragma once

// Finite groups given by generators. Everything here is generic over the
// element type E, which must provide
//   E operator*(const E&, const E&)   (group product, right-action order)
//   bool operator==(const E&, const E&)
//   std::hash<E>
//   E identity_like(const E&)         (found by ADL)

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vgc {

inline constexpr std::size_t kDefaultClosureCap = 10000;

class ClosureCapExceeded : public std::runtime_error {
public:
    explicit ClosureCapExceeded(std::size_t cap)
        : std::runtime_error("group not closed within cap " + std::to_string(cap)), cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

class NotInGroup : public std::invalid_argument {
public:
    explicit NotInGroup(const std::string& what) : std::invalid_argument(what) {}
};

template <typename E>
class GroupTable;

template <typename E>
GroupTable<E> closure(const std::vector<E>& gens, std::size_t cap = kDefaultClosureCap,
                      std::vector<std::string> labels = {});

/// Sorted element indices into a GroupTable.
using Subgroup = std::vector<std::size_t>;

/// A word in the generators: generator index per letter.
using Word = std::vector<int>;

/// Closed finite group with deterministic element order.
///
/// Elements are listed in BFS order of their shortest generator word, with
/// ties broken lexicographically on generator index; index 0 is the identity.
template <typename E>
class GroupTable {
public:
    GroupTable() = default;

    std::size_t order() const { return elements_.size(); }
    const E& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<E>& elements() const { return elements_; }
    const std::vector<std::size_t>& generators() const { return generators_; }
    const std::vector<std::string>& generator_labels() const { return labels_; }
    const Word& word(std::size_t i) const { return words_[i]; }
    std::string word_string(std::size_t i) const {
        if (words_[i].empty()) return "1";
        std::string s;
        for (int g : words_[i]) {
            if (!s.empty()) s += ' ';
            s += labels_[static_cast<std::size_t>(g)];
        }
        return s;
    }

    std::optional<std::size_t> index_of(const E& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const E& e) const { return index_.count(e) != 0; }
    std::size_t require_index(const E& e) const {
        auto i = index_of(e);
        if (!i) throw NotInGroup("element is not in the group table");
        return *i;
    }

    std::size_t multiply(std::size_t a, std::size_t b) const { return require_index(elements_[a] * elements_[b]); }

    std::size_t inverse(std::size_t a) const {
        // a^(k-1) where k is the order of a.
        std::size_t prev = 0;
        std::size_t cur = a;
        while (cur != 0) {
            prev = cur;
            cur = multiply(cur, a);
        }
        return a == 0 ? 0 : prev;
    }

    std::size_t element_order(std::size_t a) const {
        std::size_t k = 1;
        for (std::size_t cur = a; cur != 0; cur = multiply(cur, a)) ++k;
        return a == 0 ? 1 : k;
    }

    template <typename F>
    friend GroupTable<F> closure(const std::vector<F>& gens, std::size_t cap, std::vector<std::string> labels);

private:
    std::vector<E> elements_;
    std::vector<Word> words_;
    std::vector<std::size_t> generators_;
    std::vector<std::string> labels_;
    std::unordered_map<E, std::size_t> index_;
};

/// Closure of the generators by breadth-first multiplication.
template <typename E>
GroupTable<E> closure(const std::vector<E>& gens, std::size_t cap, std::vector<std::string> labels) {
    if (gens.empty()) throw std::invalid_argument("closure: at least one generator is required");
    if (labels.empty()) {
        for (std::size_t i = 0; i < gens.size(); ++i) labels.push_back("g" + std::to_string(i + 1));
    }
    if (labels.size() != gens.size()) throw std::invalid_argument("closure: one label per generator");

    GroupTable<E> t;
    t.labels_ = std::move(labels);
    E id = identity_like(gens.front());
    t.index_.emplace(id, 0);
    t.elements_.push_back(std::move(id));
    t.words_.emplace_back();
    for (std::size_t head = 0; head < t.elements_.size(); ++head) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            E next = t.elements_[head] * gens[g];
            if (t.index_.count(next)) continue;
            if (t.elements_.size() >= cap) throw ClosureCapExceeded(cap);
            Word w = t.words_[head];
            w.push_back(static_cast<int>(g));
            t.index_.emplace(next, t.elements_.size());
            t.elements_.push_back(std::move(next));
            t.words_.push_back(std::move(w));
        }
    }
    for (const auto& g : gens) t.generators_.push_back(t.index_.at(g));
    return t;
}

/// Subgroup generated by the given table indices.
template <typename E>
Subgroup generate_subgroup(const GroupTable<E>& table, const std::vector<std::size_t>& gens) {
    std::vector<char> seen(table.order(), 0);
    std::vector<std::size_t> members{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (std::size_t g : gens) {
            std::size_t next = table.multiply(members[head], g);
            if (!seen[next]) {
                seen[next] = 1;
                members.push_back(next);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

template <typename E>
std::vector<std::size_t> indices_of(const GroupTable<E>& table, const std::vector<E>& elements) {
    std::vector<std::size_t> out;
    for (const auto& e : elements) {
        auto i = table.index_of(e);
        if (!i) throw NotInGroup("element is not in the group table");
        out.push_back(*i);
    }
    return out;
}

template <typename E>
bool is_normal(const GroupTable<E>& table, const Subgroup& h) {
    for (std::size_t g : table.generators()) {
        const std::size_t g_inv = table.inverse(g);
        for (std::size_t x : h) {
            const std::size_t conj = table.multiply(table.multiply(g_inv, x), g);
            if (!std::binary_search(h.begin(), h.end(), conj)) return false;
        }
    }
    return true;
}

struct SubgroupInfo {
    std::size_t order = 0;
    std::size_t index = 0;
    bool normal = false;
    Subgroup members;
};

/// Order, index and normality of the subgroup generated by `gens`.
template <typename E>
SubgroupInfo subgroup_info(const GroupTable<E>& table, const std::vector<E>& gens) {
    Subgroup h = generate_subgroup(table, indices_of(table, gens));
    SubgroupInfo info;
    info.order = h.size();
    info.index = table.order() / h.size();
    info.normal = is_normal(table, h);
    info.members = std::move(h);
    return info;
}

/// True iff `normal_part` is normal, the intersection is trivial and the orders multiply to |G|.
template <typename E>
bool semidirect_check(const GroupTable<E>& table, const Subgroup& complement, const Subgroup& normal_part) {
    auto is_subgroup = [&](const Subgroup& s) {
        if (s.empty() || s.front() != 0) return false;
        for (std::size_t a : s)
            for (std::size_t b : s)
                if (!std::binary_search(s.begin(), s.end(), table.multiply(a, b))) return false;
        return true;
    };
    if (!is_subgroup(complement) || !is_subgroup(normal_part)) {
        throw std::invalid_argument("semidirect_check: inputs must be subgroups of the table");
    }
    if (!is_normal(table, normal_part)) return false;
    Subgroup meet;
    std::set_intersection(complement.begin(), complement.end(), normal_part.begin(), normal_part.end(),
                          std::back_inserter(meet));
    if (meet.size() != 1) return false;
    return complement.size() * normal_part.size() == table.order();
}

/// Overload taking the factors as their own closed tables.
template <typename E>
bool semidirect_check(const GroupTable<E>& table, const GroupTable<E>& complement, const GroupTable<E>& normal_part) {
    auto to_subgroup = [&](const GroupTable<E>& h) {
        Subgroup s = indices_of(table, h.elements());
        std::sort(s.begin(), s.end());
        return s;
    };
    return semidirect_check(table, to_subgroup(complement), to_subgroup(normal_part));
}

struct ConjugacyClass {
    std::size_t representative = 0;
    std::vector<std::size_t> members;  // sorted
};

/// Partition into conjugacy classes, ordered by smallest member.
template <typename E>
std::vector<ConjugacyClass> conjugacy_classes(const GroupTable<E>& table) {
    const std::size_t n = table.order();
    std::vector<std::size_t> inv(n);
    for (std::size_t g = 0; g < n; ++g) inv[g] = table.inverse(g);
    std::vector<char> assigned(n, 0);
    std::vector<ConjugacyClass> classes;
    for (std::size_t x = 0; x < n; ++x) {
        if (assigned[x]) continue;
        ConjugacyClass c;
        c.representative = x;
        std::set<std::size_t> members;
        for (std::size_t g = 0; g < n; ++g) members.insert(table.multiply(table.multiply(inv[g], x), g));
        c.members.assign(members.begin(), members.end());
        for (std::size_t m : c.members) assigned[m] = 1;
        classes.push_back(std::move(c));
    }
    return classes;
}

template <typename E>
std::vector<std::size_t> class_sizes(const GroupTable<E>& table) {
    std::vector<std::size_t> sizes;
    for (const auto& c : conjugacy_classes(table)) sizes.push_back(c.members.size());
    return sizes;
}

template <typename E>
Subgroup commutator_subgroup(const GroupTable<E>& table) {
    std::set<std::size_t> comms;
    for (std::size_t a = 0; a < table.order(); ++a) {
        const std::size_t ai = table.inverse(a);
        for (std::size_t b = 0; b < table.order(); ++b) {
            const std::size_t bi = table.inverse(b);
            comms.insert(table.multiply(table.multiply(ai, bi), table.multiply(a, b)));
        }
    }
    return generate_subgroup(table, std::vector<std::size_t>(comms.begin(), comms.end()));
}

/// |G / [G, G]|.
template <typename E>
std::size_t abelianization_order(const GroupTable<E>& table) {
    return table.order() / commutator_subgroup(table).size();
}

template <typename E>
bool is_abelian(const GroupTable<E>& table, const Subgroup& h) {
    for (std::size_t a : h)
        for (std::size_t b : h)
            if (table.multiply(a, b) != table.multiply(b, a)) return false;
    return true;
}

template <typename E>
std::size_t exponent(const GroupTable<E>& table, const Subgroup& h) {
    std::size_t e = 1;
    for (std::size_t a : h) e = std::lcm(e, table.element_order(a));
    return e;
}

/// Orders of all normal subgroups.
///
/// Candidates are unions of conjugacy classes containing the identity whose
/// size divides |G|; each candidate is kept only if it is closed under products.
template <typename E>
std::set<std::size_t> normal_subgroup_orders(const GroupTable<E>& table) {
    auto classes = conjugacy_classes(table);
    std::vector<ConjugacyClass> rest(classes.begin() + 1, classes.end());
    if (rest.size() > 24) throw std::invalid_argument("normal_subgroup_orders: too many conjugacy classes");
    std::set<std::size_t> orders;
    const std::size_t subsets = std::size_t{1} << rest.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::size_t size = 1;
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (mask >> i & 1) size += rest[i].members.size();
        if (table.order() % size != 0 || orders.count(size)) continue;
        Subgroup candidate{0};
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (mask >> i & 1) candidate.insert(candidate.end(), rest[i].members.begin(), rest[i].members.end());
        std::sort(candidate.begin(), candidate.end());
        bool closed = true;
        for (std::size_t a : candidate) {
            for (std::size_t b : candidate) {
                if (!std::binary_search(candidate.begin(), candidate.end(), table.multiply(a, b))) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (closed) orders.insert(size);
    }
    return orders;
}

/// Every subgroup, built from the cyclic subgroups by repeated joins.
template <typename E>
std::vector<Subgroup> all_subgroups(const GroupTable<E>& table) {
    std::set<Subgroup> found;
    for (std::size_t g = 0; g < table.order(); ++g) found.insert(generate_subgroup(table, {g}));
    std::vector<Subgroup> frontier(found.begin(), found.end());
    const std::vector<Subgroup> cyclic = frontier;
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& h : frontier) {
            for (const auto& c : cyclic) {
                if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
                std::vector<std::size_t> gens = h;
                gens.insert(gens.end(), c.begin(), c.end());
                Subgroup joined = generate_subgroup(table, gens);
                if (found.insert(joined).second) next.push_back(std::move(joined));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.size() < b.size(); });
    return out;
}

// ---------------------------------------------------------------------------
// Presentations

/// A word with symbolic letters, e.g. "t^2 l1 t" -> {(t,2),(l1,1),(t,1)}.
using SymbolWord = std::vector<std::pair<std::string, int>>;

struct Relation {
    std::string text;
    SymbolWord lhs;
    SymbolWord rhs;  // empty means the identity
};

/// Parse "lhs = rhs" or "lhs" (meaning lhs = 1); letters separated by spaces, optional ^exponent.
Relation parse_relation(const std::string& text);

template <typename E>
E evaluate_word(const std::map<std::string, E>& assignment, const SymbolWord& word, const E& identity) {
    E result = identity;
    for (const auto& [symbol, exp] : word) {
        auto it = assignment.find(symbol);
        if (it == assignment.end()) throw std::invalid_argument("unknown generator symbol '" + symbol + "'");
        E base = exp < 0 ? inverse(it->second) : it->second;
        for (int i = 0; i < std::abs(exp); ++i) result = result * base;
    }
    return result;
}

template <typename E>
struct RelationFailure {
    std::string relation;
    E lhs_value;
    E rhs_value;
};

template <typename E>
struct PresentationResult {
    bool relations_hold = true;
    bool generates_table = false;
    std::vector<RelationFailure<E>> failures;
    bool ok() const { return relations_hold && generates_table; }
};

/// Every relation evaluates to the identity and the assigned elements generate the table.
template <typename E>
PresentationResult<E> verify_presentation(const GroupTable<E>& table, const std::map<std::string, E>& assignment,
                                          const std::vector<Relation>& relations) {
    PresentationResult<E> result;
    const E& id = table[0];
    for (const auto& rel : relations) {
        E lhs = evaluate_word(assignment, rel.lhs, id);
        E rhs = evaluate_word(assignment, rel.rhs, id);
        if (!(lhs == rhs)) {
            result.relations_hold = false;
            result.failures.push_back({rel.text, lhs, rhs});
        }
    }
    std::vector<std::size_t> gens;
    bool all_inside = true;
    for (const auto& [symbol, e] : assignment) {
        auto i = table.index_of(e);
        if (!i) {
            all_inside = false;
            break;
        }
        gens.push_back(*i);
    }
    result.generates_table = all_inside && generate_subgroup(table, gens).size() == table.order();
    return result;
}

// ---------------------------------------------------------------------------
// Character degree feasibility

/// Multisets {d_1 <= ... <= d_k} with k = num_classes, sum d_i^2 = order, each
/// d_i dividing order and exactly abelianization_order entries equal to 1.
std::vector<std::vector<int>> char_degree_multisets(int order, int num_classes, int abelianization_order);

}  // namespace vgc
