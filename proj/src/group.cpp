#include "vgc/group.hpp"

#include <cmath>
#include <sstream>

namespace vgc {

Relation parse_relation(const std::string& text) {
    auto parse_side = [&](const std::string& side) {
        SymbolWord word;
        std::istringstream in(side);
        std::string token;
        while (in >> token) {
            int exp = 1;
            if (auto caret = token.find('^'); caret != std::string::npos) {
                const std::string e = token.substr(caret + 1);
                try {
                    std::size_t used = 0;
                    exp = std::stoi(e, &used);
                    if (used != e.size()) throw std::invalid_argument(e);
                } catch (const std::exception&) {
                    throw std::invalid_argument("malformed exponent in relation '" + text + "'");
                }
                token = token.substr(0, caret);
            }
            if (token.empty()) throw std::invalid_argument("empty generator symbol in relation '" + text + "'");
            if (token == "1") continue;
            word.emplace_back(token, exp);
        }
        return word;
    };
    Relation rel;
    rel.text = text;
    if (auto eq = text.find('='); eq != std::string::npos) {
        rel.lhs = parse_side(text.substr(0, eq));
        rel.rhs = parse_side(text.substr(eq + 1));
    } else {
        rel.lhs = parse_side(text);
    }
    return rel;
}

namespace {

void extend(std::vector<int>& current, std::size_t slots, int remaining, int ones_left, const std::vector<int>& degrees,
            std::size_t start, std::vector<std::vector<int>>& out) {
    if (slots == 0) {
        if (remaining == 0 && ones_left == 0) out.push_back(current);
        return;
    }
    for (std::size_t i = start; i < degrees.size(); ++i) {
        const int d = degrees[i];
        const int sq = d * d;
        if (sq > remaining) break;
        if (d == 1 && ones_left == 0) continue;
        if (d != 1 && ones_left > 0) break;  // all ones come first in a sorted multiset
        // every remaining slot takes at least d^2
        if (static_cast<long>(sq) * static_cast<long>(slots) > remaining) break;
        current.push_back(d);
        extend(current, slots - 1, remaining - sq, d == 1 ? ones_left - 1 : ones_left, degrees, i, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> char_degree_multisets(int order, int num_classes, int abelianization_order) {
    if (order < 1 || num_classes < 1 || abelianization_order < 1) return {};
    std::vector<int> degrees;
    for (int d = 1; d * d <= order; ++d) {
        if (order % d == 0) degrees.push_back(d);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    extend(current, static_cast<std::size_t>(num_classes), order, abelianization_order, degrees, 0, out);
    return out;
}

}  // namespace vgc
