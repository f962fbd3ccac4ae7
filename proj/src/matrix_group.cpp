#include "vgc/matrix_group.hpp"

namespace vgc {

GroupElement make_element(const std::vector<CycNum>& row_major, bool projective) {
    if (row_major.size() != 9) throw std::invalid_argument("make_element: expected 9 entries");
    GroupElement::Matrix m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = row_major[static_cast<std::size_t>(3 * r + c)];
    return GroupElement(std::move(m), projective);
}

bool conjugation_transport(const MatrixGroup& table, const GroupElement& t, const std::vector<GroupElement>& sources,
                           const std::vector<GroupElement>& targets) {
    if (sources.size() != targets.size()) throw std::invalid_argument("conjugation_transport: size mismatch");
    const GroupElement tp = t.as_projective();
    const GroupElement tp_inv = inverse(tp);
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const GroupElement image = tp * sources[i].as_projective() * tp_inv;
        if (!table.contains(image) || image != targets[i].as_projective()) return false;
    }
    return true;
}

std::map<std::string, GroupElement> s4_rho_generators() {
    return {
        {"s", make_element({0, 1, 0, 1, 0, 0, 0, 0, 1}, false)},
        {"t", make_element({0, 0, 1, 1, 0, 0, 0, 1, 0}, false)},
        {"l1", make_element({-1, 0, 0, 0, 1, 0, 0, 0, -1}, false)},
        {"l2", make_element({-1, 0, 0, 0, -1, 0, 0, 0, 1}, false)},
    };
}

std::map<std::string, GroupElement> g216_generators() {
    const CycNum w = CycNum::zeta(3);
    return {
        {"A", make_element({1, 0, 0, 0, 0, 1, 0, 1, 0}, true)},
        {"B", make_element({0, 0, 1, 1, 0, 0, 0, 1, 0}, true)},
        {"C1", make_element({-1, 0, 0, 0, -1, 0, 0, 0, 1}, true)},
        {"C2", make_element({1, 0, 0, 0, -1, 0, 0, 0, -1}, true)},
        {"D1", make_element({1, 0, 0, 0, w, 0, 0, 0, 1}, true)},
        {"D2", make_element({1, 0, 0, 0, 1, 0, 0, 0, w}, true)},
    };
}

std::vector<Relation> s4_relations() {
    std::vector<Relation> out;
    for (const char* text : {"s^2", "t^3", "l1^2", "l2^2", "s t = t^2 s", "l1 l2 = l2 l1", "s l1 s = l1 l2",
                             "s l2 s = l2", "t^2 l1 t = l1 l2", "t^2 l2 t = l1"}) {
        out.push_back(parse_relation(text));
    }
    return out;
}

}  // namespace vgc
