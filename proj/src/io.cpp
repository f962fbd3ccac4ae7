#include "vgc/io.hpp"

#include <fstream>
#include <sstream>

namespace vgc {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void shape_error(const std::string& where, const std::string& what) {
    throw FixtureError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) shape_error(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) shape_error(where, std::string("missing key \"") + key + "\"");
    return *it;
}

}  // namespace

Json to_json(const CycNum& c) {
    Json coeffs = Json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(rational_to_string(q));
    if (coeffs.empty()) coeffs.push_back("0");
    return Json{{"n", c.conductor()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const Json& j) {
    try {
        if (j.is_number_integer()) return CycNum(Rational(j.get<long>()));
        if (j.is_string()) return CycNum(parse_rational(j.get<std::string>()));
        const int n = field(j, "n", "cyclotomic number").get<int>();
        if (n < 1) shape_error("cyclotomic number", "conductor must be positive");
        const Json& cs = field(j, "coeffs", "cyclotomic number");
        if (!cs.is_array()) shape_error("cyclotomic number", "\"coeffs\" must be an array");
        std::vector<Rational> coeffs;
        for (const auto& c : cs) {
            if (c.is_number_integer()) coeffs.emplace_back(c.get<long>());
            else coeffs.push_back(parse_rational(c.get<std::string>()));
        }
        return CycNum(n, std::move(coeffs));
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError(std::string("cyclotomic number: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FixtureError(std::string("cyclotomic number: ") + e.what());
    }
}

std::vector<GroupElement> GroupDefinition::generators() const {
    std::vector<GroupElement> out;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        try {
            out.push_back(make_element(entries[k], projective));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("generator " + labels[k] + ": " + e.what());
        }
    }
    return out;
}

std::map<std::string, GroupElement> GroupDefinition::as_map() const {
    const auto gens = generators();
    std::map<std::string, GroupElement> m;
    for (std::size_t i = 0; i < gens.size(); ++i) m.emplace(labels[i], gens[i]);
    return m;
}

GroupDefinition GroupDefinition::from_elements(std::string name, bool projective, int cyclotomic_order,
                                               const std::map<std::string, GroupElement>& gens,
                                               const std::vector<std::string>& order) {
    GroupDefinition d;
    d.name = std::move(name);
    d.projective = projective;
    d.cyclotomic_order = cyclotomic_order;
    for (const auto& l : order) {
        const GroupElement& g = gens.at(l);
        std::vector<CycNum> e;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) e.push_back(g(r, c));
        d.labels.push_back(l);
        d.entries.push_back(std::move(e));
    }
    return d;
}

Json GroupDefinition::to_json() const {
    Json gens = Json::array();
    for (const auto& g : entries) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < 3; ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < 3; ++c) row.push_back(vgc::to_json(g[3 * r + c]));
            rows.push_back(row);
        }
        gens.push_back(rows);
    }
    return Json{{"name", name}, {"projective", projective}, {"cyclotomic_order", cyclotomic_order}, {"generators", gens},
                {"labels", labels}};
}

GroupDefinition GroupDefinition::from_json(const Json& j) {
    const std::string where = "group definition";
    GroupDefinition d;
    try {
        d.name = field(j, "name", where).get<std::string>();
        d.projective = field(j, "projective", where).get<bool>();
        d.cyclotomic_order = field(j, "cyclotomic_order", where).get<int>();
        d.labels = field(j, "labels", where).get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        shape_error(where, e.what());
    }
    const Json& gens = field(j, "generators", where);
    if (!gens.is_array()) shape_error(where, "\"generators\" must be an array");
    if (gens.size() != d.labels.size()) shape_error(where, "labels and generators differ in length");
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::string at = where + ", generator " + d.labels[k];
        const Json& rows = gens[k];
        if (!rows.is_array() || rows.size() != 3) shape_error(at, "expected 3 rows");
        std::vector<CycNum> entries;
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != 3) shape_error(at, "expected 3 entries per row");
            for (const auto& e : row) {
                CycNum c = cycnum_from_json(e);
                if (d.cyclotomic_order % c.simplified().conductor() != 0) {
                    shape_error(at, "entry " + c.to_string() + " lies outside Q(zeta_" + std::to_string(d.cyclotomic_order) + ")");
                }
                entries.push_back(c);
            }
        }
        d.entries.push_back(std::move(entries));
    }
    return d;
}

Json PointFixture::to_json() const {
    Json pts = Json::array();
    for (const auto& lp : points) {
        Json factors = Json::array();
        for (const auto& f : lp.point.factors()) {
            Json pair = Json::array();
            for (const auto& c : f) pair.push_back(vgc::to_json(c));
            factors.push_back(pair);
        }
        pts.push_back(Json{{"label", lp.label}, {"display", lp.point.to_string()}, {"homogeneous", factors}});
    }
    return Json{{"name", name}, {"points", pts}};
}

PointFixture PointFixture::from_json(const Json& j) {
    const std::string where = "point fixture";
    PointFixture p;
    try {
        p.name = field(j, "name", where).get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        shape_error(where, e.what());
    }
    const Json& pts = field(j, "points", where);
    if (!pts.is_array()) shape_error(where, "\"points\" must be an array");
    for (const auto& e : pts) {
        std::string label;
        try {
            label = field(e, "label", where).get<std::string>();
        } catch (const nlohmann::json::exception& ex) {
            shape_error(where, ex.what());
        }
        const Json& hom = field(e, "homogeneous", where + ", point " + label);
        if (!hom.is_array() || hom.size() != 3) shape_error(where + ", point " + label, "expected 3 factors");
        std::vector<std::vector<CycNum>> factors;
        for (const auto& f : hom) {
            if (!f.is_array() || f.size() != 2) shape_error(where + ", point " + label, "each factor needs 2 entries");
            factors.push_back({cycnum_from_json(f[0]), cycnum_from_json(f[1])});
        }
        try {
            p.points.push_back({label, ProjPoint(std::move(factors))});
        } catch (const std::invalid_argument& ex) {
            shape_error(where + ", point " + label, ex.what());
        }
    }
    return p;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FixtureError(path.string() + ": cannot read file");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw FixtureError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

GroupDefinition load_group(const std::filesystem::path& path) {
    try {
        return GroupDefinition::from_json(read_json_file(path));
    } catch (const FixtureError& e) {
        const std::string what = e.what();
        if (what.rfind(path.string(), 0) == 0) throw;
        throw FixtureError(path.string() + ": " + what);
    }
}

PointFixture load_points(const std::filesystem::path& path) {
    try {
        return PointFixture::from_json(read_json_file(path));
    } catch (const FixtureError& e) {
        const std::string what = e.what();
        if (what.rfind(path.string(), 0) == 0) throw;
        throw FixtureError(path.string() + ": " + what);
    }
}

SignedMonomialMap monomial_map_from_matrix(const GroupElement& m) {
    std::array<int, 3> perm{};
    std::array<CycNum, 3> scalars{};
    for (int j = 0; j < 3; ++j) {
        int found = -1;
        for (int i = 0; i < 3; ++i) {
            if (m(i, j).is_zero()) continue;
            if (found >= 0) throw std::invalid_argument("monomial_map_from_matrix: not a monomial matrix " + m.to_string());
            found = i;
        }
        if (found < 0) throw std::invalid_argument("monomial_map_from_matrix: zero column in " + m.to_string());
        perm[static_cast<std::size_t>(j)] = found;
        scalars[static_cast<std::size_t>(j)] = m(found, j);
    }
    return SignedMonomialMap(perm, scalars);
}

}  // namespace vgc
