#pragma once

#include "vgc/matrix_group.hpp"
#include "vgc/surface.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace vgc {

/// Bad fixture: unreadable file, malformed JSON (with line and column) or wrong shape.
class FixtureError : public std::runtime_error {
public:
    explicit FixtureError(const std::string& what) : std::runtime_error(what) {}
};

/// {"n": 3, "coeffs": ["0", "1"]}; coefficients in the power basis modulo Phi_n.
nlohmann::ordered_json to_json(const CycNum& c);
/// Also accepts a bare integer or a "p/q" string for rationals.
CycNum cycnum_from_json(const nlohmann::ordered_json& j);

struct GroupDefinition {
    std::string name;
    bool projective = false;
    int cyclotomic_order = 1;
    std::vector<std::string> labels;
    /// Row-major entries per generator, as read.
    std::vector<std::vector<CycNum>> entries;

    /// Builds the matrices; throws std::invalid_argument naming the generator if one is singular.
    std::vector<GroupElement> generators() const;
    std::map<std::string, GroupElement> as_map() const;
    static GroupDefinition from_elements(std::string name, bool projective, int cyclotomic_order,
                                         const std::map<std::string, GroupElement>& gens,
                                         const std::vector<std::string>& order);
    nlohmann::ordered_json to_json() const;
    static GroupDefinition from_json(const nlohmann::ordered_json& j);
};

struct PointFixture {
    std::string name;
    std::vector<LabeledPoint> points;

    nlohmann::ordered_json to_json() const;
    static PointFixture from_json(const nlohmann::ordered_json& j);
};

/// Parses a file; syntax errors name the file, line and column.
nlohmann::ordered_json read_json_file(const std::filesystem::path& path);

GroupDefinition load_group(const std::filesystem::path& path);
PointFixture load_points(const std::filesystem::path& path);

/// Signed permutation matrix -> map on (P^1)^3 with new[j] = M(perm[j], j) * old[perm[j]].
SignedMonomialMap monomial_map_from_matrix(const GroupElement& m);

}  // namespace vgc
