#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gp/graph.hpp"

namespace gp {

// Named special vertices and edges of a generated family member, so figure
// positions map to concrete labels.
struct Landmarks {
    std::map<std::string, int> vertices;
    std::map<std::string, EdgeRef> edges;
};

struct FamilyResult {
    Graph graph;
    Landmarks landmarks;
};

struct FamilySpec {
    std::string name;
    std::vector<int> params;
    std::optional<Graph> base; // cone_over_mis only
};

const std::vector<std::string>& family_names();

// Deterministic generators with fixed labelings (documented per family in
// families.cpp). Parameter domains are validated per family.
FamilyResult generate(const FamilySpec& spec);

} // namespace gp
