#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equitri/action.hpp"
#include "equitri/complex.hpp"

namespace equitri {

enum class CatalogId { RP2_6, RP3_14, RP3_11A, RP3_11B, RP4_17 };

std::vector<CatalogId> catalogIds();
std::string catalogName(CatalogId id);
std::optional<CatalogId> catalogIdFromName(const std::string& name);

struct CatalogEntry {
    CatalogId id;
    SimplicialComplex complex;
    std::size_t expectedVertices = 0;
    std::size_t expectedFacets = 0;
    int expectedDim = 0;           // recognition target RP^d
    int actionRank = 0;            // rank of the expected sign action
    std::optional<GroupAction> declaredAction;  // only for orbit-expanded entries
};

CatalogEntry catalogLoad(CatalogId id);

/// Orbit expansion of the 17-vertex generator lists over all 16 group
/// elements under the declared label action.
SimplicialComplex expandRp4();

/// The declared label action used by the expansion.
GroupAction rp4Action();

}  // namespace equitri
