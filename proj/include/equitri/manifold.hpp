#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equitri/complex.hpp"
#include "equitri/homology.hpp"

namespace equitri {

enum class LinkStatus { SphereCertified, HomologySphereOnly, Failed };

struct LinkReport {
    std::string vertex;
    LinkStatus status = LinkStatus::Failed;
    std::string detail;
};

/// Pure, every ridge in exactly two facets, and strongly connected.
bool isClosedPseudomanifold(const SimplicialComplex& c);

/// Pure, every ridge in one or two facets (at least one boundary ridge),
/// strongly connected.
bool isPseudomanifoldWithBoundary(const SimplicialComplex& c);

/// Orientation propagation over the facet adjacency graph. Requires a
/// closed pseudomanifold.
bool isOrientable(const SimplicialComplex& c);

/// Dimension-tiered vertex link certification, sorted by vertex token.
std::vector<LinkReport> checkVertexLinks(const SimplicialComplex& c);

/// Exact tests for the small dimensions.
bool isCircle(const SimplicialComplex& c);
bool is2Sphere(const SimplicialComplex& c);

/// Closed pseudomanifold whose vertex links are 2-spheres, with the
/// homology of S^3; SphereCertified additionally needs the edge-path group
/// presentation to reduce to the trivial one within the rewrite budget.
LinkStatus certify3Sphere(const SimplicialComplex& c);

/// Edge-path group presentation triviality via bounded Tietze-style
/// simplification. Returns true when the presentation collapses to zero
/// generators within the budget.
bool fundamentalGroupTrivial(const SimplicialComplex& c, std::size_t budget = 10000);

enum class Verdict { Sphere, ProjectiveSpace, Ball, Unknown };

std::string verdictName(Verdict v, int dim);

struct Recognition {
    Verdict verdict = Verdict::Unknown;
    int dim = -1;
    bool closedPseudomanifold = false;
    bool boundaryPseudomanifold = false;
    // worst vertex-link tier over the complex (and its boundary analysis)
    bool fullyCertified = false;
    std::vector<LinkReport> links;
    HomologyProfile gf2;
    HomologyProfile integer;
    std::vector<std::string> notes;
};

/// Combinatorial recognition of S^d, RP^d and B^d at the tiers supported
/// by the engine; Unknown otherwise.
Recognition recognize(const SimplicialComplex& c);

}  // namespace equitri
