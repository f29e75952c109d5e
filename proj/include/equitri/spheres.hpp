#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equitri/complex.hpp"

namespace equitri {

struct SearchBudget {
    std::uint64_t nodeLimit = 50'000'000;
    double timeLimitSeconds = 300.0;
};

enum class SearchStatus { Complete, Inconclusive };

struct SphereEnumeration {
    SearchStatus status = SearchStatus::Inconclusive;
    std::vector<SimplicialComplex> spheres;  // up to isomorphism, canonical order
    std::uint64_t nodes = 0;
};

/// All triangulated 2-spheres on exactly v vertices (4 <= v <= 9) up to
/// isomorphism, by backtracking over facet sets with ridge-degree
/// constraints and canonical-form deduplication.
SphereEnumeration enumerate2Spheres(int v, const SearchBudget& budget = {});

/// Independent census by filtering all (2v-4)-subsets of the v-vertex
/// triangles; practical for v <= 6.
std::size_t bruteForceSphereCensus(int v);

struct Lemma6Report {
    SearchStatus status = SearchStatus::Inconclusive;
    std::size_t spheresChecked = 0;
    // spheres admitting a rank-3 elementary abelian automorphism subgroup
    // acting with a single size-8 vertex orbit
    std::vector<std::size_t> admissibleIndices;
    std::string caveat;
};

/// Exhaustive scan of the 8-vertex spheres for a rank-3 sign-action with a
/// free transitive vertex orbit; a combinatorial analogue of the geometric
/// statement it shadows, strictly weaker, and reported as such.
Lemma6Report lemma6Check(const SearchBudget& budget = {});

}  // namespace equitri
