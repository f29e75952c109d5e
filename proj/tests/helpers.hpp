#pragma once

#include <random>
#include <string>
#include <vector>

#include "equitri/complex.hpp"

namespace equitri::testing {

/// Boundary of the (d+1)-simplex: the standard triangulated d-sphere.
inline SimplicialComplex boundaryOfSimplex(int d) {
    std::vector<std::string> verts;
    for (int i = 0; i <= d + 1; ++i) verts.push_back("w" + std::to_string(i));
    std::vector<Simplex> facets;
    for (std::size_t omit = 0; omit < verts.size(); ++omit) {
        Simplex f;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i != omit) f.push_back(verts[i]);
        }
        facets.push_back(makeSimplex(f));
    }
    return SimplicialComplex::fromFacets(facets);
}

/// Relabel with a seeded random permutation onto fresh tokens.
inline SimplicialComplex randomRelabel(const SimplicialComplex& c, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::string> fresh;
    for (std::size_t i = 0; i < c.vertexCount(); ++i) {
        fresh.push_back("r" + std::to_string(i));
    }
    std::shuffle(fresh.begin(), fresh.end(), rng);
    std::map<std::string, std::string> rename;
    const auto& verts = c.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) rename[verts[i]] = fresh[i];
    std::vector<Simplex> facets;
    for (const auto& f : c.facets()) {
        Simplex g;
        for (const auto& v : f) g.push_back(rename[v]);
        facets.push_back(makeSimplex(g));
    }
    return SimplicialComplex::fromFacets(facets);
}

}  // namespace equitri::testing
