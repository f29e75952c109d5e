#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equitri/complex.hpp"

namespace equitri {

using VertexBijection = std::map<std::string, std::string>;

/// Facet-preserving vertex bijection from a to b, or nullopt after an
/// exhausted search (certified absence). Pruned by f-vectors, vertex
/// facet degrees and link f-vector invariants.
std::optional<VertexBijection> isomorphism(const SimplicialComplex& a,
                                           const SimplicialComplex& b);

/// Every simplicial automorphism, sorted by image sequence.
std::vector<VertexBijection> allAutomorphisms(const SimplicialComplex& c);

/// A small generating set extracted from allAutomorphisms in deterministic
/// order.
std::vector<VertexBijection> automorphismGenerators(const SimplicialComplex& c);

/// Lexicographically least facet set over all vertex relabelings onto
/// fixed-width canonical tokens; used for isomorph rejection.
std::vector<Simplex> canonicalForm(const SimplicialComplex& c);

}  // namespace equitri
