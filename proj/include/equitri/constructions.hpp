#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "equitri/action.hpp"
#include "equitri/complex.hpp"

namespace equitri {

/// A complex built by the cross-polytope pipeline, together with the data
/// only a construction knows: its birth action, the position of every
/// vertex over the orbit simplex, and the fiber coordinates (base orbit
/// vertex plus canonical stabilizer coset) used for orbit re-expansion.
struct Constructed {
    SimplicialComplex complex;
    GroupAction action;  // rank 0 when the object lives downstairs
    std::map<std::string, FacePosition> positions;
    std::map<std::string, std::pair<std::string, GroupElement>> fiber;
    std::vector<std::string> notes;
};

/// Triangulation of the n-simplex: corner simplices around each vertex
/// plus a no-new-vertex subdivision of the cell spanned by the edge
/// midpoints. (n+1)(n+2)/2 vertices.
Constructed buildYn(int n);

/// No-new-vertex triangulation of the midpoint cell via lexicographic
/// placing: vertices are pushed in sorted token order and coned over the
/// visible boundary. Validated by exact volume partition and ridge counts.
std::vector<Simplex> subdivideHypersimplex(int n);

/// Reflect the simplex triangulation through all 2^n sign patterns onto
/// the cross-polytope; vertices on coordinate hyperplanes merge.
/// 2n^2 + 2n + 1 vertices.
Constructed liftToCrossPolytope(const Constructed& yn);

/// Identify antipodal boundary vertices of the lifted complex. (n+1)^2
/// vertices; the induced sign action comes along.
Constructed antipodalQuotient(const Constructed& lift);

/// Full pipeline for the (n+1)^2-vertex equivariant triangulation.
Constructed buildSigmaRpn(int n);

/// Replace the star of every fixed vertex by a cross-polytope ball with a
/// diagonal. n(n+1) vertices, no fixed points.
Constructed buildReduced(int n);

/// The two 3-ball building blocks: the octahedron with a diagonal (4
/// tetrahedra) and the cone over the octahedron boundary (8 tetrahedra),
/// each with its sign-flip action.
std::vector<std::tuple<std::string, SimplicialComplex, GroupAction>> buildD3Blocks();

}  // namespace equitri
