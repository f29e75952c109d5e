#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equitri {

enum class ErrorKind {
    MalformedSimplex,
    EmptyComplex,
    NotAFace,
    LabelMismatch,
    NonSimplicialQuotient,
    ConstructionInvariant,
    CatalogData,
    UnknownId,
    Unsupported,
    Parse,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// A simplex is a sorted, duplicate-free list of vertex tokens.
using Simplex = std::vector<std::string>;

/// Sort tokens and reject duplicates / empty or whitespace-bearing tokens.
Simplex makeSimplex(std::vector<std::string> tokens);

/// "15ab" -> {"1","5","a","b"}; convenience for single-character token lists.
Simplex simplexFromCompact(const std::string& compact);

using FVector = std::vector<long long>;

/// Immutable abstract simplicial complex stored by its inclusion-maximal
/// facets over opaque string vertex labels. All queries are read-only and
/// safe to run concurrently; the face lattice is memoized on first use.
class SimplicialComplex {
public:
    SimplicialComplex();  // the empty complex (dim -1)

    /// Build from facets. Non-maximal entries are silently absorbed.
    /// Throws EmptyComplex on an empty list and MalformedSimplex on bad
    /// tokens or duplicate vertices inside one facet.
    static SimplicialComplex fromFacets(const std::vector<Simplex>& facets);

    /// Internal-friendly variant: empty facet lists are allowed and yield
    /// the empty complex (used for links of facets, boundaries of spheres).
    static SimplicialComplex fromFacetsAllowEmpty(const std::vector<Simplex>& facets);

    bool empty() const { return facets_.empty(); }
    int dim() const { return dim_; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    std::size_t facetCount() const { return facets_.size(); }
    std::size_t vertexCount() const { return vertices_.size(); }

    bool hasVertex(const std::string& token) const;

    /// All k-dimensional faces, sorted. Out-of-range k yields an empty list.
    const std::vector<Simplex>& faces(int k) const;

    bool hasFace(const Simplex& s) const;

    /// Faces disjoint from s whose union with s is a face. NotAFace if s
    /// is not a face of the complex.
    SimplicialComplex link(const Simplex& s) const;

    /// Closed star: the complex generated by all facets containing s.
    SimplicialComplex star(const Simplex& s) const;

    /// Closure of the ridges contained in exactly one facet.
    SimplicialComplex boundaryComplex() const;

    bool isPure() const;
    bool isConnected() const;

    /// Pure and facet-ridge adjacency graph connected.
    bool isStronglyConnected() const;

    FVector fVector() const;
    long long eulerCharacteristic() const;

    /// `.tri` text format, facets sorted lexicographically. Bit-exact
    /// round-trip with parseTri.
    std::string serializeTri() const;
    static SimplicialComplex parseTri(std::istream& in);
    static SimplicialComplex parseTriString(const std::string& text);

    bool operator==(const SimplicialComplex& other) const {
        return facets_ == other.facets_;
    }

private:
    static SimplicialComplex build(std::vector<Simplex> facets);

    int dim_ = -1;
    std::vector<std::string> vertices_;  // sorted
    std::vector<Simplex> facets_;        // sorted, inclusion-maximal

    struct FaceCache;
    std::shared_ptr<FaceCache> cache_;
};

/// True when `sub` is a subset of `sup` (both sorted).
bool isSubset(const Simplex& sub, const Simplex& sup);

}  // namespace equitri
