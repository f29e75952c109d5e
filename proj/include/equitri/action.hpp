#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "equitri/complex.hpp"

namespace equitri {

/// An element of (Z_2)^n as a bitmask over the generators.
using GroupElement = std::uint32_t;

/// A rank-n elementary abelian 2-group acting on vertex labels. Each
/// generator is an involution stored as disjoint transpositions; unlisted
/// tokens are fixed. Generators must pairwise commute.
class GroupAction {
public:
    GroupAction() = default;
    GroupAction(int rank, std::vector<std::vector<std::pair<std::string, std::string>>> swaps);

    int rank() const { return rank_; }
    std::size_t order() const { return std::size_t{1} << rank_; }

    const std::vector<std::vector<std::pair<std::string, std::string>>>& swaps() const {
        return swaps_;
    }

    /// Image of a token under one generator.
    const std::string& applyGenerator(int gen, const std::string& token) const;

    /// Image of a token under a group element (bitmask of generators).
    std::string applyElement(GroupElement g, const std::string& token) const;

    Simplex applyGenerator(int gen, const Simplex& s) const;
    Simplex applyElement(GroupElement g, const Simplex& s) const;

    /// Tokens mentioned in any swap.
    std::set<std::string> mentionedTokens() const;

    /// Structured text serialization; strict validation on parse.
    std::string serialize() const;
    static GroupAction parse(std::istream& in);
    static GroupAction parseString(const std::string& text);

private:
    void validate() const;

    int rank_ = 0;
    std::vector<std::vector<std::pair<std::string, std::string>>> swaps_;
    std::vector<std::map<std::string, std::string>> maps_;
};

/// Position of a vertex over the orbit simplex: the carrier face is
/// recorded by the indices of the codimension-one faces containing it, the
/// stabilizer is generated by the characteristic vectors of those faces,
/// and the coset representative locates the vertex inside its fiber.
struct FacePosition {
    std::set<int> missing;       // i such that the carrier face lies in F_i
    GroupElement cosetRep = 0;   // canonical (minimal) coset representative
    enum class Role { Corner, EdgeMidpoint, TriangleBarycenter, Apex } role =
        Role::EdgeMidpoint;
};

/// xi_0 = g_1 + ... + g_n, xi_i = g_i.
GroupElement characteristicVector(int i, int rank);

/// Subgroup generated by the characteristic vectors of a missing-face set,
/// as a sorted list of elements.
std::vector<GroupElement> faceStabilizer(const std::set<int>& missing, int rank);

struct EquivarianceCheck {
    bool equivariant = false;
    std::optional<std::pair<Simplex, int>> violation;  // (facet, generator index)
    std::optional<std::string> unknownToken;
};

/// True iff every facet's image under every generator is a facet.
EquivarianceCheck checkEquivariance(const SimplicialComplex& c, const GroupAction& a);

/// Orbit partition of the vertex labels, each orbit sorted, orbits sorted
/// by their least element.
std::vector<std::vector<std::string>> orbits(const SimplicialComplex& c, const GroupAction& a);

std::vector<std::string> fixedPoints(const SimplicialComplex& c, const GroupAction& a);

/// Elements fixing the label, as a sorted list.
std::vector<GroupElement> stabilizer(const std::string& label, const GroupAction& a);

/// (|V| - #fixed) is even.
bool parityCheck(const SimplicialComplex& c, const GroupAction& a);

struct QuotientResult {
    SimplicialComplex complex;
    std::map<std::string, std::string> classOf;        // vertex -> class label
    std::map<Simplex, long long> multiplicity;         // quotient facet -> covering count
    std::vector<std::string> foldVertices;             // labels created by edge folds
};

/// Orbit-space quotient. A facet whose vertices lie in pairwise distinct
/// orbits maps to the simplex of class labels. A facet with exactly one
/// orbit appearing twice folds: the doubled pair contributes its class
/// label plus a fold vertex for the fixed midpoint of the folded edge.
/// Any deeper collision raises a non-simplicial-quotient error.
QuotientResult quotientByAction(const SimplicialComplex& c, const GroupAction& a);

/// The rank-n elementary abelian subgroups of the automorphism group whose
/// quotient is a triangulated n-ball, in deterministic search order.
std::vector<GroupAction> findZ2nSubactions(const SimplicialComplex& c, int n,
                                           std::size_t maxResults);

/// First subaction found by findZ2nSubactions, or nullopt.
std::optional<GroupAction> findZ2nSubaction(const SimplicialComplex& c, int n);

}  // namespace equitri
