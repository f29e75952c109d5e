#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "equitri/complex.hpp"

namespace equitri {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse boundary matrix from k-faces (columns) to (k-1)-faces (rows),
/// entries +-1 with sign (-1)^i for omitting the i-th vertex of the
/// sorted simplex.
struct ChainBoundary {
    int k = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    // per column: (row index, sign) sorted by row index
    std::vector<std::vector<std::pair<std::size_t, int>>> columns;
};

/// Boundary matrices for k = 1..dim. Verifies the chain-complex identity
/// that consecutive boundaries compose to zero.
std::vector<ChainBoundary> boundaryMatrices(const SimplicialComplex& c);

std::size_t gf2Rank(const ChainBoundary& m);

struct SmithForm {
    std::size_t rank = 0;
    std::vector<BigInt> invariantFactors;  // nontrivial ones, each > 1, divisibility chain
};

/// Exact integer Smith normal form data (rank and invariant factors > 1).
SmithForm smithNormalForm(const ChainBoundary& m);

enum class CoefficientRing { GF2, Integer };

struct HomologyProfile {
    CoefficientRing ring = CoefficientRing::GF2;
    std::vector<long long> betti;                 // one entry per dimension 0..dim
    std::vector<std::vector<BigInt>> torsion;     // per dimension; empty for GF2
};

HomologyProfile homologyGf2(const SimplicialComplex& c);
HomologyProfile homologyInteger(const SimplicialComplex& c);

/// Integer H_1 data without reducing the higher boundary maps: rank of d1,
/// d2 and the invariant factors of d2. Enough for the torsion of H_1.
std::vector<BigInt> h1Torsion(const SimplicialComplex& c);

std::string describe(const HomologyProfile& p);

}  // namespace equitri
