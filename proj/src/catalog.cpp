#include "equitri/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace equitri {

namespace {

// 14-vertex triangulation on tokens 1..9, a..e; 52 tetrahedra.
const char* const kRp314[] = {
    "1569", "156e", "1679", "167e", "1789", "178e", "1589", "158e", "258a",
    "258c", "268a", "268c", "267a", "267c", "257a", "257c", "356b", "356d",
    "368b", "368d", "378b", "378d", "357b", "357d", "49ab", "49bc", "49cd",
    "49ad", "4abe", "4bce", "4cde", "4ade", "59ab", "5cde", "69bc", "6ade",
    "79cd", "7abe", "89ad", "8bce", "58ce", "589a", "569b", "56de", "67ae",
    "679c", "78be", "789d", "57ab", "57cd", "68bc", "68ad",
};

// first 11-vertex list (vertices 1, 2, 3 removed); 40 tetrahedra
const char* const kRp311A[] = {
    "569e", "679e", "789e", "589e", "58ac", "68ac", "67ac", "57ac", "56bd",
    "68bd", "78bd", "57bd", "49ab", "49bc", "49cd", "49ad", "4abe", "4bce",
    "4cde", "4ade", "59ab", "5cde", "69bc", "6ade", "79cd", "7abe", "89ad",
    "8bce", "58ce", "589a", "569b", "56de", "67ae", "679c", "78be", "789d",
    "57ab", "57cd", "68bc", "68ad",
};

// second 11-vertex list (vertices 2, 3, 4 removed); 40 tetrahedra
const char* const kRp311B[] = {
    "1569", "156e", "1679", "167e", "1789", "178e", "1589", "158e", "58ac",
    "68ac", "67ac", "57ac", "56bd", "68bd", "78bd", "57bd", "9abe", "9bce",
    "9cde", "9ade", "59ab", "5cde", "69bc", "6ade", "79cd", "7abe", "89ad",
    "8bce", "58ce", "589a", "569b", "56de", "67ae", "679c", "78be", "789d",
    "57ab", "57cd", "68bc", "68ad",
};

// the unique 6-vertex projective plane
const char* const kRp26[] = {
    "125", "126", "134", "136", "145", "234", "235", "246", "356", "456",
};

// 17-vertex generator facets, expanded over the rank-4 label action below.
// Primed tokens are written with a 'p' suffix.
const char* const kRp417Generators[] = {
    // corner-ball generators around the five cells of the orbit complex
    "v03 u1 u11 v04 v04p",
    "v03 u1 u12 v04 v04p",
    "v14 u1 u12 v13 v13p",
    "v14 u1 u13 v13 v13p",
    "v2 u1 u13 u2 u23",
    "v2 u1 u12 u2 u22",
    "v13 u2 u21 v03 v03p",
    "v13 u2 u23 v03 v03p",
    "v04 u2 u21 v14 v14p",
    "v04 u2 u22 v14 v14p",
    // the middle cell
    "v04 v14 v13 u1 u2",
    "v03 v13 v04 u1 u2",
    "v04 v14 v13 u1 u12",
    "v03 v04 v13 u1 u12",
    "v13 u1 u13 u2 u23",
    "v14 u1 u13 u2 u22",
    "v03 u1 u11 u2 u23",
    "v04 u1 u11 u2 u22",
    "v04 v14 v13 u2 u21",
    "v03 v04 v13 u2 u21",
};

Simplex simplexFromWords(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return makeSimplex(out);
}

template <std::size_t N>
SimplicialComplex fromCompactList(const char* const (&list)[N]) {
    std::vector<Simplex> facets;
    facets.reserve(N);
    for (const char* f : list) facets.push_back(simplexFromCompact(f));
    return SimplicialComplex::fromFacets(facets);
}

}  // namespace

GroupAction rp4Action() {
    // The stated images are g1(u1)=u11, g2(u1)=u12, g1g2(u1)=u13 and
    // g2(u2)=u21, g3(u2)=u22, g4(u2)=u23, with each fiber's pointwise
    // stabilizer generated by the characteristic vectors of the faces
    // containing its carrier (xi_0 = g1+g2+g3+g4, xi_i = g_i):
    //   u1 over the face missing {3,4}: g3, g4 act trivially;
    //   u2 over the face missing {0,1}: g1 and g1g2g3g4 act trivially, so
    //     g4 agrees with g2g3 on that fiber;
    //   v_ij over the edge ij: generators inside the stabilizer fix both
    //     preimages, the rest swap them.
    std::vector<std::vector<std::pair<std::string, std::string>>> swaps(4);
    // g1
    swaps[0] = {{"u1", "u11"}, {"u12", "u13"}, {"v13", "v13p"}, {"v14", "v14p"}};
    // g2
    swaps[1] = {{"u1", "u12"}, {"u11", "u13"}, {"u2", "u21"}, {"u22", "u23"}};
    // g3
    swaps[2] = {{"u2", "u22"}, {"u21", "u23"}, {"v03", "v03p"}, {"v13", "v13p"}};
    // g4
    swaps[3] = {{"u2", "u23"}, {"u21", "u22"}, {"v04", "v04p"}, {"v14", "v14p"}};
    return GroupAction(4, std::move(swaps));
}

SimplicialComplex expandRp4() {
    GroupAction a = rp4Action();
    std::set<Simplex> facets;
    for (const char* line : kRp417Generators) {
        Simplex base = simplexFromWords(line);
        for (GroupElement g = 0; g < a.order(); ++g) {
            Simplex image;
            image.reserve(base.size());
            for (const auto& v : base) image.push_back(a.applyElement(g, v));
            std::sort(image.begin(), image.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
                throw Error(ErrorKind::CatalogData,
                            "orbit expansion produced a repeated vertex");
            }
            facets.insert(std::move(image));
        }
    }
    SimplicialComplex c =
        SimplicialComplex::fromFacets(std::vector<Simplex>(facets.begin(), facets.end()));
    if (c.vertexCount() != 17) {
        throw Error(ErrorKind::CatalogData, "expansion must have exactly 17 vertices");
    }
    return c;
}

std::vector<CatalogId> catalogIds() {
    return {CatalogId::RP2_6, CatalogId::RP3_14, CatalogId::RP3_11A, CatalogId::RP3_11B,
            CatalogId::RP4_17};
}

std::string catalogName(CatalogId id) {
    switch (id) {
        case CatalogId::RP2_6:
            return "rp2-6";
        case CatalogId::RP3_14:
            return "rp3-14";
        case CatalogId::RP3_11A:
            return "rp3-11a";
        case CatalogId::RP3_11B:
            return "rp3-11b";
        case CatalogId::RP4_17:
            return "rp4-17";
    }
    return "";
}

std::optional<CatalogId> catalogIdFromName(const std::string& name) {
    for (CatalogId id : catalogIds()) {
        if (catalogName(id) == name) return id;
    }
    return std::nullopt;
}

CatalogEntry catalogLoad(CatalogId id) {
    CatalogEntry e;
    e.id = id;
    switch (id) {
        case CatalogId::RP2_6:
            e.complex = fromCompactList(kRp26);
            e.expectedVertices = 6;
            e.expectedFacets = 10;
            e.expectedDim = 2;
            e.actionRank = 2;
            break;
        case CatalogId::RP3_14:
            e.complex = fromCompactList(kRp314);
            e.expectedVertices = 14;
            e.expectedFacets = 52;
            e.expectedDim = 3;
            e.actionRank = 3;
            break;
        case CatalogId::RP3_11A:
            e.complex = fromCompactList(kRp311A);
            e.expectedVertices = 11;
            e.expectedFacets = 40;
            e.expectedDim = 3;
            e.actionRank = 3;
            break;
        case CatalogId::RP3_11B:
            e.complex = fromCompactList(kRp311B);
            e.expectedVertices = 11;
            e.expectedFacets = 40;
            e.expectedDim = 3;
            e.actionRank = 3;
            break;
        case CatalogId::RP4_17:
            e.complex = expandRp4();
            e.expectedVertices = 17;
            e.expectedFacets = e.complex.facetCount();
            e.expectedDim = 4;
            e.actionRank = 4;
            e.declaredAction = rp4Action();
            break;
    }
    if (e.complex.vertexCount() != e.expectedVertices ||
        e.complex.facetCount() != e.expectedFacets) {
        throw Error(ErrorKind::CatalogData,
                    "catalog entry " + catalogName(id) + " has unexpected counts");
    }
    return e;
}

}  // namespace equitri
