#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equitri/complex.hpp"
#include "helpers.hpp"

using namespace equitri;
using equitri::testing::boundaryOfSimplex;
using equitri::testing::randomRelabel;

TEST_CASE("two triangles sharing an edge") {
    auto c = SimplicialComplex::fromFacets(
        {simplexFromCompact("abc"), simplexFromCompact("abd")});
    CHECK(c.fVector() == FVector{4, 5, 2});
    CHECK(c.dim() == 2);
    CHECK(c.isPure());
    CHECK(c.isConnected());
}

TEST_CASE("non-maximal facets are absorbed") {
    auto c = SimplicialComplex::fromFacets(
        {simplexFromCompact("ab"), simplexFromCompact("abc")});
    CHECK(c.fVector() == FVector{3, 3, 1});
    CHECK(c.facetCount() == 1);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(makeSimplex({"a", "a"}), Error);
    CHECK_THROWS_AS(makeSimplex({}), Error);
    CHECK_THROWS_AS(makeSimplex({"a b"}), Error);
    CHECK_THROWS_AS(SimplicialComplex::fromFacets({}), Error);
    try {
        SimplicialComplex::fromFacets({});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyComplex);
    }
}

TEST_CASE("faces of the tetrahedron boundary") {
    auto s2 = boundaryOfSimplex(2);
    CHECK(s2.faces(1).size() == 6);
    CHECK(s2.faces(0).size() == 4);
    CHECK(s2.faces(2).size() == 4);
    CHECK(s2.faces(3).empty());
    CHECK(s2.faces(-1).empty());
}

TEST_CASE("link of a vertex in the tetrahedron boundary is a 3-cycle") {
    auto s2 = boundaryOfSimplex(2);
    auto link = s2.link({"w0"});
    CHECK(link.dim() == 1);
    CHECK(link.vertexCount() == 3);
    CHECK(link.facetCount() == 3);
    CHECK_THROWS_AS(s2.link({"nope"}), Error);
}

TEST_CASE("link of a facet is empty") {
    auto s2 = boundaryOfSimplex(2);
    auto link = s2.link(s2.facets().front());
    CHECK(link.empty());
    CHECK(link.dim() == -1);
}

TEST_CASE("star contains exactly the facets through the face") {
    auto s2 = boundaryOfSimplex(2);
    auto star = s2.star({"w0"});
    CHECK(star.facetCount() == 3);
    for (const auto& f : star.facets()) {
        CHECK(std::binary_search(f.begin(), f.end(), std::string("w0")));
    }
}

TEST_CASE("euler characteristics") {
    CHECK(boundaryOfSimplex(3).eulerCharacteristic() == 0);  // S^3
    CHECK(boundaryOfSimplex(2).eulerCharacteristic() == 2);  // S^2
    CHECK(boundaryOfSimplex(4).eulerCharacteristic() == 2);  // S^4
}

TEST_CASE("boundary of a single tetrahedron") {
    auto solid = SimplicialComplex::fromFacets({simplexFromCompact("abcd")});
    auto bd = solid.boundaryComplex();
    CHECK(bd.fVector() == FVector{4, 6, 4});
    CHECK(bd.boundaryComplex().empty());
}

TEST_CASE("strong connectivity") {
    CHECK(boundaryOfSimplex(2).isStronglyConnected());
    auto twoTets = SimplicialComplex::fromFacets(
        {simplexFromCompact("abcd"), simplexFromCompact("efgh")});
    CHECK_FALSE(twoTets.isStronglyConnected());
    CHECK_FALSE(twoTets.isConnected());
}

TEST_CASE("link dimension drops by face dimension in a pure complex") {
    auto s3 = boundaryOfSimplex(3);
    for (int k = 0; k <= s3.dim(); ++k) {
        for (const auto& f : s3.faces(k)) {
            auto link = s3.link(f);
            if (!link.empty()) {
                CHECK(link.dim() == s3.dim() - k - 1);
            } else {
                CHECK(k == s3.dim());
            }
        }
    }
}

TEST_CASE("faces counts match the f-vector") {
    auto s3 = boundaryOfSimplex(3);
    FVector fv = s3.fVector();
    for (int k = 0; k <= s3.dim(); ++k) {
        CHECK(fv[static_cast<std::size_t>(k)] ==
              static_cast<long long>(s3.faces(k).size()));
    }
}

TEST_CASE("tri round-trip is bit-exact") {
    auto original = boundaryOfSimplex(3);
    std::string text = original.serializeTri();
    auto parsed = SimplicialComplex::parseTriString(text);
    CHECK(parsed == original);
    CHECK(parsed.serializeTri() == text);

    for (unsigned seed = 1; seed <= 5; ++seed) {
        auto shuffled = randomRelabel(original, seed);
        std::string t2 = shuffled.serializeTri();
        CHECK(SimplicialComplex::parseTriString(t2).serializeTri() == t2);
    }
}

TEST_CASE("tri parsing diagnostics") {
    CHECK_THROWS_AS(SimplicialComplex::parseTriString("a b c\n"), Error);
    CHECK_THROWS_AS(SimplicialComplex::parseTriString("dim 2\n"), Error);
    CHECK_THROWS_AS(SimplicialComplex::parseTriString("dim 3\na b c\n"), Error);
    auto ok = SimplicialComplex::parseTriString("# comment\ndim 2\na b c\n");
    CHECK(ok.dim() == 2);
}
