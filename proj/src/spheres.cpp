#include "equitri/spheres.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "equitri/isomorphism.hpp"
#include "equitri/manifold.hpp"

namespace equitri {

namespace {

using Tri = std::array<int, 3>;

struct SphereSearch {
    int targetVertices;
    const SearchBudget& budget;
    std::chrono::steady_clock::time_point start;
    std::uint64_t nodes = 0;
    bool exhausted = true;

    std::vector<Tri> triangles;
    std::map<std::pair<int, int>, int> edgeDegree;
    std::map<std::pair<int, int>, int> edgeThird;  // degree-1 edges: the third vertex
    std::vector<int> vertexEdgeCount;
    int usedVertices = 0;

    std::set<std::vector<Simplex>> canonicalSeen;
    std::vector<SimplicialComplex> found;

    explicit SphereSearch(int v, const SearchBudget& b)
        : targetVertices(v), budget(b), start(std::chrono::steady_clock::now()) {
        vertexEdgeCount.assign(static_cast<std::size_t>(v) + 1, 0);
    }

    bool budgetExceeded() {
        if (nodes > budget.nodeLimit) return true;
        if ((nodes & 0x3ff) == 0) {
            auto elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            if (elapsed > budget.timeLimitSeconds) return true;
        }
        return false;
    }

    static std::pair<int, int> edge(int a, int b) {
        return {std::min(a, b), std::max(a, b)};
    }

    bool vertexClosed(int v) const {
        // all edges at v saturated and at least three of them: no further
        // triangle can be attached there
        int count = vertexEdgeCount[static_cast<std::size_t>(v)];
        if (count < 3) return false;
        for (const auto& [e, d] : edgeDegree) {
            if ((e.first == v || e.second == v) && d == 1) return false;
        }
        return true;
    }

    void addTriangle(int a, int b, int c, std::vector<std::pair<int, int>>& newEdges) {
        Tri t{a, b, c};
        std::sort(t.begin(), t.end());
        triangles.push_back(t);
        for (auto [x, y] : {edge(a, b), edge(a, c), edge(b, c)}) {
            int& d = edgeDegree[{x, y}];
            if (d == 0) {
                newEdges.push_back({x, y});
                vertexEdgeCount[static_cast<std::size_t>(x)]++;
                vertexEdgeCount[static_cast<std::size_t>(y)]++;
            }
            ++d;
        }
    }

    void removeTriangle(const std::vector<std::pair<int, int>>& newEdges) {
        Tri t = triangles.back();
        triangles.pop_back();
        for (auto [x, y] : {edge(t[0], t[1]), edge(t[0], t[2]), edge(t[1], t[2])}) {
            int& d = edgeDegree[{x, y}];
            --d;
            if (d == 0) edgeDegree.erase({x, y});
        }
        for (auto [x, y] : newEdges) {
            vertexEdgeCount[static_cast<std::size_t>(x)]--;
            vertexEdgeCount[static_cast<std::size_t>(y)]--;
        }
    }

    bool findOpenEdge(std::pair<int, int>& out) const {
        for (const auto& [e, d] : edgeDegree) {
            if (d == 1) {
                out = e;
                return true;
            }
        }
        return false;
    }

    void recordIfSphere() {
        if (usedVertices != targetVertices) return;
        if (static_cast<int>(triangles.size()) != 2 * targetVertices - 4) return;
        std::vector<Simplex> facets;
        facets.reserve(triangles.size());
        for (const auto& t : triangles) {
            facets.push_back(makeSimplex(
                {std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])}));
        }
        SimplicialComplex c = SimplicialComplex::fromFacets(facets);
        if (!is2Sphere(c)) return;
        auto canon = canonicalForm(c);
        if (canonicalSeen.insert(canon).second) {
            found.push_back(std::move(c));
        }
    }

    void dfs() {
        ++nodes;
        if (budgetExceeded()) {
            exhausted = false;
            return;
        }
        std::pair<int, int> open;
        if (!findOpenEdge(open)) {
            recordIfSphere();
            return;
        }
        if (static_cast<int>(triangles.size()) >= 2 * targetVertices - 4) return;

        auto [a, b] = open;
        // the existing third vertex on this edge
        int existingThird = -1;
        for (const auto& t : triangles) {
            bool hasA = (t[0] == a || t[1] == a || t[2] == a);
            bool hasB = (t[0] == b || t[1] == b || t[2] == b);
            if (hasA && hasB) {
                for (int x : t) {
                    if (x != a && x != b) existingThird = x;
                }
                break;
            }
        }
        const int firstFresh = usedVertices + 1;
        for (int w = 1; w <= std::min(firstFresh, targetVertices); ++w) {
            if (w == a || w == b || w == existingThird) continue;
            bool fresh = (w == firstFresh);
            if (!fresh) {
                auto dAW = edgeDegree.find(edge(a, w));
                auto dBW = edgeDegree.find(edge(b, w));
                if (dAW != edgeDegree.end() && dAW->second >= 2) continue;
                if (dBW != edgeDegree.end() && dBW->second >= 2) continue;
                bool createsEdge = (dAW == edgeDegree.end()) || (dBW == edgeDegree.end());
                if (createsEdge && vertexClosed(w)) continue;
            }
            std::vector<std::pair<int, int>> newEdges;
            if (fresh) ++usedVertices;
            addTriangle(a, b, w, newEdges);
            dfs();
            removeTriangle(newEdges);
            if (fresh) --usedVertices;
        }
    }
};

}  // namespace

SphereEnumeration enumerate2Spheres(int v, const SearchBudget& budget) {
    if (v < 4 || v > 9) {
        throw Error(ErrorKind::Unsupported, "sphere enumeration supports 4 <= v <= 9");
    }
    SphereSearch search(v, budget);
    std::vector<std::pair<int, int>> newEdges;
    search.usedVertices = 3;
    search.addTriangle(1, 2, 3, newEdges);
    search.dfs();

    SphereEnumeration out;
    out.nodes = search.nodes;
    out.status = search.exhausted ? SearchStatus::Complete : SearchStatus::Inconclusive;
    std::sort(search.found.begin(), search.found.end(),
              [](const SimplicialComplex& x, const SimplicialComplex& y) {
                  return canonicalForm(x) < canonicalForm(y);
              });
    out.spheres = std::move(search.found);
    return out;
}

std::size_t bruteForceSphereCensus(int v) {
    if (v < 4 || v > 6) {
        throw Error(ErrorKind::Unsupported, "brute-force census supports 4 <= v <= 6");
    }
    std::vector<Tri> all;
    for (int a = 1; a <= v; ++a) {
        for (int b = a + 1; b <= v; ++b) {
            for (int c = b + 1; c <= v; ++c) all.push_back({a, b, c});
        }
    }
    const int need = 2 * v - 4;
    std::set<std::vector<Simplex>> canon;
    std::vector<int> idx(static_cast<std::size_t>(need));
    std::function<void(int, int)> choose = [&](int pos, int from) {
        if (pos == need) {
            std::vector<Simplex> facets;
            for (int i : idx) {
                const Tri& t = all[static_cast<std::size_t>(i)];
                facets.push_back(makeSimplex({std::to_string(t[0]), std::to_string(t[1]),
                                              std::to_string(t[2])}));
            }
            SimplicialComplex c = SimplicialComplex::fromFacets(facets);
            if (static_cast<int>(c.vertexCount()) != v) return;
            if (!is2Sphere(c)) return;
            canon.insert(canonicalForm(c));
            return;
        }
        for (int i = from; i < static_cast<int>(all.size()); ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            choose(pos + 1, i + 1);
        }
    };
    choose(0, 0);
    return canon.size();
}

namespace {

bool hasTransitiveRank3Subgroup(const SimplicialComplex& c) {
    if (c.vertexCount() != 8) return false;
    auto autos = allAutomorphisms(c);
    const auto& verts = c.vertices();
    const std::size_t nv = verts.size();
    std::map<std::string, int> vid;
    for (std::size_t i = 0; i < nv; ++i) vid[verts[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> perms;
    for (const auto& a : autos) {
        std::vector<int> p(nv);
        for (const auto& [from, to] : a) p[static_cast<std::size_t>(vid[from])] = vid[to];
        perms.push_back(std::move(p));
    }
    std::vector<int> identity(nv);
    for (std::size_t i = 0; i < nv; ++i) identity[i] = static_cast<int>(i);
    auto compose = [&](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> h(nv);
        for (std::size_t i = 0; i < nv; ++i) h[i] = f[static_cast<std::size_t>(g[i])];
        return h;
    };
    std::vector<std::vector<int>> involutions;
    for (const auto& p : perms) {
        if (p != identity && compose(p, p) == identity) involutions.push_back(p);
    }
    std::sort(involutions.begin(), involutions.end());

    bool foundTransitive = false;
    std::function<void(std::size_t, std::vector<std::size_t>&, std::set<std::vector<int>>&)>
        dfs = [&](std::size_t start, std::vector<std::size_t>& chosen,
                  std::set<std::vector<int>>& span) {
            if (foundTransitive) return;
            if (chosen.size() == 3) {
                // orbit of vertex 0 under the subgroup
                std::set<int> orbit;
                for (const auto& g : span) orbit.insert(g[0]);
                if (orbit.size() == nv) foundTransitive = true;
                return;
            }
            for (std::size_t i = start; i < involutions.size() && !foundTransitive; ++i) {
                const auto& cand = involutions[i];
                if (span.count(cand)) continue;
                bool ok = true;
                for (std::size_t gi : chosen) {
                    if (compose(involutions[gi], cand) != compose(cand, involutions[gi])) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                std::set<std::vector<int>> nextSpan;
                for (const auto& s : span) {
                    nextSpan.insert(s);
                    nextSpan.insert(compose(s, cand));
                }
                chosen.push_back(i);
                dfs(i + 1, chosen, nextSpan);
                chosen.pop_back();
            }
        };
    std::vector<std::size_t> chosen;
    std::set<std::vector<int>> span{identity};
    dfs(0, chosen, span);
    return foundTransitive;
}

}  // namespace

Lemma6Report lemma6Check(const SearchBudget& budget) {
    Lemma6Report out;
    out.caveat =
        "combinatorial analogue: scans abstract 8-vertex spheres for a rank-3 "
        "elementary abelian automorphism subgroup with a free transitive vertex "
        "orbit; strictly weaker than the geometric statement about vertices in "
        "general position";
    SphereEnumeration spheres = enumerate2Spheres(8, budget);
    if (spheres.status != SearchStatus::Complete) {
        out.status = SearchStatus::Inconclusive;
        return out;
    }
    out.spheresChecked = spheres.spheres.size();
    for (std::size_t i = 0; i < spheres.spheres.size(); ++i) {
        if (hasTransitiveRank3Subgroup(spheres.spheres[i])) {
            out.admissibleIndices.push_back(i);
        }
    }
    out.status = SearchStatus::Complete;
    return out;
}

}  // namespace equitri
