#include "equitri/manifold.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace equitri {

namespace {

std::map<Simplex, std::vector<std::size_t>> ridgeIncidence(const SimplicialComplex& c) {
    std::map<Simplex, std::vector<std::size_t>> out;
    const auto& facets = c.facets();
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        const auto& f = facets[fi];
        if (f.size() < 2) continue;
        for (std::size_t omit = 0; omit < f.size(); ++omit) {
            Simplex r;
            r.reserve(f.size() - 1);
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i != omit) r.push_back(f[i]);
            }
            out[std::move(r)].push_back(fi);
        }
    }
    return out;
}

bool ridgeDegreesWithin(const SimplicialComplex& c, int lo, int hi, bool* sawBoundary) {
    if (sawBoundary) *sawBoundary = false;
    for (const auto& [ridge, fs] : ridgeIncidence(c)) {
        const int deg = static_cast<int>(fs.size());
        if (deg < lo || deg > hi) return false;
        if (deg == 1 && sawBoundary) *sawBoundary = true;
    }
    return true;
}

}  // namespace

bool isClosedPseudomanifold(const SimplicialComplex& c) {
    if (c.empty() || c.dim() < 1) return false;
    if (!c.isPure()) return false;
    if (!ridgeDegreesWithin(c, 2, 2, nullptr)) return false;
    return c.isStronglyConnected();
}

bool isPseudomanifoldWithBoundary(const SimplicialComplex& c) {
    if (c.empty() || c.dim() < 1) return false;
    if (!c.isPure()) return false;
    bool sawBoundary = false;
    if (!ridgeDegreesWithin(c, 1, 2, &sawBoundary)) return false;
    if (!sawBoundary) return false;
    return c.isStronglyConnected();
}

bool isOrientable(const SimplicialComplex& c) {
    if (!isClosedPseudomanifold(c)) return false;
    const auto& facets = c.facets();
    auto ridges = ridgeIncidence(c);
    // orientation of facet = +-1 relative to its sorted vertex order
    std::vector<int> orient(facets.size(), 0);
    std::map<Simplex, std::size_t> facetIndex;
    for (std::size_t i = 0; i < facets.size(); ++i) facetIndex[facets[i]] = i;

    auto inducedSign = [](const Simplex& facet, const Simplex& ridge) {
        // sign (-1)^i for the omitted vertex position
        for (std::size_t i = 0; i < facet.size(); ++i) {
            if (!std::binary_search(ridge.begin(), ridge.end(), facet[i])) {
                return (i % 2 == 0) ? 1 : -1;
            }
        }
        return 0;
    };

    for (std::size_t start = 0; start < facets.size(); ++start) {
        if (orient[start] != 0) continue;
        orient[start] = 1;
        std::queue<std::size_t> q;
        q.push(start);
        while (!q.empty()) {
            std::size_t fi = q.front();
            q.pop();
            const auto& f = facets[fi];
            for (std::size_t omit = 0; omit < f.size(); ++omit) {
                Simplex r;
                for (std::size_t i = 0; i < f.size(); ++i) {
                    if (i != omit) r.push_back(f[i]);
                }
                const auto& pair = ridges.at(r);
                for (std::size_t gi : pair) {
                    if (gi == fi) continue;
                    int needed = -orient[fi] * inducedSign(f, r) * inducedSign(facets[gi], r);
                    if (orient[gi] == 0) {
                        orient[gi] = needed;
                        q.push(gi);
                    } else if (orient[gi] != needed) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool isCircle(const SimplicialComplex& c) {
    if (c.dim() != 1 || !c.isPure()) return false;
    if (!c.isConnected()) return false;
    std::map<std::string, int> degree;
    for (const auto& e : c.facets()) {
        degree[e[0]]++;
        degree[e[1]]++;
    }
    for (const auto& [v, d] : degree) {
        if (d != 2) return false;
    }
    return c.facetCount() == c.vertexCount();
}

bool is2Sphere(const SimplicialComplex& c) {
    if (c.dim() != 2 || !c.isPure()) return false;
    if (!isClosedPseudomanifold(c)) return false;
    if (c.eulerCharacteristic() != 2) return false;
    for (const auto& v : c.vertices()) {
        if (!isCircle(c.link({v}))) return false;
    }
    return true;
}

namespace {

struct Presentation {
    int generators = 0;
    std::vector<std::vector<int>> relators;  // letters: +-(g+1)
};

void freeReduce(std::vector<int>& word) {
    std::vector<int> out;
    for (int letter : word) {
        if (!out.empty() && out.back() == -letter) {
            out.pop_back();
        } else {
            out.push_back(letter);
        }
    }
    // cyclic reduction
    while (out.size() >= 2 && out.front() == -out.back()) {
        out.erase(out.begin());
        out.pop_back();
    }
    word = std::move(out);
}

}  // namespace

bool fundamentalGroupTrivial(const SimplicialComplex& c, std::size_t budget) {
    if (c.empty() || !c.isConnected()) return false;
    const auto& verts = c.vertices();
    std::map<std::string, int> vid;
    for (std::size_t i = 0; i < verts.size(); ++i) vid[verts[i]] = static_cast<int>(i);

    const auto& edges = c.faces(1);
    // spanning tree by scanning sorted edges (union-find)
    std::vector<int> parent(verts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::map<Simplex, int> edgeGen;  // non-tree edge -> generator id (0-based)
    int gens = 0;
    for (const auto& e : edges) {
        int a = find(vid[e[0]]), b = find(vid[e[1]]);
        if (a != b) {
            parent[a] = b;
            edgeGen[e] = -1;  // tree edge
        } else {
            edgeGen[e] = gens++;
        }
    }

    Presentation pres;
    pres.generators = gens;
    auto letter = [&](const std::string& a, const std::string& b) {
        // oriented edge a->b; generator letter or 0 for tree edges
        Simplex e = (a < b) ? Simplex{a, b} : Simplex{b, a};
        int g = edgeGen.at(e);
        if (g < 0) return 0;
        return (a < b) ? (g + 1) : -(g + 1);
    };
    for (const auto& t : c.faces(2)) {
        std::vector<int> word;
        int l1 = letter(t[0], t[1]);
        int l2 = letter(t[1], t[2]);
        int l3 = letter(t[2], t[0]);
        if (l1) word.push_back(l1);
        if (l2) word.push_back(l2);
        if (l3) word.push_back(l3);
        freeReduce(word);
        if (!word.empty()) pres.relators.push_back(std::move(word));
    }

    std::vector<bool> alive(static_cast<std::size_t>(gens), true);
    std::size_t aliveCount = static_cast<std::size_t>(gens);
    std::size_t steps = 0;

    auto eraseGenerator = [&](int g) {
        if (alive[static_cast<std::size_t>(g)]) {
            alive[static_cast<std::size_t>(g)] = false;
            --aliveCount;
        }
    };

    bool changed = true;
    while (changed && steps < budget && aliveCount > 0) {
        changed = false;
        // length-1 relators: the generator is trivial
        for (std::size_t i = 0; i < pres.relators.size() && steps < budget; ++i) {
            if (pres.relators[i].size() == 1) {
                int g = std::abs(pres.relators[i][0]) - 1;
                eraseGenerator(g);
                for (auto& w : pres.relators) {
                    w.erase(std::remove_if(w.begin(), w.end(),
                                           [&](int l) { return std::abs(l) - 1 == g; }),
                            w.end());
                    freeReduce(w);
                }
                ++steps;
                changed = true;
            }
        }
        pres.relators.erase(
            std::remove_if(pres.relators.begin(), pres.relators.end(),
                           [](const std::vector<int>& w) { return w.empty(); }),
            pres.relators.end());
        if (aliveCount == 0) break;

        // length-2 relators x y = 1 with x != y: substitute y := x^-1
        for (std::size_t i = 0; i < pres.relators.size() && steps < budget; ++i) {
            if (pres.relators[i].size() != 2) continue;
            int a = pres.relators[i][0], b = pres.relators[i][1];
            if (std::abs(a) == std::abs(b)) continue;  // x^2 = 1 style, keep
            // b = a^-1; replace generator |b| by sign-matched power of a
            int gb = std::abs(b) - 1;
            for (auto& w : pres.relators) {
                std::vector<int> nw;
                for (int l : w) {
                    if (std::abs(l) - 1 == gb) {
                        // l = sign * b; b = -a in letter arithmetic terms:
                        // replace b by a^-1 respecting orientation
                        int rep = (l == b) ? -a : a;
                        nw.push_back(rep);
                    } else {
                        nw.push_back(l);
                    }
                }
                freeReduce(nw);
                w = std::move(nw);
            }
            eraseGenerator(gb);
            ++steps;
            changed = true;
        }
        pres.relators.erase(
            std::remove_if(pres.relators.begin(), pres.relators.end(),
                           [](const std::vector<int>& w) { return w.empty(); }),
            pres.relators.end());
        if (aliveCount == 0) break;

        // Tietze: a generator occurring exactly once in exactly one relator
        if (!changed && steps < budget) {
            std::map<int, std::pair<std::size_t, std::size_t>> occurrence;  // g -> (count, relator)
            for (std::size_t i = 0; i < pres.relators.size(); ++i) {
                for (int l : pres.relators[i]) {
                    auto& occ = occurrence[std::abs(l) - 1];
                    occ.first++;
                    occ.second = i;
                }
            }
            for (const auto& [g, occ] : occurrence) {
                if (occ.first == 1) {
                    pres.relators.erase(pres.relators.begin() +
                                        static_cast<std::ptrdiff_t>(occ.second));
                    eraseGenerator(g);
                    ++steps;
                    changed = true;
                    break;
                }
            }
        }
    }
    return aliveCount == 0;
}

LinkStatus certify3Sphere(const SimplicialComplex& c) {
    if (c.dim() != 3 || !isClosedPseudomanifold(c)) return LinkStatus::Failed;
    for (const auto& v : c.vertices()) {
        if (!is2Sphere(c.link({v}))) return LinkStatus::Failed;
    }
    HomologyProfile h = homologyInteger(c);
    if (h.betti != std::vector<long long>{1, 0, 0, 1}) return LinkStatus::Failed;
    for (const auto& t : h.torsion) {
        if (!t.empty()) return LinkStatus::Failed;
    }
    return fundamentalGroupTrivial(c) ? LinkStatus::SphereCertified
                                      : LinkStatus::HomologySphereOnly;
}

namespace {

bool sphereHomologyProfiles(const SimplicialComplex& c, int d) {
    HomologyProfile g = homologyGf2(c);
    std::vector<long long> expected(static_cast<std::size_t>(d) + 1, 0);
    expected[0] = 1;
    expected[static_cast<std::size_t>(d)] += 1;  // d = 0 gives betti0 = 2
    if (g.betti != expected) return false;
    HomologyProfile z = homologyInteger(c);
    if (z.betti != expected) return false;
    for (const auto& t : z.torsion) {
        if (!t.empty()) return false;
    }
    return true;
}

LinkStatus linkStatusFor(const SimplicialComplex& link, int linkDim) {
    switch (linkDim) {
        case 0:
            return (link.dim() == 0 && link.vertexCount() == 2)
                       ? LinkStatus::SphereCertified
                       : LinkStatus::Failed;
        case 1:
            return isCircle(link) ? LinkStatus::SphereCertified : LinkStatus::Failed;
        case 2:
            return is2Sphere(link) ? LinkStatus::SphereCertified : LinkStatus::Failed;
        case 3:
            return certify3Sphere(link);
        default: {
            if (link.dim() != linkDim || !isClosedPseudomanifold(link)) {
                return LinkStatus::Failed;
            }
            return sphereHomologyProfiles(link, linkDim) ? LinkStatus::HomologySphereOnly
                                                         : LinkStatus::Failed;
        }
    }
}

}  // namespace

std::vector<LinkReport> checkVertexLinks(const SimplicialComplex& c) {
    std::vector<LinkReport> out;
    const int linkDim = c.dim() - 1;
    for (const auto& v : c.vertices()) {
        LinkReport r;
        r.vertex = v;
        SimplicialComplex link = c.link({v});
        r.status = linkStatusFor(link, linkDim);
        if (r.status == LinkStatus::Failed) {
            r.detail = "link is not a recognized sphere";
        } else if (r.status == LinkStatus::HomologySphereOnly) {
            r.detail = "homology sphere; triviality of the edge-path group not certified";
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string verdictName(Verdict v, int dim) {
    switch (v) {
        case Verdict::Sphere:
            return "S" + std::to_string(dim);
        case Verdict::ProjectiveSpace:
            return "RP" + std::to_string(dim);
        case Verdict::Ball:
            return "B" + std::to_string(dim);
        case Verdict::Unknown:
            return "unknown";
    }
    return "unknown";
}

Recognition recognize(const SimplicialComplex& c) {
    Recognition rec;
    rec.dim = c.dim();
    if (c.empty()) {
        rec.notes.push_back("empty complex");
        return rec;
    }
    if (!c.isPure()) {
        rec.notes.push_back("not pure");
        return rec;
    }
    const int d = c.dim();
    if (d == 0) {
        if (c.vertexCount() == 2) {
            rec.verdict = Verdict::Sphere;
            rec.fullyCertified = true;
        } else if (c.vertexCount() == 1) {
            rec.verdict = Verdict::Ball;
            rec.fullyCertified = true;
            rec.dim = 0;
        }
        return rec;
    }

    rec.closedPseudomanifold = isClosedPseudomanifold(c);
    rec.boundaryPseudomanifold = !rec.closedPseudomanifold && isPseudomanifoldWithBoundary(c);

    if (rec.closedPseudomanifold) {
        rec.links = checkVertexLinks(c);
        bool allPass = true;
        bool allCertified = true;
        for (const auto& l : rec.links) {
            if (l.status == LinkStatus::Failed) allPass = false;
            if (l.status != LinkStatus::SphereCertified) allCertified = false;
        }
        rec.gf2 = homologyGf2(c);
        rec.integer = homologyInteger(c);
        if (!allPass) {
            rec.notes.push_back("a vertex link failed certification");
            return rec;
        }

        std::vector<long long> sphereBetti(static_cast<std::size_t>(d) + 1, 0);
        sphereBetti[0] = 1;
        sphereBetti[static_cast<std::size_t>(d)] += 1;
        bool torsionFree = true;
        for (const auto& t : rec.integer.torsion) {
            if (!t.empty()) torsionFree = false;
        }
        if (rec.gf2.betti == sphereBetti && rec.integer.betti == sphereBetti && torsionFree) {
            rec.verdict = Verdict::Sphere;
            bool pi1 = (d <= 2) || fundamentalGroupTrivial(c);
            rec.fullyCertified = allCertified && (d <= 2 || pi1);
            if (d >= 3 && !pi1) {
                rec.fullyCertified = false;
                rec.notes.push_back("edge-path group triviality not certified");
            }
            return rec;
        }

        std::vector<long long> allOnes(static_cast<std::size_t>(d) + 1, 1);
        bool h1TorsionTwo = d >= 2 && rec.integer.torsion.size() > 1 &&
                            rec.integer.torsion[1].size() == 1 &&
                            rec.integer.torsion[1][0] == 2;
        if (rec.gf2.betti == allOnes && h1TorsionTwo) {
            const bool orientable = isOrientable(c);
            if (orientable == (d % 2 == 1)) {
                rec.verdict = Verdict::ProjectiveSpace;
                rec.fullyCertified = allCertified;
                return rec;
            }
            rec.notes.push_back("orientability does not match dimension parity");
        }
        return rec;
    }

    if (rec.boundaryPseudomanifold) {
        SimplicialComplex bd = c.boundaryComplex();
        Recognition bdRec = recognize(bd);
        rec.gf2 = homologyGf2(c);
        rec.integer = homologyInteger(c);
        std::vector<long long> pointBetti(static_cast<std::size_t>(d) + 1, 0);
        pointBetti[0] = 1;
        bool torsionFree = true;
        for (const auto& t : rec.integer.torsion) {
            if (!t.empty()) torsionFree = false;
        }
        if (bdRec.verdict == Verdict::Sphere && bdRec.dim == d - 1 &&
            rec.gf2.betti == pointBetti && rec.integer.betti == pointBetti && torsionFree) {
            rec.verdict = Verdict::Ball;
            rec.fullyCertified = bdRec.fullyCertified;
            return rec;
        }
        rec.notes.push_back("pseudomanifold with boundary but not a certified ball");
        return rec;
    }

    rec.notes.push_back("not a pseudomanifold");
    return rec;
}

}  // namespace equitri
