#include "equitri/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace equitri {

namespace {

struct IndexedComplex {
    std::vector<std::string> tokens;           // id -> token (sorted)
    std::map<std::string, int> id;             // token -> id
    std::vector<std::vector<int>> facets;      // sorted ids per facet, sorted list
    std::set<std::vector<int>> facetSet;
    std::vector<std::vector<int>> pairCount;   // common-facet counts
    std::vector<int> degree;

    explicit IndexedComplex(const SimplicialComplex& c) {
        tokens = c.vertices();
        for (std::size_t i = 0; i < tokens.size(); ++i) id[tokens[i]] = static_cast<int>(i);
        for (const auto& f : c.facets()) {
            std::vector<int> g;
            g.reserve(f.size());
            for (const auto& t : f) g.push_back(id.at(t));
            std::sort(g.begin(), g.end());
            facets.push_back(g);
            facetSet.insert(std::move(g));
        }
        const int n = static_cast<int>(tokens.size());
        pairCount.assign(n, std::vector<int>(n, 0));
        degree.assign(n, 0);
        for (const auto& f : facets) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                degree[f[i]]++;
                for (std::size_t j = i + 1; j < f.size(); ++j) {
                    pairCount[f[i]][f[j]]++;
                    pairCount[f[j]][f[i]]++;
                }
            }
        }
    }
};

using Signature = std::tuple<int, std::vector<long long>, std::vector<int>>;

std::vector<Signature> vertexSignatures(const SimplicialComplex& c,
                                        const IndexedComplex& ic) {
    std::vector<Signature> sigs;
    sigs.reserve(ic.tokens.size());
    for (std::size_t i = 0; i < ic.tokens.size(); ++i) {
        SimplicialComplex link = c.link({ic.tokens[i]});
        std::vector<long long> lf = link.empty() ? std::vector<long long>{} : link.fVector();
        std::vector<int> pairProfile;
        for (std::size_t j = 0; j < ic.tokens.size(); ++j) {
            if (j != i && ic.pairCount[i][j] > 0) pairProfile.push_back(ic.pairCount[i][j]);
        }
        std::sort(pairProfile.begin(), pairProfile.end());
        sigs.emplace_back(ic.degree[i], std::move(lf), std::move(pairProfile));
    }
    return sigs;
}

struct IsoSearch {
    const IndexedComplex& a;
    const IndexedComplex& b;
    const std::vector<std::vector<int>>& candidates;
    const std::vector<int>& order;  // a-vertex ids in processing order
    std::vector<int> image;         // a-id -> b-id or -1
    std::vector<bool> used;         // b-id used
    bool collectAll = false;
    std::vector<std::vector<int>> solutions;
    bool stop = false;

    IsoSearch(const IndexedComplex& aa, const IndexedComplex& bb,
              const std::vector<std::vector<int>>& cand, const std::vector<int>& ord)
        : a(aa), b(bb), candidates(cand), order(ord) {
        image.assign(a.tokens.size(), -1);
        used.assign(b.tokens.size(), false);
    }

    bool facetsMap() {
        for (const auto& f : a.facets) {
            std::vector<int> g;
            g.reserve(f.size());
            for (int v : f) g.push_back(image[v]);
            std::sort(g.begin(), g.end());
            if (!b.facetSet.count(g)) return false;
        }
        return true;
    }

    void dfs(std::size_t pos) {
        if (stop) return;
        if (pos == order.size()) {
            if (facetsMap()) {
                solutions.push_back(image);
                if (!collectAll) stop = true;
            }
            return;
        }
        const int va = order[pos];
        for (int vb : candidates[va]) {
            if (used[vb]) continue;
            bool ok = true;
            for (std::size_t prev = 0; prev < pos && ok; ++prev) {
                const int ua = order[prev];
                if (a.pairCount[va][ua] != b.pairCount[vb][image[ua]]) ok = false;
            }
            if (!ok) continue;
            image[va] = vb;
            used[vb] = true;
            dfs(pos + 1);
            image[va] = -1;
            used[vb] = false;
            if (stop) return;
        }
    }
};

std::vector<std::vector<int>> isoSolutions(const SimplicialComplex& ca,
                                           const SimplicialComplex& cb, bool collectAll) {
    IndexedComplex a(ca), b(cb);
    if (a.tokens.size() != b.tokens.size()) return {};
    if (a.facets.size() != b.facets.size()) return {};
    if (ca.fVector() != cb.fVector()) return {};

    auto sa = vertexSignatures(ca, a);
    auto sb = vertexSignatures(cb, b);
    {
        auto ma = sa;
        auto mb = sb;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) return {};
    }

    std::vector<std::vector<int>> candidates(a.tokens.size());
    for (std::size_t i = 0; i < a.tokens.size(); ++i) {
        for (std::size_t j = 0; j < b.tokens.size(); ++j) {
            if (sa[i] == sb[j]) candidates[i].push_back(static_cast<int>(j));
        }
        if (candidates[i].empty()) return {};
    }

    std::vector<int> order(a.tokens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return candidates[x].size() < candidates[y].size();
    });

    IsoSearch search(a, b, candidates, order);
    search.collectAll = collectAll;
    search.dfs(0);
    return search.solutions;
}

VertexBijection toBijection(const SimplicialComplex& ca, const SimplicialComplex& cb,
                            const std::vector<int>& image) {
    VertexBijection out;
    const auto& ta = ca.vertices();
    const auto& tb = cb.vertices();
    for (std::size_t i = 0; i < ta.size(); ++i) {
        out[ta[i]] = tb[static_cast<std::size_t>(image[i])];
    }
    return out;
}

}  // namespace

std::optional<VertexBijection> isomorphism(const SimplicialComplex& a,
                                           const SimplicialComplex& b) {
    auto sols = isoSolutions(a, b, false);
    if (sols.empty()) return std::nullopt;
    return toBijection(a, b, sols.front());
}

std::vector<VertexBijection> allAutomorphisms(const SimplicialComplex& c) {
    auto sols = isoSolutions(c, c, true);
    std::sort(sols.begin(), sols.end());
    std::vector<VertexBijection> out;
    out.reserve(sols.size());
    for (const auto& s : sols) out.push_back(toBijection(c, c, s));
    return out;
}

namespace {

std::vector<int> composePerm(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[static_cast<std::size_t>(g[i])];
    return h;
}

}  // namespace

std::vector<VertexBijection> automorphismGenerators(const SimplicialComplex& c) {
    auto sols = isoSolutions(c, c, true);
    std::sort(sols.begin(), sols.end());
    const std::size_t n = c.vertexCount();
    std::vector<int> identity(n);
    for (std::size_t i = 0; i < n; ++i) identity[i] = static_cast<int>(i);

    std::set<std::vector<int>> closure;
    closure.insert(identity);
    std::vector<std::vector<int>> generators;
    for (const auto& s : sols) {
        if (closure.count(s)) continue;
        generators.push_back(s);
        // regenerate closure
        std::vector<std::vector<int>> frontier(closure.begin(), closure.end());
        frontier.push_back(s);
        closure.insert(s);
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& x : frontier) {
                for (const auto& g : generators) {
                    auto y = composePerm(g, x);
                    if (closure.insert(y).second) next.push_back(std::move(y));
                }
            }
            frontier = std::move(next);
        }
    }
    std::vector<VertexBijection> out;
    for (const auto& g : generators) out.push_back(toBijection(c, c, g));
    return out;
}

std::vector<Simplex> canonicalForm(const SimplicialComplex& c) {
    IndexedComplex ic(c);
    auto sigs = vertexSignatures(c, ic);
    const std::size_t n = ic.tokens.size();

    // classes sorted by signature; labels assigned block-wise per class
    std::map<Signature, std::vector<int>> classes;
    for (std::size_t i = 0; i < n; ++i) classes[sigs[i]].push_back(static_cast<int>(i));

    std::vector<std::vector<int>> classMembers;
    for (auto& [sig, members] : classes) classMembers.push_back(members);

    std::vector<std::string> canonicalTokens(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string t = std::to_string(i);
        while (t.size() < 3) t = "0" + t;
        canonicalTokens[i] = "c" + t;
    }

    std::vector<int> label(n, -1);  // original id -> canonical index
    std::vector<Simplex> best;
    bool haveBest = false;

    std::function<void(std::size_t, int)> assign = [&](std::size_t classIdx, int nextLabel) {
        if (classIdx == classMembers.size()) {
            std::vector<Simplex> relabeled;
            relabeled.reserve(ic.facets.size());
            for (const auto& f : ic.facets) {
                Simplex s;
                s.reserve(f.size());
                for (int v : f) s.push_back(canonicalTokens[static_cast<std::size_t>(label[v])]);
                std::sort(s.begin(), s.end());
                relabeled.push_back(std::move(s));
            }
            std::sort(relabeled.begin(), relabeled.end());
            if (!haveBest || relabeled < best) {
                best = std::move(relabeled);
                haveBest = true;
            }
            return;
        }
        std::vector<int> members = classMembers[classIdx];
        std::sort(members.begin(), members.end());
        do {
            for (std::size_t i = 0; i < members.size(); ++i) {
                label[members[i]] = nextLabel + static_cast<int>(i);
            }
            assign(classIdx + 1, nextLabel + static_cast<int>(members.size()));
        } while (std::next_permutation(members.begin(), members.end()));
        for (int m : classMembers[classIdx]) label[m] = -1;
    };
    assign(0, 0);
    return best;
}

}  // namespace equitri
