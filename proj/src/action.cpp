#include "equitri/action.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <sstream>

#include "equitri/isomorphism.hpp"
#include "equitri/manifold.hpp"

namespace equitri {

GroupAction::GroupAction(int rank,
                         std::vector<std::vector<std::pair<std::string, std::string>>> swaps)
    : rank_(rank), swaps_(std::move(swaps)) {
    if (rank_ < 0 || rank_ > 20) {
        throw Error(ErrorKind::Unsupported, "action rank out of range");
    }
    if (static_cast<int>(swaps_.size()) != rank_) {
        throw Error(ErrorKind::Parse, "generator count does not match rank");
    }
    maps_.resize(swaps_.size());
    for (std::size_t g = 0; g < swaps_.size(); ++g) {
        auto& swapList = swaps_[g];
        for (auto& [a, b] : swapList) {
            if (a == b) {
                throw Error(ErrorKind::Parse, "swap maps token '" + a + "' to itself");
            }
            if (a > b) std::swap(a, b);
        }
        std::sort(swapList.begin(), swapList.end());
        for (const auto& [a, b] : swapList) {
            if (maps_[g].count(a) || maps_[g].count(b)) {
                throw Error(ErrorKind::Parse,
                            "token repeated within one generator: " + a + "/" + b);
            }
            maps_[g][a] = b;
            maps_[g][b] = a;
        }
    }
    validate();
}

void GroupAction::validate() const {
    // involution holds by construction; check pairwise commutation on the
    // mentioned tokens
    const auto tokens = mentionedTokens();
    for (int g = 0; g < rank_; ++g) {
        for (int h = g + 1; h < rank_; ++h) {
            for (const auto& t : tokens) {
                if (applyGenerator(g, applyGenerator(h, t)) !=
                    applyGenerator(h, applyGenerator(g, t))) {
                    throw Error(ErrorKind::Parse,
                                "generators " + std::to_string(g + 1) + " and " +
                                    std::to_string(h + 1) + " do not commute at '" + t + "'");
                }
            }
        }
    }
}

const std::string& GroupAction::applyGenerator(int gen, const std::string& token) const {
    const auto& m = maps_.at(static_cast<std::size_t>(gen));
    auto it = m.find(token);
    return it == m.end() ? token : it->second;
}

std::string GroupAction::applyElement(GroupElement g, const std::string& token) const {
    std::string out = token;
    for (int i = 0; i < rank_; ++i) {
        if (g & (GroupElement{1} << i)) out = applyGenerator(i, out);
    }
    return out;
}

Simplex GroupAction::applyGenerator(int gen, const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (const auto& t : s) out.push_back(applyGenerator(gen, t));
    std::sort(out.begin(), out.end());
    return out;
}

Simplex GroupAction::applyElement(GroupElement g, const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (const auto& t : s) out.push_back(applyElement(g, t));
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::string> GroupAction::mentionedTokens() const {
    std::set<std::string> out;
    for (const auto& swapList : swaps_) {
        for (const auto& [a, b] : swapList) {
            out.insert(a);
            out.insert(b);
        }
    }
    return out;
}

std::string GroupAction::serialize() const {
    std::ostringstream out;
    out << "rank " << rank_ << "\n";
    for (int g = 0; g < rank_; ++g) {
        out << "gen " << (g + 1) << "\n";
        for (const auto& [a, b] : swaps_[static_cast<std::size_t>(g)]) {
            out << "swap " << a << " " << b << "\n";
        }
    }
    return out.str();
}

GroupAction GroupAction::parse(std::istream& in) {
    std::string line;
    int lineNo = 0;
    int rank = -1;
    std::vector<std::vector<std::pair<std::string, std::string>>> swaps;
    int currentGen = -1;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::vector<std::string> words;
        std::string w;
        while (tokens >> w) words.push_back(w);
        if (words.empty()) continue;
        auto fail = [&](const std::string& msg) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineNo) + ": " + msg);
        };
        if (words[0] == "rank") {
            if (rank >= 0 || words.size() != 2) fail("bad rank line");
            try {
                rank = std::stoi(words[1]);
            } catch (const std::exception&) {
                fail("bad rank value");
            }
            if (rank < 0) fail("negative rank");
            swaps.resize(static_cast<std::size_t>(rank));
        } else if (words[0] == "gen") {
            if (rank < 0 || words.size() != 2) fail("bad gen line");
            int g = 0;
            try {
                g = std::stoi(words[1]);
            } catch (const std::exception&) {
                fail("bad generator index");
            }
            if (g != currentGen + 2) fail("generators must appear in order 1..rank");
            if (g > rank) fail("generator index exceeds rank");
            currentGen = g - 1;
        } else if (words[0] == "swap") {
            if (currentGen < 0 || words.size() != 3) fail("bad swap line");
            swaps[static_cast<std::size_t>(currentGen)].push_back({words[1], words[2]});
        } else {
            fail("unknown directive '" + words[0] + "'");
        }
    }
    if (rank < 0) {
        throw Error(ErrorKind::Parse, "missing 'rank <n>' header");
    }
    if (currentGen + 1 != rank) {
        throw Error(ErrorKind::Parse, "expected " + std::to_string(rank) +
                                          " generator blocks, saw " +
                                          std::to_string(currentGen + 1));
    }
    return GroupAction(rank, std::move(swaps));
}

GroupAction GroupAction::parseString(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

GroupElement characteristicVector(int i, int rank) {
    if (i == 0) return (GroupElement{1} << rank) - 1;
    return GroupElement{1} << (i - 1);
}

std::vector<GroupElement> faceStabilizer(const std::set<int>& missing, int rank) {
    std::vector<GroupElement> basis;
    for (int i : missing) basis.push_back(characteristicVector(i, rank));
    std::set<GroupElement> span{0};
    for (GroupElement b : basis) {
        std::set<GroupElement> next = span;
        for (GroupElement s : span) next.insert(s ^ b);
        span = std::move(next);
    }
    return std::vector<GroupElement>(span.begin(), span.end());
}

namespace {

void requireTokensKnown(const SimplicialComplex& c, const GroupAction& a) {
    for (const auto& t : a.mentionedTokens()) {
        if (!c.hasVertex(t)) {
            throw Error(ErrorKind::LabelMismatch,
                        "action mentions unknown vertex '" + t + "'");
        }
    }
}

}  // namespace

EquivarianceCheck checkEquivariance(const SimplicialComplex& c, const GroupAction& a) {
    EquivarianceCheck out;
    for (const auto& t : a.mentionedTokens()) {
        if (!c.hasVertex(t)) {
            out.unknownToken = t;
            return out;
        }
    }
    std::set<Simplex> facetSet(c.facets().begin(), c.facets().end());
    for (const auto& f : c.facets()) {
        for (int g = 0; g < a.rank(); ++g) {
            Simplex image = a.applyGenerator(g, f);
            if (image.size() != f.size() || !facetSet.count(image)) {
                out.violation = {f, g};
                return out;
            }
        }
    }
    out.equivariant = true;
    return out;
}

std::vector<std::vector<std::string>> orbits(const SimplicialComplex& c,
                                             const GroupAction& a) {
    requireTokensKnown(c, a);
    std::map<std::string, std::string> root;
    std::function<const std::string&(const std::string&)> find =
        [&](const std::string& x) -> const std::string& {
        auto it = root.find(x);
        if (it == root.end() || it->second == x) return x;
        const std::string& r = find(it->second);
        root[x] = r;
        return r;
    };
    auto unite = [&](const std::string& x, const std::string& y) {
        std::string rx = find(x), ry = find(y);
        if (rx != ry) root[std::max(rx, ry)] = std::min(rx, ry);
    };
    for (const auto& v : c.vertices()) root[v] = v;
    for (const auto& v : c.vertices()) {
        for (int g = 0; g < a.rank(); ++g) {
            unite(v, a.applyGenerator(g, v));
        }
    }
    std::map<std::string, std::vector<std::string>> grouped;
    for (const auto& v : c.vertices()) grouped[find(v)].push_back(v);
    std::vector<std::vector<std::string>> out;
    for (auto& [rep, members] : grouped) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<std::string> fixedPoints(const SimplicialComplex& c, const GroupAction& a) {
    std::vector<std::string> out;
    for (const auto& orbit : orbits(c, a)) {
        if (orbit.size() == 1) out.push_back(orbit[0]);
    }
    return out;
}

std::vector<GroupElement> stabilizer(const std::string& label, const GroupAction& a) {
    std::vector<GroupElement> out;
    for (GroupElement g = 0; g < (GroupElement{1} << a.rank()); ++g) {
        if (a.applyElement(g, label) == label) out.push_back(g);
    }
    return out;
}

bool parityCheck(const SimplicialComplex& c, const GroupAction& a) {
    const auto fixed = fixedPoints(c, a);
    return (c.vertexCount() - fixed.size()) % 2 == 0;
}

QuotientResult quotientByAction(const SimplicialComplex& c, const GroupAction& a) {
    requireTokensKnown(c, a);
    QuotientResult out;
    std::map<std::string, std::string> classOf;
    for (const auto& orbit : orbits(c, a)) {
        for (const auto& v : orbit) classOf[v] = orbit[0];
    }
    out.classOf = classOf;

    std::set<std::string> classLabels;
    for (const auto& [v, cls] : classOf) classLabels.insert(cls);

    std::set<std::string> foldLabels;
    std::map<Simplex, long long> counts;
    for (const auto& f : c.facets()) {
        std::map<std::string, std::vector<std::string>> byClass;
        for (const auto& v : f) byClass[classOf[v]].push_back(v);
        std::vector<std::string> image;
        int doubled = 0;
        std::string foldLabel;
        for (const auto& [cls, members] : byClass) {
            if (members.size() == 1) {
                image.push_back(cls);
            } else if (members.size() == 2) {
                ++doubled;
                image.push_back(cls);
                foldLabel = cls + "^";
            } else {
                std::ostringstream msg;
                msg << "facet has " << members.size()
                    << " vertices in one orbit (class " << cls << ")";
                throw Error(ErrorKind::NonSimplicialQuotient, msg.str());
            }
        }
        if (doubled > 1) {
            throw Error(ErrorKind::NonSimplicialQuotient,
                        "facet folds along more than one orbit pair");
        }
        if (doubled == 1) {
            if (classLabels.count(foldLabel)) {
                throw Error(ErrorKind::NonSimplicialQuotient,
                            "fold label collides with an existing class: " + foldLabel);
            }
            foldLabels.insert(foldLabel);
            image.push_back(foldLabel);
        }
        std::sort(image.begin(), image.end());
        counts[std::move(image)]++;
    }
    out.foldVertices.assign(foldLabels.begin(), foldLabels.end());
    std::vector<Simplex> facets;
    facets.reserve(counts.size());
    for (const auto& [f, n] : counts) facets.push_back(f);
    out.complex = SimplicialComplex::fromFacets(facets);
    // keep only multiplicities of facets that survived maximality filtering
    for (const auto& f : out.complex.facets()) {
        out.multiplicity[f] = counts.count(f) ? counts.at(f) : 0;
    }
    return out;
}

namespace {

GroupAction actionFromPermutations(const SimplicialComplex& c,
                                   const std::vector<VertexBijection>& gens) {
    std::vector<std::vector<std::pair<std::string, std::string>>> swaps;
    for (const auto& g : gens) {
        std::vector<std::pair<std::string, std::string>> sw;
        for (const auto& [from, to] : g) {
            if (from < to) sw.push_back({from, to});
        }
        swaps.push_back(std::move(sw));
    }
    (void)c;
    return GroupAction(static_cast<int>(gens.size()), std::move(swaps));
}

}  // namespace

std::vector<GroupAction> findZ2nSubactions(const SimplicialComplex& c, int n,
                                           std::size_t maxResults) {
    std::vector<GroupAction> results;
    if (n <= 0) return results;
    auto autos = allAutomorphisms(c);
    const auto& verts = c.vertices();
    const std::size_t nv = verts.size();

    // permutations as id vectors
    std::vector<std::vector<int>> perms;
    std::map<std::string, int> vid;
    for (std::size_t i = 0; i < nv; ++i) vid[verts[i]] = static_cast<int>(i);
    for (const auto& a : autos) {
        std::vector<int> p(nv);
        for (const auto& [from, to] : a) p[static_cast<std::size_t>(vid[from])] = vid[to];
        perms.push_back(std::move(p));
    }
    std::sort(perms.begin(), perms.end());

    std::vector<int> identity(nv);
    for (std::size_t i = 0; i < nv; ++i) identity[i] = static_cast<int>(i);

    auto compose = [&](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> h(nv);
        for (std::size_t i = 0; i < nv; ++i) h[i] = f[static_cast<std::size_t>(g[i])];
        return h;
    };
    auto isInvolution = [&](const std::vector<int>& p) {
        return p != identity && compose(p, p) == identity;
    };
    auto commute = [&](const std::vector<int>& p, const std::vector<int>& q) {
        return compose(p, q) == compose(q, p);
    };

    std::vector<std::vector<int>> involutions;
    for (const auto& p : perms) {
        if (isInvolution(p)) involutions.push_back(p);
    }

    std::set<std::set<std::vector<int>>> seenSubgroups;

    std::function<void(std::size_t, std::vector<std::size_t>&, std::set<std::vector<int>>&)>
        dfs = [&](std::size_t start, std::vector<std::size_t>& chosen,
                  std::set<std::vector<int>>& span) {
            if (results.size() >= maxResults) return;
            if (chosen.size() == static_cast<std::size_t>(n)) {
                if (!seenSubgroups.insert(span).second) return;
                std::vector<VertexBijection> gens;
                for (std::size_t gi : chosen) {
                    VertexBijection b;
                    for (std::size_t i = 0; i < nv; ++i) {
                        b[verts[i]] = verts[static_cast<std::size_t>(involutions[gi][i])];
                    }
                    gens.push_back(std::move(b));
                }
                GroupAction candidate = actionFromPermutations(c, gens);
                try {
                    QuotientResult q = quotientByAction(c, candidate);
                    Recognition rec = recognize(q.complex);
                    if (rec.verdict == Verdict::Ball && rec.dim == c.dim()) {
                        results.push_back(std::move(candidate));
                    }
                } catch (const Error&) {
                    // non-simplicial quotient: not a locally-standard-like action
                }
                return;
            }
            for (std::size_t i = start; i < involutions.size(); ++i) {
                if (results.size() >= maxResults) return;
                const auto& cand = involutions[i];
                if (span.count(cand)) continue;  // dependent
                bool ok = true;
                for (std::size_t gi : chosen) {
                    if (!commute(involutions[gi], cand)) {
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
    return results;
}

std::optional<GroupAction> findZ2nSubaction(const SimplicialComplex& c, int n) {
    auto found = findZ2nSubactions(c, n, 1);
    if (found.empty()) return std::nullopt;
    return found.front();
}

}  // namespace equitri
