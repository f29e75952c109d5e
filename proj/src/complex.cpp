#include "equitri/complex.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace equitri {

namespace {

bool tokenWellFormed(const std::string& token) {
    if (token.empty()) return false;
    for (char c : token) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Simplex makeSimplex(std::vector<std::string> tokens) {
    if (tokens.empty()) {
        throw Error(ErrorKind::MalformedSimplex, "simplex has no vertices");
    }
    for (const auto& t : tokens) {
        if (!tokenWellFormed(t)) {
            throw Error(ErrorKind::MalformedSimplex, "bad vertex token '" + t + "'");
        }
    }
    std::sort(tokens.begin(), tokens.end());
    if (std::adjacent_find(tokens.begin(), tokens.end()) != tokens.end()) {
        throw Error(ErrorKind::MalformedSimplex, "duplicate vertex in simplex");
    }
    return tokens;
}

Simplex simplexFromCompact(const std::string& compact) {
    std::vector<std::string> tokens;
    tokens.reserve(compact.size());
    for (char c : compact) tokens.push_back(std::string(1, c));
    return makeSimplex(std::move(tokens));
}

bool isSubset(const Simplex& sub, const Simplex& sup) {
    return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

struct SimplicialComplex::FaceCache {
    std::mutex mutex;
    std::map<int, std::vector<Simplex>> byDim;
    std::vector<Simplex> emptyList;
};

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex SimplicialComplex::build(std::vector<Simplex> facets) {
    std::vector<Simplex> sorted;
    sorted.reserve(facets.size());
    for (auto& f : facets) sorted.push_back(makeSimplex(std::move(f)));
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // Drop non-maximal entries.
    std::vector<Simplex> maximal;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < sorted.size() && !contained; ++j) {
            if (i == j) continue;
            if (sorted[i].size() < sorted[j].size() && isSubset(sorted[i], sorted[j])) {
                contained = true;
            } else if (sorted[i].size() == sorted[j].size() && j < i &&
                       sorted[i] == sorted[j]) {
                contained = true;
            }
        }
        if (!contained) maximal.push_back(sorted[i]);
    }

    SimplicialComplex c;
    c.facets_ = std::move(maximal);
    std::set<std::string> verts;
    for (const auto& f : c.facets_) {
        c.dim_ = std::max(c.dim_, static_cast<int>(f.size()) - 1);
        verts.insert(f.begin(), f.end());
    }
    c.vertices_.assign(verts.begin(), verts.end());
    return c;
}

SimplicialComplex SimplicialComplex::fromFacets(const std::vector<Simplex>& facets) {
    if (facets.empty()) {
        throw Error(ErrorKind::EmptyComplex, "facet list is empty");
    }
    return build(facets);
}

SimplicialComplex SimplicialComplex::fromFacetsAllowEmpty(const std::vector<Simplex>& facets) {
    return build(facets);
}

bool SimplicialComplex::hasVertex(const std::string& token) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), token);
}

namespace {

void enumerateSubsets(const Simplex& facet, std::size_t size, std::set<Simplex>& out) {
    // k-subsets in lexicographic order via index combinations
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        Simplex s(size);
        for (std::size_t i = 0; i < size; ++i) s[i] = facet[idx[i]];
        out.insert(std::move(s));
        std::size_t i = size;
        while (i > 0) {
            --i;
            if (idx[i] != i + facet.size() - size) break;
            if (i == 0) return;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
    if (k < 0 || k > dim_) return cache_->emptyList;
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->byDim.find(k);
    if (it != cache_->byDim.end()) return it->second;
    std::set<Simplex> out;
    const std::size_t size = static_cast<std::size_t>(k) + 1;
    for (const auto& f : facets_) {
        if (f.size() >= size) enumerateSubsets(f, size, out);
    }
    auto& slot = cache_->byDim[k];
    slot.assign(out.begin(), out.end());
    return slot;
}

bool SimplicialComplex::hasFace(const Simplex& s) const {
    for (const auto& f : facets_) {
        if (s.size() <= f.size() && isSubset(s, f)) return true;
    }
    return false;
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
    if (!hasFace(s)) {
        std::string name;
        for (const auto& t : s) name += t + " ";
        throw Error(ErrorKind::NotAFace, "not a face of the complex: " + name);
    }
    std::vector<Simplex> linkFacets;
    for (const auto& f : facets_) {
        if (s.size() > f.size() || !isSubset(s, f)) continue;
        Simplex rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(),
                            std::back_inserter(rest));
        if (!rest.empty()) linkFacets.push_back(std::move(rest));
    }
    return fromFacetsAllowEmpty(linkFacets);
}

SimplicialComplex SimplicialComplex::star(const Simplex& s) const {
    if (!hasFace(s)) {
        throw Error(ErrorKind::NotAFace, "not a face of the complex");
    }
    std::vector<Simplex> starFacets;
    for (const auto& f : facets_) {
        if (s.size() <= f.size() && isSubset(s, f)) starFacets.push_back(f);
    }
    return fromFacetsAllowEmpty(starFacets);
}

SimplicialComplex SimplicialComplex::boundaryComplex() const {
    // Ridges of a facet f are its codim-1 subsets; a ridge on the boundary
    // lies in exactly one facet.
    std::map<Simplex, int> ridgeCount;
    for (const auto& f : facets_) {
        if (f.size() < 2) continue;
        for (std::size_t omit = 0; omit < f.size(); ++omit) {
            Simplex r;
            r.reserve(f.size() - 1);
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i != omit) r.push_back(f[i]);
            }
            ridgeCount[std::move(r)]++;
        }
    }
    std::vector<Simplex> bd;
    for (const auto& [ridge, count] : ridgeCount) {
        if (count == 1) bd.push_back(ridge);
    }
    return fromFacetsAllowEmpty(bd);
}

bool SimplicialComplex::isPure() const {
    for (const auto& f : facets_) {
        if (static_cast<int>(f.size()) - 1 != dim_) return false;
    }
    return true;
}

bool SimplicialComplex::isConnected() const {
    if (vertices_.size() <= 1) return true;
    std::map<std::string, int> id;
    for (std::size_t i = 0; i < vertices_.size(); ++i) id[vertices_[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(vertices_.size());
    for (const auto& f : facets_) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                adj[id[f[i]]].push_back(id[f[j]]);
                adj[id[f[j]]].push_back(id[f[i]]);
            }
        }
    }
    std::vector<bool> seen(vertices_.size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == vertices_.size();
}

bool SimplicialComplex::isStronglyConnected() const {
    if (facets_.empty()) return false;
    if (!isPure()) return false;
    if (facets_.size() == 1) return true;
    // Facets adjacent when they share a ridge.
    std::map<Simplex, std::vector<int>> ridgeToFacets;
    for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
        const auto& f = facets_[fi];
        if (f.size() < 2) return facets_.size() == 1;
        for (std::size_t omit = 0; omit < f.size(); ++omit) {
            Simplex r;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i != omit) r.push_back(f[i]);
            }
            ridgeToFacets[std::move(r)].push_back(static_cast<int>(fi));
        }
    }
    std::vector<std::vector<int>> adj(facets_.size());
    for (const auto& [ridge, fs] : ridgeToFacets) {
        for (std::size_t i = 0; i < fs.size(); ++i) {
            for (std::size_t j = i + 1; j < fs.size(); ++j) {
                adj[fs[i]].push_back(fs[j]);
                adj[fs[j]].push_back(fs[i]);
            }
        }
    }
    std::vector<bool> seen(facets_.size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == facets_.size();
}

FVector SimplicialComplex::fVector() const {
    FVector fv;
    for (int k = 0; k <= dim_; ++k) {
        fv.push_back(static_cast<long long>(faces(k).size()));
    }
    return fv;
}

long long SimplicialComplex::eulerCharacteristic() const {
    long long chi = 0;
    int sign = 1;
    for (long long count : fVector()) {
        chi += sign * count;
        sign = -sign;
    }
    return chi;
}

std::string SimplicialComplex::serializeTri() const {
    std::ostringstream out;
    out << "dim " << dim_ << "\n";
    for (const auto& f : facets_) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out << ' ';
            out << f[i];
        }
        out << "\n";
    }
    return out.str();
}

SimplicialComplex SimplicialComplex::parseTri(std::istream& in) {
    std::string line;
    int lineNo = 0;
    bool haveDim = false;
    int declaredDim = -2;
    std::vector<Simplex> facets;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string trimmed = line;
        auto hash = trimmed.find('#');
        if (hash != std::string::npos) trimmed.resize(hash);
        std::istringstream tokens(trimmed);
        std::vector<std::string> words;
        std::string w;
        while (tokens >> w) words.push_back(w);
        if (words.empty()) continue;
        if (!haveDim) {
            if (words.size() != 2 || words[0] != "dim") {
                throw Error(ErrorKind::Parse,
                            "line " + std::to_string(lineNo) + ": expected 'dim <d>' header");
            }
            try {
                declaredDim = std::stoi(words[1]);
            } catch (const std::exception&) {
                throw Error(ErrorKind::Parse,
                            "line " + std::to_string(lineNo) + ": bad dimension value");
            }
            haveDim = true;
            continue;
        }
        try {
            facets.push_back(makeSimplex(words));
        } catch (const Error& e) {
            throw Error(ErrorKind::Parse,
                        "line " + std::to_string(lineNo) + ": " + e.what());
        }
    }
    if (!haveDim) {
        throw Error(ErrorKind::Parse, "missing 'dim <d>' header");
    }
    if (facets.empty()) {
        throw Error(ErrorKind::EmptyComplex, "no facets in .tri input");
    }
    SimplicialComplex c = build(facets);
    if (c.dim() != declaredDim) {
        throw Error(ErrorKind::Parse,
                    "declared dim " + std::to_string(declaredDim) +
                        " does not match facet dimension " + std::to_string(c.dim()));
    }
    return c;
}

SimplicialComplex SimplicialComplex::parseTriString(const std::string& text) {
    std::istringstream in(text);
    return parseTri(in);
}

}  // namespace equitri
