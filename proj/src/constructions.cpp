#include "equitri/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace equitri {

namespace {

using Point = std::vector<long long>;  // doubled coordinates, integer

std::string midpointToken(int i, int j) {
    return "v" + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j));
}

std::string cornerToken(int i) { return "e" + std::to_string(i); }

void requireSmallN(int n) {
    if (n > 9) {
        throw Error(ErrorKind::Unsupported, "n > 9 is not supported by the token scheme");
    }
}

/// Base orbit-simplex point of a token: e0 at the origin, corners at twice
/// the unit vectors, midpoints at the coordinate sums.
Point basePoint(const std::string& base, int n) {
    Point p(static_cast<std::size_t>(n), 0);
    if (base.size() == 2 && base[0] == 'e') {
        int i = base[1] - '0';
        if (i > 0) p[static_cast<std::size_t>(i - 1)] = 2;
        return p;
    }
    if (base.size() == 3 && base[0] == 'v') {
        int i = base[1] - '0';
        int j = base[2] - '0';
        if (i > 0) p[static_cast<std::size_t>(i - 1)] = 1;
        p[static_cast<std::size_t>(j - 1)] = 1;
        return p;
    }
    throw Error(ErrorKind::ConstructionInvariant, "unrecognized base token " + base);
}

/// Lifted token = base plus 'p'/'m' sign suffix over the support; the
/// all-positive copy keeps the bare base token.
std::string liftToken(const std::string& base, const Point& point) {
    std::string suffix;
    bool allPlus = true;
    for (long long x : point) {
        if (x > 0) suffix += 'p';
        if (x < 0) {
            suffix += 'm';
            allPlus = false;
        }
    }
    if (allPlus) return base;
    return base + suffix;
}

std::string pointKey(const Point& p) {
    std::string k;
    for (long long x : p) k += std::to_string(x) + ",";
    return k;
}

long long absSum(const Point& p) {
    long long s = 0;
    for (long long x : p) s += std::llabs(x);
    return s;
}

/// Exact determinant of a small integer matrix (fraction-free Bareiss).
long long intDet(std::vector<std::vector<long long>> m) {
    const std::size_t n = m.size();
    long long denom = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swapRow = k + 1;
            while (swapRow < n && m[swapRow][k] == 0) ++swapRow;
            if (swapRow == n) return 0;
            std::swap(m[k], m[swapRow]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / denom;
            }
            m[i][k] = 0;
        }
        denom = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

long long orientation(const std::vector<Point>& pts, const std::vector<int>& simplex) {
    const std::size_t n = pts[0].size();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m[r][c] = pts[static_cast<std::size_t>(simplex[r + 1])][c] -
                      pts[static_cast<std::size_t>(simplex[0])][c];
        }
    }
    return intDet(std::move(m));
}

long long orientationWithApex(const std::vector<Point>& pts, const std::vector<int>& face,
                              int apex) {
    std::vector<int> s = face;
    s.push_back(apex);
    std::rotate(s.rbegin(), s.rbegin() + 1, s.rend());  // apex first keeps face order fixed
    return orientation(pts, s);
}

struct Placing {
    std::vector<std::vector<int>> simplices;  // vertex index sets, sorted
};

/// Beneath-beyond placing triangulation of points in convex position,
/// processed in the given order.
Placing placingTriangulation(const std::vector<Point>& pts) {
    const std::size_t dim = pts[0].size();
    if (pts.size() < dim + 1) {
        throw Error(ErrorKind::ConstructionInvariant, "too few points for placing");
    }
    Placing t;
    std::vector<int> first(dim + 1);
    std::iota(first.begin(), first.end(), 0);
    if (orientation(pts, first) == 0) {
        throw Error(ErrorKind::ConstructionInvariant,
                    "initial placing simplex is degenerate");
    }
    t.simplices.push_back(first);

    for (std::size_t next = dim + 1; next < pts.size(); ++next) {
        // boundary faces: (dim-1)-faces in exactly one simplex, with the
        // opposite vertex remembered
        std::map<std::vector<int>, std::vector<int>> faceOpposite;
        for (const auto& s : t.simplices) {
            for (std::size_t omit = 0; omit < s.size(); ++omit) {
                std::vector<int> face;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i != omit) face.push_back(s[i]);
                }
                faceOpposite[face].push_back(s[omit]);
            }
        }
        std::vector<std::vector<int>> added;
        for (const auto& [face, opposite] : faceOpposite) {
            if (opposite.size() != 1) continue;
            long long sideNew = orientationWithApex(pts, face, static_cast<int>(next));
            long long sideOld = orientationWithApex(pts, face, opposite[0]);
            if (sideNew != 0 && sideOld != 0 &&
                ((sideNew > 0) != (sideOld > 0))) {
                std::vector<int> s = face;
                s.push_back(static_cast<int>(next));
                std::sort(s.begin(), s.end());
                added.push_back(std::move(s));
            }
        }
        if (added.empty()) {
            throw Error(ErrorKind::ConstructionInvariant,
                        "placing point saw no visible facet");
        }
        for (auto& s : added) t.simplices.push_back(std::move(s));
    }
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

FacePosition positionFor(const std::string& base, int n) {
    FacePosition pos;
    if (base[0] == 'e') {
        int i = base[1] - '0';
        for (int k = 0; k <= n; ++k) {
            if (k != i) pos.missing.insert(k);
        }
        pos.role = FacePosition::Role::Corner;
    } else {
        int i = base[1] - '0';
        int j = base[2] - '0';
        for (int k = 0; k <= n; ++k) {
            if (k != i && k != j) pos.missing.insert(k);
        }
        pos.role = FacePosition::Role::EdgeMidpoint;
    }
    return pos;
}

GroupElement canonicalCoset(GroupElement raw, const std::set<int>& missing, int rank) {
    GroupElement best = raw;
    for (GroupElement h : faceStabilizer(missing, rank)) {
        best = std::min(best, raw ^ h);
    }
    return best;
}

}  // namespace

std::vector<Simplex> subdivideHypersimplex(int n) {
    if (n < 2) {
        throw Error(ErrorKind::Unsupported, "midpoint cell needs n >= 2");
    }
    requireSmallN(n);
    // tokens in sorted order with their points
    std::vector<std::string> tokens;
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) tokens.push_back(midpointToken(i, j));
    }
    std::sort(tokens.begin(), tokens.end());
    std::vector<Point> pts;
    pts.reserve(tokens.size());
    for (const auto& t : tokens) pts.push_back(basePoint(t, n));

    Placing placing = placingTriangulation(pts);

    // exact volume partition: sum |det| over cells equals 2^n - (n+1)
    long long volume = 0;
    for (const auto& s : placing.simplices) {
        long long det = std::llabs(orientation(pts, s));
        if (det == 0) {
            throw Error(ErrorKind::ConstructionInvariant, "degenerate placing cell");
        }
        volume += det;
    }
    const long long expected = (1LL << n) - (n + 1);
    if (volume != expected) {
        throw Error(ErrorKind::ConstructionInvariant,
                    "placing cells cover volume " + std::to_string(volume) +
                        ", expected " + std::to_string(expected));
    }

    // ridge check: interior ridges in exactly two cells, boundary ridges in
    // one and affinely inside a supporting hyperplane of the midpoint cell
    std::map<std::vector<int>, int> ridgeCount;
    for (const auto& s : placing.simplices) {
        for (std::size_t omit = 0; omit < s.size(); ++omit) {
            std::vector<int> r;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i != omit) r.push_back(s[i]);
            }
            ridgeCount[r]++;
        }
    }
    for (const auto& [ridge, count] : ridgeCount) {
        if (count == 2) continue;
        if (count != 1) {
            throw Error(ErrorKind::ConstructionInvariant,
                        "placing ridge lies in " + std::to_string(count) + " cells");
        }
        bool supported = false;
        for (int i = 1; i <= n && !supported; ++i) {
            bool allZero = true, allOne = true;
            for (int v : ridge) {
                long long x = pts[static_cast<std::size_t>(v)][static_cast<std::size_t>(i - 1)];
                allZero &= (x == 0);
                allOne &= (x == 1);
            }
            supported = allZero || allOne;
        }
        if (!supported) {
            bool sumOne = true, sumTwo = true;
            for (int v : ridge) {
                long long s = absSum(pts[static_cast<std::size_t>(v)]);
                sumOne &= (s == 1);
                sumTwo &= (s == 2);
            }
            supported = sumOne || sumTwo;
        }
        if (!supported) {
            throw Error(ErrorKind::ConstructionInvariant,
                        "boundary ridge not on a supporting hyperplane");
        }
    }

    std::vector<Simplex> out;
    for (const auto& s : placing.simplices) {
        Simplex f;
        for (int v : s) f.push_back(tokens[static_cast<std::size_t>(v)]);
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Constructed buildYn(int n) {
    if (n < 0) {
        throw Error(ErrorKind::Unsupported, "n must be nonnegative");
    }
    requireSmallN(n);
    Constructed out;
    if (n == 0) {
        out.complex = SimplicialComplex::fromFacets({{cornerToken(0)}});
        out.positions[cornerToken(0)] = FacePosition{{}, 0, FacePosition::Role::Corner};
        return out;
    }

    std::vector<Simplex> facets;
    for (int i = 0; i <= n; ++i) {
        Simplex corner{cornerToken(i)};
        for (int j = 0; j <= n; ++j) {
            if (j != i) corner.push_back(midpointToken(i, j));
        }
        std::sort(corner.begin(), corner.end());
        facets.push_back(std::move(corner));
    }
    if (n >= 2) {
        for (auto& f : subdivideHypersimplex(n)) facets.push_back(std::move(f));
    }
    out.complex = SimplicialComplex::fromFacets(facets);

    const std::size_t expectedVerts =
        static_cast<std::size_t>((n + 1) * (n + 2) / 2);
    if (out.complex.vertexCount() != expectedVerts) {
        throw Error(ErrorKind::ConstructionInvariant,
                    "simplex triangulation has wrong vertex count");
    }
    for (const auto& v : out.complex.vertices()) {
        out.positions[v] = positionFor(v, n);
        out.fiber[v] = {v, 0};
    }
    return out;
}

Constructed liftToCrossPolytope(const Constructed& yn) {
    // infer n from the corner tokens
    int n = -1;
    for (const auto& v : yn.complex.vertices()) {
        if (v[0] == 'e') n = std::max(n, v[1] - '0');
    }
    if (n < 1) {
        throw Error(ErrorKind::Unsupported, "lift needs n >= 1");
    }

    struct VertexInfo {
        Point point;
        std::string base;
    };
    std::map<std::string, VertexInfo> byToken;
    std::map<std::string, std::string> keyToToken;

    auto internPoint = [&](const std::string& base, const Point& p) {
        std::string key = pointKey(p);
        auto it = keyToToken.find(key);
        if (it != keyToToken.end()) return it->second;
        std::string token = liftToken(base, p);
        keyToToken[key] = token;
        byToken[token] = {p, base};
        return token;
    };

    std::vector<Simplex> lifted;
    const GroupElement full = GroupElement{1} << n;
    for (GroupElement s = 0; s < full; ++s) {
        for (const auto& facet : yn.complex.facets()) {
            Simplex image;
            for (const auto& v : facet) {
                Point p = basePoint(v, n);
                for (int k = 0; k < n; ++k) {
                    if (s & (GroupElement{1} << k)) p[static_cast<std::size_t>(k)] = -p[static_cast<std::size_t>(k)];
                }
                image.push_back(internPoint(v, p));
            }
            std::sort(image.begin(), image.end());
            lifted.push_back(std::move(image));
        }
    }
    std::set<Simplex> distinct(lifted.begin(), lifted.end());
    if (distinct.size() != yn.complex.facetCount() * full) {
        throw Error(ErrorKind::ConstructionInvariant,
                    "lifted facets are not pairwise distinct");
    }

    Constructed out;
    out.complex = SimplicialComplex::fromFacets(lifted);

    const std::size_t expectedVerts = static_cast<std::size_t>(2 * n * n + 2 * n + 1);
    if (out.complex.vertexCount() != expectedVerts) {
        throw Error(ErrorKind::ConstructionInvariant, "lift has wrong vertex count");
    }

    // generator k flips coordinate k+1
    std::vector<std::vector<std::pair<std::string, std::string>>> swaps(
        static_cast<std::size_t>(n));
    for (const auto& [token, info] : byToken) {
        for (int k = 0; k < n; ++k) {
            if (info.point[static_cast<std::size_t>(k)] == 0) continue;
            Point flipped = info.point;
            flipped[static_cast<std::size_t>(k)] = -flipped[static_cast<std::size_t>(k)];
            const std::string other = keyToToken.at(pointKey(flipped));
            if (token < other) {
                swaps[static_cast<std::size_t>(k)].push_back({token, other});
            }
        }
    }
    out.action = GroupAction(n, std::move(swaps));

    for (const auto& [token, info] : byToken) {
        FacePosition pos = positionFor(info.base, n);
        GroupElement raw = 0;
        for (int k = 0; k < n; ++k) {
            if (info.point[static_cast<std::size_t>(k)] < 0) raw |= GroupElement{1} << k;
        }
        // coset modulo the geometric stabilizer (flips off the support)
        GroupElement support = 0;
        for (int k = 0; k < n; ++k) {
            if (info.point[static_cast<std::size_t>(k)] != 0) support |= GroupElement{1} << k;
        }
        pos.cosetRep = raw & support;
        out.positions[token] = pos;
        out.fiber[token] = {info.base, pos.cosetRep};
    }

    const auto fixed = fixedPoints(out.complex, out.action);
    if (fixed != std::vector<std::string>{cornerToken(0)}) {
        throw Error(ErrorKind::ConstructionInvariant,
                    "lift action must fix exactly the center vertex");
    }

    if (n == 3) {
        out.notes.push_back(
            "cross-polytope lift at n=3: vertex census is 25 = 2n^2+2n+1; an earlier "
            "reported count of 22 for this object does not match the census; the "
            "antipodal quotient below still has (n+1)^2 = 16 vertices");
    }
    return out;
}

Constructed antipodalQuotient(const Constructed& lift) {
    int n = -1;
    for (const auto& v : lift.complex.vertices()) {
        if (v[0] == 'e' && v.size() >= 2) n = std::max(n, v[1] - '0');
    }
    if (n < 1 || lift.positions.empty()) {
        throw Error(ErrorKind::Unsupported, "antipodal quotient needs a lifted complex");
    }

    // reconstruct each vertex point from base + coset bits
    std::map<std::string, Point> pointOf;
    for (const auto& [token, fiberData] : lift.fiber) {
        Point p = basePoint(fiberData.first, n);
        for (int k = 0; k < n; ++k) {
            if (fiberData.second & (GroupElement{1} << k)) {
                p[static_cast<std::size_t>(k)] = -p[static_cast<std::size_t>(k)];
            }
        }
        pointOf[token] = p;
    }

    auto isBoundary = [&](const Point& p) { return absSum(p) == 2; };
    auto classToken = [&](const Point& p, const std::string& base) {
        Point rep = p;
        if (isBoundary(p)) {
            for (long long x : p) {
                if (x > 0) break;
                if (x < 0) {
                    for (auto& y : rep) y = -y;
                    break;
                }
            }
        }
        bool allPlus = true;
        for (long long x : rep) {
            if (x < 0) allPlus = false;
        }
        return allPlus ? base : base + "p";
    };

    std::map<std::string, std::string> classOf;
    std::map<std::string, std::pair<std::string, Point>> classData;  // class -> (base, rep)
    for (const auto& [token, fiberData] : lift.fiber) {
        const Point& p = pointOf[token];
        std::string cls = classToken(p, fiberData.first);
        classOf[token] = cls;
        Point rep = p;
        if (isBoundary(p)) {
            for (long long x : p) {
                if (x > 0) break;
                if (x < 0) {
                    for (auto& y : rep) y = -y;
                    break;
                }
            }
        }
        classData[cls] = {fiberData.first, rep};
    }

    std::vector<Simplex> facets;
    std::set<Simplex> distinct;
    for (const auto& f : lift.complex.facets()) {
        Simplex image;
        for (const auto& v : f) image.push_back(classOf[v]);
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
            throw Error(ErrorKind::ConstructionInvariant,
                        "antipodal identification merged two vertices of a facet");
        }
        if (!distinct.insert(image).second) {
            throw Error(ErrorKind::ConstructionInvariant,
                        "antipodal identification merged two facets");
        }
        facets.push_back(std::move(image));
    }

    Constructed out;
    out.complex = SimplicialComplex::fromFacets(facets);

    // The identification is injective on vertices and facets, but distinct
    // edges of the lift can still land on the same vertex class pair: an
    // edge from an interior vertex to a boundary vertex coincides with its
    // partner through the antipode of the boundary endpoint. Facet-set
    // storage conflates such pairs, so the quotient is no longer locally
    // injective there. Detect and report; the count stays (n+1)^2 either way.
    {
        std::set<std::pair<std::string, std::string>> liftEdges;
        for (const auto& f : lift.complex.facets()) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                for (std::size_t j = i + 1; j < f.size(); ++j) {
                    liftEdges.insert({f[i], f[j]});
                }
            }
        }
        std::map<std::pair<std::string, std::string>, std::set<std::string>> classPairSources;
        for (const auto& [a, b] : liftEdges) {
            // identify an edge with its full antipode when both ends are on
            // the boundary sphere
            std::string ca = classOf[a], cb = classOf[b];
            std::pair<std::string, std::string> key =
                (ca < cb) ? std::make_pair(ca, cb) : std::make_pair(cb, ca);
            const Point& pa = pointOf[a];
            const Point& pb = pointOf[b];
            Point na = pa, nb = pb;
            for (auto& x : na) x = -x;
            for (auto& x : nb) x = -x;
            auto edgeKey = [](const Point& p, const Point& q) {
                std::string kp = pointKey(p), kq = pointKey(q);
                return std::min(kp, kq) + "|" + std::max(kp, kq);
            };
            std::string rep = edgeKey(pa, pb);
            if (isBoundary(pa) && isBoundary(pb)) {
                rep = std::min(rep, edgeKey(na, nb));
            }
            classPairSources[key].insert(rep);
        }
        std::size_t conflated = 0;
        for (const auto& [key, sources] : classPairSources) {
            if (sources.size() > 1) conflated += sources.size() - 1;
        }
        if (conflated > 0) {
            out.notes.push_back(
                "antipodal identification conflates " + std::to_string(conflated) +
                " edge pairs (distinct arcs with equal endpoint classes); the facet-set "
                "complex is a closed pseudomanifold but not locally injective over the "
                "cross-polytope boundary, and manifold recognition fails for n >= 3");
        }
    }
    const std::size_t expectedVerts = static_cast<std::size_t>((n + 1) * (n + 1));
    if (out.complex.vertexCount() != expectedVerts) {
        throw Error(ErrorKind::ConstructionInvariant,
                    "quotient has wrong vertex count");
    }

    // induced action: flip a class representative, re-canonicalize
    auto applyFlipToClass = [&](const std::string& cls, int k) {
        const auto& [base, rep] = classData.at(cls);
        Point q = rep;
        q[static_cast<std::size_t>(k)] = -q[static_cast<std::size_t>(k)];
        return classToken(q, base);
    };
    std::vector<std::vector<std::pair<std::string, std::string>>> swaps(
        static_cast<std::size_t>(n));
    for (const auto& [cls, data] : classData) {
        for (int k = 0; k < n; ++k) {
            std::string other = applyFlipToClass(cls, k);
            if (cls < other) swaps[static_cast<std::size_t>(k)].push_back({cls, other});
        }
    }
    out.action = GroupAction(n, std::move(swaps));

    for (const auto& [cls, data] : classData) {
        const auto& [base, rep] = data;
        FacePosition pos = positionFor(base, n);
        GroupElement raw = 0;
        for (int k = 0; k < n; ++k) {
            if (rep[static_cast<std::size_t>(k)] < 0) raw |= GroupElement{1} << k;
        }
        pos.cosetRep = canonicalCoset(raw, pos.missing, n);
        out.positions[cls] = pos;
        out.fiber[cls] = {base, pos.cosetRep};
    }

    auto check = checkEquivariance(out.complex, out.action);
    if (!check.equivariant) {
        throw Error(ErrorKind::ConstructionInvariant,
                    "quotient action is not equivariant");
    }
    out.notes.insert(out.notes.begin(), lift.notes.begin(), lift.notes.end());
    return out;
}

Constructed buildSigmaRpn(int n) {
    if (n < 1) {
        throw Error(ErrorKind::Unsupported, "projective construction needs n >= 1");
    }
    Constructed yn = buildYn(n);
    Constructed lift = liftToCrossPolytope(yn);
    return antipodalQuotient(lift);
}

namespace {

std::string primeToken(const std::string& base) { return base + "p"; }

}  // namespace

Constructed buildReduced(int n) {
    if (n < 2) {
        throw Error(ErrorKind::Unsupported,
                    "reduced construction needs n >= 2 (a quotient circle cannot drop "
                    "below 3 vertices)");
    }
    Constructed sigma = buildSigmaRpn(n);

    // diagonal midpoint for each corner cavity, matching the boundary
    // compatibility rule of the half-size cross-polytope balls
    auto diagonalBase = [&](int i) {
        if (i < n) return midpointToken(i, i + 1);
        return midpointToken(0, n);
    };

    std::set<std::string> corners;
    for (int i = 0; i <= n; ++i) corners.insert(cornerToken(i));

    std::vector<Simplex> facets;
    for (const auto& f : sigma.complex.facets()) {
        bool touchesCorner = false;
        for (const auto& v : f) {
            if (corners.count(v)) touchesCorner = true;
        }
        if (!touchesCorner) facets.push_back(f);
    }

    for (int i = 0; i <= n; ++i) {
        const std::string diag = diagonalBase(i);
        // equator pairs: the remaining midpoints of edges at corner i
        std::vector<std::array<std::string, 2>> pairs;
        for (int k = 0; k <= n; ++k) {
            if (k == i) continue;
            std::string base = midpointToken(std::min(i, k), std::max(i, k));
            if (base == diag) continue;
            pairs.push_back({base, primeToken(base)});
        }
        std::sort(pairs.begin(), pairs.end());
        const std::size_t picks = std::size_t{1} << pairs.size();
        for (std::size_t mask = 0; mask < picks; ++mask) {
            Simplex f{diag, primeToken(diag)};
            for (std::size_t b = 0; b < pairs.size(); ++b) {
                f.push_back(pairs[b][(mask >> b) & 1]);
            }
            std::sort(f.begin(), f.end());
            facets.push_back(std::move(f));
        }
    }

    Constructed out;
    out.complex = SimplicialComplex::fromFacets(facets);
    out.action = sigma.action;
    for (const auto& [token, pos] : sigma.positions) {
        if (!corners.count(token)) out.positions[token] = pos;
    }
    for (const auto& [token, fiberData] : sigma.fiber) {
        if (!corners.count(token)) out.fiber[token] = fiberData;
    }

    if (out.complex.vertexCount() != static_cast<std::size_t>(n * (n + 1))) {
        throw Error(ErrorKind::ConstructionInvariant,
                    "reduced construction has wrong vertex count");
    }
    auto check = checkEquivariance(out.complex, out.action);
    if (!check.equivariant) {
        throw Error(ErrorKind::ConstructionInvariant,
                    "reduced construction lost equivariance");
    }
    if (!fixedPoints(out.complex, out.action).empty()) {
        throw Error(ErrorKind::ConstructionInvariant,
                    "reduced construction must be fixed-point free");
    }
    out.notes = sigma.notes;
    for (auto& note : out.notes) {
        auto pos = note.find("manifold recognition fails");
        if (pos != std::string::npos) {
            note += "; the corner-star replacement keeps the counts and the "
                    "free action but inherits the conflated edges";
        }
    }
    return out;
}

std::vector<std::tuple<std::string, SimplicialComplex, GroupAction>> buildD3Blocks() {
    std::vector<std::tuple<std::string, SimplicialComplex, GroupAction>> out;

    const std::array<std::array<std::string, 2>, 3> pairs = {{
        {"v01", "v01p"},
        {"v02", "v02p"},
        {"v03", "v03p"},
    }};
    auto mkAction = [&](bool withApex) {
        (void)withApex;
        std::vector<std::vector<std::pair<std::string, std::string>>> swaps(3);
        for (int k = 0; k < 3; ++k) {
            swaps[static_cast<std::size_t>(k)].push_back(
                {pairs[static_cast<std::size_t>(k)][0], pairs[static_cast<std::size_t>(k)][1]});
        }
        return GroupAction(3, std::move(swaps));
    };

    {
        // diagonal through the first axis pair, joined to the equator square
        std::vector<Simplex> facets;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                Simplex f{pairs[0][0], pairs[0][1], pairs[1][static_cast<std::size_t>(a)],
                          pairs[2][static_cast<std::size_t>(b)]};
                std::sort(f.begin(), f.end());
                facets.push_back(std::move(f));
            }
        }
        out.emplace_back("oct-diag", SimplicialComplex::fromFacets(facets), mkAction(false));
    }
    {
        std::vector<Simplex> facets;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                for (int c = 0; c < 2; ++c) {
                    Simplex f{"e0", pairs[0][static_cast<std::size_t>(a)],
                              pairs[1][static_cast<std::size_t>(b)],
                              pairs[2][static_cast<std::size_t>(c)]};
                    std::sort(f.begin(), f.end());
                    facets.push_back(std::move(f));
                }
            }
        }
        out.emplace_back("oct-cone", SimplicialComplex::fromFacets(facets), mkAction(true));
    }
    return out;
}

}  // namespace equitri
