#include "equitri/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace equitri {

std::vector<ChainBoundary> boundaryMatrices(const SimplicialComplex& c) {
    std::vector<ChainBoundary> out;
    const int d = c.dim();
    if (d < 1) return out;
    for (int k = 1; k <= d; ++k) {
        const auto& lower = c.faces(k - 1);
        const auto& upper = c.faces(k);
        std::map<Simplex, std::size_t> rowIndex;
        for (std::size_t i = 0; i < lower.size(); ++i) rowIndex[lower[i]] = i;
        ChainBoundary m;
        m.k = k;
        m.rows = lower.size();
        m.cols = upper.size();
        m.columns.resize(upper.size());
        for (std::size_t j = 0; j < upper.size(); ++j) {
            const Simplex& s = upper[j];
            int sign = 1;
            for (std::size_t omit = 0; omit < s.size(); ++omit) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i != omit) face.push_back(s[i]);
                }
                m.columns[j].push_back({rowIndex.at(face), sign});
                sign = -sign;
            }
            std::sort(m.columns[j].begin(), m.columns[j].end());
        }
        out.push_back(std::move(m));
    }
    // d(d(x)) = 0 for consecutive matrices
    for (std::size_t i = 1; i < out.size(); ++i) {
        const ChainBoundary& high = out[i];
        const ChainBoundary& low = out[i - 1];
        for (std::size_t j = 0; j < high.cols; ++j) {
            std::map<std::size_t, long long> acc;
            for (const auto& [mid, s1] : high.columns[j]) {
                for (const auto& [row, s2] : low.columns[mid]) {
                    acc[row] += static_cast<long long>(s1) * s2;
                }
            }
            for (const auto& [row, v] : acc) {
                if (v != 0) {
                    throw Error(ErrorKind::ConstructionInvariant,
                                "boundary composition is nonzero");
                }
            }
        }
    }
    return out;
}

namespace {

// Columns as bitsets over rows, packed in 64-bit words.
struct Gf2Matrix {
    std::size_t rows = 0;
    std::vector<std::vector<std::uint64_t>> cols;

    explicit Gf2Matrix(const ChainBoundary& m) : rows(m.rows) {
        const std::size_t words = (rows + 63) / 64;
        cols.resize(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j) {
            cols[j].assign(words, 0);
            for (const auto& [row, sign] : m.columns[j]) {
                (void)sign;
                cols[j][row / 64] ^= (std::uint64_t{1} << (row % 64));
            }
        }
    }
};

int lowestSetBit(const std::vector<std::uint64_t>& v) {
    for (std::size_t w = 0; w < v.size(); ++w) {
        if (v[w]) {
            return static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w])));
        }
    }
    return -1;
}

}  // namespace

std::size_t gf2Rank(const ChainBoundary& m) {
    Gf2Matrix g(m);
    // pivot row -> column holding that pivot
    std::map<int, std::vector<std::uint64_t>*> pivots;
    std::size_t rank = 0;
    for (auto& col : g.cols) {
        int low = lowestSetBit(col);
        while (low >= 0) {
            auto it = pivots.find(low);
            if (it == pivots.end()) break;
            const auto& p = *it->second;
            for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= p[w];
            low = lowestSetBit(col);
        }
        if (low >= 0) {
            pivots[low] = &col;
            ++rank;
        }
    }
    return rank;
}

namespace {

// Sparse integer matrix for Smith reduction: rows as ordered maps, plus a
// per-column index of rows with a nonzero entry there.
struct SparseInt {
    std::vector<std::map<std::size_t, BigInt>> rows;
    std::vector<std::set<std::size_t>> colIndex;

    SparseInt(std::size_t r, std::size_t c) : rows(r), colIndex(c) {}

    void set(std::size_t r, std::size_t c, const BigInt& v) {
        auto it = rows[r].find(c);
        if (v == 0) {
            if (it != rows[r].end()) {
                rows[r].erase(it);
                colIndex[c].erase(r);
            }
            return;
        }
        if (it == rows[r].end()) {
            rows[r][c] = v;
            colIndex[c].insert(r);
        } else {
            it->second = v;
        }
    }

    BigInt get(std::size_t r, std::size_t c) const {
        auto it = rows[r].find(c);
        return it == rows[r].end() ? BigInt(0) : it->second;
    }

    // row[dst] += q * row[src]
    void addRow(std::size_t dst, std::size_t src, const BigInt& q) {
        if (q == 0) return;
        for (const auto& [col, v] : rows[src]) {
            set(dst, col, get(dst, col) + q * v);
        }
    }

    // col[dst] += q * col[src]
    void addCol(std::size_t dst, std::size_t src, const BigInt& q) {
        if (q == 0) return;
        std::vector<std::size_t> srcRows(colIndex[src].begin(), colIndex[src].end());
        for (std::size_t r : srcRows) {
            set(r, dst, get(r, dst) + q * get(r, src));
        }
    }
};

BigInt absBig(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

SmithForm smithNormalForm(const ChainBoundary& m) {
    SparseInt a(m.rows, m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        for (const auto& [row, sign] : m.columns[j]) {
            a.set(row, j, BigInt(sign));
        }
    }
    std::vector<bool> rowDone(m.rows, false), colDone(m.cols, false);
    std::vector<BigInt> diag;

    while (true) {
        // pivot: smallest magnitude, tie-broken by fewer nonzeros in its
        // row, then by (row, col) for determinism
        bool found = false;
        std::size_t pr = 0, pc = 0;
        BigInt best;
        std::size_t bestRowLen = 0;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (rowDone[r] || a.rows[r].empty()) continue;
            for (const auto& [col, v] : a.rows[r]) {
                if (colDone[col]) continue;
                BigInt av = absBig(v);
                std::size_t len = a.rows[r].size();
                if (!found || av < best || (av == best && len < bestRowLen)) {
                    found = true;
                    best = av;
                    bestRowLen = len;
                    pr = r;
                    pc = col;
                }
            }
        }
        if (!found) break;

        // Euclidean passes until the pivot divides its whole row and column.
        while (true) {
            BigInt p = a.get(pr, pc);
            bool clean = true;
            std::vector<std::size_t> colRows(a.colIndex[pc].begin(), a.colIndex[pc].end());
            for (std::size_t r : colRows) {
                if (r == pr || rowDone[r]) continue;
                BigInt v = a.get(r, pc);
                if (v == 0) continue;
                BigInt q = v / p;
                a.addRow(r, pr, -q);
                if (a.get(r, pc) != 0) clean = false;
            }
            std::vector<std::pair<std::size_t, BigInt>> rowEntries(a.rows[pr].begin(),
                                                                   a.rows[pr].end());
            for (const auto& [col, v] : rowEntries) {
                if (col == pc || colDone[col]) continue;
                BigInt q = v / p;
                a.addCol(col, pc, -q);
                if (a.get(pr, col) != 0) clean = false;
            }
            if (clean) {
                // everything in row/col is now a multiple or a remainder;
                // if remainders appeared they are smaller than |p| and a
                // better pivot exists inside this row/col
                bool remainder = false;
                for (std::size_t r : std::vector<std::size_t>(a.colIndex[pc].begin(),
                                                              a.colIndex[pc].end())) {
                    if (r != pr && !rowDone[r] && a.get(r, pc) != 0) remainder = true;
                }
                for (const auto& [col, v] : a.rows[pr]) {
                    if (col != pc && !colDone[col] && v != 0) remainder = true;
                }
                if (!remainder) break;
                // move pivot to a smallest remaining entry of the row/col
                BigInt bestRem;
                bool haveRem = false;
                std::size_t nr = pr, nc = pc;
                for (std::size_t r : a.colIndex[pc]) {
                    if (rowDone[r]) continue;
                    BigInt av = absBig(a.get(r, pc));
                    if (av != 0 && (!haveRem || av < bestRem)) {
                        haveRem = true;
                        bestRem = av;
                        nr = r;
                        nc = pc;
                    }
                }
                for (const auto& [col, v] : a.rows[pr]) {
                    if (colDone[col]) continue;
                    BigInt av = absBig(v);
                    if (av != 0 && (!haveRem || av < bestRem)) {
                        haveRem = true;
                        bestRem = av;
                        nr = pr;
                        nc = col;
                    }
                }
                pr = nr;
                pc = nc;
            }
        }

        BigInt p = a.get(pr, pc);
        diag.push_back(absBig(p));
        rowDone[pr] = true;
        colDone[pc] = true;
        // clear the pivot row and column bookkeeping
        std::vector<std::size_t> colRows(a.colIndex[pc].begin(), a.colIndex[pc].end());
        for (std::size_t r : colRows) {
            if (r != pr) a.set(r, pc, 0);
        }
        std::vector<std::size_t> rowCols;
        for (const auto& [col, v] : a.rows[pr]) rowCols.push_back(col);
        for (std::size_t col : rowCols) {
            if (col != pc) a.set(pr, col, 0);
        }
    }

    // Normalize the diagonal to a divisibility chain.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < diag.size(); ++i) {
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                if (diag[j] % diag[i] != 0) {
                    BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
                    BigInt l = diag[i] / g * diag[j];
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(diag.begin(), diag.end());

    SmithForm out;
    out.rank = diag.size();
    for (const auto& v : diag) {
        if (v > 1) out.invariantFactors.push_back(v);
    }
    return out;
}

HomologyProfile homologyGf2(const SimplicialComplex& c) {
    HomologyProfile p;
    p.ring = CoefficientRing::GF2;
    const int d = c.dim();
    if (d < 0) return p;
    auto mats = boundaryMatrices(c);
    std::vector<std::size_t> rank(d + 2, 0);
    for (const auto& m : mats) rank[m.k] = gf2Rank(m);
    const FVector fv = c.fVector();
    for (int k = 0; k <= d; ++k) {
        long long betti = fv[k] - static_cast<long long>(rank[k]) -
                          static_cast<long long>(rank[k + 1]);
        p.betti.push_back(betti);
        p.torsion.emplace_back();
    }
    return p;
}

HomologyProfile homologyInteger(const SimplicialComplex& c) {
    HomologyProfile p;
    p.ring = CoefficientRing::Integer;
    const int d = c.dim();
    if (d < 0) return p;
    auto mats = boundaryMatrices(c);
    std::vector<SmithForm> snf(d + 2);
    for (const auto& m : mats) snf[m.k] = smithNormalForm(m);
    const FVector fv = c.fVector();
    for (int k = 0; k <= d; ++k) {
        long long betti = fv[k] - static_cast<long long>(snf[k].rank) -
                          static_cast<long long>(snf[k + 1].rank);
        p.betti.push_back(betti);
        p.torsion.push_back(snf[k + 1].invariantFactors);
    }
    return p;
}

std::vector<BigInt> h1Torsion(const SimplicialComplex& c) {
    if (c.dim() < 2) return {};
    auto mats = boundaryMatrices(c);
    return smithNormalForm(mats[1]).invariantFactors;
}

std::string describe(const HomologyProfile& p) {
    std::ostringstream out;
    out << (p.ring == CoefficientRing::GF2 ? "gf2" : "integer") << " betti (";
    for (std::size_t i = 0; i < p.betti.size(); ++i) {
        if (i) out << ", ";
        out << p.betti[i];
    }
    out << ")";
    if (p.ring == CoefficientRing::Integer) {
        out << " torsion [";
        bool first = true;
        for (std::size_t k = 0; k < p.torsion.size(); ++k) {
            for (const auto& t : p.torsion[k]) {
                if (!first) out << ", ";
                first = false;
                out << "H" << k << ":" << t;
            }
        }
        out << "]";
    }
    return out.str();
}

}  // namespace equitri
