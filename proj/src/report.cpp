#include "equitri/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace equitri {

bool orbitParityOracle(const SimplicialComplex& c, const GroupAction& a) {
    return parityCheck(c, a);
}

bool invariantSphereBoundOracle(const SimplicialComplex& c, const GroupAction& a) {
    const int n = a.rank();
    for (const auto& v : fixedPoints(c, a)) {
        SimplicialComplex link = c.link({v});
        Recognition rec = recognize(link);
        if (rec.verdict != Verdict::Sphere || rec.dim != c.dim() - 1) continue;
        const std::size_t count = link.vertexCount();
        if (count % 2 != 0 || count < static_cast<std::size_t>(2 * n)) return false;
    }
    return true;
}

OracleOutcome cornerSeparationOracle(
    const SimplicialComplex& c, const std::map<std::string, FacePosition>& positions) {
    if (positions.empty()) return OracleOutcome::NotApplicable;
    int n = 0;
    for (const auto& [token, pos] : positions) {
        for (int m : pos.missing) n = std::max(n, m);
    }
    for (const auto& [token, pos] : positions) {
        if (pos.role != FacePosition::Role::Corner) continue;
        // the corner index is the one face not containing this vertex
        int corner = -1;
        for (int i = 0; i <= n; ++i) {
            if (!pos.missing.count(i)) corner = i;
        }
        if (corner < 0) continue;
        if (!c.hasVertex(token)) continue;
        for (const auto& f : c.star({token}).facets()) {
            for (const auto& u : f) {
                if (u == token) continue;
                auto it = positions.find(u);
                if (it == positions.end()) return OracleOutcome::NotApplicable;
                if (it->second.missing.count(corner)) return OracleOutcome::Fail;
            }
        }
    }
    return OracleOutcome::Pass;
}

namespace {

VerificationReport assemble(const SimplicialComplex& c, const GroupAction* action,
                            const std::map<std::string, FacePosition>* positions,
                            const std::vector<std::string>* extraNotes) {
    VerificationReport r;
    r.fvec = c.fVector();
    r.dim = c.dim();
    r.pure = c.isPure();
    Recognition rec = recognize(c);
    r.closedPseudomanifold = rec.closedPseudomanifold;
    r.stronglyConnected = c.isStronglyConnected();
    r.links = rec.links;
    r.gf2 = rec.gf2.betti.empty() ? homologyGf2(c) : rec.gf2;
    r.integer = rec.integer.betti.empty() ? homologyInteger(c) : rec.integer;
    r.verdict = rec.verdict;
    r.verdictLabel = verdictName(rec.verdict, rec.dim);
    r.fullyCertified = rec.fullyCertified;
    r.notes = rec.notes;
    if (extraNotes) {
        r.notes.insert(r.notes.end(), extraNotes->begin(), extraNotes->end());
    }

    if (action && action->rank() > 0) {
        EquivarianceBlock block;
        block.rank = action->rank();
        EquivarianceCheck check = checkEquivariance(c, *action);
        block.equivariant = check.equivariant;
        block.violation = check.violation;
        if (check.equivariant) {
            block.orbitList = orbits(c, *action);
            block.fixedPoints = equitri::fixedPoints(c, *action);
            block.parityPass = orbitParityOracle(c, *action);
            block.sphereBoundPass = invariantSphereBoundOracle(c, *action);
            block.cornerSeparation =
                positions ? cornerSeparationOracle(c, *positions) : OracleOutcome::NotApplicable;
        }
        r.equivariance = std::move(block);
    }
    return r;
}

}  // namespace

VerificationReport buildReport(const SimplicialComplex& c) {
    return assemble(c, nullptr, nullptr, nullptr);
}

VerificationReport buildReport(const SimplicialComplex& c, const GroupAction& a) {
    return assemble(c, &a, nullptr, nullptr);
}

VerificationReport buildReport(const Constructed& built) {
    return assemble(built.complex, &built.action, &built.positions, &built.notes);
}

namespace {

const char* linkStatusName(LinkStatus s) {
    switch (s) {
        case LinkStatus::SphereCertified:
            return "sphere-certified";
        case LinkStatus::HomologySphereOnly:
            return "homology-sphere-only";
        case LinkStatus::Failed:
            return "failed";
    }
    return "failed";
}

const char* oracleName(OracleOutcome o) {
    switch (o) {
        case OracleOutcome::Pass:
            return "pass";
        case OracleOutcome::Fail:
            return "fail";
        case OracleOutcome::NotApplicable:
            return "not-applicable";
    }
    return "not-applicable";
}

}  // namespace

std::string reportText(const VerificationReport& r) {
    std::ostringstream out;
    out << "dimension: " << r.dim << "\n";
    out << "f-vector:";
    for (long long f : r.fvec) out << " " << f;
    out << "\n";
    out << "pure: " << (r.pure ? "yes" : "no") << "\n";
    out << "closed pseudomanifold: " << (r.closedPseudomanifold ? "yes" : "no") << "\n";
    out << "strongly connected: " << (r.stronglyConnected ? "yes" : "no") << "\n";
    std::size_t certified = 0, homologyOnly = 0, failed = 0;
    for (const auto& l : r.links) {
        if (l.status == LinkStatus::SphereCertified) ++certified;
        if (l.status == LinkStatus::HomologySphereOnly) ++homologyOnly;
        if (l.status == LinkStatus::Failed) ++failed;
    }
    out << "vertex links: " << certified << " sphere-certified, " << homologyOnly
        << " homology-sphere-only, " << failed << " failed\n";
    for (const auto& l : r.links) {
        if (l.status != LinkStatus::SphereCertified) {
            out << "  link(" << l.vertex << "): " << linkStatusName(l.status);
            if (!l.detail.empty()) out << " (" << l.detail << ")";
            out << "\n";
        }
    }
    out << "homology " << describe(r.gf2) << "\n";
    out << "homology " << describe(r.integer) << "\n";
    out << "verdict: " << r.verdictLabel
        << (r.fullyCertified ? " (certified)" : r.verdict == Verdict::Unknown ? "" : " (partial tier)")
        << "\n";
    if (r.equivariance) {
        const auto& e = *r.equivariance;
        out << "action rank: " << e.rank << "\n";
        out << "equivariant: " << (e.equivariant ? "yes" : "no") << "\n";
        if (e.violation) {
            out << "  violating facet:";
            for (const auto& t : e.violation->first) out << " " << t;
            out << "  (generator " << (e.violation->second + 1) << ")\n";
        }
        if (e.equivariant) {
            std::map<std::size_t, std::size_t> orbitSizes;
            for (const auto& o : e.orbitList) orbitSizes[o.size()]++;
            out << "orbit census:";
            for (const auto& [size, count] : orbitSizes) {
                out << " " << count << "x" << size;
            }
            out << "\n";
            out << "fixed points (" << e.fixedPoints.size() << "):";
            for (const auto& v : e.fixedPoints) out << " " << v;
            out << "\n";
            out << "orbit parity oracle: " << (e.parityPass ? "pass" : "fail") << "\n";
            out << "invariant sphere bound oracle: "
                << (e.sphereBoundPass ? "pass" : "fail") << "\n";
            out << "corner separation oracle: " << oracleName(e.cornerSeparation) << "\n";
        }
    }
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    return out.str();
}

std::string reportJson(const VerificationReport& r) {
    nlohmann::json j;
    j["dim"] = r.dim;
    j["f_vector"] = r.fvec;
    j["pure"] = r.pure;
    j["closed_pseudomanifold"] = r.closedPseudomanifold;
    j["strongly_connected"] = r.stronglyConnected;
    nlohmann::json links = nlohmann::json::array();
    for (const auto& l : r.links) {
        links.push_back({{"vertex", l.vertex}, {"status", linkStatusName(l.status)}});
    }
    j["links"] = links;
    j["gf2_betti"] = r.gf2.betti;
    j["integer_betti"] = r.integer.betti;
    nlohmann::json torsion = nlohmann::json::array();
    for (std::size_t k = 0; k < r.integer.torsion.size(); ++k) {
        for (const auto& t : r.integer.torsion[k]) {
            torsion.push_back({{"dim", k}, {"order", t.str()}});
        }
    }
    j["torsion"] = torsion;
    j["verdict"] = r.verdictLabel;
    j["certified"] = r.fullyCertified;
    if (r.equivariance) {
        const auto& e = *r.equivariance;
        nlohmann::json je;
        je["rank"] = e.rank;
        je["equivariant"] = e.equivariant;
        if (e.equivariant) {
            je["orbits"] = e.orbitList;
            je["fixed_points"] = e.fixedPoints;
            je["parity_oracle"] = e.parityPass ? "pass" : "fail";
            je["sphere_bound_oracle"] = e.sphereBoundPass ? "pass" : "fail";
            je["corner_separation_oracle"] = oracleName(e.cornerSeparation);
        } else if (e.violation) {
            je["violating_facet"] = e.violation->first;
            je["violating_generator"] = e.violation->second + 1;
        }
        j["equivariance"] = je;
    }
    j["notes"] = r.notes;
    return j.dump(2);
}

bool knownExpectation(const std::string& expect) {
    if (expect == "ball") return true;
    if (expect.size() < 2) return false;
    std::string prefix;
    std::size_t digits = 0;
    if (expect[0] == 's' || expect[0] == 'b') {
        prefix = expect.substr(0, 1);
        digits = 1;
    } else if (expect.rfind("rp", 0) == 0) {
        prefix = "rp";
        digits = 2;
    } else {
        return false;
    }
    if (expect.size() <= digits) return false;
    for (std::size_t i = digits; i < expect.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(expect[i]))) return false;
    }
    return true;
}

bool verdictMatches(const VerificationReport& r, const std::string& expect) {
    if (expect == "ball") return r.verdict == Verdict::Ball;
    if (!knownExpectation(expect)) return false;
    int d = 0;
    Verdict want = Verdict::Unknown;
    if (expect[0] == 's') {
        want = Verdict::Sphere;
        d = std::stoi(expect.substr(1));
    } else if (expect[0] == 'b') {
        want = Verdict::Ball;
        d = std::stoi(expect.substr(1));
    } else {
        want = Verdict::ProjectiveSpace;
        d = std::stoi(expect.substr(2));
    }
    return r.verdict == want && r.dim == d;
}

}  // namespace equitri
