#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equitri/action.hpp"
#include "equitri/complex.hpp"
#include "equitri/constructions.hpp"
#include "equitri/manifold.hpp"

namespace equitri {

/// Orbit parity oracle: the non-fixed vertices come in even number.
bool orbitParityOracle(const SimplicialComplex& c, const GroupAction& a);

/// Invariant-sphere size oracle: every fixed vertex whose link is a
/// certified (d-1)-sphere has an even link vertex count of at least twice
/// the action rank.
bool invariantSphereBoundOracle(const SimplicialComplex& c, const GroupAction& a);

enum class OracleOutcome { Pass, Fail, NotApplicable };

/// Corner-star separation oracle, available only with construction
/// position data: no facet at a fixed corner vertex touches the fiber over
/// the opposite codimension-one face.
OracleOutcome cornerSeparationOracle(const SimplicialComplex& c,
                                     const std::map<std::string, FacePosition>& positions);

struct EquivarianceBlock {
    int rank = 0;
    bool equivariant = false;
    std::optional<std::pair<Simplex, int>> violation;
    std::vector<std::vector<std::string>> orbitList;
    std::vector<std::string> fixedPoints;
    bool parityPass = false;
    bool sphereBoundPass = false;
    OracleOutcome cornerSeparation = OracleOutcome::NotApplicable;
};

struct VerificationReport {
    FVector fvec;
    int dim = -1;
    bool pure = false;
    bool closedPseudomanifold = false;
    bool stronglyConnected = false;
    std::vector<LinkReport> links;
    HomologyProfile gf2;
    HomologyProfile integer;
    Verdict verdict = Verdict::Unknown;
    std::string verdictLabel = "unknown";
    bool fullyCertified = false;
    std::optional<EquivarianceBlock> equivariance;
    std::vector<std::string> notes;
};

VerificationReport buildReport(const SimplicialComplex& c);
VerificationReport buildReport(const SimplicialComplex& c, const GroupAction& a);
VerificationReport buildReport(const Constructed& built);

std::string reportText(const VerificationReport& r);
std::string reportJson(const VerificationReport& r);

/// "s3", "rp4", "ball", "b3" ... -> does the verdict match?
bool verdictMatches(const VerificationReport& r, const std::string& expect);
bool knownExpectation(const std::string& expect);

}  // namespace equitri
