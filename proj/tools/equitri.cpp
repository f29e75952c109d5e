#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "equitri/catalog.hpp"
#include "equitri/constructions.hpp"
#include "equitri/isomorphism.hpp"
#include "equitri/report.hpp"
#include "equitri/spheres.hpp"

namespace {

using namespace equitri;

constexpr const char* kJsonSentinel = "=== report-json ===";

enum ExitCode { kOk = 0, kInputError = 1, kMismatch = 2, kInconclusive = 3 };

struct OutputOptions {
    std::string format = "text";
    bool force = false;
};

void writeFileChecked(const std::string& path, const std::string& content, bool force) {
    if (!force && std::filesystem::exists(path)) {
        throw Error(ErrorKind::Unsupported,
                    "refusing to overwrite '" + path + "' without --force");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::Unsupported, "cannot open '" + path + "' for writing");
    }
    out << content;
}

SimplicialComplex loadTri(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    }
    return SimplicialComplex::parseTri(in);
}

GroupAction loadAction(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    }
    return GroupAction::parse(in);
}

void emitReport(const VerificationReport& report, const std::string& format) {
    if (format == "text" || format == "both") {
        std::cout << reportText(report);
    }
    if (format == "json") {
        std::cout << reportJson(report) << "\n";
    } else if (format == "both") {
        std::cout << kJsonSentinel << "\n" << reportJson(report) << "\n";
    }
}

void emitBuilt(const Constructed& built, const std::string& outPath,
               const std::string& actionPath, bool force) {
    if (!outPath.empty()) {
        writeFileChecked(outPath, built.complex.serializeTri(), force);
    } else {
        std::cout << built.complex.serializeTri();
    }
    if (!actionPath.empty()) {
        if (built.action.rank() == 0) {
            throw Error(ErrorKind::Unsupported, "this construction carries no action");
        }
        writeFileChecked(actionPath, built.action.serialize(), force);
    } else if (built.action.rank() > 0 && outPath.empty()) {
        std::cout << "# action\n" << built.action.serialize();
    }
    for (const auto& note : built.notes) {
        std::cout << "note: " << note << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant triangulations of projective spaces: construction, "
                 "catalog and certification"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "report format: text, json or both")
        ->check(CLI::IsMember({"text", "json", "both"}));

    // build
    auto* build = app.add_subcommand("build", "construct a triangulation family member");
    std::string buildWhat;
    int buildN = 3;
    std::string buildOut, buildAction, buildOutPrefix;
    bool buildForce = false;
    build->add_option("family", buildWhat, "sigma-rpn, reduced, yn or d3-blocks")
        ->required()
        ->check(CLI::IsMember({"sigma-rpn", "reduced", "yn", "d3-blocks"}));
    build->add_option("--n", buildN, "dimension parameter");
    build->add_option("--out", buildOut, "write the .tri file here");
    build->add_option("--action", buildAction, "write the action file here");
    build->add_option("--out-prefix", buildOutPrefix,
                      "prefix for d3-blocks output files");
    build->add_flag("--force", buildForce, "overwrite existing output files");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "emit a hard-coded catalog complex");
    std::string catalogIdName;
    std::string catalogOut, catalogActionOut;
    bool catalogForce = false;
    catalog->add_option("id", catalogIdName, "rp2-6, rp3-14, rp3-11a, rp3-11b, rp4-17")
        ->required();
    catalog->add_option("--out", catalogOut, "write the .tri file here");
    catalog->add_option("--action", catalogActionOut,
                        "write an action file (declared or discovered)");
    catalog->add_flag("--force", catalogForce, "overwrite existing output files");

    // verify
    auto* verify = app.add_subcommand("verify", "certify a .tri file");
    std::string verifyFile, verifyActionFile, verifyExpect;
    verify->add_option("file", verifyFile, ".tri input")->required();
    verify->add_option("--action", verifyActionFile, "action file to check");
    verify->add_option("--expect", verifyExpect,
                       "expected verdict, e.g. rp3, rp4, s2, b3, ball");

    // report
    auto* reportCmd = app.add_subcommand("report", "full certification report");
    std::string reportFile, reportActionFile;
    reportCmd->add_option("file", reportFile, ".tri input")->required();
    reportCmd->add_option("--action", reportActionFile, "action file");

    // homology
    auto* homologyCmd = app.add_subcommand("homology", "homology profiles of a .tri file");
    std::string homologyFile;
    homologyCmd->add_option("file", homologyFile, ".tri input")->required();

    // quotient
    auto* quotient = app.add_subcommand("quotient", "orbit-space quotient");
    std::string quotientFile, quotientActionFile, quotientOut;
    bool quotientForce = false;
    quotient->add_option("file", quotientFile, ".tri input")->required();
    quotient->add_option("--action", quotientActionFile, "action file")->required();
    quotient->add_option("--out", quotientOut, "write the quotient .tri here");
    quotient->add_flag("--force", quotientForce, "overwrite existing output files");

    // iso
    auto* iso = app.add_subcommand("iso", "simplicial isomorphism test");
    std::string isoA, isoB;
    iso->add_option("a", isoA, "first .tri")->required();
    iso->add_option("b", isoB, "second .tri")->required();

    // enumerate-spheres
    auto* enumerateCmd =
        app.add_subcommand("enumerate-spheres", "triangulated 2-spheres on v vertices");
    int enumerateV = 6;
    std::string enumerateOutPrefix;
    bool enumerateForce = false;
    enumerateCmd->add_option("--v", enumerateV, "vertex count (4..9)")->required();
    enumerateCmd->add_option("--out-prefix", enumerateOutPrefix,
                             "write each sphere to <prefix><k>.tri");
    enumerateCmd->add_flag("--force", enumerateForce, "overwrite existing output files");

    // lemma6
    auto* lemma6 = app.add_subcommand(
        "lemma6", "scan all 8-vertex 2-spheres for rank-3 free transitive sign actions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (build->parsed()) {
            if (buildWhat == "d3-blocks") {
                auto blocks = buildD3Blocks();
                for (const auto& [name, complex, action] : blocks) {
                    if (!buildOutPrefix.empty()) {
                        writeFileChecked(buildOutPrefix + name + ".tri",
                                         complex.serializeTri(), buildForce);
                        writeFileChecked(buildOutPrefix + name + ".act", action.serialize(),
                                         buildForce);
                    } else {
                        std::cout << "# block " << name << "\n"
                                  << complex.serializeTri() << "# action\n"
                                  << action.serialize();
                    }
                }
                return kOk;
            }
            Constructed built;
            if (buildWhat == "sigma-rpn") {
                built = buildSigmaRpn(buildN);
            } else if (buildWhat == "reduced") {
                built = buildReduced(buildN);
            } else {
                built = buildYn(buildN);
            }
            emitBuilt(built, buildOut, buildAction, buildForce);
            return kOk;
        }

        if (catalog->parsed()) {
            auto id = catalogIdFromName(catalogIdName);
            if (!id) {
                throw Error(ErrorKind::UnknownId, "unknown catalog id '" + catalogIdName + "'");
            }
            CatalogEntry entry = catalogLoad(*id);
            if (!catalogOut.empty()) {
                writeFileChecked(catalogOut, entry.complex.serializeTri(), catalogForce);
            } else {
                std::cout << entry.complex.serializeTri();
            }
            if (!catalogActionOut.empty()) {
                GroupAction action = entry.declaredAction
                                         ? *entry.declaredAction
                                         : [&] {
                                               auto found = findZ2nSubaction(
                                                   entry.complex, entry.actionRank);
                                               if (!found) {
                                                   throw Error(ErrorKind::Unsupported,
                                                               "no suitable action found");
                                               }
                                               return *found;
                                           }();
                writeFileChecked(catalogActionOut, action.serialize(), catalogForce);
            }
            return kOk;
        }

        if (verify->parsed() || reportCmd->parsed()) {
            const bool isVerify = verify->parsed();
            const std::string file = isVerify ? verifyFile : reportFile;
            const std::string actionFile = isVerify ? verifyActionFile : reportActionFile;
            SimplicialComplex c = loadTri(file);
            VerificationReport r;
            if (!actionFile.empty()) {
                GroupAction a = loadAction(actionFile);
                r = buildReport(c, a);
            } else {
                r = buildReport(c);
            }
            emitReport(r, format);
            if (isVerify && !verifyExpect.empty()) {
                if (!knownExpectation(verifyExpect)) {
                    throw Error(ErrorKind::Parse,
                                "unknown expectation '" + verifyExpect + "'");
                }
                if (!verdictMatches(r, verifyExpect)) {
                    std::cout << "expectation " << verifyExpect << ": MISMATCH (got "
                              << r.verdictLabel << ")\n";
                    return kMismatch;
                }
                std::cout << "expectation " << verifyExpect << ": ok\n";
            }
            if (isVerify && r.equivariance && !r.equivariance->equivariant) {
                return kMismatch;
            }
            return kOk;
        }

        if (homologyCmd->parsed()) {
            SimplicialComplex c = loadTri(homologyFile);
            std::cout << describe(homologyGf2(c)) << "\n";
            std::cout << describe(homologyInteger(c)) << "\n";
            return kOk;
        }

        if (quotient->parsed()) {
            SimplicialComplex c = loadTri(quotientFile);
            GroupAction a = loadAction(quotientActionFile);
            QuotientResult q = quotientByAction(c, a);
            if (!quotientOut.empty()) {
                writeFileChecked(quotientOut, q.complex.serializeTri(), quotientForce);
            } else {
                std::cout << q.complex.serializeTri();
            }
            long long total = 0;
            for (const auto& [f, m] : q.multiplicity) total += m;
            std::cout << "# quotient facets: " << q.complex.facetCount()
                      << ", covering facets upstairs: " << total << "\n";
            if (!q.foldVertices.empty()) {
                std::cout << "# fold vertices:";
                for (const auto& v : q.foldVertices) std::cout << " " << v;
                std::cout << "\n";
            }
            return kOk;
        }

        if (iso->parsed()) {
            SimplicialComplex a = loadTri(isoA);
            SimplicialComplex b = loadTri(isoB);
            auto bijection = isomorphism(a, b);
            if (!bijection) {
                std::cout << "not isomorphic\n";
            } else {
                std::cout << "isomorphic\n";
                for (const auto& [from, to] : *bijection) {
                    std::cout << from << " -> " << to << "\n";
                }
            }
            return kOk;
        }

        if (enumerateCmd->parsed()) {
            SphereEnumeration result = enumerate2Spheres(enumerateV);
            if (result.status != SearchStatus::Complete) {
                std::cout << "inconclusive: budget exceeded after " << result.nodes
                          << " nodes\n";
                return kInconclusive;
            }
            std::cout << "2-spheres on " << enumerateV << " vertices: "
                      << result.spheres.size() << "\n";
            for (std::size_t i = 0; i < result.spheres.size(); ++i) {
                const auto& s = result.spheres[i];
                FVector fv = s.fVector();
                std::cout << "  sphere " << i << ": f-vector (" << fv[0] << ", " << fv[1]
                          << ", " << fv[2] << ")\n";
                if (!enumerateOutPrefix.empty()) {
                    writeFileChecked(enumerateOutPrefix + std::to_string(i) + ".tri",
                                     s.serializeTri(), enumerateForce);
                }
            }
            return kOk;
        }

        if (lemma6->parsed()) {
            Lemma6Report r = lemma6Check();
            if (r.status != SearchStatus::Complete) {
                std::cout << "inconclusive: enumeration budget exceeded\n";
                return kInconclusive;
            }
            std::cout << "8-vertex 2-spheres checked: " << r.spheresChecked << "\n";
            std::cout << "admissible actions found: " << r.admissibleIndices.size() << "\n";
            std::cout << "note: " << r.caveat << "\n";
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
