#pragma once

#include "lpadecomp/graph.hpp"
#include "lpadecomp/verification.hpp"

#include <json.hpp>

#include <string>

namespace lpadecomp {

inline constexpr const char* kReportSchema = "report-v1";
inline constexpr const char* kToolVersion = "0.1.0";

/// Resource caps. Exceeding an enumeration cap is a ResourceError; the
/// sample caps only shorten example lists.
struct AnalysisConfig {
    EnumerationCaps caps;
    std::size_t omega_samples = 2;  // indices per ω bundle in relation checks
    std::size_t compat_samples = 4; // example paths per compatible-path count
};

/// Full analysis as a report-v1 document. Deterministic for a fixed graph
/// and configuration.
nlohmann::ordered_json analyze(const Graph& g, const AnalysisConfig& cfg = {});

/// Human-readable rendering of an analyze() document.
std::string render_text(const nlohmann::ordered_json& report);

/// Runs every invariant suite on one graph (lattice isomorphism, clopen
/// pairs having S = B_H, route agreement, oracles, algebra relations,
/// generator containment, splits).
VerificationReport selfcheck(const Graph& g, const AnalysisConfig& cfg = {});

} // namespace lpadecomp
