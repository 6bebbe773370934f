#pragma once

// JSON report emission: one document per run, schema versioned, deterministic
// for a fixed config and seed (keys are sorted by the JSON library; no
// timestamps go into the document).

#include <string>

#include <json.hpp>

#include "cgt/abelian.hpp"
#include "cgt/diffset.hpp"
#include "cgt/fingerprint.hpp"
#include "cgt/graph.hpp"
#include "cgt/plane.hpp"
#include "cgt/ramification.hpp"
#include "cgt/repcheck.hpp"
#include "cgt/surfaces.hpp"

namespace cgt {

inline constexpr const char* kReportSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json report_skeleton(const std::string& command, const nlohmann::json& config);

nlohmann::json to_json(const DifferenceSet& d);
nlohmann::json to_json(const DifferenceCheck& c);
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const PlaneIncidence& p);
nlohmann::json to_json(const AbelianInvariants& a);
nlohmann::json to_json(const Fingerprint& f);
nlohmann::json to_json(const SurfaceInvariants& s);
nlohmann::json to_json(const DisjointnessCertificate& c);
/// Word preimages, when known, go alongside the exponent vectors.
nlohmann::json structure_json(const PcGroup& pc, const RamificationStructure& rs,
                              const std::vector<std::string>& t1_words = {},
                              const std::vector<std::string>& t2_words = {});
nlohmann::json to_json(const RepcheckReport& r);
nlohmann::json pc_group_json(const PcGroup& pc);

/// Writes the document to path ("-" for stdout) with a trailing newline.
void write_report(const nlohmann::json& doc, const std::string& path);

} // namespace cgt
