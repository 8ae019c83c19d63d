#ifndef H2M_REPORT_HPP
#define H2M_REPORT_HPP

#include <string>

#include <json.hpp>

#include "h2m/verifier.hpp"

namespace h2m {

using Json = nlohmann::ordered_json;

/// Schema-stable JSON for one group report: fixed key order, no
/// timestamps.
Json report_json(const TheoremReport& rep);

/// Full scan payload: per-group reports plus summary counts.
Json scan_json(const std::vector<TheoremReport>& reports);

Json psl_witnesses_json(const PslWitnessReport& rep);

Json lattice_json(const Lattice& l, const std::string& name);

std::string report_text(const TheoremReport& rep);
std::string scan_text(const std::vector<TheoremReport>& reports);
std::string psl_witnesses_text(const PslWitnessReport& rep);
std::string lattice_text(const Lattice& l, const std::string& name);

}  // namespace h2m

#endif
