#pragma once

// JSON and plain-text renderings of the reports. Timings are kept under a
// separate "timings" key so the remaining document is byte-stable.

#include "hsk/hadamard.hpp"
#include "hsk/identities.hpp"
#include "hsk/schemes.hpp"
#include "hsk/torus.hpp"

#include <json.hpp>

#include <string>

namespace hsk {

using Json = nlohmann::ordered_json;

Json to_json(const std::vector<CheckEntry>& checks);
Json to_json(const IdentityReport& rep, bool with_timings = true);
Json to_json(const TorusSolutionSet& set);
Json to_json(const HadamardCandidate& cand);
Json to_json(const FamilyListing& listing);
Json to_json(const NonexistenceReport& rep);
Json to_json(const EigenmatrixTemplate& t);

std::string to_text(const IdentityReport& rep);
std::string to_text(const TorusSolutionSet& set);
std::string to_text(const std::vector<CheckEntry>& checks);

}  // namespace hsk
