#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "bsp/hereditary.hpp"
#include "bsp/ktheory.hpp"
#include "bsp/normal_form.hpp"
#include "bsp/odometer.hpp"

namespace bsp {

nlohmann::json pathToJson(const PathL& p);
nlohmann::json formRToJson(const PathR& p);
nlohmann::json joinResultToJson(const std::optional<PathL>& j);
nlohmann::json seqToJson(const EPSeq& s);
nlohmann::json groupToJson(const AbelianGroup& g);
nlohmann::json ktheoryToJson(const KTheory& k);

// "pre|period" with comma-separated digits; no '|' means purely periodic.
EPSeq parseSeqArg(const Params& par, const std::string& text);

// "finite:WORD", "coset:CSV", "c0:SEQ", "cinf:SEQ", "cn1:CSV;CSV",
// "cn2:SEQ;N".
Descriptor parseDescriptorArg(const Params& par, const std::string& text);

std::vector<long long> parseCsvLongs(const std::string& text);

}  // namespace bsp
