#pragma once

#include <string>

#include <json.hpp>

#include "zeon/zeon.hpp"

namespace zeonctl {

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
    std::string input;
    int n = 0;
    bool normalize = false;
};

// Full analysis of one state; keys appear in a fixed order.
Json analysis_report(const zeon::Zeon& f, const AnalyzeOptions& opts);

Json complex_json(zeon::Complex c);

// Serializes with every floating-point value printed to 17 significant digits.
std::string dump17(const Json& j, int indent = 2);

}  // namespace zeonctl
