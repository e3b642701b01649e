#ifndef GONIL_REPORT_HPP
#define GONIL_REPORT_HPP

#include <string>

#include "gonil/classify.hpp"

namespace gonil {

inline constexpr const char* kVersion = "0.1.0";

/// Classification report plus provenance; the JSON form round-trips
/// losslessly.
struct Report {
    std::string graph_source;   // file name or "embedded"/"stdin"
    std::string metric_source;  // file name or generator description
    std::string graph_text;
    std::uint64_t seed = 0;
    std::string version = kVersion;
    ClassificationReport body;

    bool operator==(const Report&) const = default;
};

std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);

/// Human-readable rendering.
std::string report_to_text(const Report& report);

}  // namespace gonil

#endif
