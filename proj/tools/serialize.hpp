#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tindep/constructions.hpp"
#include "tindep/formulas.hpp"
#include "tindep/independence.hpp"
#include "tindep/search.hpp"

namespace tindep::cli {

using nlohmann::json;

enum class Mode { strong, weak, sumfree };

std::string to_string(Mode mode);
Mode parse_mode(const std::string & text);

/// Integer or the "inf" token.
std::string value_text(std::int64_t value);
json value_json(std::int64_t value);

json elements_json(const std::vector<Element> & xs);
json report_json(const IndependenceReport & report);
json search_json(const Group & g, std::optional<std::int64_t> t, Mode mode, const SearchResult & r);
json certificate_json(const ConstructionCertificate & cert);
json bounds_json(const Group & g, std::optional<std::int64_t> t, Mode mode, const BoundsReport & b);

}  // namespace tindep::cli
