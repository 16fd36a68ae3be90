#include "serialize.hpp"

#include <stdexcept>

namespace tindep::cli {

std::string to_string(Mode mode)
{
    switch (mode) {
    case Mode::strong:
        return "strong";
    case Mode::weak:
        return "weak";
    case Mode::sumfree:
        return "sumfree";
    }
    return "strong";
}

Mode parse_mode(const std::string & text)
{
    if (text == "strong")
        return Mode::strong;
    if (text == "weak")
        return Mode::weak;
    if (text == "sumfree")
        return Mode::sumfree;
    throw std::invalid_argument("unknown mode '" + text + "'");
}

std::string value_text(std::int64_t value) { return value == kInfinity ? "inf" : std::to_string(value); }

json value_json(std::int64_t value) { return value == kInfinity ? json("inf") : json(value); }

json elements_json(const std::vector<Element> & xs)
{
    json out = json::array();
    for (const auto & x : xs)
        out.push_back(x.coords);
    return out;
}

json report_json(const IndependenceReport & report)
{
    json out;
    out["independent"] = report.independent;
    out["violating_vector"] = report.violating_vector ? json(report.violating_vector->lambdas) : json(nullptr);
    out["failed_condition"] = report.conditions.failed();
    return out;
}

json search_json(const Group & g, std::optional<std::int64_t> t, Mode mode, const SearchResult & r)
{
    json out;
    out["group"] = g.to_string();
    out["t"] = t ? json(*t) : json(nullptr);
    out["mode"] = to_string(mode);
    out["max_size"] = r.max_size;
    out["witness"] = elements_json(r.witness);
    out["nodes"] = r.nodes;
    out["status"] = to_string(r.status);
    return out;
}

json certificate_json(const ConstructionCertificate & cert)
{
    json out;
    out["method"] = cert.method;
    out["group"] = cert.produced.group().to_string();
    out["claimed_t"] = cert.claimed_t;
    out["mode"] = cert.kind == RelationKind::weak ? "weak" : "strong";
    out["produced"] = elements_json(cert.produced.members());
    out["size"] = cert.produced.size();
    out["expected_size"] = cert.expected_size;
    out["relation"] = cert.relation == SizeRelation::exact ? "exact" : "at_least";
    out["verified"] = cert.verified;
    out["diagnostics"] = cert.diagnostics;
    return out;
}

json bounds_json(const Group & g, std::optional<std::int64_t> t, Mode mode, const BoundsReport & b)
{
    json out;
    out["group"] = g.to_string();
    out["t"] = t ? json(*t) : json(nullptr);
    out["mode"] = to_string(mode);
    out["lower"] = b.lower;
    out["upper"] = b.upper;
    out["exact"] = b.exact ? json(*b.exact) : json(nullptr);
    json prov = json::array();
    for (const auto & e : b.provenance)
        prov.push_back({{"side", to_string(e.side)}, {"value", e.value}, {"source", e.source}});
    out["provenance"] = std::move(prov);
    return out;
}

}  // namespace tindep::cli
