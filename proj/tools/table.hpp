#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace tindep::cli {

struct TableRequest {
    std::vector<Group> family;
    std::vector<std::int64_t> t_values;  // ignored in sumfree mode
    Mode mode = Mode::strong;
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
    bool negation_pruning = true;
};

struct TableRow {
    Group group;
    std::optional<std::int64_t> t;
    Mode mode;
    SearchResult result;
    BoundsReport bounds;
};

/// One row per (group, t) in request order. Rows run concurrently when
/// threads > 1, each search itself single-threaded, so output never depends
/// on the thread count.
std::vector<TableRow> build_table(const TableRequest & request);

inline constexpr const char * kCsvHeader = "n,group,t,mode,value,witness,nodes,status";

void write_csv(std::ostream & out, const std::vector<TableRow> & rows);
json table_json(const std::vector<TableRow> & rows);

/// Decreases along each t-sequence, over all n and over even and odd n separately.
std::vector<std::string> monotone_report(const std::vector<TableRow> & rows);

/// Exact rows whose value falls outside the formula bounds.
std::vector<std::string> sandwich_violations(const std::vector<TableRow> & rows);

}  // namespace tindep::cli
