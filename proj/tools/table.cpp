#include "table.hpp"

#include <atomic>
#include <map>
#include <ostream>
#include <thread>

namespace tindep::cli {

namespace {

TableRow compute_row(const Group & g, std::optional<std::int64_t> t, const TableRequest & request)
{
    SearchOptions options;
    options.budget = request.budget;
    options.threads = 1;
    options.negation_pruning = request.negation_pruning;
    switch (request.mode) {
    case Mode::strong:
        return TableRow{g, t, request.mode, max_independent(g, *t, options), s_bounds(g, *t)};
    case Mode::weak:
        return TableRow{g, t, request.mode, max_weakly_independent(g, *t, options), w_bounds(g, *t)};
    case Mode::sumfree:
        break;
    }
    return TableRow{g, std::nullopt, request.mode, max_sum_free(g, options), sf_bounds(g)};
}

std::string t_text(const std::optional<std::int64_t> & t) { return t ? std::to_string(*t) : std::string(); }

}  // namespace

std::vector<TableRow> build_table(const TableRequest & request)
{
    std::vector<std::pair<const Group *, std::optional<std::int64_t>>> jobs;
    for (const auto & g : request.family) {
        if (request.mode == Mode::sumfree) {
            jobs.emplace_back(&g, std::nullopt);
            continue;
        }
        for (const auto t : request.t_values)
            jobs.emplace_back(&g, t);
    }
    std::vector<std::optional<TableRow>> slots(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
            slots[i] = compute_row(*jobs[i].first, jobs[i].second, request);
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(request.threads, static_cast<unsigned>(jobs.size())));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(work);
        for (auto & th : pool)
            th.join();
    }
    std::vector<TableRow> rows;
    rows.reserve(slots.size());
    for (auto & slot : slots)
        rows.push_back(std::move(*slot));
    return rows;
}

void write_csv(std::ostream & out, const std::vector<TableRow> & rows)
{
    out << kCsvHeader << '\n';
    for (const auto & row : rows)
        out << row.group.order() << ',' << row.group.to_string() << ',' << t_text(row.t) << ','
            << to_string(row.mode) << ',' << row.result.max_size << ",\""
            << format_element_list(row.group, row.result.witness) << "\"," << row.result.nodes << ','
            << to_string(row.result.status) << '\n';
}

json table_json(const std::vector<TableRow> & rows)
{
    json out = json::array();
    for (const auto & row : rows) {
        json r;
        r["n"] = row.group.order();
        r["group"] = row.group.to_string();
        r["t"] = row.t ? json(*row.t) : json(nullptr);
        r["mode"] = to_string(row.mode);
        r["value"] = row.result.max_size;
        r["witness"] = elements_json(row.result.witness);
        r["nodes"] = row.result.nodes;
        r["status"] = to_string(row.result.status);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::string> monotone_report(const std::vector<TableRow> & rows)
{
    // sequences keyed by t, in first-appearance order
    std::vector<std::optional<std::int64_t>> order;
    std::map<std::int64_t, std::vector<const TableRow *>> by_t;
    for (const auto & row : rows) {
        const auto key = row.t.value_or(-1);
        if (by_t.find(key) == by_t.end())
            order.push_back(row.t);
        by_t[key].push_back(&row);
    }
    std::vector<std::string> lines;
    for (const auto & t : order) {
        const auto & seq = by_t[t.value_or(-1)];
        const std::string label = t ? "t=" + std::to_string(*t) : std::string("sumfree");
        for (const char * parity : {"all", "even", "odd"}) {
            const std::string which = parity;
            const TableRow * prev = nullptr;
            std::string decreases;
            std::size_t count = 0;
            for (const auto * row : seq) {
                const auto n = row->group.order();
                if ((which == "even" && n % 2 != 0) || (which == "odd" && n % 2 == 0))
                    continue;
                if (row->result.status != SearchStatus::exact)
                    continue;
                if (prev && row->result.max_size < prev->result.max_size) {
                    decreases += (count++ == 0 ? " " : ", ") + std::string("n=") + std::to_string(n) + " (" +
                        std::to_string(prev->result.max_size) + "->" + std::to_string(row->result.max_size) + ")";
                }
                prev = row;
            }
            if (count == 0)
                lines.push_back("monotone " + label + " " + which + ": monotone");
            else
                lines.push_back("monotone " + label + " " + which + ": not monotone, " + std::to_string(count) +
                    " decreases:" + decreases);
        }
    }
    return lines;
}

std::vector<std::string> sandwich_violations(const std::vector<TableRow> & rows)
{
    std::vector<std::string> out;
    for (const auto & row : rows)
        if (row.result.status == SearchStatus::exact && !row.bounds.admits(row.result.max_size))
            out.push_back("bound violation: " + row.group.to_string() + " t=" + t_text(row.t) + " " +
                to_string(row.mode) + " value " + std::to_string(row.result.max_size) + " outside [" +
                std::to_string(row.bounds.lower) + ", " + std::to_string(row.bounds.upper) + "]");
    return out;
}

}  // namespace tindep::cli
