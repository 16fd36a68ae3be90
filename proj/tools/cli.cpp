#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "serialize.hpp"
#include "table.hpp"
#include "verify.hpp"

namespace tindep::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_budget()
{
    const char * env = std::getenv("TINDEP_BUDGET");
    if (env == nullptr || *env == '\0')
        return kDefaultBudget;
    try {
        std::size_t used = 0;
        const auto value = std::stoull(env, &used);
        if (used == std::string(env).size() && value > 0)
            return value;
    } catch (const std::exception &) {
    }
    throw UsageError("TINDEP_BUDGET must be a positive integer");
}

struct SearchFlags {
    std::uint64_t budget = 0;
    unsigned threads = 1;
    bool no_negation_pruning = false;

    void attach(CLI::App * cmd)
    {
        cmd->add_option("--budget", budget, "node budget per search (default $TINDEP_BUDGET or 1e8)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_flag("--no-negation-pruning", no_negation_pruning, "disable x/-x symmetry breaking");
    }

    SearchOptions options() const
    {
        SearchOptions o;
        o.budget = budget;
        o.threads = threads;
        o.negation_pruning = !no_negation_pruning;
        return o;
    }
};

std::vector<Group> cyclic_range(const std::string & text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw UsageError("--cyclic expects A..B");
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    try {
        lo = std::stoll(text.substr(0, dots));
        hi = std::stoll(text.substr(dots + 2));
    } catch (const std::exception &) {
        throw UsageError("--cyclic expects A..B");
    }
    if (lo < 2 || hi < lo)
        throw UsageError("--cyclic range must satisfy 2 <= A <= B");
    std::vector<Group> out;
    for (auto n = lo; n <= hi; ++n)
        out.push_back(Group::cyclic(n));
    return out;
}

int search_exit(const SearchResult & r) { return r.status == SearchStatus::exact ? kOk : kBudgetExhausted; }

}  // namespace

int run_command(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Independent sets in finite abelian groups", "tindep"};
    app.require_subcommand(1);

    std::string group_spec;
    std::string set_spec;
    std::int64_t t = 0;
    std::string mode_text = "strong";
    bool as_json = false;
    SearchFlags flags;

    auto * check = app.add_subcommand("check", "test a set for (weak) t-independence");
    check->add_option("--group", group_spec, "group, e.g. 30 or 2x6")->required();
    check->add_option("--set", set_spec, "elements, e.g. 1,2,4 or (1,0),(0,1)")->required();
    check->add_option("--t", t, "relation weight")->required()->check(CLI::NonNegativeNumber);
    check->add_option("--mode", mode_text, "strong or weak")->check(CLI::IsMember({"strong", "weak"}));

    auto * ind = app.add_subcommand("ind", "independence number of a set");
    auto * wind = app.add_subcommand("wind", "weak independence number of a set");
    for (auto * cmd : {ind, wind}) {
        cmd->add_option("--group", group_spec, "group")->required();
        cmd->add_option("--set", set_spec, "elements")->required();
    }

    auto * smax = app.add_subcommand("smax", "largest t-independent set");
    auto * wmax = app.add_subcommand("wmax", "largest weakly t-independent set");
    auto * sfmax = app.add_subcommand("sfmax", "largest sum-free set");
    for (auto * cmd : {smax, wmax, sfmax}) {
        cmd->add_option("--group", group_spec, "group")->required();
        if (cmd != sfmax)
            cmd->add_option("--t", t, "relation weight")->required()->check(CLI::NonNegativeNumber);
        cmd->add_flag("--json", as_json, "print the full result as JSON");
        flags.attach(cmd);
    }

    std::string method;
    auto * construct = app.add_subcommand("construct", "build and certify a construction");
    construct->add_option("--method", method, "two, three, cyclic, greedy or greedy-weak")
        ->required()
        ->check(CLI::IsMember({"two", "three", "cyclic", "greedy", "greedy-weak"}));
    construct->add_option("--group", group_spec, "group")->required();
    auto * construct_t = construct->add_option("--t", t, "relation weight")->check(CLI::PositiveNumber);

    auto * bounds = app.add_subcommand("bounds", "formula bounds with provenance");
    bounds->add_option("--group", group_spec, "group")->required();
    auto * bounds_t = bounds->add_option("--t", t, "relation weight")->check(CLI::NonNegativeNumber);
    bounds->add_option("--mode", mode_text, "strong, weak or sumfree")
        ->check(CLI::IsMember({"strong", "weak", "sumfree"}));

    std::string cyclic_text;
    std::vector<std::string> group_list;
    std::vector<std::int64_t> t_list;
    std::string format = "csv";
    bool monotone = false;
    auto * table = app.add_subcommand("table", "batch table of maxima");
    auto * family = table->add_option_group("family")->require_option(1);
    family->add_option("--cyclic", cyclic_text, "cyclic groups Z_A..Z_B");
    family->add_option("--groups", group_list, "comma-separated group list")->delimiter(',');
    table->add_option("--t", t_list, "comma-separated t values")->delimiter(',');
    table->add_option("--mode", mode_text, "strong, weak or sumfree")
        ->check(CLI::IsMember({"strong", "weak", "sumfree"}));
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_flag("--monotone-report", monotone, "summarize decreases along each t");
    flags.attach(table);

    VerifyOptions verify_options;
    auto * verify = app.add_subcommand("verify", "formula, construction and bound checks over all small groups");
    verify->add_option("--cap", verify_options.order_cap, "largest group order")->check(CLI::Range(2, 1 << 20));
    verify->add_option("--tcap", verify_options.t_cap, "largest t")->check(CLI::Range(2, 64));
    flags.attach(verify);

    try {
        flags.budget = default_budget();
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kUsage;
    } catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (check->parsed()) {
            const Group g = parse_group(group_spec);
            const Subset a(g, parse_element_list(g, set_spec));
            const auto report = mode_text == "weak" ? is_weakly_t_independent(a, t) : is_t_independent(a, t);
            out << report_json(report).dump() << '\n';
            return kOk;
        }
        if (ind->parsed() || wind->parsed()) {
            const Group g = parse_group(group_spec);
            const Subset a(g, parse_element_list(g, set_spec));
            out << value_text(ind->parsed() ? independence_number(a) : weak_independence_number(a)) << '\n';
            return kOk;
        }
        if (smax->parsed() || wmax->parsed() || sfmax->parsed()) {
            const Group g = parse_group(group_spec);
            const auto options = flags.options();
            SearchResult r;
            Mode mode = Mode::sumfree;
            if (smax->parsed()) {
                mode = Mode::strong;
                r = max_independent(g, t, options);
            } else if (wmax->parsed()) {
                mode = Mode::weak;
                r = max_weakly_independent(g, t, options);
            } else {
                r = max_sum_free(g, options);
            }
            if (as_json)
                out << search_json(g, mode == Mode::sumfree ? std::nullopt : std::optional<std::int64_t>(t), mode, r)
                           .dump()
                    << '\n';
            else
                out << r.max_size << '\n';
            if (r.status != SearchStatus::exact)
                err << "search budget exhausted after " << r.nodes << " nodes; value is a lower bound\n";
            return search_exit(r);
        }
        if (construct->parsed()) {
            const Group g = parse_group(group_spec);
            const bool needs_t = method == "cyclic" || method == "greedy" || method == "greedy-weak";
            if (needs_t && construct_t->count() == 0)
                throw UsageError("--method " + method + " requires --t");
            ConstructionCertificate cert = [&] {
                if (method == "two")
                    return two_indep_construct(g);
                if (method == "three")
                    return three_indep_construct(g);
                if (method == "cyclic") {
                    if (!g.is_cyclic())
                        throw std::domain_error("cyclic construction requires a cyclic group");
                    return cyclic_t_construct(static_cast<std::int64_t>(g.order()), t);
                }
                if (method == "greedy")
                    return greedy_t_construct(g, t);
                return greedy_weak_construct(g, t);
            }();
            out << certificate_json(cert).dump() << '\n';
            return cert.verified ? kOk : kFailure;
        }
        if (bounds->parsed()) {
            const Group g = parse_group(group_spec);
            const Mode mode = parse_mode(mode_text);
            if (mode != Mode::sumfree && bounds_t->count() == 0)
                throw UsageError("bounds requires --t unless --mode sumfree");
            BoundsReport b;
            if (mode == Mode::strong)
                b = s_bounds(g, t);
            else if (mode == Mode::weak)
                b = w_bounds(g, t);
            else
                b = sf_bounds(g);
            out << bounds_json(g, mode == Mode::sumfree ? std::nullopt : std::optional<std::int64_t>(t), mode, b)
                       .dump()
                << '\n';
            return kOk;
        }
        if (table->parsed()) {
            TableRequest request;
            request.mode = parse_mode(mode_text);
            if (request.mode != Mode::sumfree && t_list.empty())
                throw UsageError("table requires a nonempty --t list");
            for (const auto v : t_list)
                if (v < 0)
                    throw UsageError("t values must be nonnegative");
            request.t_values = t_list;
            if (!cyclic_text.empty()) {
                request.family = cyclic_range(cyclic_text);
            } else {
                for (const auto & spec : group_list)
                    request.family.push_back(parse_group(spec));
            }
            if (request.family.empty())
                throw UsageError("table requires a nonempty family");
            request.budget = flags.budget;
            request.threads = flags.threads;
            request.negation_pruning = !flags.no_negation_pruning;

            const auto rows = build_table(request);
            if (format == "json") {
                out << table_json(rows).dump(1) << '\n';
                if (monotone)
                    for (const auto & line : monotone_report(rows))
                        err << line << '\n';
            } else {
                write_csv(out, rows);
                if (monotone)
                    for (const auto & line : monotone_report(rows))
                        out << "# " << line << '\n';
            }
            const auto violations = sandwich_violations(rows);
            for (const auto & line : violations)
                err << line << '\n';
            if (!violations.empty())
                return kFailure;
            const bool exhausted = std::any_of(rows.begin(), rows.end(),
                [](const TableRow & r) { return r.result.status != SearchStatus::exact; });
            return exhausted ? kBudgetExhausted : kOk;
        }
        if (verify->parsed()) {
            verify_options.budget = flags.budget;
            verify_options.threads = flags.threads;
            return run_verify(verify_options, out, err);
        }
    } catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument & e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const std::domain_error & e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    err << app.help();
    return kUsage;
}

}  // namespace tindep::cli
