#include "verify.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "tindep/constructions.hpp"
#include "tindep/formulas.hpp"

namespace tindep::cli {

namespace {

struct Check {
    std::string name;
    std::size_t cases = 0;
    std::optional<std::string> counterexample;

    void expect(bool ok, const std::function<std::string()> & describe)
    {
        ++cases;
        if (!ok && !counterexample)
            counterexample = describe();
    }
};

struct GroupValues {
    std::map<std::int64_t, SearchResult> s, w;
    SearchResult sf;
};

std::string cell(const Group & g, std::int64_t t) { return g.to_string() + " t=" + std::to_string(t); }

std::string cert_line(const Group & g, const ConstructionCertificate & c)
{
    return c.method + " on " + g.to_string() + " t=" + std::to_string(c.claimed_t) + ": size " +
        std::to_string(c.produced.size()) + ", expected " + std::to_string(c.expected_size) +
        (c.diagnostics.empty() ? std::string() : " (" + c.diagnostics + ")");
}

}  // namespace

int run_verify(const VerifyOptions & options, std::ostream & out, std::ostream & err)
{
    if (options.order_cap < 2 || options.t_cap < 2) {
        err << "verify: caps must be at least 2\n";
        return kUsage;
    }
    const auto groups = abelian_groups_up_to(options.order_cap);

    SearchOptions search;
    search.budget = options.budget;
    search.threads = 1;

    std::vector<GroupValues> values(groups.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < groups.size(); i = next.fetch_add(1)) {
            for (std::int64_t t = 2; t <= options.t_cap; ++t) {
                values[i].s.emplace(t, max_independent(groups[i], t, search));
                values[i].w.emplace(t, max_weakly_independent(groups[i], t, search));
            }
            values[i].sf = max_sum_free(groups[i], search);
        }
    };
    const unsigned threads = std::max(1U, options.threads);
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(work);
        for (auto & th : pool)
            th.join();
    }

    Check formula{"formula-vs-search", 0, std::nullopt};
    Check sandwich{"bound-sandwich", 0, std::nullopt};
    Check ordering{"weak-at-least-strong", 0, std::nullopt};
    Check monotone{"monotone-in-t", 0, std::nullopt};
    Check certs{"construction-certificates", 0, std::nullopt};
    bool exhausted = false;

    for (std::size_t i = 0; i < groups.size(); ++i) {
        const Group & g = groups[i];
        const auto & v = values[i];
        for (std::int64_t t = 2; t <= options.t_cap; ++t) {
            const auto & s = v.s.at(t);
            const auto & w = v.w.at(t);
            if (s.status != SearchStatus::exact || w.status != SearchStatus::exact) {
                exhausted = true;
                continue;
            }
            if (const auto e = s_exact(g, t))
                formula.expect(*e == s.max_size, [&] {
                    return "s " + cell(g, t) + ": formula " + std::to_string(*e) + ", search " +
                        std::to_string(s.max_size);
                });
            if (t == 3 && g.is_cyclic()) {
                const auto e = s_Zn3(static_cast<std::int64_t>(g.order()));
                formula.expect(e == s.max_size, [&] {
                    return "s_Zn3 " + cell(g, t) + ": formula " + std::to_string(e) + ", search " +
                        std::to_string(s.max_size);
                });
            }
            if (const auto e = w_exact_small_t(g, t))
                formula.expect(*e == w.max_size, [&] {
                    return "w " + cell(g, t) + ": formula " + std::to_string(*e) + ", search " +
                        std::to_string(w.max_size);
                });

            const auto sb = s_bounds(g, t);
            sandwich.expect(sb.admits(s.max_size), [&] {
                return "s " + cell(g, t) + " = " + std::to_string(s.max_size) + " outside [" +
                    std::to_string(sb.lower) + ", " + std::to_string(sb.upper) + "]";
            });
            const auto wb = w_bounds(g, t);
            sandwich.expect(wb.admits(w.max_size), [&] {
                return "w " + cell(g, t) + " = " + std::to_string(w.max_size) + " outside [" +
                    std::to_string(wb.lower) + ", " + std::to_string(wb.upper) + "]";
            });

            ordering.expect(w.max_size >= s.max_size, [&] {
                return cell(g, t) + ": w = " + std::to_string(w.max_size) + " < s = " + std::to_string(s.max_size);
            });
            if (t > 2) {
                const auto & prev = v.s.at(t - 1);
                const auto & wprev = v.w.at(t - 1);
                monotone.expect(prev.max_size >= s.max_size && wprev.max_size >= w.max_size, [&] {
                    return cell(g, t) + ": value grew from t-1";
                });
            }

            std::vector<ConstructionCertificate> produced{greedy_t_construct(g, t), greedy_weak_construct(g, t)};
            if (g.is_cyclic() && t >= 3 && t <= static_cast<std::int64_t>(g.order()) - 1)
                produced.push_back(cyclic_t_construct(static_cast<std::int64_t>(g.order()), t));
            if (t == 2)
                produced.push_back(two_indep_construct(g));
            if (t == 3)
                produced.push_back(three_indep_construct(g));
            for (const auto & c : produced) {
                const auto & best = c.kind == RelationKind::weak ? w : s;
                certs.expect(c.verified && static_cast<std::int64_t>(c.produced.size()) <= best.max_size,
                    [&] { return cert_line(g, c); });
            }
        }
        if (v.sf.status != SearchStatus::exact) {
            exhausted = true;
        } else {
            const auto fb = sf_bounds(g);
            sandwich.expect(fb.admits(v.sf.max_size), [&] {
                return "sf " + g.to_string() + " = " + std::to_string(v.sf.max_size) + " outside [" +
                    std::to_string(fb.lower) + ", " + std::to_string(fb.upper) + "]";
            });
        }
    }

    bool failed = false;
    out << "verify: " << groups.size() << " groups of order <= " << options.order_cap << ", 2 <= t <= "
        << options.t_cap << '\n';
    for (const Check * c : {&formula, &sandwich, &ordering, &monotone, &certs}) {
        if (c->counterexample) {
            failed = true;
            out << "FAIL " << c->name << " (" << c->cases << " cases): " << *c->counterexample << '\n';
        } else {
            out << "PASS " << c->name << " (" << c->cases << " cases)\n";
        }
    }
    if (failed)
        return kFailure;
    if (exhausted) {
        err << "verify: some searches exhausted their budget\n";
        return kBudgetExhausted;
    }
    return kOk;
}

}  // namespace tindep::cli
