#pragma once

#include <cstdint>
#include <iosfwd>

#include "tindep/search.hpp"

namespace tindep::cli {

struct VerifyOptions {
    std::uint64_t order_cap = 24;
    std::int64_t t_cap = 4;
    std::uint64_t budget = kDefaultBudget;
    unsigned threads = 1;
};

/// Sweeps every abelian group of order <= order_cap and 2 <= t <= t_cap.
/// Prints one line per check; returns an ExitCode.
int run_verify(const VerifyOptions & options, std::ostream & out, std::ostream & err);

}  // namespace tindep::cli
