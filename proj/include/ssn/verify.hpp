#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ssn/rational.hpp"

namespace ssn {

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;  // one line per failed identity, with its parameters

    bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
    std::int64_t lo = -10;  // scan range for l, m, n, p
    std::int64_t hi = 10;
    std::uint64_t seed = 0x5eed;
    std::size_t fuzz = 2000;  // random cases per fuzzed property
};

/// Runs every cross-consistency check, sorted by name.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

/// The first `count` triples (a1, a2, a3) with small numerators and
/// denominators for which Q(a1, a2, a3) + R(∞) is trivial, in a fixed order.
std::vector<std::array<ExtendedRational, 3>> em3_parameter_search(std::size_t count);

} // namespace ssn
