#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pposets/poset.hpp"

// Exhaustive machine checks of the structural identities, each quantified
// over every basis element (or tuple of them) up to a cardinality bound.

namespace pposets {

class UnknownIdentityError : public std::invalid_argument {
public:
    explicit UnknownIdentityError(const std::string& name)
        : std::invalid_argument("unknown identity '" + name + "'") {}
};

struct IdentityReport {
    std::string identity;
    int n_max = 0;
    std::uint64_t cases_checked = 0;
    std::vector<std::string> failures;  // canonical enumeration order

    bool passed() const { return failures.empty(); }
};

// Canonical suite names, in the order "all" runs them.
const std::vector<std::string>& identity_names();

// Runs one suite exhaustively up to n_max.  jobs > 1 distributes the
// independent instances across threads; output stays deterministic.
IdentityReport verify_identity(const std::string& name, int n_max, int jobs = 1,
                               int guard = kDefaultGuard);

std::string report_to_json(const IdentityReport& report);

}  // namespace pposets
