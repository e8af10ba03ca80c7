#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpart/bigint.hpp"

namespace qpart {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; /* first failing coefficient or a short summary */
};

struct CheckParams {
    std::optional<long long> s;
    std::optional<long long> t;
    std::optional<long long> max_n;
    std::optional<long long> order;
    std::optional<std::string> family;
};

/* Registered identity and relation checks, by CLI name:
 * gauss, pentagonal, lebesgue, sylvester, rogers-fine, jacobi, alladi,
 * generalized-expansion, over-forms, merca, andrews-vw, equinumerosity,
 * congruence-spot. */
std::vector<std::string> check_names();
CheckResult run_check(const std::string& name, const CheckParams& params);

} // namespace qpart
