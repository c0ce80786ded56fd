#pragma once

#include <string>
#include <vector>

#include "subword/numeric.hpp"

namespace subword {

// One verified equality, stored as exact decimal strings so reports stay
// byte-stable across runs.
struct CheckResult {
    std::string name;
    std::string expected;
    std::string actual;

    bool pass() const { return expected == actual; }
};

inline CheckResult make_check(std::string name, const Integer& expected, const Integer& actual) {
    return {std::move(name), to_string(expected), to_string(actual)};
}

inline CheckResult make_check(std::string name, std::string expected, std::string actual) {
    return {std::move(name), std::move(expected), std::move(actual)};
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks)
        if (!c.pass()) return false;
    return true;
}

} // namespace subword
