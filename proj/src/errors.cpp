#include "tsplit/errors.hpp"

#include <cstdio>

namespace tsplit {

namespace {

auto describe(long double estimate, std::uint64_t budget) -> std::string {
    char buf[160];
    std::snprintf(buf, sizeof buf, "search would visit about %.3Le subsets, budget is %llu", estimate,
                  static_cast<unsigned long long>(budget));
    return buf;
}

} // namespace

BudgetExceeded::BudgetExceeded(long double estimate, std::uint64_t budget)
    : std::runtime_error(describe(estimate, budget)), _estimate(estimate), _budget(budget) {}

} // namespace tsplit
