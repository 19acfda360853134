#ifndef TSPLIT_ERRORS_HPP
#define TSPLIT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tsplit {

/// A vertex id or level outside the domain of the operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A vertex set used against a digraph of a different order.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A construction or parameter computation would exceed the configured size limit.
class SizeLimitError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// The caller violated a stated hypothesis (e.g. |X| too large for the bound).
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text digraph.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), _line(line) {}

    auto line() const -> std::size_t { return _line; }

  private:
    std::size_t _line;
};

/// An exhaustive search would visit more subsets than the budget allows.
class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(long double estimate, std::uint64_t budget);

    /// Number of subsets the refused search would have visited.
    auto estimate() const -> long double { return _estimate; }
    auto budget() const -> std::uint64_t { return _budget; }

  private:
    long double _estimate;
    std::uint64_t _budget;
};

} // namespace tsplit

#endif
