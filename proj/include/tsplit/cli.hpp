#ifndef TSPLIT_CLI_HPP
#define TSPLIT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tsplit::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
    std::string subcommand;
    unsigned k = 0;
    unsigned k_max = 0;
    std::string input;
    std::string output;
    std::string set;
    std::string method = "bb";
    std::size_t size = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    unsigned threads = 1;
    bool delete_vertex = false;
    bool reference = false;
};

/**
 * Runs one subcommand. `args` excludes the program name. Data goes to
 * `out`, diagnostics to `err`; `--input -` reads from `in`.
 *
 * Returns 0 on success, 1 when a verification fails, 2 on usage errors,
 * unreadable input and budget refusals.
 */
auto run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) -> int;

} // namespace tsplit::cli

#endif
