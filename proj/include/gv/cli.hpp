#ifndef GV_CLI_HPP
#define GV_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gv {

// Default seed for every randomized suite; override with --seed.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Command dispatch for the gvkit tool. `args` excludes the program name.
// Exit codes: 0 all checks pass, 1 a mathematical check failed
// (counterexample emitted), 2 input or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gv

#endif
