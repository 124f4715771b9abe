#ifndef PFROB_TOOLS_CLI_HPP
#define PFROB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pfrob::cli
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInvariant = 3;

// Default oracle precision in bits when --precision is absent.
inline constexpr const char *kPrecisionEnv = "PFROB_PRECISION";

// args excludes the program name. `in` feeds `local` when neither --data nor --input is given.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace pfrob::cli

#endif
