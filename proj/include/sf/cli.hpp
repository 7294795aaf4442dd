#pragma once

#include <iosfwd>

namespace sf::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kInvariant = 3 };

inline constexpr const char* kDigitsEnv = "SIEGELFORMS_DIGITS";
inline constexpr long kDefaultDigits = 60;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

} // namespace sf::cli
