#ifndef RELMAG_CLI_HPP
#define RELMAG_CLI_HPP

#include <relmag/matrix.hpp>
#include <relmag/tyszka_system.hpp>

#include <iosfwd>
#include <string>

namespace relmag::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1; // bound violated or lemma falsified
inline constexpr int kExitInput = 2;     // bad flags or unreadable/malformed input

enum class ExtremalMode { homogeneous, tyszka };

/// Chain system k x_i - x_{i+1} = 0, i = 1..n-1, as an (n-1) x n matrix.
IntegerMatrix gen_extremal_matrix(long k, std::size_t n);

/// x1 = 1 followed by the chain, each k x_i written as k unit terms.
TyszkaSystem gen_extremal_system(long k, std::size_t n);

/// Runs one subcommand. `in` backs any "-" file argument.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace relmag::cli

#endif // RELMAG_CLI_HPP
