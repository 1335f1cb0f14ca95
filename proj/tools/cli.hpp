#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwvc::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kIo = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInvariant = 3;
inline constexpr int kOracleCap = 4;
}  // namespace exit_code

/// Entry point for `mwvc <gen|run|verify|sweep> ...`. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

inline constexpr const char* kSweepHeader =
    "n,avg_deg,seed,algo,epsilon,preset,phases,rounds,max_words_per_n,"
    "cover_weight,matching_value,ratio_vs_matching,ratio_vs_opt,checks_passed";

}  // namespace mwvc::cli
