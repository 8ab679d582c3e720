#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ramsey/colorings.hpp"

namespace ramsey {

// Parse failure with the offending 1-based line number.
struct FormatError : std::runtime_error {
    FormatError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// On-disk coloring, version 1:
//   ramsey-coloring 1
//   mode explicit|rank|stepup|stepup-strong
//   k <int>
//   N <int>
//   seed <uint>            (only when known)
//   <body>
// Body lines, one per set in colex order:
//   explicit   "v1 ... vk R|B"        over C(N,k) edges of [N]
//   rank       "s1 ... s_{k-1} c"     c in 1..k, over C(N,k-1) subsets
//   stepup(-strong) "s1 ... s_{k-1} R|B"
// Rank and stepup files persist only the base coloring; the k-set coloring
// is recomputed on demand (stepped-up colorings live on 2^N vertices and
// are far too large to store).
struct ColoringFile {
    enum class Mode { Explicit, Rank, StepUp, StepUpStrong };

    Mode mode = Mode::Explicit;
    int k = 0;
    int N = 0;
    std::optional<std::uint64_t> seed;

    std::optional<ExplicitColoring> explicit_table;  // Explicit
    std::optional<KaryBaseColoring> rank_base;       // Rank
    std::optional<BaseTwoColoring> step_base;        // StepUp*

    static std::string_view mode_name(Mode mode);
    static std::optional<Mode> parse_mode(std::string_view name);

    static ColoringFile load(std::istream& in);
    static ColoringFile load_path(const std::string& path);
    void save(std::ostream& out) const;
    void save_path(const std::string& path) const;

    // The coloring the file denotes. For stepup modes the oracle lives on
    // {0,1}^N; pass allow_unverified to accept parameters outside the
    // construction's verified regime.
    std::unique_ptr<ColoringOracle> oracle(bool allow_unverified = false) const;
};

}  // namespace ramsey
