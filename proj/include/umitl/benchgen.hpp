// ============================================================================
// umitl/benchgen.hpp — Tiling-reduction benchmark formula families
// ============================================================================
//
// Three generators turn tiling problem instances into formulas whose models
// encode tilings: rows are concatenated with a separator letter after each
// row.  The integer-grid scheme stamps letters 0,1,2,...; the corridor scheme
// spaces successive letters by a fixed gap inside (1,2).  A brute-force
// tiling checker and a small enumerator provide the independent ground truth.
//
// ============================================================================

#ifndef UMITL_BENCHGEN_HPP
#define UMITL_BENCHGEN_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "umitl/formula.hpp"
#include "umitl/timed_word.hpp"

namespace umitl {

inline const std::string kSeparator = "s";

struct TilingSystem {
    std::vector<std::string> tiles;                               // X
    std::vector<std::pair<std::string, std::string>> horizontal;  // M_H
    std::vector<std::pair<std::string, std::string>> vertical;    // M_V
};

// Rows bottom-up: grid[j][i] is the tile in column i (0-based) of row j.
using Tiling = std::vector<std::vector<std::string>>;

struct ExpspaceInstance {
    TilingSystem system;
    std::int64_t n = 1;        // region width is 2^n, height arbitrary
    std::string first, final;  // T(1,1) and T(2^n, m)
};

struct NexptimeInstance {
    TilingSystem system;
    std::int64_t n = 1;                      // region is 2^n x 2^n
    std::vector<std::string> bottom_prefix;  // leftmost n tiles of the bottom row
};

struct PspaceInstance {
    TilingSystem system;
    std::int64_t n = 1;  // corridor width
    std::vector<std::string> left_tiles, right_tiles;
    std::vector<std::string> top, bottom;  // length n each
};

// Alphabet of the generated formulas: tiles plus the separator.
std::vector<std::string> tiling_alphabet(const TilingSystem& sys);

FormulaId gen_expspace(FormulaFactory& f, const ExpspaceInstance& inst);
FormulaId gen_nexptime(FormulaFactory& f, const NexptimeInstance& inst);  // bounded fragment
FormulaId gen_pspace(FormulaFactory& f, const PspaceInstance& inst);

struct EncodingScheme {
    enum class Kind { IntegerGrid, CorridorSpacing } kind = Kind::IntegerGrid;
    Rational gap = Rational(3, 2);  // corridor only; must lie in (1,2)
};

TimedWord tiling_to_word(const Tiling& t, const EncodingScheme& scheme);

// Inverse of the integer-grid encoding: reads `width`-column rows, each
// terminated by the separator, from the first letters of w.  Returns nullopt
// when the layout does not match.
std::optional<Tiling> word_to_tiling(const TimedWord& w, std::size_t width);

// Matching constraints plus the per-family boundary constraints.
bool check_tiling(const Tiling& t, const TilingSystem& sys);
bool check_tiling(const Tiling& t, const ExpspaceInstance& inst, std::size_t height);
bool check_tiling(const Tiling& t, const NexptimeInstance& inst);
bool check_tiling(const Tiling& t, const PspaceInstance& inst, std::size_t height);

// Brute-force search over all tilings of a width x height region satisfying
// `check`; ground truth for the generator soundness tests.
std::optional<Tiling> enumerate_tiling(const TilingSystem& sys, std::size_t width,
                                       std::size_t height,
                                       const std::function<bool(const Tiling&)>& check);

// JSON instance files: {"family": "...", "tiles": [...], "mh": [[a,b],...],
// "mv": [...], "n": k, family-specific fields}.
struct BenchInstance {
    std::string family;
    std::optional<ExpspaceInstance> expspace;
    std::optional<NexptimeInstance> nexptime;
    std::optional<PspaceInstance> pspace;
};
BenchInstance parse_instance(const std::string& json_text);

}  // namespace umitl

#endif
