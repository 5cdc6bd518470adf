#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "polyconf/config.hpp"

namespace polyconf {

enum class CountVerdict { Exact, WindowLowerBound };
std::string to_string(CountVerdict v);

/// Distinct-pattern count for a shape over a scan region. Exact only when the
/// configuration's structure certifies that every pattern anchor class is
/// represented inside the region; otherwise the count is a lower bound.
struct ComplexityReport {
    std::vector<ExpVec> shape;  // canonical order
    Box region;
    std::uint64_t count = 0;
    CountVerdict verdict = CountVerdict::WindowLowerBound;
};

ComplexityReport distinct_patterns(const Configuration& c, const std::vector<ExpVec>& shape,
                                   const Box& region);

/// distinct_patterns for the m x n rectangle (d = 2 only).
ComplexityReport complexity_rect(const Configuration& c, std::int64_t m, std::int64_t n,
                                 const Box& region);

struct NivatScanRow {
    std::int64_t m, n;
    std::uint64_t count;
    std::uint64_t mn;
    bool above_bound;  // count > m*n
    CountVerdict verdict;
};

std::vector<NivatScanRow> nivat_scan(const Configuration& c, std::int64_t m_max, std::int64_t n_max,
                                     const Box& region);

/// Blocks anchored along {anchor + k*v}; the distinct observed M x N blocks
/// of one line of blocks.
struct BlockLine {
    ExpVec anchor;  // canonical transversal representative of the line
    std::set<std::vector<Int>> blocks;
    std::uint64_t samples = 0;
};

struct BlockLinesReport {
    Direction direction;
    std::int64_t block_m, block_n;
    std::vector<BlockLine> lines;
    /// Size of the greedy pairwise-disjoint family of observed block sets.
    std::uint64_t disjoint_count = 0;
};

BlockLinesReport block_lines(const Configuration& c, const Direction& v, std::int64_t block_m,
                             std::int64_t block_n, const Box& region);

struct PeriodSearchResult {
    ExpVec period;
    bool proven;  // ProvenZero tier; otherwise a window-evidence candidate
};

/// First vector (by Chebyshev norm then lex, sign-canonical) with
/// 0 < norm <= bound whose difference polynomial annihilates c. The region is
/// the falsification/evidence window for OracleOnly configurations.
std::optional<PeriodSearchResult> find_period(const Configuration& c, std::int64_t bound,
                                              const Box& region);

struct MorseHedlundReport {
    std::uint64_t factor_count;
    std::optional<std::int64_t> period;  // smallest p <= factor_count valid on the word
};

/// Distinct length-n factors of the word; when the count is at most n, also
/// searches for a period valid on the whole word. All conclusions are
/// on-window. Requires |word| >= 2n.
MorseHedlundReport morse_hedlund_1d(const std::vector<Int>& word, std::int64_t n);

}  // namespace polyconf
