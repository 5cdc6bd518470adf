#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polyconf/lattice.hpp"

namespace polyconf {

/// Axis-aligned box of lattice points with inclusive per-axis ranges.
struct Box {
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;

    int dim() const { return static_cast<int>(ranges.size()); }
    bool empty() const;
    std::uint64_t volume() const;
    bool contains(const ExpVec& p) const;

    /// Grow every axis: lo -= margin_lo[i], hi += margin_hi[i].
    Box widened(const std::vector<std::int64_t>& margin_lo,
                const std::vector<std::int64_t>& margin_hi) const;

    /// Smallest box containing every p + s for p in this box, s in shifts.
    Box shifted_hull(const std::vector<ExpVec>& shifts) const;

    static Box cube(int dim, std::int64_t lo, std::int64_t hi);
    static Box hull(const std::vector<ExpVec>& points);

    /// Parse "a..b,c..d,...". A single range broadcasts to `dim` axes.
    static Box parse(const std::string& text, int dim);
    std::string to_string() const;

    bool operator==(const Box& o) const { return ranges == o.ranges; }
};

/// Visit every lattice point of the box in lexicographic order
/// (axis 0 slowest). This is the scan order used for witnesses and for
/// row-major window layout.
void for_each_point(const Box& box, const std::function<void(const ExpVec&)>& fn);

/// Same order, but stops early when fn returns false.
bool for_each_point_while(const Box& box, const std::function<bool(const ExpVec&)>& fn);

}  // namespace polyconf
