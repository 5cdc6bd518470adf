#include "polyconf/region.hpp"

#include <sstream>
#include <stdexcept>

namespace polyconf {

bool Box::empty() const {
    if (ranges.empty()) return true;
    for (const auto& [lo, hi] : ranges)
        if (lo > hi) return true;
    return false;
}

std::uint64_t Box::volume() const {
    if (empty()) return 0;
    std::uint64_t v = 1;
    for (const auto& [lo, hi] : ranges) v *= static_cast<std::uint64_t>(hi - lo + 1);
    return v;
}

bool Box::contains(const ExpVec& p) const {
    if (p.size() != ranges.size()) return false;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] < ranges[i].first || p[i] > ranges[i].second) return false;
    return true;
}

Box Box::widened(const std::vector<std::int64_t>& margin_lo,
                 const std::vector<std::int64_t>& margin_hi) const {
    Box b = *this;
    for (size_t i = 0; i < ranges.size(); ++i) {
        b.ranges[i].first -= margin_lo[i];
        b.ranges[i].second += margin_hi[i];
    }
    return b;
}

Box Box::shifted_hull(const std::vector<ExpVec>& shifts) const {
    if (shifts.empty()) throw std::invalid_argument("shifted_hull: empty shift set");
    Box b = *this;
    for (size_t i = 0; i < ranges.size(); ++i) {
        std::int64_t lo = shifts[0][i], hi = shifts[0][i];
        for (const auto& s : shifts) {
            lo = std::min(lo, s[i]);
            hi = std::max(hi, s[i]);
        }
        b.ranges[i].first += lo;
        b.ranges[i].second += hi;
    }
    return b;
}

Box Box::cube(int dim, std::int64_t lo, std::int64_t hi) {
    Box b;
    b.ranges.assign(dim, {lo, hi});
    return b;
}

Box Box::hull(const std::vector<ExpVec>& points) {
    if (points.empty()) throw std::invalid_argument("Box::hull: no points");
    Box b;
    b.ranges.resize(points[0].size());
    for (size_t i = 0; i < points[0].size(); ++i) b.ranges[i] = {points[0][i], points[0][i]};
    for (const auto& p : points) {
        for (size_t i = 0; i < p.size(); ++i) {
            b.ranges[i].first = std::min(b.ranges[i].first, p[i]);
            b.ranges[i].second = std::max(b.ranges[i].second, p[i]);
        }
    }
    return b;
}

Box Box::parse(const std::string& text, int dim) {
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    size_t pos = 0;
    auto parse_int = [&]() -> std::int64_t {
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("region: expected integer in '" + text + "'");
        return std::stoll(text.substr(start, pos - start));
    };
    while (true) {
        std::int64_t lo = parse_int();
        if (text.compare(pos, 2, "..") != 0) throw std::invalid_argument("region: expected '..' in '" + text + "'");
        pos += 2;
        std::int64_t hi = parse_int();
        if (lo > hi) throw std::invalid_argument("region: empty range in '" + text + "'");
        ranges.emplace_back(lo, hi);
        if (pos == text.size()) break;
        if (text[pos] != ',') throw std::invalid_argument("region: expected ',' in '" + text + "'");
        ++pos;
    }
    if (ranges.size() == 1 && dim > 1) ranges.assign(dim, ranges[0]);
    if (static_cast<int>(ranges.size()) != dim)
        throw std::invalid_argument("region: expected " + std::to_string(dim) + " ranges");
    Box b;
    b.ranges = std::move(ranges);
    return b;
}

std::string Box::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < ranges.size(); ++i) {
        if (i) os << ",";
        os << ranges[i].first << ".." << ranges[i].second;
    }
    return os.str();
}

void for_each_point(const Box& box, const std::function<void(const ExpVec&)>& fn) {
    for_each_point_while(box, [&](const ExpVec& p) {
        fn(p);
        return true;
    });
}

bool for_each_point_while(const Box& box, const std::function<bool(const ExpVec&)>& fn) {
    if (box.empty()) return true;
    int d = box.dim();
    ExpVec cur(d);
    for (int i = 0; i < d; ++i) cur[i] = box.ranges[i].first;
    while (true) {
        if (!fn(cur)) return false;
        int axis = d - 1;
        while (axis >= 0) {
            if (++cur[axis] <= box.ranges[axis].second) break;
            cur[axis] = box.ranges[axis].first;
            --axis;
        }
        if (axis < 0) return true;
    }
}

}  // namespace polyconf
