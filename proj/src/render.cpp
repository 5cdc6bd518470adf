#include "polyconf/render.hpp"

#include <sstream>
#include <stdexcept>

namespace polyconf {

namespace {

void check_renderable(const Configuration& c, const Box& region) {
    if (c.dim() > 2) throw std::invalid_argument("render: only 1D and 2D configurations are renderable");
    if (region.dim() != c.dim() || region.empty()) throw std::invalid_argument("render: bad region");
}

char glyph(const Int& v) {
    if (v == 0) return '.';
    if (v == 1) return '#';
    static const char* hex = "0123456789abcdef";
    Int m = v % 16;
    if (m < 0) m += 16;
    return hex[m.get_ui()];
}

}  // namespace

AsciiRender render_ascii(const Configuration& c, const Box& region) {
    check_renderable(c, region);
    std::ostringstream grid;
    auto [xlo, xhi] = region.ranges[0];
    if (c.dim() == 1) {
        for (std::int64_t x = xlo; x <= xhi; ++x) grid << glyph(c.coefficient({x}));
        grid << "\n";
    } else {
        auto [ylo, yhi] = region.ranges[1];
        for (std::int64_t y = yhi; y >= ylo; --y) {
            for (std::int64_t x = xlo; x <= xhi; ++x) grid << glyph(c.coefficient({x, y}));
            grid << "\n";
        }
    }
    return AsciiRender{grid.str(),
                       "legend: '.' = 0, '#' = 1, hex digit = value mod 16; top row is the largest y"};
}

PpmImage render_ppm(const Configuration& c, const Box& region) {
    check_renderable(c, region);
    auto [xlo, xhi] = region.ranges[0];
    std::int64_t ylo = 0, yhi = 0;
    if (c.dim() == 2) {
        ylo = region.ranges[1].first;
        yhi = region.ranges[1].second;
    }
    PpmImage img;
    img.width = static_cast<int>(xhi - xlo + 1);
    img.height = static_cast<int>(yhi - ylo + 1);

    std::vector<Int> values;
    values.reserve(static_cast<size_t>(img.width) * img.height);
    for (std::int64_t y = yhi; y >= ylo; --y) {
        for (std::int64_t x = xlo; x <= xhi; ++x) {
            ExpVec p = c.dim() == 1 ? ExpVec{x} : ExpVec{x, y};
            values.push_back(c.coefficient(p));
        }
    }
    img.min = img.max = values.front();
    for (const auto& v : values) {
        if (v < img.min) img.min = v;
        if (v > img.max) img.max = v;
    }
    Int span = img.max - img.min;
    img.scale = span == 0 ? "constant window, all pixels 0"
                          : "gray = floor((value - " + img.min.get_str() + ") * 255 / " +
                                span.get_str() + ")";

    std::string header = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    img.bytes.assign(header.begin(), header.end());
    img.bytes.reserve(img.bytes.size() + values.size() * 3);
    for (const auto& v : values) {
        unsigned char gray = 0;
        if (span != 0) gray = static_cast<unsigned char>(Int((v - img.min) * 255 / span).get_ui());
        img.bytes.push_back(gray);
        img.bytes.push_back(gray);
        img.bytes.push_back(gray);
    }
    return img;
}

}  // namespace polyconf
