#pragma once

#include <string>
#include <vector>

#include "polyconf/config.hpp"

namespace polyconf {

/// Text grid of a 1D or 2D window. Row 0 is the top of the picture
/// (largest y); columns run left to right with increasing x.
/// Legend: 0 -> '.', 1 -> '#', any other value -> hex digit of (value mod 16).
struct AsciiRender {
    std::string grid;
    std::string legend;
};

AsciiRender render_ascii(const Configuration& c, const Box& region);

/// Binary PPM (P6, 8-bit, gray written to all three channels). Values are
/// mapped affinely: gray = floor((v - min) * 255 / (max - min)), all-zero
/// image when min = max. `bytes` is the complete file content.
struct PpmImage {
    std::vector<unsigned char> bytes;
    int width = 0, height = 0;
    Int min, max;
    std::string scale;  // human-readable mapping description
};

PpmImage render_ppm(const Configuration& c, const Box& region);

}  // namespace polyconf
