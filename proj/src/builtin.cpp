#include "polyconf/builtin.hpp"

#include <stdexcept>

namespace polyconf {

Configuration two_lines_3d_c1() {
    return Configuration::fiber_periodic(3, {1, 0, 0}, 1, {{{0, 0, 0}, {Int(1)}}},
                                         std::vector<Int>{Int(0), Int(1)});
}

Configuration two_lines_3d_c2(std::int64_t n) {
    return Configuration::fiber_periodic(3, {0, 0, 1}, 1, {{{0, n, 0}, {Int(1)}}},
                                         std::vector<Int>{Int(0), Int(1)});
}

Configuration two_lines_3d(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("two_lines_3d: n must be >= 3");
    return Configuration::sum(two_lines_3d_c1(), two_lines_3d_c2(n)).with_alphabet({Int(0), Int(1)});
}

Configuration golden_beatty(const ExpVec& weight) {
    return Configuration::beatty(2, 1, 1, 5, 2, weight);
}

Configuration golden_difference() {
    Configuration c1 = golden_beatty({1, 0});
    Configuration c2 = golden_beatty({0, 1});
    Configuration c3 = golden_beatty({1, 1});
    return Configuration::difference(c3, Configuration::sum(c1, c2)).with_alphabet({Int(0), Int(1)});
}

Configuration builtin_config(const std::string& name) {
    if (name == "twolines3d") return two_lines_3d(4);
    if (name == "twolines3d-c1") return two_lines_3d_c1();
    if (name == "twolines3d-c2") return two_lines_3d_c2(4);
    if (name == "golden") return golden_difference();
    if (name == "golden-c1") return golden_beatty({1, 0});
    if (name == "golden-c2") return golden_beatty({0, 1});
    if (name == "golden-c3") return golden_beatty({1, 1});
    throw std::invalid_argument("unknown builtin configuration: " + name);
}

std::vector<std::string> builtin_config_names() {
    return {"twolines3d", "twolines3d-c1", "twolines3d-c2", "golden", "golden-c1", "golden-c2",
            "golden-c3"};
}

std::vector<ExpVec> builtin_shape(const std::string& name) {
    if (name == "tshape") {
        // horizontal bar {0..w} x {h} with a stem {d} x {0..h}
        const std::int64_t w = 5, h = 3, d = 2;
        std::vector<ExpVec> pts;
        for (std::int64_t i = 0; i <= w; ++i) pts.push_back({i, h});
        for (std::int64_t j = 0; j <= h; ++j) pts.push_back({d, j});
        return canonical_shape(std::move(pts));
    }
    if (name == "square3") return box_shape(Box::cube(2, 0, 2));
    throw std::invalid_argument("unknown builtin shape: " + name);
}

std::vector<std::string> builtin_shape_names() { return {"tshape", "square3"}; }

}  // namespace polyconf
