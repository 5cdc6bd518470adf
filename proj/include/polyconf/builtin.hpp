#pragma once

#include <string>
#include <vector>

#include "polyconf/config.hpp"

namespace polyconf {

/// The 3D two-perpendicular-lines configuration: value 1 on (i,0,0) and on
/// (0,n,i) for all i, zero elsewhere. Non-periodic, but a sum of two
/// one-periodic lines at distance n.
Configuration two_lines_3d(std::int64_t n);
Configuration two_lines_3d_c1();
Configuration two_lines_3d_c2(std::int64_t n);

/// Golden-ratio Beatty plane: value floor(<weight,v> * (1+sqrt 5)/2).
Configuration golden_beatty(const ExpVec& weight);

/// The binary configuration floor((i+j)a) - floor(ia) - floor(ja) for the
/// golden ratio a; annihilated by (x-1)(y-1)(x y^-1 - 1) and non-periodic.
Configuration golden_difference();

/// Built-in configurations by name (twolines3d[-c1|-c2], golden[-c1..c3]).
Configuration builtin_config(const std::string& name);
std::vector<std::string> builtin_config_names();

/// Built-in demo shapes by name (tshape, square3).
std::vector<ExpVec> builtin_shape(const std::string& name);
std::vector<std::string> builtin_shape_names();

}  // namespace polyconf
