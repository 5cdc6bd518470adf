#pragma once

#include <string>

#include "polyconf/config.hpp"

namespace polyconf {

/// Build a configuration from a JSON descriptor (see README for the schema:
/// full_periodic, fiber_periodic, beatty, constant, sum, difference, scale,
/// translate, mirror, poly_apply, binarize, coset_filter, discrete_integrate,
/// builtin; any node may carry an "alphabet" declaration).
Configuration config_from_json(const std::string& text);

/// Canonical JSON descriptor of the configuration's node graph. Sugar forms
/// (difference, builtin) are emitted in lowered form.
std::string config_to_json(const Configuration& c, int indent = -1);

}  // namespace polyconf
