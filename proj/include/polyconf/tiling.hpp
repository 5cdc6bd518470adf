#pragma once

#include <optional>
#include <vector>

#include "polyconf/annihilate.hpp"
#include "polyconf/config.hpp"

namespace polyconf {

/// A cluster tile: a finite nonempty set of lattice cells (not necessarily
/// connected; translations only).
struct ClusterTile {
    int dim;
    std::vector<ExpVec> cells;  // canonical order, deduplicated

    static ClusterTile of(int dim, std::vector<ExpVec> cells);
    LaurentPoly poly() const;  // sum of X^v over the cells
};

/// A candidate co-tiler: a binary full-lattice-periodic configuration
/// interpreted as the indicator of the set C. The lattice is the joint
/// lattice of the indicator; claims about the tiling are decided on its
/// fundamental domain.
struct CoTilerSet {
    Configuration indicator;
    Lattice lattice;

    /// C = the sublattice spanned by the basis.
    static CoTilerSet of(int dim, const std::vector<ExpVec>& basis);
    /// C = the support of an arbitrary binary full-periodic configuration.
    static CoTilerSet of_config(const Configuration& binary_indicator);
};

struct TilingVerdict {
    bool tiles;  // every point covered exactly once
    std::string domain;
    // on failure: a position and its cover count
    std::optional<ExpVec> position;
    std::optional<Int> cover_count;
};

/// Checks D (+) C = Z^d by verifying that the tile polynomial applied to the
/// indicator is constantly one; exact via the lattice fundamental domain.
TilingVerdict is_cotiler(const ClusterTile& tile, const CoTilerSet& cotiler);

struct TilingIdentityReport {
    Int max_deviation;  // max |cover count - 1| over the fundamental domain
    std::optional<ExpVec> worst_position;
};

/// Re-verifies the identity f*c = 1 on the fundamental domain and reports the
/// largest deviation (0 when the pair tiles).
TilingIdentityReport tiling_identity_check(const ClusterTile& tile, const CoTilerSet& cotiler);

/// For a prime-size tile with a verified co-tiler, verifies that the
/// indicator is p(v-u)-periodic for every pair u != v in the tile and returns
/// the verified period vectors. Failure of any pair is a hard error.
std::vector<ExpVec> prime_periodicity_check(const ClusterTile& tile, const CoTilerSet& cotiler);

}  // namespace polyconf
