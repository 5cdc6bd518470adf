#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyconf/lattice.hpp"
#include "polyconf/lpoly.hpp"
#include "polyconf/numeric.hpp"
#include "polyconf/region.hpp"

namespace polyconf {

/// How much of a configuration is finitely checkable. Drives verification
/// verdicts: FullLatticePeriodic claims are decidable on a fundamental
/// domain, FiberPeriodicFinite on a bounded band, OracleOnly only yields
/// window evidence.
enum class ExactnessClass { FullLatticePeriodic, FiberPeriodicFinite, OracleOnly };

std::string to_string(ExactnessClass c);

class ConfigNode;
class Configuration;

/// Exact coefficient oracle over Z^d. A value handle over an immutable node
/// graph; copying is cheap and all queries are thread safe.
class Configuration {
  public:
    // leaves
    static Configuration full_periodic(int dim, const std::vector<ExpVec>& basis,
                                       const std::map<ExpVec, Int>& table,
                                       std::optional<std::vector<Int>> alphabet = std::nullopt);
    /// Values row-major over the fundamental box of the basis lattice
    /// (canonical coset representatives in lexicographic order).
    static Configuration full_periodic_values(int dim, const std::vector<ExpVec>& basis,
                                              const std::vector<Int>& values,
                                              std::optional<std::vector<Int>> alphabet = std::nullopt);
    static Configuration fiber_periodic(int dim, const ExpVec& direction, std::int64_t multiplicity,
                                        const std::vector<std::pair<ExpVec, std::vector<Int>>>& fibers,
                                        std::optional<std::vector<Int>> alphabet = std::nullopt);
    /// Values floor(<weight,v> * (p + s*sqrt(q)) / r), computed with integer
    /// square roots only. q must not be a perfect square unless s = 0.
    static Configuration beatty(int dim, const Int& p, const Int& s, const Int& q, const Int& r,
                                const ExpVec& weight);
    static Configuration constant(int dim, const Int& value);

    // combinators (pointwise semantics)
    static Configuration sum(const std::vector<Configuration>& children);
    static Configuration sum(const Configuration& a, const Configuration& b);
    static Configuration difference(const Configuration& a, const Configuration& b);
    static Configuration scale(const Int& k, const Configuration& c);
    static Configuration translate(const Configuration& c, const ExpVec& by);
    static Configuration mirror(const Configuration& c, int axis);
    /// Formal product (fc)_v = sum_u f_u c_{v-u}; f must be integral.
    static Configuration poly_apply(const LaurentPoly& f, const Configuration& c);
    /// 1 where the child value is in `ones`, else 0. Requires a declared
    /// alphabet on the child.
    static Configuration binarize(const Configuration& c, const std::vector<Int>& ones);
    /// Keeps values on the selected cosets of a full-rank lattice, zero
    /// elsewhere.
    static Configuration coset_filter(const Configuration& c, const Lattice& lattice,
                                      const std::vector<ExpVec>& coset_reps);
    /// Declares a finite value set; queries are checked against it.
    Configuration with_alphabet(std::vector<Int> values) const;

    int dim() const;
    std::optional<std::vector<Int>> alphabet() const;
    ExactnessClass exactness() const;

    Int coefficient(const ExpVec& v) const;
    /// Dense row-major dump (axis 0 slowest); pointwise equal to coefficient().
    std::vector<Int> window(const Box& box) const;
    /// Tuple (coefficient(v+u) for u in D); D must be in canonical order.
    std::vector<Int> pattern(const ExpVec& v, const std::vector<ExpVec>& shape) const;

    /// Decomposition of the oracle into certified periodic pieces, when the
    /// node graph supports one (see StructureInfo); nullopt for OracleOnly.
    std::optional<struct StructureInfo> structure() const;

    std::shared_ptr<const ConfigNode> node() const { return node_; }
    explicit Configuration(std::shared_ptr<const ConfigNode> node);

  private:
    std::shared_ptr<const ConfigNode> node_;
};

/// An L-periodic summand; global claims about it are decidable on one
/// fundamental domain of L.
struct LatticePiece {
    Configuration piece;
    Lattice lattice;
};

/// A (multiplicity * direction)-periodic summand whose nonzero values live on
/// the fibers listed in `reps` (canonical representatives modulo the
/// direction line). Global claims are decidable on the reps x one period.
struct FiberPiece {
    Configuration piece;
    Direction direction;
    std::int64_t multiplicity;
    std::vector<ExpVec> reps;
};

/// The source configuration equals the pointwise sum of all pieces.
struct StructureInfo {
    std::vector<LatticePiece> lattice_pieces;
    std::vector<FiberPiece> fiber_pieces;
};

/// floor(k * (p + s*sqrt(q)) / r) using exact integer square roots, with
/// floor semantics toward -infinity. Requires r != 0 and q >= 0.
Int beatty_floor(const Int& p, const Int& s, const Int& q, const Int& r, const Int& k);

/// Sort + dedup; the canonical (lexicographic) ordering for shapes.
std::vector<ExpVec> canonical_shape(std::vector<ExpVec> points);
/// All points of the box, canonically ordered.
std::vector<ExpVec> box_shape(const Box& box);

}  // namespace polyconf
