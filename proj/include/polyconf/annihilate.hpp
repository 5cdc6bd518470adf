#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyconf/config.hpp"

namespace polyconf {

/// Result of checking f*c = 0. ProvenZero is only issued when the
/// configuration's structure makes the zero claim decidable from finitely
/// many points; ZeroOnRegion is window evidence and is never upgraded.
struct AnnihilationVerdict {
    enum class Status { ProvenZero, ZeroOnRegion, NonzeroAt };
    Status status;

    // ProvenZero: verification tier and a description of the checked domain
    std::optional<ExactnessClass> tier;
    std::string domain;

    // ZeroOnRegion
    std::optional<Box> region;

    // NonzeroAt: reproducible witness
    std::optional<ExpVec> position;
    std::optional<Int> value;

    bool is_zero() const { return status != Status::NonzeroAt; }

    static AnnihilationVerdict proven(ExactnessClass tier, std::string domain);
    static AnnihilationVerdict on_region(Box region);
    static AnnihilationVerdict nonzero(ExpVec position, Int value);
};

std::string to_string(AnnihilationVerdict::Status s);

/// Decide f*c = 0 at the best tier the configuration's structure allows.
/// The region is the evidence window for OracleOnly configurations and is
/// ignored for certified classes.
AnnihilationVerdict verify_annihilator(const LaurentPoly& f, const Configuration& c, const Box& region);

/// Exact kernel basis of {x : M x = 0}, fraction-free (Bareiss) elimination
/// with first-nonzero pivoting. Basis vectors are integral, content-free,
/// with positive leading coefficient, ordered by free column.
std::vector<std::vector<Rat>> rational_nullspace(const std::vector<std::vector<Rat>>& rows);

/// Output of the low-complexity annihilator search: g with g*c constant on
/// the region, and f = (X^{e1} - 1) g, an annihilator candidate.
struct AnnihilatorSearchResult {
    LaurentPoly g;
    Int constant;  // value of (g*c) on the searched anchors
    LaurentPoly f;
};

/// Build the pattern matrix (1, c_{u+v}) over anchors v with v+D inside the
/// region and return an integral annihilator candidate from its kernel, or
/// nullopt when the kernel is trivial.
std::optional<AnnihilatorSearchResult> find_annihilator(const Configuration& c,
                                                        const std::vector<ExpVec>& shape,
                                                        const Box& region);

struct NormalizationWitness {
    enum class Status { Witness, AlreadyNormalized, Inconclusive };
    Status status;
    std::optional<Int> a, b;             // a*c + b*1 is normalized, a != 0
    std::optional<LaurentPoly> witness;  // g with sigma(g) != 0, g*c constant
    std::string note;
};

/// Search for (a, b) making a*c + b*1 normalized, via the constant-producing
/// polynomials on the given search shape/region.
NormalizationWitness normalize(const Configuration& c, const std::vector<ExpVec>& shape,
                               const Box& region);

/// Verdicts for f(X^n)*c = 0 for each n. Requires that f itself does not
/// verify NonzeroAt.
std::vector<std::pair<std::int64_t, AnnihilationVerdict>> expansion_check(
    const LaurentPoly& f, const Configuration& c, const std::vector<std::int64_t>& ns,
    const Box& region);

/// A verified product of difference polynomials (X^{v_1}-1)...(X^{v_m}-1)
/// with pairwise distinct directions.
struct DifferenceProductCertificate {
    std::vector<ExpVec> vectors;
    LaurentPoly product;
    AnnihilationVerdict verdict;
};

/// Search-order-first difference product annihilating c: vectors ordered by
/// (Chebyshev norm, lex), candidate sets by factor count then lex.
std::optional<DifferenceProductCertificate> find_difference_product(const Configuration& c,
                                                                    std::int64_t max_norm,
                                                                    int max_factors,
                                                                    const Box& region);

struct PeriodicityClassification {
    enum class Kind { DoublyPeriodic, OnePeriodic, NonPeriodicEvidence };
    Kind kind;
    std::vector<ExpVec> periods;            // DoublyPeriodic: two independent periods
    std::optional<Direction> direction;     // OnePeriodic
    std::vector<ExpVec> reduced_vectors;    // surviving factors, m* of them
    bool proven;                            // every check ran at ProvenZero tier
};

/// Greedy reduction of a verified certificate to its essential factors, then
/// periodicity classification. Throws on the inconsistent case (m* >= 2 but a
/// period exists), which signals an unverified ZeroOnRegion certificate.
PeriodicityClassification classify_periodicity(const DifferenceProductCertificate& cert,
                                               const Configuration& c, std::int64_t bound,
                                               const Box& region);

/// Candidate vectors with 0 < Chebyshev norm <= bound, sign-canonical (first
/// nonzero coordinate positive), ordered by (norm, lex). The shared search
/// order of find_period and find_difference_product.
std::vector<ExpVec> candidate_vectors(int dim, std::int64_t bound);

}  // namespace polyconf
