#pragma once

#include <vector>

#include "polyconf/annihilate.hpp"
#include "polyconf/config.hpp"

namespace polyconf {

/// Discrete integration: a configuration c' with f*c' = c, vanishing on the
/// canonical band 0 <= a < deg(f) of every coset of the lattice spanned by
/// the directions of f and g, the rest determined by the linear recurrence
/// induced by f. When g annihilates c, it also annihilates c'. Both f and g
/// must be line polynomials in distinct directions, f integral; divisions by
/// the edge coefficients of f must stay exact (automatic for X^v - 1).
Configuration discrete_integrate(const LaurentPoly& f, const Configuration& c, const LaurentPoly& g);

struct DecompositionComponent {
    Configuration component;
    LaurentPoly factor;
    AnnihilationVerdict evidence;
};

/// c = sum of components, component i annihilated by factor i.
struct Decomposition {
    std::vector<DecompositionComponent> components;
    Box window;            // evidence window
    Int residual_max_abs;  // max |c - sum components| over the window (0 on success)
};

/// Recursive construction: decompose f_m * c under the first m-1 factors,
/// lift each part through discrete integration against f_m, and close with
/// the difference. Factors must be line polynomials in pairwise distinct
/// directions whose product does not verify NonzeroAt on the window.
Decomposition decompose_by_factors(const Configuration& c, const std::vector<LaurentPoly>& factors,
                                   const Box& window);

struct SublatticeSplit {
    Configuration c1;  // cosets with horizontal period m (doubly periodic ones included)
    Configuration c2;  // cosets with vertical period n only
    std::vector<ExpVec> c1_cosets;
    std::vector<ExpVec> c2_cosets;
};

/// Splits a binary configuration annihilated by (x^m-1)(y^n-1) into disjoint
/// horizontally and vertically periodic parts by classifying the cosets
/// modulo <(m,0),(0,n)> on the window. A coset periodic in neither direction
/// contradicts the annihilation precondition and raises an error.
SublatticeSplit sublattice_split(const Configuration& c, std::int64_t m, std::int64_t n,
                                 const Box& window);

}  // namespace polyconf
