#pragma once

#include <cstdint>
#include <vector>

#include "polyconf/numeric.hpp"

namespace polyconf {

/// Lattice coordinates. Every vector carries the ambient dimension as its length.
using ExpVec = std::vector<std::int64_t>;

ExpVec vec_add(const ExpVec& a, const ExpVec& b);
ExpVec vec_sub(const ExpVec& a, const ExpVec& b);
ExpVec vec_neg(const ExpVec& a);
ExpVec vec_scale(std::int64_t k, const ExpVec& a);
bool vec_is_zero(const ExpVec& a);
std::int64_t chebyshev(const ExpVec& a);

/// A sublattice of Z^d given by an integer row basis, kept in row Hermite
/// normal form: rows sorted by pivot column, positive pivots, entries above a
/// pivot reduced into [0, pivot). Zero input rows are dropped, so rank() is
/// the number of stored rows.
class Lattice {
  public:
    Lattice(int dim, std::vector<std::vector<Int>> rows);

    static Lattice from_exp_rows(int dim, const std::vector<ExpVec>& rows);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Int>>& rows() const { return rows_; }

    /// Canonical coset representative of v modulo the lattice. Two vectors
    /// reduce to the same representative iff they lie in the same coset.
    std::vector<Int> reduce(const std::vector<Int>& v) const;
    ExpVec reduce(const ExpVec& v) const;

    bool contains(const ExpVec& v) const;

    /// Index [Z^d : L] for a full-rank lattice (= |det| of any basis).
    Int index() const;

    /// For a full-rank lattice the canonical representatives are exactly the
    /// integer points of the box prod_i [0, pivot_i). Returns the box extents.
    std::vector<std::int64_t> fundamental_box() const;

    /// All canonical coset representatives of a full-rank lattice,
    /// in lexicographic order.
    std::vector<ExpVec> coset_reps() const;

    static Lattice intersect(const Lattice& a, const Lattice& b);

  private:
    int dim_;
    std::vector<std::vector<Int>> rows_;  // HNF
    std::vector<int> pivot_col_;
};

/// Basis of the integer kernel {x : M x = 0} of an integer matrix
/// (rows x cols). The basis generates the full kernel lattice.
std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& m);

/// Solve p = a*u + b*v exactly over the integers for linearly independent
/// u, v. Throws if p is not in the spanned lattice.
std::pair<Int, Int> solve_2d_coords(const ExpVec& p, const ExpVec& u, const ExpVec& v);

}  // namespace polyconf
