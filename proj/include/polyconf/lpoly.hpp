#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyconf/lattice.hpp"
#include "polyconf/numeric.hpp"

namespace polyconf {

/// A primitive lattice vector with the sign fixed so that the first nonzero
/// coordinate is positive. Two vectors span the same line iff their
/// Directions compare equal.
class Direction {
  public:
    /// Canonicalize an arbitrary nonzero vector: divide by the gcd of the
    /// coordinates and fix the sign. Throws on the zero vector.
    static Direction of(const ExpVec& v);

    const ExpVec& vec() const { return vec_; }
    bool operator==(const Direction& o) const { return vec_ == o.vec_; }
    bool operator<(const Direction& o) const { return vec_ < o.vec_; }

  private:
    explicit Direction(ExpVec v) : vec_(std::move(v)) {}
    ExpVec vec_;
};

struct LineInfo;

/// Sparse Laurent polynomial over exact rationals in d variables.
/// Canonical form: no zero coefficients, terms keyed by exponent vector in
/// lexicographic order (std::map). Immutable in spirit: all operations
/// return new values.
class LaurentPoly {
  public:
    explicit LaurentPoly(int dim);

    static LaurentPoly zero(int dim) { return LaurentPoly(dim); }
    static LaurentPoly constant(int dim, const Rat& c);
    static LaurentPoly monomial(const ExpVec& e, const Rat& c);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }

    Rat coeff(const ExpVec& e) const;
    void set_coeff(const ExpVec& e, const Rat& c);

    bool is_integral() const;
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Rat& k) const;
    LaurentPoly pow(unsigned n) const;
    bool operator==(const LaurentPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    /// f(X^n): every exponent vector multiplied by n, coefficients unchanged.
    LaurentPoly substitute_power(std::int64_t n) const;

    /// Exponent vectors with nonzero coefficient, in lexicographic order.
    std::vector<ExpVec> support() const;

    /// Per-coordinate extent (max - min) of the support. Throws on zero.
    std::vector<std::int64_t> bounding_box() const;

    /// Some translation t with t + (-supp(f)) inside the shape, or nullopt.
    std::optional<ExpVec> fits_in(const std::vector<ExpVec>& shape) const;

    /// Canonical line-polynomial form, or nullopt when the support has fewer
    /// than two points or is not collinear.
    std::optional<LineInfo> line_info() const;

    /// Sum of all coefficients (sigma in normalization contexts).
    Rat coeff_sum() const;

  private:
    int dim_;
    std::map<ExpVec, Rat> terms_;
};

/// Canonical form of a line Laurent polynomial
/// f = X^offset (coeffs[n] X^(n·v) + ... + coeffs[0]) with v primitive,
/// coeffs[0] != 0 != coeffs[n]; offset is the lexicographically smallest
/// support point.
struct LineInfo {
    Direction direction;
    std::int64_t degree;
    ExpVec offset;
    std::vector<Rat> coeffs;  // a_0 .. a_n
};

/// X^v - 1; rejects the zero vector.
LaurentPoly difference_poly(const ExpVec& v, int dim);

/// Exact quotient f / g for a line polynomial g: regroups f by cosets
/// transverse to g's direction and divides per coset. Returns nullopt when g
/// does not divide f exactly. Throws if g is not a line polynomial.
std::optional<LaurentPoly> exact_div_line(const LaurentPoly& f, const LaurentPoly& g);

/// (f^p - f(X^p)) mod p with coefficients in [0,p); the Frobenius identity
/// makes this the zero polynomial for every integral f and prime p.
LaurentPoly frobenius_residue(const LaurentPoly& f, std::int64_t p);

struct PolyParseError : std::runtime_error {
    PolyParseError(const std::string& msg, size_t position);
    size_t position;
};

/// Parse the polynomial grammar: sums/differences of terms, optional '*'
/// between factors, parenthesized groups, '^' powers with signed integer
/// exponents on variables. Variables x,y,z for d <= 3 (x1..xd also accepted),
/// x1..xd for higher dimensions.
LaurentPoly parse_poly(const std::string& text, int dim);

/// Canonical text form, terms in lexicographic exponent order.
std::string to_string(const LaurentPoly& f);

}  // namespace polyconf
