#include "polyconf/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace polyconf {

ExpVec vec_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec vec_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExpVec vec_neg(const ExpVec& a) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

ExpVec vec_scale(std::int64_t k, const ExpVec& a) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

bool vec_is_zero(const ExpVec& a) {
    return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t chebyshev(const ExpVec& a) {
    std::int64_t m = 0;
    for (auto x : a) m = std::max(m, std::abs(x));
    return m;
}

namespace {

// In-place row Hermite normal form. Rows may start in any state; on return
// rows are echelon with positive pivots and entries above each pivot reduced
// into [0, pivot). Zero rows are removed.
void hermite_rows(std::vector<std::vector<Int>>& rows, int dim) {
    size_t rank = 0;
    for (int col = 0; col < dim && rank < rows.size(); ++col) {
        // Euclid on the entries of this column below the current rank.
        while (true) {
            size_t best = rows.size();
            for (size_t i = rank; i < rows.size(); ++i) {
                if (rows[i][col] != 0 &&
                    (best == rows.size() || cmp(abs(rows[i][col]), abs(rows[best][col])) < 0)) {
                    best = i;
                }
            }
            if (best == rows.size()) break;  // column clear
            std::swap(rows[rank], rows[best]);
            if (rows[rank][col] < 0) {
                for (auto& x : rows[rank]) x = -x;
            }
            bool clean = true;
            for (size_t i = rank + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = floor_div(rows[i][col], rows[rank][col]);
                for (int j = 0; j < dim; ++j) rows[i][j] -= q * rows[rank][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) {
                // reduce entries above the pivot
                for (size_t i = 0; i < rank; ++i) {
                    if (rows[i][col] == 0) continue;
                    Int q = floor_div(rows[i][col], rows[rank][col]);
                    for (int j = 0; j < dim; ++j) rows[i][j] -= q * rows[rank][j];
                }
                ++rank;
                break;
            }
        }
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<Int>& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](const Int& x) { return x == 0; });
                              }),
               rows.end());
}

int pivot_of(const std::vector<Int>& row) {
    for (size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return static_cast<int>(j);
    return -1;
}

}  // namespace

Lattice::Lattice(int dim, std::vector<std::vector<Int>> rows) : dim_(dim), rows_(std::move(rows)) {
    if (dim < 1) throw std::invalid_argument("Lattice: dimension must be >= 1");
    for (const auto& r : rows_) {
        if (static_cast<int>(r.size()) != dim) throw std::invalid_argument("Lattice: row dimension mismatch");
    }
    hermite_rows(rows_, dim_);
    for (const auto& r : rows_) pivot_col_.push_back(pivot_of(r));
}

Lattice Lattice::from_exp_rows(int dim, const std::vector<ExpVec>& rows) {
    std::vector<std::vector<Int>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Int> row;
        row.reserve(r.size());
        for (auto x : r) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    return Lattice(dim, std::move(m));
}

std::vector<Int> Lattice::reduce(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("Lattice::reduce: dimension mismatch");
    std::vector<Int> r = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        int c = pivot_col_[i];
        Int q = floor_div(r[c], rows_[i][c]);
        if (q == 0) continue;
        for (int j = 0; j < dim_; ++j) r[j] -= q * rows_[i][j];
    }
    return r;
}

ExpVec Lattice::reduce(const ExpVec& v) const {
    std::vector<Int> big(v.begin(), v.end());
    std::vector<Int> r = reduce(big);
    ExpVec out(r.size());
    for (size_t i = 0; i < r.size(); ++i) out[i] = to_i64(r[i]);
    return out;
}

bool Lattice::contains(const ExpVec& v) const {
    std::vector<Int> big(v.begin(), v.end());
    auto r = reduce(big);
    return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

Int Lattice::index() const {
    if (rank() != dim_) throw std::logic_error("Lattice::index: lattice is not full rank");
    Int p = 1;
    for (size_t i = 0; i < rows_.size(); ++i) p *= rows_[i][pivot_col_[i]];
    return p;
}

std::vector<std::int64_t> Lattice::fundamental_box() const {
    if (rank() != dim_) throw std::logic_error("Lattice::fundamental_box: lattice is not full rank");
    std::vector<std::int64_t> box(dim_);
    for (size_t i = 0; i < rows_.size(); ++i) box[pivot_col_[i]] = to_i64(rows_[i][pivot_col_[i]]);
    return box;
}

std::vector<ExpVec> Lattice::coset_reps() const {
    auto box = fundamental_box();
    std::vector<ExpVec> reps;
    ExpVec cur(dim_, 0);
    while (true) {
        reps.push_back(cur);
        int axis = dim_ - 1;
        while (axis >= 0) {
            if (++cur[axis] < box[axis]) break;
            cur[axis] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    return reps;
}

std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& m) {
    if (m.empty()) return {};
    size_t nrows = m.size(), ncols = m[0].size();
    // Row-reduce the transpose carrying a unimodular transform; zero rows of
    // the echelon form correspond to transform rows spanning ker(m).
    std::vector<std::vector<Int>> a(ncols, std::vector<Int>(nrows));
    for (size_t i = 0; i < nrows; ++i)
        for (size_t j = 0; j < ncols; ++j) a[j][i] = m[i][j];
    std::vector<std::vector<Int>> u(ncols, std::vector<Int>(ncols, 0));
    for (size_t i = 0; i < ncols; ++i) u[i][i] = 1;

    size_t rank = 0;
    for (size_t col = 0; col < nrows && rank < ncols; ++col) {
        while (true) {
            size_t best = ncols;
            for (size_t i = rank; i < ncols; ++i) {
                if (a[i][col] != 0 && (best == ncols || cmp(abs(a[i][col]), abs(a[best][col])) < 0)) best = i;
            }
            if (best == ncols) break;
            std::swap(a[rank], a[best]);
            std::swap(u[rank], u[best]);
            bool clean = true;
            for (size_t i = rank + 1; i < ncols; ++i) {
                if (a[i][col] == 0) continue;
                Int q = floor_div(a[i][col], a[rank][col]);
                for (size_t j = 0; j < nrows; ++j) a[i][j] -= q * a[rank][j];
                for (size_t j = 0; j < ncols; ++j) u[i][j] -= q * u[rank][j];
                if (a[i][col] != 0) clean = false;
            }
            if (clean) {
                ++rank;
                break;
            }
        }
    }
    std::vector<std::vector<Int>> kernel;
    for (size_t i = rank; i < ncols; ++i) kernel.push_back(u[i]);
    return kernel;
}

Lattice Lattice::intersect(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Lattice::intersect: dimension mismatch");
    int d = a.dim();
    size_t r1 = a.rows_.size(), r2 = b.rows_.size();
    // x in A∩B  <=>  x = s·A = t·B; kernel of [A^T | -B^T] yields (s,t).
    std::vector<std::vector<Int>> m(d, std::vector<Int>(r1 + r2, 0));
    for (size_t i = 0; i < r1; ++i)
        for (int j = 0; j < d; ++j) m[j][i] = a.rows_[i][j];
    for (size_t i = 0; i < r2; ++i)
        for (int j = 0; j < d; ++j) m[j][r1 + i] = -b.rows_[i][j];
    auto ker = integer_kernel(m);
    std::vector<std::vector<Int>> rows;
    for (const auto& st : ker) {
        std::vector<Int> x(d, 0);
        for (size_t i = 0; i < r1; ++i)
            for (int j = 0; j < d; ++j) x[j] += st[i] * a.rows_[i][j];
        rows.push_back(std::move(x));
    }
    return Lattice(d, std::move(rows));
}

std::pair<Int, Int> solve_2d_coords(const ExpVec& p, const ExpVec& u, const ExpVec& v) {
    size_t d = p.size();
    // pick two coordinates with a nonzero 2x2 minor
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = i + 1; j < d; ++j) {
            Int det = Int(u[i]) * v[j] - Int(u[j]) * v[i];
            if (det == 0) continue;
            Int an = Int(p[i]) * v[j] - Int(p[j]) * v[i];
            Int bn = Int(u[i]) * p[j] - Int(u[j]) * p[i];
            if (an % det != 0 || bn % det != 0)
                throw std::domain_error("solve_2d_coords: point not in the lattice plane");
            Int aa = an / det, bb = bn / det;
            for (size_t k = 0; k < d; ++k) {
                if (aa * u[k] + bb * v[k] != p[k])
                    throw std::domain_error("solve_2d_coords: point not in the lattice plane");
            }
            return {aa, bb};
        }
    }
    throw std::invalid_argument("solve_2d_coords: u, v are linearly dependent");
}

}  // namespace polyconf
