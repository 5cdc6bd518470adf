#include "polyconf/lpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyconf {

Direction Direction::of(const ExpVec& v) {
    if (vec_is_zero(v)) throw std::invalid_argument("Direction: zero vector");
    Int g = 0;
    for (auto x : v) g = gcd(g, Int(x));
    std::int64_t gi = to_i64(g);
    ExpVec u(v.size());
    for (size_t i = 0; i < v.size(); ++i) u[i] = v[i] / gi;
    for (auto x : u) {
        if (x > 0) break;
        if (x < 0) {
            for (auto& y : u) y = -y;
            break;
        }
    }
    return Direction(std::move(u));
}

LaurentPoly::LaurentPoly(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("LaurentPoly: dimension must be >= 1");
}

LaurentPoly LaurentPoly::constant(int dim, const Rat& c) {
    LaurentPoly f(dim);
    if (c != 0) f.terms_[ExpVec(dim, 0)] = c;
    return f;
}

LaurentPoly LaurentPoly::monomial(const ExpVec& e, const Rat& c) {
    LaurentPoly f(static_cast<int>(e.size()));
    if (c != 0) f.terms_[e] = c;
    return f;
}

Rat LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::set_coeff(const ExpVec& e, const Rat& c) {
    if (static_cast<int>(e.size()) != dim_) throw std::invalid_argument("set_coeff: dimension mismatch");
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

bool LaurentPoly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return is_integer(t.second); });
}

namespace {
void check_same_dim(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("polynomial dimension mismatch");
}
}  // namespace

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same_dim(*this, o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        Rat v = r.coeff(e) + c;
        r.set_coeff(e, v);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& k) const {
    LaurentPoly r(dim_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = k * c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_dim(*this, o);
    LaurentPoly r(dim_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e = vec_add(e1, e2);
            Rat v = r.coeff(e) + c1 * c2;
            r.set_coeff(e, v);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly acc = LaurentPoly::constant(dim_, 1);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1u) acc = acc * base;
        base = (n >>= 1) ? base * base : base;
    }
    return acc;
}

LaurentPoly LaurentPoly::substitute_power(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("substitute_power: n must be >= 1");
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) r.terms_[vec_scale(n, e)] = c;
    return r;
}

std::vector<ExpVec> LaurentPoly::support() const {
    std::vector<ExpVec> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

std::vector<std::int64_t> LaurentPoly::bounding_box() const {
    if (is_zero()) throw std::domain_error("bounding_box: zero polynomial");
    std::vector<std::int64_t> lo(dim_), hi(dim_);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < dim_; ++i) {
            if (first) {
                lo[i] = hi[i] = e[i];
            } else {
                lo[i] = std::min(lo[i], e[i]);
                hi[i] = std::max(hi[i], e[i]);
            }
        }
        first = false;
    }
    std::vector<std::int64_t> ext(dim_);
    for (int i = 0; i < dim_; ++i) ext[i] = hi[i] - lo[i];
    return ext;
}

std::optional<ExpVec> LaurentPoly::fits_in(const std::vector<ExpVec>& shape) const {
    if (is_zero()) throw std::domain_error("fits_in: zero polynomial");
    if (shape.empty()) throw std::invalid_argument("fits_in: empty shape");
    // t + (-supp) ⊆ shape forces t - s0 ∈ shape for any fixed s0 ∈ supp,
    // so scanning t over shape + s0 is exhaustive.
    std::vector<ExpVec> sorted_shape = shape;
    std::sort(sorted_shape.begin(), sorted_shape.end());
    const ExpVec& s0 = terms_.begin()->first;
    for (const auto& q : sorted_shape) {
        ExpVec t = vec_add(q, s0);
        bool ok = true;
        for (const auto& [e, c] : terms_) {
            ExpVec pt = vec_sub(t, e);
            if (!std::binary_search(sorted_shape.begin(), sorted_shape.end(), pt)) {
                ok = false;
                break;
            }
        }
        if (ok) return t;
    }
    return std::nullopt;
}

std::optional<LineInfo> LaurentPoly::line_info() const {
    if (terms_.size() < 2) return std::nullopt;
    auto it = terms_.begin();
    const ExpVec base = it->first;  // lexicographically smallest support point
    ++it;
    Direction dir = Direction::of(vec_sub(it->first, base));
    const ExpVec& v = dir.vec();
    size_t pivot = 0;
    while (v[pivot] == 0) ++pivot;

    std::int64_t degree = 0;
    std::vector<std::pair<std::int64_t, Rat>> positions;
    for (const auto& [e, c] : terms_) {
        ExpVec d = vec_sub(e, base);
        if (d[pivot] % v[pivot] != 0) return std::nullopt;
        std::int64_t k = d[pivot] / v[pivot];
        if (d != vec_scale(k, v)) return std::nullopt;
        positions.emplace_back(k, c);
        degree = std::max(degree, k);
    }
    // base is lex-minimal, so every k >= 0 and k = 0 occurs at base itself.
    std::vector<Rat> coeffs(degree + 1, Rat(0));
    for (const auto& [k, c] : positions) coeffs[k] = c;
    return LineInfo{dir, degree, base, std::move(coeffs)};
}

Rat LaurentPoly::coeff_sum() const {
    Rat s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly difference_poly(const ExpVec& v, int dim) {
    if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("difference_poly: dimension mismatch");
    if (vec_is_zero(v)) throw std::invalid_argument("difference_poly: zero vector");
    LaurentPoly f(dim);
    f.set_coeff(v, 1);
    f.set_coeff(ExpVec(dim, 0), f.coeff(ExpVec(dim, 0)) - 1);
    return f;
}

std::optional<LaurentPoly> exact_div_line(const LaurentPoly& f, const LaurentPoly& g) {
    auto li = g.line_info();
    if (!li) throw std::invalid_argument("exact_div_line: divisor is not a line polynomial");
    check_same_dim(f, g);
    const int dim = f.dim();
    if (f.is_zero()) return LaurentPoly::zero(dim);

    const ExpVec& v = li->direction.vec();
    const std::vector<Rat>& b = li->coeffs;
    const std::int64_t n = li->degree;
    size_t pivot = 0;
    while (v[pivot] == 0) ++pivot;
    Lattice line = Lattice::from_exp_rows(dim, {v});

    // group f's terms by coset mod Zv: coset rep + position along the line
    std::map<ExpVec, std::map<std::int64_t, Rat>> cosets;
    for (const auto& [e, c] : f.terms()) {
        ExpVec rep = line.reduce(e);
        std::int64_t k = (e[pivot] - rep[pivot]) / v[pivot];
        cosets[rep][k] = c;
    }

    LaurentPoly q(dim);
    for (const auto& [rep, terms] : cosets) {
        std::int64_t kmin = terms.begin()->first;
        std::int64_t kmax = terms.rbegin()->first;
        std::int64_t deg_a = kmax - kmin;
        if (deg_a < n) return std::nullopt;
        std::vector<Rat> a(deg_a + 1, Rat(0));
        for (const auto& [k, c] : terms) a[k - kmin] = c;
        // descending long division of a by b
        std::vector<Rat> quot(deg_a - n + 1, Rat(0));
        for (std::int64_t i = deg_a - n; i >= 0; --i) {
            Rat qc = a[i + n] / b[n];
            quot[i] = qc;
            if (qc == 0) continue;
            for (std::int64_t j = 0; j <= n; ++j) a[i + j] -= qc * b[j];
        }
        for (const auto& rest : a)
            if (rest != 0) return std::nullopt;
        ExpVec shift = vec_sub(rep, li->offset);
        for (size_t j = 0; j < quot.size(); ++j) {
            if (quot[j] == 0) continue;
            ExpVec e = vec_add(shift, vec_scale(kmin + static_cast<std::int64_t>(j), v));
            q.set_coeff(e, quot[j]);
        }
    }
    if (!(q * g == f)) return std::nullopt;
    return q;
}

LaurentPoly frobenius_residue(const LaurentPoly& f, std::int64_t p) {
    if (!f.is_integral()) throw std::invalid_argument("frobenius_residue: polynomial must be integral");
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw std::invalid_argument("frobenius_residue: p must be prime");
    LaurentPoly diff = f.pow(static_cast<unsigned>(p)) - f.substitute_power(p);
    LaurentPoly r(f.dim());
    Int pp(static_cast<long>(p));
    for (const auto& [e, c] : diff.terms()) {
        Int m = c.get_num() % pp;
        if (m < 0) m += pp;
        if (m != 0) r.set_coeff(e, Rat(m));
    }
    return r;
}

namespace {

std::string var_name(int i, int dim) {
    if (dim <= 3) {
        static const char* names[] = {"x", "y", "z"};
        return names[i];
    }
    return "x" + std::to_string(i + 1);
}

std::string term_string(const ExpVec& e, const Rat& c, int dim) {
    std::ostringstream os;
    bool has_var = !vec_is_zero(e);
    Rat ac = c < 0 ? Rat(-c) : c;
    if (!has_var || ac != 1) {
        os << to_string(ac);
        if (has_var) os << "*";
    }
    bool first = true;
    for (int i = 0; i < dim; ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << var_name(i, dim);
        if (e[i] != 1) os << "^" << e[i];
    }
    return os.str();
}

}  // namespace

std::string to_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << term_string(e, c, f.dim());
    }
    return os.str();
}

}  // namespace polyconf
