#include "polyconf/annihilate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "polyconf/complexity.hpp"

namespace polyconf {

AnnihilationVerdict AnnihilationVerdict::proven(ExactnessClass tier, std::string domain) {
    AnnihilationVerdict v;
    v.status = Status::ProvenZero;
    v.tier = tier;
    v.domain = std::move(domain);
    return v;
}

AnnihilationVerdict AnnihilationVerdict::on_region(Box region) {
    AnnihilationVerdict v;
    v.status = Status::ZeroOnRegion;
    v.region = std::move(region);
    return v;
}

AnnihilationVerdict AnnihilationVerdict::nonzero(ExpVec position, Int value) {
    AnnihilationVerdict v;
    v.status = Status::NonzeroAt;
    v.position = std::move(position);
    v.value = std::move(value);
    return v;
}

std::string to_string(AnnihilationVerdict::Status s) {
    switch (s) {
        case AnnihilationVerdict::Status::ProvenZero: return "proven_zero";
        case AnnihilationVerdict::Status::ZeroOnRegion: return "zero_on_region";
        case AnnihilationVerdict::Status::NonzeroAt: return "nonzero_at";
    }
    return "?";
}

namespace {

constexpr int kWalkLimit = 1000000;

std::vector<ExpVec> shifted_reps(const Lattice& line, const std::vector<ExpVec>& reps,
                                 const std::vector<ExpVec>& shifts) {
    std::vector<ExpVec> out;
    for (const auto& r : reps)
        for (const auto& s : shifts) out.push_back(line.reduce(vec_add(r, s)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool parallel(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (Int(a[i]) * b[j] != Int(a[j]) * b[i]) return false;
    return true;
}

struct FiberGroup {
    std::vector<Configuration> parts;
    std::int64_t mult = 1;
    std::vector<ExpVec> reps;
};

// Escape a point where a periodic part of f*c is nonzero into a point where
// f*c itself is provably nonzero by walking along a period vector; the other
// periodic parts drop out after finitely many steps.
AnnihilationVerdict walk_witness(const Configuration& fc, const ExpVec& start, const ExpVec& step) {
    ExpVec p = start;
    for (int k = 0; k < kWalkLimit; ++k) {
        Int v = fc.coefficient(p);
        if (v != 0) return AnnihilationVerdict::nonzero(p, v);
        p = vec_add(p, step);
    }
    throw std::logic_error("verify_annihilator: witness walk did not terminate");
}

}  // namespace

AnnihilationVerdict verify_annihilator(const LaurentPoly& f, const Configuration& c, const Box& region) {
    if (f.is_zero()) throw std::invalid_argument("verify_annihilator: zero polynomial");
    if (!f.is_integral()) throw std::invalid_argument("verify_annihilator: polynomial must be integral");
    if (f.dim() != c.dim()) throw std::invalid_argument("verify_annihilator: dimension mismatch");
    const int d = c.dim();
    Configuration fc = Configuration::poly_apply(f, c);
    auto st = c.structure();

    if (!st) {
        if (region.dim() != d) throw std::invalid_argument("verify_annihilator: region dimension mismatch");
        AnnihilationVerdict out = AnnihilationVerdict::on_region(region);
        for_each_point_while(region, [&](const ExpVec& p) {
            Int v = fc.coefficient(p);
            if (v != 0) {
                out = AnnihilationVerdict::nonzero(p, v);
                return false;
            }
            return true;
        });
        return out;
    }

    std::ostringstream domain;

    // Group the fiber pieces by primitive direction; a whole group is
    // periodic along its direction and band-limited, so the argument
    // "f*c = 0 iff every periodic part vanishes" applies per group.
    std::map<ExpVec, FiberGroup> groups;
    for (const auto& fp : st->fiber_pieces) {
        auto& g = groups[fp.direction.vec()];
        g.parts.push_back(fp.piece);
        g.mult = std::lcm(g.mult, fp.multiplicity);
        g.reps.insert(g.reps.end(), fp.reps.begin(), fp.reps.end());
    }
    std::vector<ExpVec> fiber_dirs;
    for (const auto& [dir, g] : groups) fiber_dirs.push_back(dir);

    // 1) the lattice part, checked on a fundamental domain of the joint lattice
    if (!st->lattice_pieces.empty()) {
        Lattice joint = st->lattice_pieces[0].lattice;
        std::vector<Configuration> parts;
        for (const auto& lp : st->lattice_pieces) {
            joint = Lattice::intersect(joint, lp.lattice);
            parts.push_back(lp.piece);
        }
        Configuration part_fc = Configuration::poly_apply(f, Configuration::sum(parts));
        for (const auto& rep : joint.coset_reps()) {
            if (part_fc.coefficient(rep) == 0) continue;
            // escape along a joint-lattice vector that is not a fiber direction
            std::vector<ExpVec> cands;
            for (const auto& row : joint.rows()) {
                ExpVec w(d);
                for (int i = 0; i < d; ++i) w[i] = to_i64(row[i]);
                cands.push_back(w);
            }
            if (cands.size() >= 2) {
                for (size_t k = 1; k <= fiber_dirs.size() + 1; ++k)
                    cands.push_back(vec_add(cands[0], vec_scale(static_cast<std::int64_t>(k), cands[1])));
            }
            for (const auto& w : cands) {
                bool ok = true;
                for (const auto& dir : fiber_dirs)
                    if (parallel(w, dir)) ok = false;
                if (ok) return walk_witness(fc, rep, w);
            }
            throw std::logic_error("verify_annihilator: no escape direction found");
        }
        domain << "lattice part: fundamental domain of index " << joint.index().get_str();
    }

    // 2) each fiber group on its band: the nonzero fibers widened by supp(f),
    //    one period along the direction
    auto supp = f.support();
    for (const auto& [dirvec, g] : groups) {
        Lattice line = Lattice::from_exp_rows(d, {dirvec});
        std::vector<ExpVec> reps = shifted_reps(line, g.reps, supp);
        Configuration part_fc = Configuration::poly_apply(f, Configuration::sum(g.parts));
        for (const auto& r : reps) {
            for (std::int64_t k = 0; k < g.mult; ++k) {
                ExpVec p = vec_add(r, vec_scale(k, dirvec));
                if (part_fc.coefficient(p) == 0) continue;
                // the lattice part is already verified zero; walking along the
                // period leaves every other band after finitely many steps
                return walk_witness(fc, p, vec_scale(g.mult, dirvec));
            }
        }
        if (domain.tellp() > 0) domain << "; ";
        domain << "band of " << reps.size() << " fibers x " << g.mult << " along (";
        for (size_t i = 0; i < dirvec.size(); ++i) domain << (i ? "," : "") << dirvec[i];
        domain << ")";
    }

    if (domain.tellp() == 0) domain << "zero configuration";
    ExactnessClass tier = st->fiber_pieces.empty() ? ExactnessClass::FullLatticePeriodic
                                                   : ExactnessClass::FiberPeriodicFinite;
    return AnnihilationVerdict::proven(tier, domain.str());
}

// ---------------------------------------------------------------------------
// exact nullspace

std::vector<std::vector<Rat>> rational_nullspace(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return {};
    const size_t ncols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != ncols) throw std::invalid_argument("rational_nullspace: ragged matrix");

    // clear denominators and content row-wise; the kernel is unchanged
    std::vector<std::vector<Int>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        Int l = 1;
        for (const auto& q : r) l = lcm(l, q.get_den());
        std::vector<Int> row(ncols);
        Int g = 0;
        for (size_t j = 0; j < ncols; ++j) {
            row[j] = r[j].get_num() * (l / r[j].get_den());
            g = gcd(g, row[j]);
        }
        if (g > 1)
            for (auto& x : row) x /= g;
        m.push_back(std::move(row));
    }

    // fraction-free (Bareiss) elimination, first-nonzero pivot per column
    auto exact_div = [](const Int& a, const Int& b) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (r != 0) throw std::logic_error("rational_nullspace: inexact Bareiss division");
        return q;
    };
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
    Int prev = 1;
    for (size_t col = 0; col < ncols && rank < m.size(); ++col) {
        size_t sel = m.size();
        for (size_t i = rank; i < m.size(); ++i) {
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        }
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        for (size_t i = rank + 1; i < m.size(); ++i) {
            for (size_t j = col + 1; j < ncols; ++j)
                m[i][j] = exact_div(m[i][j] * m[rank][col] - m[i][col] * m[rank][j], prev);
            m[i][col] = 0;
        }
        prev = m[rank][col];
        pivot_cols.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (size_t fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> x(ncols, Rat(0));
        x[fc] = 1;
        for (size_t ri = rank; ri-- > 0;) {
            size_t pc = pivot_cols[ri];
            Rat s = 0;
            for (size_t j = pc + 1; j < ncols; ++j) {
                if (x[j] != 0) s += Rat(m[ri][j]) * x[j];
            }
            x[pc] = -s / Rat(m[ri][pc]);
        }
        // integral, content-free, positive leading coefficient
        Int l = 1;
        for (const auto& q : x) l = lcm(l, q.get_den());
        Int g = 0;
        std::vector<Int> xi(ncols);
        for (size_t j = 0; j < ncols; ++j) {
            xi[j] = x[j].get_num() * (l / x[j].get_den());
            g = gcd(g, xi[j]);
        }
        int sign = 0;
        for (const auto& v : xi) {
            if (v != 0) {
                sign = v > 0 ? 1 : -1;
                break;
            }
        }
        for (size_t j = 0; j < ncols; ++j) x[j] = Rat(xi[j] * sign / g);
        basis.push_back(std::move(x));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// annihilator search

namespace {

// matrix rows (1, c_{u_1+v}, ..., c_{u_n+v}) over anchors v with v+D inside
// the region; deduplicated (the kernel only depends on the distinct rows)
std::vector<std::vector<Rat>> pattern_matrix(const Configuration& c, const std::vector<ExpVec>& shape,
                                             const Box& region) {
    Box anchors = region;
    for (size_t i = 0; i < anchors.ranges.size(); ++i) {
        std::int64_t lo = shape[0][i], hi = shape[0][i];
        for (const auto& u : shape) {
            lo = std::min(lo, u[i]);
            hi = std::max(hi, u[i]);
        }
        anchors.ranges[i].first -= lo;
        anchors.ranges[i].second -= hi;
    }
    if (anchors.empty())
        throw std::invalid_argument("find_annihilator: region too small for the shape (no anchors)");
    std::set<std::vector<Int>> rows;
    for_each_point(anchors, [&](const ExpVec& v) {
        std::vector<Int> row;
        row.reserve(shape.size() + 1);
        row.emplace_back(1);
        for (const auto& u : shape) row.push_back(c.coefficient(vec_add(v, u)));
        rows.insert(std::move(row));
    });
    std::vector<std::vector<Rat>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rat> q;
        q.reserve(r.size());
        for (const auto& x : r) q.emplace_back(x);
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace

std::optional<AnnihilatorSearchResult> find_annihilator(const Configuration& c,
                                                        const std::vector<ExpVec>& shape_in,
                                                        const Box& region) {
    auto shape = canonical_shape(shape_in);
    if (shape.empty()) throw std::invalid_argument("find_annihilator: empty shape");
    auto kernel = rational_nullspace(pattern_matrix(c, shape, region));
    if (kernel.empty()) return std::nullopt;
    const auto& a = kernel.front();  // integral by normalization
    LaurentPoly g(c.dim());
    for (size_t i = 0; i < shape.size(); ++i) g.set_coeff(vec_neg(shape[i]), a[i + 1]);
    if (g.is_zero()) return std::nullopt;  // kernel vector touched only the constant column
    ExpVec e1(c.dim(), 0);
    e1[0] = 1;
    LaurentPoly f = difference_poly(e1, c.dim()) * g;
    return AnnihilatorSearchResult{g, -a[0].get_num(), f};
}

NormalizationWitness normalize(const Configuration& c, const std::vector<ExpVec>& shape_in,
                               const Box& region) {
    auto shape = canonical_shape(shape_in);
    if (shape.empty()) throw std::invalid_argument("normalize: empty shape");
    auto kernel = rational_nullspace(pattern_matrix(c, shape, region));
    NormalizationWitness w;
    if (kernel.empty()) {
        w.status = NormalizationWitness::Status::Inconclusive;
        w.note = "no constant-producing polynomial in the search space";
        return w;
    }
    for (const auto& a : kernel) {
        Rat sigma = 0;
        for (size_t i = 1; i < a.size(); ++i) sigma += a[i];
        if (sigma == 0) continue;
        LaurentPoly g(c.dim());
        for (size_t i = 0; i < shape.size(); ++i) g.set_coeff(vec_neg(shape[i]), a[i + 1]);
        w.status = NormalizationWitness::Status::Witness;
        w.a = sigma.get_num();   // integral by kernel normalization
        w.b = a[0].get_num();    // b = -kappa(g), kappa(g) = -a_0
        w.witness = g;
        return w;
    }
    // every witness has sigma = 0; conclusive only for finitary configurations
    bool finitary = c.alphabet().has_value() || c.exactness() != ExactnessClass::OracleOnly;
    if (finitary) {
        w.status = NormalizationWitness::Status::AlreadyNormalized;
        w.note = "all constant-producing polynomials have zero coefficient sum";
    } else {
        w.status = NormalizationWitness::Status::Inconclusive;
        w.note = "sigma vanishes on the whole search space but the configuration is not declared finitary";
    }
    return w;
}

std::vector<std::pair<std::int64_t, AnnihilationVerdict>> expansion_check(
    const LaurentPoly& f, const Configuration& c, const std::vector<std::int64_t>& ns,
    const Box& region) {
    auto base = verify_annihilator(f, c, region);
    if (!base.is_zero())
        throw std::invalid_argument("expansion_check: f itself verifies NonzeroAt");
    std::vector<std::pair<std::int64_t, AnnihilationVerdict>> out;
    for (auto n : ns) out.emplace_back(n, verify_annihilator(f.substitute_power(n), c, region));
    return out;
}

std::vector<ExpVec> candidate_vectors(int dim, std::int64_t bound) {
    std::vector<ExpVec> out;
    for_each_point(Box::cube(dim, -bound, bound), [&](const ExpVec& v) {
        if (vec_is_zero(v)) return;
        for (auto x : v) {
            if (x > 0) break;
            if (x < 0) return;  // keep the sign-canonical half
        }
        out.push_back(v);
    });
    std::sort(out.begin(), out.end(), [](const ExpVec& a, const ExpVec& b) {
        auto ca = chebyshev(a), cb = chebyshev(b);
        if (ca != cb) return ca < cb;
        return a < b;
    });
    return out;
}

std::optional<DifferenceProductCertificate> find_difference_product(const Configuration& c,
                                                                    std::int64_t max_norm,
                                                                    int max_factors,
                                                                    const Box& region) {
    if (max_factors < 1) throw std::invalid_argument("find_difference_product: max_factors must be >= 1");
    auto cands = candidate_vectors(c.dim(), max_norm);
    std::vector<ExpVec> prim;
    prim.reserve(cands.size());
    for (const auto& v : cands) prim.push_back(Direction::of(v).vec());

    for (int m = 1; m <= max_factors; ++m) {
        if (static_cast<size_t>(m) > cands.size()) break;
        std::vector<size_t> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        while (true) {
            bool distinct = true;
            for (int i = 0; i < m && distinct; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (prim[idx[i]] == prim[idx[j]]) {
                        distinct = false;
                        break;
                    }
            if (distinct) {
                LaurentPoly product = LaurentPoly::constant(c.dim(), 1);
                std::vector<ExpVec> vectors;
                for (int i = 0; i < m; ++i) {
                    product = product * difference_poly(cands[idx[i]], c.dim());
                    vectors.push_back(cands[idx[i]]);
                }
                auto verdict = verify_annihilator(product, c, region);
                if (verdict.is_zero()) return DifferenceProductCertificate{vectors, product, verdict};
            }
            // next combination in lexicographic order
            int i = m - 1;
            while (i >= 0 && idx[i] == cands.size() - static_cast<size_t>(m - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

PeriodicityClassification classify_periodicity(const DifferenceProductCertificate& cert,
                                               const Configuration& c, std::int64_t bound,
                                               const Box& region) {
    if (!cert.verdict.is_zero())
        throw std::invalid_argument("classify_periodicity: certificate is not verified");
    if (c.dim() < 2) throw std::invalid_argument("classify_periodicity: requires dimension >= 2");
    const int d = c.dim();

    PeriodicityClassification out;
    out.proven = cert.verdict.status == AnnihilationVerdict::Status::ProvenZero;

    // the zero configuration is trivially doubly periodic (m* = 0)
    auto zero_check = verify_annihilator(LaurentPoly::constant(d, 1), c, region);
    if (zero_check.is_zero()) {
        out.kind = PeriodicityClassification::Kind::DoublyPeriodic;
        ExpVec e1(d, 0), e2(d, 0);
        e1[0] = 1;
        e2[1] = 1;
        out.periods = {e1, e2};
        out.proven = zero_check.status == AnnihilationVerdict::Status::ProvenZero;
        return out;
    }

    // greedy reduction: drop a factor while the remaining product still verifies
    std::vector<ExpVec> surviving = cert.vectors;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < surviving.size() && surviving.size() > 1; ++i) {
            std::vector<ExpVec> trial;
            for (size_t j = 0; j < surviving.size(); ++j)
                if (j != i) trial.push_back(surviving[j]);
            LaurentPoly product = LaurentPoly::constant(d, 1);
            for (const auto& v : trial) product = product * difference_poly(v, d);
            auto verdict = verify_annihilator(product, c, region);
            if (verdict.is_zero()) {
                surviving = trial;
                out.proven = out.proven && verdict.status == AnnihilationVerdict::Status::ProvenZero;
                changed = true;
                break;
            }
        }
    }
    out.reduced_vectors = surviving;

    if (surviving.size() == 1) {
        const ExpVec& v = surviving[0];
        auto vv = verify_annihilator(difference_poly(v, d), c, region);
        out.proven = out.proven && vv.status == AnnihilationVerdict::Status::ProvenZero;
        Direction dv = Direction::of(v);
        // doubly periodic iff an independent second period exists
        for (const auto& w : candidate_vectors(d, bound)) {
            if (Direction::of(w) == dv) continue;
            auto verdict = verify_annihilator(difference_poly(w, d), c, region);
            if (verdict.is_zero()) {
                out.kind = PeriodicityClassification::Kind::DoublyPeriodic;
                out.periods = {v, w};
                out.proven = out.proven && verdict.status == AnnihilationVerdict::Status::ProvenZero;
                return out;
            }
        }
        out.kind = PeriodicityClassification::Kind::OnePeriodic;
        out.direction = dv;
        return out;
    }

    auto period = find_period(c, bound, region);
    if (period) {
        std::ostringstream os;
        os << "classify_periodicity: inconsistent evidence: " << surviving.size()
           << " essential factors but a verified period exists; the certificate's ZeroOnRegion"
              " evidence was insufficient";
        throw std::runtime_error(os.str());
    }
    out.kind = PeriodicityClassification::Kind::NonPeriodicEvidence;
    return out;
}

}  // namespace polyconf
