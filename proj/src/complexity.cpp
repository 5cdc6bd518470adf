#include "polyconf/complexity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "polyconf/annihilate.hpp"

namespace polyconf {

std::string to_string(CountVerdict v) {
    return v == CountVerdict::Exact ? "exact" : "window_lower_bound";
}

namespace {

std::int64_t floor_div_i64(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}
std::int64_t ceil_div_i64(std::int64_t a, std::int64_t b) { return -floor_div_i64(-a, b); }

// dense materialized window with pattern extraction
struct WindowCache {
    Box box;
    std::vector<Int> values;
    std::vector<std::int64_t> strides;
    bool narrow = false;
    std::vector<std::int64_t> small;

    WindowCache(const Configuration& c, const Box& b) : box(b) {
        values = c.window(b);
        strides.assign(b.dim(), 1);
        for (int i = b.dim() - 2; i >= 0; --i)
            strides[i] = strides[i + 1] * (b.ranges[i + 1].second - b.ranges[i + 1].first + 1);
        narrow = std::all_of(values.begin(), values.end(),
                             [](const Int& v) { return v.fits_slong_p(); });
        if (narrow) {
            small.reserve(values.size());
            for (const auto& v : values) small.push_back(v.get_si());
        }
    }

    size_t index(const ExpVec& p) const {
        size_t idx = 0;
        for (int i = 0; i < box.dim(); ++i)
            idx += static_cast<size_t>((p[i] - box.ranges[i].first) * strides[i]);
        return idx;
    }
};

// distinct patterns of `shape` anchored at every point of `region`
std::uint64_t count_distinct(const WindowCache& cache, const std::vector<ExpVec>& shape,
                             const Box& region) {
    if (cache.narrow) {
        std::set<std::vector<std::int64_t>> seen;
        std::vector<std::int64_t> key(shape.size());
        for_each_point(region, [&](const ExpVec& v) {
            for (size_t i = 0; i < shape.size(); ++i)
                key[i] = cache.small[cache.index(vec_add(v, shape[i]))];
            seen.insert(key);
        });
        return seen.size();
    }
    std::set<std::vector<Int>> seen;
    std::vector<Int> key(shape.size());
    for_each_point(region, [&](const ExpVec& v) {
        for (size_t i = 0; i < shape.size(); ++i)
            key[i] = cache.values[cache.index(vec_add(v, shape[i]))];
        seen.insert(key);
    });
    return seen.size();
}

struct AnchorGroup {
    ExpVec dir;
    std::int64_t mult = 1;
    std::vector<ExpVec> anchor_reps;  // fibers of anchors whose window touches the group band
};

// a-range such that rep + a*dir lies inside the box; empty when none
std::optional<std::pair<std::int64_t, std::int64_t>> fiber_range(const Box& box, const ExpVec& rep,
                                                                 const ExpVec& dir) {
    std::int64_t lo = INT64_MIN / 4, hi = INT64_MAX / 4;
    for (int i = 0; i < box.dim(); ++i) {
        std::int64_t a = box.ranges[i].first - rep[i], b = box.ranges[i].second - rep[i];
        if (dir[i] == 0) {
            if (rep[i] < box.ranges[i].first || rep[i] > box.ranges[i].second) return std::nullopt;
            continue;
        }
        std::int64_t l, h;
        if (dir[i] > 0) {
            l = ceil_div_i64(a, dir[i]);
            h = floor_div_i64(b, dir[i]);
        } else {
            l = ceil_div_i64(b, dir[i]);
            h = floor_div_i64(a, dir[i]);
        }
        lo = std::max(lo, l);
        hi = std::min(hi, h);
    }
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

// Certify that every global pattern of `shape` has an anchor inside `region`.
// Sound but not complete: failure downgrades the verdict, never the count.
bool certify_exact(const Configuration& c, const std::vector<ExpVec>& shape, const Box& region) {
    auto st = c.structure();
    if (!st) return false;
    if (st->lattice_pieces.empty() && st->fiber_pieces.empty()) return true;  // zero configuration

    if (st->fiber_pieces.empty()) {
        // patterns repeat modulo the joint lattice; the region must meet every coset
        Lattice joint = st->lattice_pieces[0].lattice;
        for (const auto& lp : st->lattice_pieces) joint = Lattice::intersect(joint, lp.lattice);
        Int index = joint.index();
        if (index > Int(static_cast<unsigned long>(region.volume()))) return false;
        std::set<ExpVec> seen;
        std::uint64_t need = to_i64(index);
        bool all = !for_each_point_while(region, [&](const ExpVec& p) {
            seen.insert(joint.reduce(p));
            return seen.size() < need;
        });
        return all || seen.size() == need;
    }

    if (!st->lattice_pieces.empty()) return false;  // mixed structure: window evidence only

    const int d = c.dim();
    std::vector<ExpVec> neg_shape;
    neg_shape.reserve(shape.size());
    for (const auto& u : shape) neg_shape.push_back(vec_neg(u));

    // group fibers by direction; anchors whose window touches a group's band
    // are the band widened by -shape
    std::map<ExpVec, AnchorGroup> groups;
    for (const auto& fp : st->fiber_pieces) {
        auto& g = groups[fp.direction.vec()];
        g.dir = fp.direction.vec();
        g.mult = std::lcm(g.mult, fp.multiplicity);
        Lattice line = Lattice::from_exp_rows(d, {fp.direction.vec()});
        for (const auto& r : fp.reps)
            for (const auto& s : neg_shape) g.anchor_reps.push_back(line.reduce(vec_add(r, s)));
    }
    std::vector<AnchorGroup> glist;
    for (auto& [dir, g] : groups) {
        std::sort(g.anchor_reps.begin(), g.anchor_reps.end());
        g.anchor_reps.erase(std::unique(g.anchor_reps.begin(), g.anchor_reps.end()),
                            g.anchor_reps.end());
        glist.push_back(g);
    }

    // anchors seeing two groups at once are finitely many; all must be in the region
    for (size_t gi = 0; gi < glist.size(); ++gi) {
        for (size_t gj = gi + 1; gj < glist.size(); ++gj) {
            for (const auto& r : glist[gi].anchor_reps) {
                for (const auto& s : glist[gj].anchor_reps) {
                    try {
                        auto [a, b] = solve_2d_coords(vec_sub(s, r), glist[gi].dir,
                                                      vec_neg(glist[gj].dir));
                        (void)b;
                        ExpVec p = vec_add(r, vec_scale(to_i64(a), glist[gi].dir));
                        if (!region.contains(p)) return false;
                    } catch (const std::domain_error&) {
                        // lines do not intersect over the integers
                    }
                }
            }
        }
    }

    // a window position clear of every band (the all-zero pattern) must exist
    std::vector<Lattice> lines;
    std::vector<std::set<ExpVec>> rep_sets;
    for (const auto& g : glist) {
        lines.push_back(Lattice::from_exp_rows(d, {g.dir}));
        rep_sets.emplace_back(g.anchor_reps.begin(), g.anchor_reps.end());
    }
    bool found_clear = !for_each_point_while(region, [&](const ExpVec& p) {
        for (size_t i = 0; i < glist.size(); ++i)
            if (rep_sets[i].count(lines[i].reduce(p))) return true;
        return false;  // stop: clear anchor found
    });
    if (!found_clear) return false;

    // per group fiber: one full period of anchors inside the region, clear of
    // every other group's band
    for (size_t gi = 0; gi < glist.size(); ++gi) {
        const auto& g = glist[gi];
        for (const auto& r : g.anchor_reps) {
            auto range = fiber_range(region, r, g.dir);
            if (!range) return false;
            auto [alo, ahi] = *range;
            // positions along this fiber blocked by other groups
            std::set<std::int64_t> bad;
            for (size_t gj = 0; gj < glist.size(); ++gj) {
                if (gj == gi) continue;
                for (const auto& s : glist[gj].anchor_reps) {
                    try {
                        auto [a, b] = solve_2d_coords(vec_sub(s, r), g.dir, vec_neg(glist[gj].dir));
                        (void)b;
                        bad.insert(to_i64(a));
                    } catch (const std::domain_error&) {
                    }
                }
            }
            bool ok = false;
            for (std::int64_t a0 = alo; a0 + g.mult - 1 <= ahi && !ok; ++a0) {
                ok = true;
                for (std::int64_t k = 0; k < g.mult; ++k) {
                    if (bad.count(a0 + k)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace

ComplexityReport distinct_patterns(const Configuration& c, const std::vector<ExpVec>& shape_in,
                                   const Box& region) {
    auto shape = canonical_shape(shape_in);
    if (shape.empty()) throw std::invalid_argument("distinct_patterns: empty shape");
    if (region.dim() != c.dim() || region.empty())
        throw std::invalid_argument("distinct_patterns: bad region");
    WindowCache cache(c, region.shifted_hull(shape));
    ComplexityReport rep;
    rep.shape = shape;
    rep.region = region;
    rep.count = count_distinct(cache, shape, region);
    rep.verdict = certify_exact(c, shape, region) ? CountVerdict::Exact : CountVerdict::WindowLowerBound;
    return rep;
}

ComplexityReport complexity_rect(const Configuration& c, std::int64_t m, std::int64_t n,
                                 const Box& region) {
    if (c.dim() != 2) throw std::invalid_argument("complexity_rect: requires dimension 2");
    if (m < 1 || n < 1) throw std::invalid_argument("complexity_rect: m, n must be >= 1");
    Box rect;
    rect.ranges = {{0, m - 1}, {0, n - 1}};
    return distinct_patterns(c, box_shape(rect), region);
}

std::vector<NivatScanRow> nivat_scan(const Configuration& c, std::int64_t m_max, std::int64_t n_max,
                                     const Box& region) {
    if (c.dim() != 2) throw std::invalid_argument("nivat_scan: requires dimension 2");
    if (m_max < 1 || n_max < 1) throw std::invalid_argument("nivat_scan: bounds must be >= 1");
    if (region.dim() != 2 || region.empty()) throw std::invalid_argument("nivat_scan: bad region");
    Box max_rect;
    max_rect.ranges = {{0, m_max - 1}, {0, n_max - 1}};
    WindowCache cache(c, region.shifted_hull(box_shape(max_rect)));
    std::vector<NivatScanRow> rows;
    for (std::int64_t m = 1; m <= m_max; ++m) {
        for (std::int64_t n = 1; n <= n_max; ++n) {
            Box rect;
            rect.ranges = {{0, m - 1}, {0, n - 1}};
            auto shape = box_shape(rect);
            NivatScanRow row;
            row.m = m;
            row.n = n;
            row.count = count_distinct(cache, shape, region);
            row.mn = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n);
            row.above_bound = row.count > row.mn;
            row.verdict = certify_exact(c, shape, region) ? CountVerdict::Exact
                                                          : CountVerdict::WindowLowerBound;
            rows.push_back(row);
        }
    }
    return rows;
}

BlockLinesReport block_lines(const Configuration& c, const Direction& v, std::int64_t block_m,
                             std::int64_t block_n, const Box& region) {
    if (c.dim() != 2) throw std::invalid_argument("block_lines: requires dimension 2");
    if (block_m < 1 || block_n < 1) throw std::invalid_argument("block_lines: block sides must be >= 1");
    if (region.dim() != 2 || region.empty()) throw std::invalid_argument("block_lines: bad region");
    Box rect;
    rect.ranges = {{0, block_m - 1}, {0, block_n - 1}};
    auto shape = box_shape(rect);
    WindowCache cache(c, region.shifted_hull(shape));
    Lattice line = Lattice::from_exp_rows(2, {v.vec()});

    std::map<ExpVec, BlockLine> by_rep;
    for_each_point(region, [&](const ExpVec& p) {
        ExpVec rep = line.reduce(p);
        auto& bl = by_rep[rep];
        bl.anchor = rep;
        std::vector<Int> key(shape.size());
        for (size_t i = 0; i < shape.size(); ++i)
            key[i] = cache.values[cache.index(vec_add(p, shape[i]))];
        bl.blocks.insert(std::move(key));
        bl.samples += 1;
    });

    BlockLinesReport out{v, block_m, block_n, {}, 0};
    std::set<std::vector<Int>> used;
    for (auto& [rep, bl] : by_rep) {
        bool disjoint = std::none_of(bl.blocks.begin(), bl.blocks.end(),
                                     [&](const std::vector<Int>& b) { return used.count(b) > 0; });
        if (disjoint) {
            used.insert(bl.blocks.begin(), bl.blocks.end());
            out.disjoint_count += 1;
        }
        out.lines.push_back(std::move(bl));
    }
    return out;
}

std::optional<PeriodSearchResult> find_period(const Configuration& c, std::int64_t bound,
                                              const Box& region) {
    if (bound < 1) throw std::invalid_argument("find_period: bound must be >= 1");
    for (const auto& v : candidate_vectors(c.dim(), bound)) {
        auto verdict = verify_annihilator(difference_poly(v, c.dim()), c, region);
        if (verdict.status == AnnihilationVerdict::Status::ProvenZero)
            return PeriodSearchResult{v, true};
        if (verdict.status == AnnihilationVerdict::Status::ZeroOnRegion)
            return PeriodSearchResult{v, false};
    }
    return std::nullopt;
}

MorseHedlundReport morse_hedlund_1d(const std::vector<Int>& word, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("morse_hedlund_1d: n must be >= 1");
    if (static_cast<std::int64_t>(word.size()) < 2 * n)
        throw std::invalid_argument("morse_hedlund_1d: word must have length at least 2n");
    std::set<std::vector<Int>> factors;
    for (size_t i = 0; i + n <= word.size(); ++i)
        factors.insert(std::vector<Int>(word.begin() + i, word.begin() + i + n));
    MorseHedlundReport rep;
    rep.factor_count = factors.size();
    if (rep.factor_count <= static_cast<std::uint64_t>(n)) {
        for (std::int64_t p = 1; p <= static_cast<std::int64_t>(rep.factor_count); ++p) {
            bool ok = true;
            for (size_t i = 0; i + p < word.size(); ++i) {
                if (word[i] != word[i + p]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                rep.period = p;
                break;
            }
        }
    }
    return rep;
}

}  // namespace polyconf
