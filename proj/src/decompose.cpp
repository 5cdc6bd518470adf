#include "polyconf/decompose.hpp"

#include <sstream>
#include <stdexcept>

#include "config_nodes.hpp"

namespace polyconf {

namespace {

class DiscreteIntegrateNode final : public ConfigNode {
  public:
    DiscreteIntegrateNode(LaurentPoly f, const Configuration& c, LaurentPoly g)
        : ConfigNode(c.dim(), true), f_(std::move(f)), g_(std::move(g)), source_(c), target_(c) {
        auto fi = f_.line_info();
        if (!fi) throw std::invalid_argument("discrete_integrate: f is not a line polynomial");
        auto gi = g_.line_info();
        if (!gi) throw std::invalid_argument("discrete_integrate: g is not a line polynomial");
        if (fi->direction == gi->direction)
            throw std::invalid_argument("discrete_integrate: f and g must have distinct directions");
        if (!f_.is_integral()) throw std::invalid_argument("discrete_integrate: f must be integral");
        if (f_.dim() != dim_ || g_.dim() != dim_)
            throw std::invalid_argument("discrete_integrate: dimension mismatch");
        u_ = fi->direction.vec();
        v_ = gi->direction.vec();
        degree_ = fi->degree;
        coeffs_.reserve(fi->coeffs.size());
        for (const auto& q : fi->coeffs) coeffs_.push_back(q.get_num());
        lattice_ = Lattice::from_exp_rows(dim_, {u_, v_});
        // the monomial offset of f folds into a translation of the target
        target_ = Configuration::translate(source_, vec_neg(fi->offset));
    }

    nlohmann::json descriptor() const override {
        nlohmann::json j;
        j["type"] = "discrete_integrate";
        j["factor"] = to_string(f_);
        j["annihilator"] = to_string(g_);
        j["child"] = source_.node()->descriptor();
        j["dim"] = dim_;
        return j;
    }

    std::optional<StructureInfo> analyze(const std::shared_ptr<const ConfigNode>&) const override {
        return std::nullopt;
    }

  protected:
    // Solves  sum_i coeffs_[i] * c'(p - i*u) = target(p)  per coset of
    // <u,v>, with c' = 0 on the band 0 <= a < degree. Queries recurse toward
    // the band through coeff(), so every intermediate value is memoized.
    Int compute(const ExpVec& p) const override {
        ExpVec z = lattice_.reduce(p);
        auto [a_big, b_big] = solve_2d_coords(vec_sub(p, z), u_, v_);
        std::int64_t a = to_i64(a_big);
        (void)b_big;
        const std::int64_t n = degree_;
        if (a >= 0 && a < n) return 0;
        Int acc;
        const Int* lead;
        if (a >= n) {
            acc = target_.coefficient(p);
            for (std::int64_t i = 1; i <= n; ++i)
                acc -= coeffs_[i] * coeff(vec_sub(p, vec_scale(i, u_)));
            lead = &coeffs_[0];
        } else {
            ExpVec top = vec_add(p, vec_scale(n, u_));
            acc = target_.coefficient(top);
            for (std::int64_t i = 0; i < n; ++i)
                acc -= coeffs_[i] * coeff(vec_add(p, vec_scale(n - i, u_)));
            lead = &coeffs_[n];
        }
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), lead->get_mpz_t());
        if (r != 0)
            throw std::domain_error(
                "discrete_integrate: non-unit edge coefficient makes the solution non-integral");
        return q;
    }

  private:
    LaurentPoly f_, g_;
    Configuration source_;  // as given, kept for the descriptor
    Configuration target_;  // source shifted by f's monomial offset
    ExpVec u_, v_;
    std::int64_t degree_;
    std::vector<Int> coeffs_;
    Lattice lattice_{1, {}};
};

}  // namespace

Configuration discrete_integrate(const LaurentPoly& f, const Configuration& c, const LaurentPoly& g) {
    return Configuration(std::make_shared<DiscreteIntegrateNode>(f, c, g));
}

Decomposition decompose_by_factors(const Configuration& c, const std::vector<LaurentPoly>& factors,
                                   const Box& window) {
    if (factors.empty()) throw std::invalid_argument("decompose_by_factors: no factors");
    LaurentPoly product = LaurentPoly::constant(c.dim(), 1);
    for (size_t i = 0; i < factors.size(); ++i) {
        auto li = factors[i].line_info();
        if (!li) throw std::invalid_argument("decompose_by_factors: factor is not a line polynomial");
        for (size_t j = i + 1; j < factors.size(); ++j) {
            auto lj = factors[j].line_info();
            if (lj && li->direction == lj->direction)
                throw std::invalid_argument("decompose_by_factors: factors share a direction");
        }
        product = product * factors[i];
    }
    auto pre = verify_annihilator(product, c, window);
    if (!pre.is_zero()) {
        std::ostringstream os;
        os << "decompose_by_factors: the factor product does not annihilate the configuration"
              " (nonzero at (";
        for (size_t i = 0; i < pre.position->size(); ++i) os << (i ? "," : "") << (*pre.position)[i];
        os << "))";
        throw std::domain_error(os.str());
    }

    // recursion on the factor count
    std::vector<Configuration> components;
    if (factors.size() == 1) {
        components.push_back(c);
    } else {
        const LaurentPoly& last = factors.back();
        std::vector<LaurentPoly> rest(factors.begin(), factors.end() - 1);
        Configuration b = Configuration::poly_apply(last, c);
        Decomposition inner = decompose_by_factors(b, rest, window);
        std::vector<Configuration> lifted;
        for (size_t i = 0; i < inner.components.size(); ++i)
            lifted.push_back(discrete_integrate(last, inner.components[i].component, factors[i]));
        Configuration closing = c;
        for (const auto& ci : lifted) closing = Configuration::difference(closing, ci);
        components = std::move(lifted);
        components.push_back(closing);
    }

    Decomposition out;
    out.window = window;
    out.residual_max_abs = 0;
    for (size_t i = 0; i < components.size(); ++i)
        out.components.push_back(
            {components[i], factors[i], verify_annihilator(factors[i], components[i], window)});
    for_each_point(window, [&](const ExpVec& p) {
        Int s = 0;
        for (const auto& comp : components) s += comp.coefficient(p);
        Int r = abs(c.coefficient(p) - s);
        if (r > out.residual_max_abs) out.residual_max_abs = r;
    });
    return out;
}

SublatticeSplit sublattice_split(const Configuration& c, std::int64_t m, std::int64_t n,
                                 const Box& window) {
    if (c.dim() != 2) throw std::invalid_argument("sublattice_split: requires dimension 2");
    if (m < 1 || n < 1) throw std::invalid_argument("sublattice_split: m, n must be >= 1");
    if (window.dim() != 2 || window.empty()) throw std::invalid_argument("sublattice_split: bad window");

    LaurentPoly xm = difference_poly(ExpVec{m, 0}, 2);
    LaurentPoly yn = difference_poly(ExpVec{0, n}, 2);
    auto pre = verify_annihilator(xm * yn, c, window);
    if (!pre.is_zero())
        throw std::domain_error("sublattice_split: (x^m-1)(y^n-1) does not annihilate the configuration");

    Lattice lat = Lattice::from_exp_rows(2, {ExpVec{m, 0}, ExpVec{0, n}});
    std::map<ExpVec, std::pair<bool, bool>> status;  // rep -> (horizontal ok, vertical ok)
    for (const auto& rep : lat.coset_reps()) status[rep] = {true, true};

    std::map<ExpVec, ExpVec> h_witness, v_witness;
    for_each_point(window, [&](const ExpVec& p) {
        Int value = c.coefficient(p);
        if (value != 0 && value != 1)
            throw std::domain_error("sublattice_split: configuration is not binary at (" +
                                        std::to_string(p[0]) + "," + std::to_string(p[1]) + ")");
        ExpVec rep = lat.reduce(p);
        ExpVec ph{p[0] + m, p[1]};
        if (window.contains(ph) && c.coefficient(ph) != value) {
            status[rep].first = false;
            h_witness.emplace(rep, p);
        }
        ExpVec pv{p[0], p[1] + n};
        if (window.contains(pv) && c.coefficient(pv) != value) {
            status[rep].second = false;
            v_witness.emplace(rep, p);
        }
    });

    SublatticeSplit out{c, c, {}, {}};
    for (const auto& [rep, hv] : status) {
        auto [h, v] = hv;
        if (h) {
            out.c1_cosets.push_back(rep);  // doubly periodic cosets land here too
        } else if (v) {
            out.c2_cosets.push_back(rep);
        } else {
            std::ostringstream os;
            os << "sublattice_split: coset (" << rep[0] << "," << rep[1]
               << ") breaks both periods on the window; horizontal witness ("
               << h_witness[rep][0] << "," << h_witness[rep][1] << "), vertical witness ("
               << v_witness[rep][0] << "," << v_witness[rep][1] << ")";
            throw std::runtime_error(os.str());
        }
    }
    out.c1 = Configuration::coset_filter(c, lat, out.c1_cosets);
    out.c2 = Configuration::coset_filter(c, lat, out.c2_cosets);
    return out;
}

}  // namespace polyconf
