#include "polyconf/config.hpp"

#include <algorithm>
#include <stdexcept>

#include "config_nodes.hpp"

namespace polyconf {

std::string to_string(ExactnessClass c) {
    switch (c) {
        case ExactnessClass::FullLatticePeriodic: return "full_lattice_periodic";
        case ExactnessClass::FiberPeriodicFinite: return "fiber_periodic_finite";
        case ExactnessClass::OracleOnly: return "oracle_only";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// ConfigNode base

void ConfigNode::set_alphabet(std::vector<Int> a) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.empty()) throw std::invalid_argument("alphabet: empty value set");
    alphabet_ = std::move(a);
}

Int ConfigNode::coeff(const ExpVec& v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("coefficient: dimension mismatch");
    if (memoize_) {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(v);
        if (it != memo_.end()) return it->second;
    }
    Int value = compute(v);
    if (alphabet_ && !std::binary_search(alphabet_->begin(), alphabet_->end(), value))
        throw std::domain_error("declared alphabet violated: value " + value.get_str());
    if (memoize_) {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        memo_.emplace(v, value);
    }
    return value;
}

namespace {

std::int64_t mod_pos(std::int64_t k, std::int64_t m) {
    std::int64_t r = k % m;
    return r < 0 ? r + m : r;
}

// canonical representatives of {r + s : r in reps, s in shifts} modulo the
// direction line, sorted and deduplicated
std::vector<ExpVec> shifted_reps(const Lattice& line, const std::vector<ExpVec>& reps,
                                 const std::vector<ExpVec>& shifts) {
    std::vector<ExpVec> out;
    for (const auto& r : reps)
        for (const auto& s : shifts) out.push_back(line.reduce(vec_add(r, s)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ExpVec mirrored(const ExpVec& v, int axis) {
    ExpVec r = v;
    r[axis] = -r[axis];
    return r;
}

void attach_common(nlohmann::json& j, const ConfigNode& n) {
    j["dim"] = n.dim();
    if (n.alphabet()) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& v : *n.alphabet()) a.push_back(int_to_json(v));
        j["alphabet"] = a;
    }
}

}  // namespace

nlohmann::json vec_to_json(const ExpVec& v) {
    nlohmann::json j = nlohmann::json::array();
    for (auto x : v) j.push_back(x);
    return j;
}

ExpVec vec_from_json(const nlohmann::json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw std::invalid_argument("descriptor: expected a vector of length " + std::to_string(dim));
    ExpVec v;
    for (const auto& x : j) v.push_back(x.get<std::int64_t>());
    return v;
}

nlohmann::json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();  // out-of-range values travel as decimal strings
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("descriptor: expected an integer");
}

// ---------------------------------------------------------------------------
// FullPeriodicNode

FullPeriodicNode::FullPeriodicNode(int dim, const std::vector<ExpVec>& basis,
                                   const std::map<ExpVec, Int>& table)
    : ConfigNode(dim, false), lattice_(Lattice::from_exp_rows(dim, basis)) {
    if (lattice_.rank() != dim)
        throw std::invalid_argument("full_periodic: basis is not full rank");
    Int index = lattice_.index();
    for (const auto& [k, v] : table) {
        ExpVec rep = lattice_.reduce(k);
        if (!table_.emplace(rep, v).second)
            throw std::invalid_argument("full_periodic: duplicate coset in table");
    }
    if (Int(static_cast<long>(table_.size())) != index)
        throw std::invalid_argument("full_periodic: table must have one entry per coset (index " +
                                    index.get_str() + ")");
}

Int FullPeriodicNode::compute(const ExpVec& v) const { return table_.at(lattice_.reduce(v)); }

nlohmann::json FullPeriodicNode::descriptor() const {
    nlohmann::json j;
    j["type"] = "full_periodic";
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& row : lattice_.rows()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(int_to_json(x));
        basis.push_back(r);
    }
    j["basis"] = basis;
    nlohmann::json values = nlohmann::json::array();
    for (const auto& rep : lattice_.coset_reps()) values.push_back(int_to_json(table_.at(rep)));
    j["values"] = values;
    attach_common(j, *this);
    return j;
}

std::optional<StructureInfo> FullPeriodicNode::analyze(
    const std::shared_ptr<const ConfigNode>& self) const {
    StructureInfo s;
    s.lattice_pieces.push_back({Configuration(self), lattice_});
    return s;
}

// ---------------------------------------------------------------------------
// FiberPeriodicNode

FiberPeriodicNode::FiberPeriodicNode(int dim, const ExpVec& direction, std::int64_t multiplicity,
                                     const std::vector<std::pair<ExpVec, std::vector<Int>>>& fibers)
    : ConfigNode(dim, false),
      dir_(Direction::of(direction)),
      mult_(multiplicity),
      line_(Lattice::from_exp_rows(dim, {Direction::of(direction).vec()})) {
    if (dim < 2) throw std::invalid_argument("fiber_periodic: use full_periodic in dimension 1");
    if (multiplicity < 1) throw std::invalid_argument("fiber_periodic: multiplicity must be >= 1");
    pivot_ = 0;
    while (dir_.vec()[pivot_] == 0) ++pivot_;
    for (const auto& [base, values] : fibers) {
        if (static_cast<int>(base.size()) != dim)
            throw std::invalid_argument("fiber_periodic: fiber base dimension mismatch");
        if (static_cast<std::int64_t>(values.size()) != mult_)
            throw std::invalid_argument("fiber_periodic: fiber content must have multiplicity entries");
        if (std::all_of(values.begin(), values.end(), [](const Int& x) { return x == 0; })) continue;
        ExpVec rep = line_.reduce(base);
        // re-phase the content so entry j is the value at rep + j*dir
        std::int64_t k0 = (base[pivot_] - rep[pivot_]) / dir_.vec()[pivot_];
        std::vector<Int> stored(values.size());
        for (std::int64_t j = 0; j < mult_; ++j) stored[j] = values[mod_pos(j - k0, mult_)];
        if (!fibers_.emplace(rep, std::move(stored)).second)
            throw std::invalid_argument("fiber_periodic: two fibers share a line");
    }
}

Int FiberPeriodicNode::compute(const ExpVec& v) const {
    ExpVec rep = line_.reduce(v);
    auto it = fibers_.find(rep);
    if (it == fibers_.end()) return 0;
    std::int64_t k = (v[pivot_] - rep[pivot_]) / dir_.vec()[pivot_];
    return it->second[mod_pos(k, mult_)];
}

nlohmann::json FiberPeriodicNode::descriptor() const {
    nlohmann::json j;
    j["type"] = "fiber_periodic";
    j["direction"] = vec_to_json(dir_.vec());
    j["multiplicity"] = mult_;
    nlohmann::json fibers = nlohmann::json::array();
    for (const auto& [rep, values] : fibers_) {
        nlohmann::json f;
        f["base"] = vec_to_json(rep);
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : values) vals.push_back(int_to_json(v));
        f["values"] = vals;
        fibers.push_back(f);
    }
    j["fibers"] = fibers;
    attach_common(j, *this);
    return j;
}

std::optional<StructureInfo> FiberPeriodicNode::analyze(
    const std::shared_ptr<const ConfigNode>& self) const {
    StructureInfo s;
    std::vector<ExpVec> reps;
    for (const auto& [rep, values] : fibers_) reps.push_back(rep);
    s.fiber_pieces.push_back({Configuration(self), dir_, mult_, std::move(reps)});
    return s;
}

// ---------------------------------------------------------------------------
// BeattyNode

BeattyNode::BeattyNode(int dim, Int p, Int s, Int q, Int r, ExpVec weight)
    : ConfigNode(dim, true),
      p_(std::move(p)),
      s_(std::move(s)),
      q_(std::move(q)),
      r_(std::move(r)),
      weight_(std::move(weight)) {
    if (r_ == 0) throw std::invalid_argument("beatty: r must be nonzero");
    if (q_ < 0) throw std::invalid_argument("beatty: q must be >= 0");
    if (s_ != 0 && is_perfect_square(q_))
        throw std::invalid_argument("beatty: q must not be a perfect square when s != 0");
    if (static_cast<int>(weight_.size()) != dim)
        throw std::invalid_argument("beatty: weight dimension mismatch");
}

Int BeattyNode::compute(const ExpVec& v) const {
    Int k = 0;
    for (int i = 0; i < dim_; ++i) k += Int(weight_[i]) * Int(v[i]);
    return beatty_floor(p_, s_, q_, r_, k);
}

nlohmann::json BeattyNode::descriptor() const {
    nlohmann::json j;
    j["type"] = "beatty";
    j["alpha"] = {{"p", int_to_json(p_)}, {"s", int_to_json(s_)}, {"q", int_to_json(q_)}, {"r", int_to_json(r_)}};
    j["weight"] = vec_to_json(weight_);
    attach_common(j, *this);
    return j;
}

// ---------------------------------------------------------------------------
// SumNode

SumNode::SumNode(std::vector<Configuration> children) : ConfigNode(children.at(0).dim(), true), children_(std::move(children)) {
    for (const auto& c : children_) {
        if (c.dim() != dim_) throw std::invalid_argument("sum: dimension mismatch");
    }
}

Int SumNode::compute(const ExpVec& v) const {
    Int s = 0;
    for (const auto& c : children_) s += c.coefficient(v);
    return s;
}

nlohmann::json SumNode::descriptor() const {
    nlohmann::json j;
    j["type"] = "sum";
    nlohmann::json ch = nlohmann::json::array();
    for (const auto& c : children_) ch.push_back(c.node()->descriptor());
    j["children"] = ch;
    attach_common(j, *this);
    return j;
}

std::optional<StructureInfo> SumNode::analyze(const std::shared_ptr<const ConfigNode>&) const {
    StructureInfo s;
    for (const auto& c : children_) {
        auto sub = c.structure();
        if (!sub) return std::nullopt;
        for (auto& piece : sub->lattice_pieces) s.lattice_pieces.push_back(std::move(piece));
        for (auto& piece : sub->fiber_pieces) s.fiber_pieces.push_back(std::move(piece));
    }
    return s;
}

// ---------------------------------------------------------------------------
// ScaleNode

ScaleNode::ScaleNode(Int k, Configuration child) : ConfigNode(child.dim(), false), k_(std::move(k)), child_(std::move(child)) {}

Int ScaleNode::compute(const ExpVec& v) const { return k_ * child_.coefficient(v); }

nlohmann::json ScaleNode::descriptor() const {
    nlohmann::json j;
    j["type"] = "scale";
    j["k"] = int_to_json(k_);
    j["child"] = child_.node()->descriptor();
    attach_common(j, *this);
    return j;
}

std::optional<StructureInfo> ScaleNode::analyze(const std::shared_ptr<const ConfigNode>&) const {
    if (k_ == 0) return StructureInfo{};  // the zero configuration
    auto sub = child_.structure();
    if (!sub) return std::nullopt;
    StructureInfo s;
    for (auto& piece : sub->lattice_pieces)
        s.lattice_pieces.push_back({Configuration::scale(k_, piece.piece), piece.lattice});
    for (auto& piece : sub->fiber_pieces)
        s.fiber_pieces.push_back(
            {Configuration::scale(k_, piece.piece), piece.direction, piece.multiplicity, piece.reps});
    return s;
}

// ---------------------------------------------------------------------------
// TranslateNode

TranslateNode::TranslateNode(Configuration child, ExpVec by)
    : ConfigNode(child.dim(), false), child_(std::move(child)), by_(std::move(by)) {
    if (static_cast<int>(by_.size()) != dim_) throw std::invalid_argument("translate: dimension mismatch");
}

Int TranslateNode::compute(const ExpVec& v) const { return child_.coefficient(vec_sub(v, by_)); }

nlohmann::json TranslateNode::descriptor() const {
    nlohmann::json j;
    j["type"] = "translate";
    j["by"] = vec_to_json(by_);
    j["child"] = child_.node()->descriptor();
    attach_common(j, *this);
    return j;
}

std::optional<StructureInfo> TranslateNode::analyze(const std::shared_ptr<const ConfigNode>&) const {
    auto sub = child_.structure();
    if (!sub) return std::nullopt;
    StructureInfo s;
    for (auto& piece : sub->lattice_pieces)
        s.lattice_pieces.push_back({Configuration::translate(piece.piece, by_), piece.lattice});
    for (auto& piece : sub->fiber_pieces) {
        Lattice line = Lattice::from_exp_rows(dim_, {piece.direction.vec()});
        s.fiber_pieces.push_back({Configuration::translate(piece.piece, by_), piece.direction,
                                  piece.multiplicity, shifted_reps(line, piece.reps, {by_})});
    }
    return s;
}

// ---------------------------------------------------------------------------
// MirrorNode

MirrorNode::MirrorNode(Configuration child, int axis)
    : ConfigNode(child.dim(), false), child_(std::move(child)), axis_(axis) {
    if (axis < 0 || axis >= dim_) throw std::invalid_argument("mirror: axis out of range");
}

Int MirrorNode::compute(const ExpVec& v) const { return child_.coefficient(mirrored(v, axis_)); }

nlohmann::json MirrorNode::descriptor() const {
    nlohmann::json j;
    j["type"] = "mirror";
    j["axis"] = axis_;
    j["child"] = child_.node()->descriptor();
    attach_common(j, *this);
    return j;
}

std::optional<StructureInfo> MirrorNode::analyze(const std::shared_ptr<const ConfigNode>&) const {
    auto sub = child_.structure();
    if (!sub) return std::nullopt;
    StructureInfo s;
    for (auto& piece : sub->lattice_pieces) {
        std::vector<std::vector<Int>> rows = piece.lattice.rows();
        for (auto& row : rows) row[axis_] = -row[axis_];
        s.lattice_pieces.push_back(
            {Configuration::mirror(piece.piece, axis_), Lattice(dim_, std::move(rows))});
    }
    for (auto& piece : sub->fiber_pieces) {
        Direction dir = Direction::of(mirrored(piece.direction.vec(), axis_));
        Lattice line = Lattice::from_exp_rows(dim_, {dir.vec()});
        std::vector<ExpVec> reps;
        for (const auto& r : piece.reps) reps.push_back(line.reduce(mirrored(r, axis_)));
        std::sort(reps.begin(), reps.end());
        reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
        s.fiber_pieces.push_back(
            {Configuration::mirror(piece.piece, axis_), dir, piece.multiplicity, std::move(reps)});
    }
    return s;
}

// ---------------------------------------------------------------------------
// PolyApplyNode

PolyApplyNode::PolyApplyNode(LaurentPoly f, Configuration child)
    : ConfigNode(child.dim(), true), f_(std::move(f)), child_(std::move(child)) {
    if (f_.dim() != dim_) throw std::invalid_argument("poly_apply: dimension mismatch");
    if (!f_.is_integral()) throw std::invalid_argument("poly_apply: polynomial must have integer coefficients");
}

Int PolyApplyNode::compute(const ExpVec& v) const {
    Int s = 0;
    for (const auto& [u, c] : f_.terms()) s += c.get_num() * child_.coefficient(vec_sub(v, u));
    return s;
}

nlohmann::json PolyApplyNode::descriptor() const {
    nlohmann::json j;
    j["type"] = "poly_apply";
    j["poly"] = to_string(f_);
    j["child"] = child_.node()->descriptor();
    attach_common(j, *this);
    return j;
}

std::optional<StructureInfo> PolyApplyNode::analyze(const std::shared_ptr<const ConfigNode>&) const {
    if (f_.is_zero()) return StructureInfo{};
    auto sub = child_.structure();
    if (!sub) return std::nullopt;
    StructureInfo s;
    for (auto& piece : sub->lattice_pieces)
        s.lattice_pieces.push_back({Configuration::poly_apply(f_, piece.piece), piece.lattice});
    auto supp = f_.support();
    for (auto& piece : sub->fiber_pieces) {
        Lattice line = Lattice::from_exp_rows(dim_, {piece.direction.vec()});
        s.fiber_pieces.push_back({Configuration::poly_apply(f_, piece.piece), piece.direction,
                                  piece.multiplicity, shifted_reps(line, piece.reps, supp)});
    }
    return s;
}

// ---------------------------------------------------------------------------
// BinarizeNode

BinarizeNode::BinarizeNode(Configuration child, std::vector<Int> ones)
    : ConfigNode(child.dim(), false), child_(std::move(child)), ones_(std::move(ones)) {
    if (!child_.alphabet()) throw std::invalid_argument("binarize: child has no declared alphabet");
    std::sort(ones_.begin(), ones_.end());
    ones_.erase(std::unique(ones_.begin(), ones_.end()), ones_.end());
    alphabet_ = std::vector<Int>{Int(0), Int(1)};
}

Int BinarizeNode::compute(const ExpVec& v) const {
    return std::binary_search(ones_.begin(), ones_.end(), child_.coefficient(v)) ? 1 : 0;
}

nlohmann::json BinarizeNode::descriptor() const {
    nlohmann::json j;
    j["type"] = "binarize";
    nlohmann::json ones = nlohmann::json::array();
    for (const auto& v : ones_) ones.push_back(int_to_json(v));
    j["ones"] = ones;
    j["child"] = child_.node()->descriptor();
    j["dim"] = dim_;
    return j;
}

std::optional<StructureInfo> BinarizeNode::analyze(
    const std::shared_ptr<const ConfigNode>& self) const {
    auto sub = child_.structure();
    if (!sub) return std::nullopt;
    StructureInfo s;
    if (sub->lattice_pieces.size() == 1 && sub->fiber_pieces.empty()) {
        // a single-lattice-piece child is itself lattice periodic,
        // and the pointwise remap preserves that
        s.lattice_pieces.push_back({Configuration(self), sub->lattice_pieces[0].lattice});
        return s;
    }
    if (sub->fiber_pieces.size() == 1 && sub->lattice_pieces.empty() &&
        !std::binary_search(ones_.begin(), ones_.end(), Int(0))) {
        // zero maps to zero, so the band support is preserved
        const auto& piece = sub->fiber_pieces[0];
        s.fiber_pieces.push_back({Configuration(self), piece.direction, piece.multiplicity, piece.reps});
        return s;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// DeclareAlphabetNode

DeclareAlphabetNode::DeclareAlphabetNode(Configuration child, std::vector<Int> values)
    : ConfigNode(child.dim(), false), child_(std::move(child)) {
    set_alphabet(std::move(values));
}

Int DeclareAlphabetNode::compute(const ExpVec& v) const { return child_.coefficient(v); }

nlohmann::json DeclareAlphabetNode::descriptor() const {
    nlohmann::json j = child_.node()->descriptor();
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : *alphabet_) a.push_back(int_to_json(v));
    j["alphabet"] = a;
    return j;
}

std::optional<StructureInfo> DeclareAlphabetNode::analyze(
    const std::shared_ptr<const ConfigNode>&) const {
    return child_.structure();
}

// ---------------------------------------------------------------------------
// CosetFilterNode

CosetFilterNode::CosetFilterNode(Configuration child, Lattice lattice, const std::vector<ExpVec>& reps)
    : ConfigNode(child.dim(), false), child_(std::move(child)), lattice_(std::move(lattice)) {
    if (lattice_.dim() != dim_ || lattice_.rank() != dim_)
        throw std::invalid_argument("coset_filter: lattice must be full rank in the config dimension");
    for (const auto& r : reps) reps_.push_back(lattice_.reduce(r));
    std::sort(reps_.begin(), reps_.end());
    reps_.erase(std::unique(reps_.begin(), reps_.end()), reps_.end());
}

Int CosetFilterNode::compute(const ExpVec& v) const {
    if (!std::binary_search(reps_.begin(), reps_.end(), lattice_.reduce(v))) return 0;
    return child_.coefficient(v);
}

nlohmann::json CosetFilterNode::descriptor() const {
    nlohmann::json j;
    j["type"] = "coset_filter";
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& row : lattice_.rows()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(int_to_json(x));
        basis.push_back(r);
    }
    j["basis"] = basis;
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& r : reps_) reps.push_back(vec_to_json(r));
    j["cosets"] = reps;
    j["child"] = child_.node()->descriptor();
    attach_common(j, *this);
    return j;
}

std::optional<StructureInfo> CosetFilterNode::analyze(
    const std::shared_ptr<const ConfigNode>&) const {
    auto sub = child_.structure();
    if (!sub) return std::nullopt;
    StructureInfo s;
    for (auto& piece : sub->lattice_pieces) {
        Lattice joint = Lattice::intersect(piece.lattice, lattice_);
        s.lattice_pieces.push_back(
            {Configuration::coset_filter(piece.piece, lattice_, reps_), joint});
    }
    for (auto& piece : sub->fiber_pieces) {
        // the mask is lattice-periodic, so it is periodic along the fiber
        // with the smallest step t such that t*dir lands in the lattice
        std::int64_t t = 1;
        std::int64_t limit = to_i64(lattice_.index());
        while (t <= limit && !lattice_.contains(vec_scale(t, piece.direction.vec()))) ++t;
        if (t > limit) return std::nullopt;
        std::int64_t mult = std::lcm(piece.multiplicity, t);
        s.fiber_pieces.push_back({Configuration::coset_filter(piece.piece, lattice_, reps_),
                                  piece.direction, mult, piece.reps});
    }
    return s;
}

// ---------------------------------------------------------------------------
// Configuration facade

Configuration::Configuration(std::shared_ptr<const ConfigNode> node) : node_(std::move(node)) {}

int Configuration::dim() const { return node_->dim(); }

std::optional<std::vector<Int>> Configuration::alphabet() const { return node_->alphabet(); }

Int Configuration::coefficient(const ExpVec& v) const { return node_->coeff(v); }

Configuration Configuration::full_periodic(int dim, const std::vector<ExpVec>& basis,
                                           const std::map<ExpVec, Int>& table,
                                           std::optional<std::vector<Int>> alphabet) {
    auto node = std::make_shared<FullPeriodicNode>(dim, basis, table);
    if (alphabet) node->set_alphabet(std::move(*alphabet));
    return Configuration(node);
}

Configuration Configuration::full_periodic_values(int dim, const std::vector<ExpVec>& basis,
                                                  const std::vector<Int>& values,
                                                  std::optional<std::vector<Int>> alphabet) {
    Lattice lat = Lattice::from_exp_rows(dim, basis);
    if (lat.rank() != dim) throw std::invalid_argument("full_periodic: basis is not full rank");
    auto reps = lat.coset_reps();
    if (reps.size() != values.size())
        throw std::invalid_argument("full_periodic: expected " + std::to_string(reps.size()) +
                                    " values, got " + std::to_string(values.size()));
    std::map<ExpVec, Int> table;
    for (size_t i = 0; i < reps.size(); ++i) table[reps[i]] = values[i];
    return full_periodic(dim, basis, table, std::move(alphabet));
}

Configuration Configuration::fiber_periodic(int dim, const ExpVec& direction, std::int64_t multiplicity,
                                            const std::vector<std::pair<ExpVec, std::vector<Int>>>& fibers,
                                            std::optional<std::vector<Int>> alphabet) {
    if (Direction::of(direction).vec() != direction)
        throw std::invalid_argument("fiber_periodic: direction must be primitive and sign-canonical");
    if (multiplicity < 1) throw std::invalid_argument("fiber_periodic: multiplicity must be >= 1");
    if (dim == 1) {
        // a fiber configuration in one dimension is plainly periodic; at most
        // one fiber can exist since the direction line is the whole lattice
        std::vector<Int> values(static_cast<size_t>(multiplicity), Int(0));
        bool seen = false;
        for (const auto& [base, content] : fibers) {
            if (static_cast<std::int64_t>(content.size()) != multiplicity)
                throw std::invalid_argument("fiber_periodic: fiber content must have multiplicity entries");
            if (std::all_of(content.begin(), content.end(), [](const Int& x) { return x == 0; })) continue;
            if (seen) throw std::invalid_argument("fiber_periodic: two fibers share a line");
            seen = true;
            for (std::int64_t j = 0; j < multiplicity; ++j)
                values[static_cast<size_t>(mod_pos(base[0] + j, multiplicity))] = content[j];
        }
        return full_periodic_values(1, {{multiplicity}}, values, std::move(alphabet));
    }
    auto node = std::make_shared<FiberPeriodicNode>(dim, direction, multiplicity, fibers);
    if (alphabet) node->set_alphabet(std::move(*alphabet));
    return Configuration(node);
}

Configuration Configuration::beatty(int dim, const Int& p, const Int& s, const Int& q, const Int& r,
                                    const ExpVec& weight) {
    return Configuration(std::make_shared<BeattyNode>(dim, p, s, q, r, weight));
}

Configuration Configuration::constant(int dim, const Int& value) {
    std::vector<ExpVec> basis;
    for (int i = 0; i < dim; ++i) {
        ExpVec e(dim, 0);
        e[i] = 1;
        basis.push_back(e);
    }
    return full_periodic_values(dim, basis, {value}, std::vector<Int>{value});
}

Configuration Configuration::sum(const std::vector<Configuration>& children) {
    if (children.empty()) throw std::invalid_argument("sum: no children");
    if (children.size() == 1) return children[0];
    return Configuration(std::make_shared<SumNode>(children));
}

Configuration Configuration::sum(const Configuration& a, const Configuration& b) {
    return sum(std::vector<Configuration>{a, b});
}

Configuration Configuration::difference(const Configuration& a, const Configuration& b) {
    return sum(a, scale(Int(-1), b));
}

Configuration Configuration::scale(const Int& k, const Configuration& c) {
    return Configuration(std::make_shared<ScaleNode>(k, c));
}

Configuration Configuration::translate(const Configuration& c, const ExpVec& by) {
    return Configuration(std::make_shared<TranslateNode>(c, by));
}

Configuration Configuration::mirror(const Configuration& c, int axis) {
    return Configuration(std::make_shared<MirrorNode>(c, axis));
}

Configuration Configuration::poly_apply(const LaurentPoly& f, const Configuration& c) {
    return Configuration(std::make_shared<PolyApplyNode>(f, c));
}

Configuration Configuration::binarize(const Configuration& c, const std::vector<Int>& ones) {
    return Configuration(std::make_shared<BinarizeNode>(c, ones));
}

Configuration Configuration::coset_filter(const Configuration& c, const Lattice& lattice,
                                          const std::vector<ExpVec>& coset_reps) {
    return Configuration(std::make_shared<CosetFilterNode>(c, lattice, coset_reps));
}

Configuration Configuration::with_alphabet(std::vector<Int> values) const {
    return Configuration(std::make_shared<DeclareAlphabetNode>(*this, std::move(values)));
}

std::vector<Int> Configuration::window(const Box& box) const {
    if (box.dim() != dim()) throw std::invalid_argument("window: box dimension mismatch");
    if (box.empty()) throw std::invalid_argument("window: empty box");
    std::vector<Int> out;
    out.reserve(box.volume());
    for_each_point(box, [&](const ExpVec& p) { out.push_back(coefficient(p)); });
    return out;
}

std::vector<Int> Configuration::pattern(const ExpVec& v, const std::vector<ExpVec>& shape) const {
    if (shape.empty()) throw std::invalid_argument("pattern: empty shape");
    std::vector<Int> out;
    out.reserve(shape.size());
    for (const auto& u : shape) out.push_back(coefficient(vec_add(v, u)));
    return out;
}

std::optional<StructureInfo> Configuration::structure() const { return node_->analyze(node_); }

ExactnessClass Configuration::exactness() const {
    auto s = structure();
    if (!s) return ExactnessClass::OracleOnly;
    if (s->fiber_pieces.empty()) return ExactnessClass::FullLatticePeriodic;
    return ExactnessClass::FiberPeriodicFinite;
}

// ---------------------------------------------------------------------------

Int beatty_floor(const Int& p, const Int& s, const Int& q, const Int& r, const Int& k) {
    if (r == 0) throw std::invalid_argument("beatty_floor: r must be nonzero");
    if (q < 0) throw std::invalid_argument("beatty_floor: q must be >= 0");
    Int a = k * p, b = k * s, rr = r;
    if (rr < 0) {
        a = -a;
        b = -b;
        rr = -rr;
    }
    // floor(b*sqrt(q)) via the integer square root of b^2 q
    Int b2q = b * b * q;
    Int root = floor_sqrt(b2q);
    Int nb;
    if (b >= 0) {
        nb = root;
    } else {
        nb = -root;
        if (root * root != b2q) nb -= 1;  // -ceil for irrational part
    }
    return floor_div(a + nb, rr);
}

std::vector<ExpVec> canonical_shape(std::vector<ExpVec> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

std::vector<ExpVec> box_shape(const Box& box) {
    std::vector<ExpVec> pts;
    for_each_point(box, [&](const ExpVec& p) { pts.push_back(p); });
    return pts;
}

}  // namespace polyconf
