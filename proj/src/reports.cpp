#include "reports.hpp"

#include <sstream>

#include "config_nodes.hpp"

namespace polyconf {

using nlohmann::json;

json verdict_json(const AnnihilationVerdict& v) {
    json j;
    j["status"] = to_string(v.status);
    switch (v.status) {
        case AnnihilationVerdict::Status::ProvenZero:
            j["tier"] = to_string(*v.tier);
            j["domain"] = v.domain;
            break;
        case AnnihilationVerdict::Status::ZeroOnRegion:
            j["region"] = v.region->to_string();
            break;
        case AnnihilationVerdict::Status::NonzeroAt:
            j["position"] = vec_to_json(*v.position);
            j["value"] = int_to_json(*v.value);
            break;
    }
    return j;
}

json scan_json(const Configuration& c, const std::vector<NivatScanRow>& rows, const Box& region) {
    json j;
    j["exactness"] = to_string(c.exactness());
    j["region"] = region.to_string();
    json out = json::array();
    for (const auto& r : rows) {
        json row;
        row["m"] = r.m;
        row["n"] = r.n;
        row["count"] = r.count;
        row["mn"] = r.mn;
        row["flag"] = r.above_bound ? "above_bound" : "at_or_below_bound";
        row["verdict"] = to_string(r.verdict);
        out.push_back(row);
    }
    j["rows"] = out;
    return j;
}

std::string scan_tsv(const std::vector<NivatScanRow>& rows) {
    std::ostringstream os;
    os << "m\tn\tcount\tmn\tflag\tverdict\n";
    for (const auto& r : rows) {
        os << r.m << "\t" << r.n << "\t" << r.count << "\t" << r.mn << "\t"
           << (r.above_bound ? "above_bound" : "at_or_below_bound") << "\t" << to_string(r.verdict)
           << "\n";
    }
    return os.str();
}

json annihilator_json(const Configuration& c, const AnnihilatorSearchResult& r,
                      const AnnihilationVerdict& recheck, const Box& region) {
    json j;
    j["exactness"] = to_string(c.exactness());
    j["region"] = region.to_string();
    j["g"] = to_string(r.g);
    j["constant"] = int_to_json(r.constant);
    j["f"] = to_string(r.f);
    j["verdict"] = verdict_json(recheck);
    return j;
}

json certificate_json(const DifferenceProductCertificate& cert) {
    json j;
    json vecs = json::array();
    for (const auto& v : cert.vectors) vecs.push_back(vec_to_json(v));
    j["vectors"] = vecs;
    j["product"] = to_string(cert.product);
    j["factors"] = static_cast<std::int64_t>(cert.vectors.size());
    j["verdict"] = verdict_json(cert.verdict);
    return j;
}

json classification_json(const Configuration& c, const PeriodicityClassification& cls) {
    json j;
    j["exactness"] = to_string(c.exactness());
    switch (cls.kind) {
        case PeriodicityClassification::Kind::DoublyPeriodic: {
            j["kind"] = "doubly_periodic";
            json p = json::array();
            for (const auto& v : cls.periods) p.push_back(vec_to_json(v));
            j["periods"] = p;
            break;
        }
        case PeriodicityClassification::Kind::OnePeriodic:
            j["kind"] = "one_periodic";
            j["direction"] = vec_to_json(cls.direction->vec());
            break;
        case PeriodicityClassification::Kind::NonPeriodicEvidence:
            j["kind"] = "non_periodic_evidence";
            break;
    }
    json rv = json::array();
    for (const auto& v : cls.reduced_vectors) rv.push_back(vec_to_json(v));
    j["reduced_vectors"] = rv;
    j["essential_factors"] = static_cast<std::int64_t>(cls.reduced_vectors.size());
    j["proven"] = cls.proven;
    return j;
}

json window_json(const Configuration& c, const Box& box) {
    json j;
    j["exactness"] = to_string(c.exactness());
    j["box"] = box.to_string();
    j["layout"] = "row-major, axis 0 slowest";
    json values = json::array();
    for (const auto& v : c.window(box)) values.push_back(int_to_json(v));
    j["values"] = values;
    return j;
}

json decomposition_json(const Configuration& c, const Decomposition& dec, bool with_dumps) {
    json j;
    j["exactness"] = to_string(c.exactness());
    j["window"] = dec.window.to_string();
    j["residual_max_abs"] = int_to_json(dec.residual_max_abs);
    json comps = json::array();
    for (const auto& comp : dec.components) {
        json cj;
        cj["factor"] = to_string(comp.factor);
        cj["verdict"] = verdict_json(comp.evidence);
        if (with_dumps) cj["window_dump"] = window_json(comp.component, dec.window);
        comps.push_back(cj);
    }
    j["components"] = comps;
    return j;
}

json tiling_json(const ClusterTile& tile, const CoTilerSet& cotiler) {
    json j;
    json cells = json::array();
    for (const auto& c : tile.cells) cells.push_back(vec_to_json(c));
    j["tile"] = cells;
    j["exactness"] = to_string(cotiler.indicator.exactness());
    j["tile_size"] = static_cast<std::int64_t>(tile.cells.size());
    j["cotiler_index"] = int_to_json(cotiler.lattice.index());

    auto v = is_cotiler(tile, cotiler);
    json vj;
    vj["tiles"] = v.tiles;
    vj["domain"] = v.domain;
    if (!v.tiles) {
        vj["position"] = vec_to_json(*v.position);
        vj["cover_count"] = int_to_json(*v.cover_count);
    }
    j["cover"] = vj;

    auto ident = tiling_identity_check(tile, cotiler);
    json ij;
    ij["max_deviation"] = int_to_json(ident.max_deviation);
    if (ident.worst_position) ij["worst_position"] = vec_to_json(*ident.worst_position);
    j["identity"] = ij;

    if (v.tiles && is_prime_u64(tile.cells.size())) {
        json periods = json::array();
        for (const auto& p : prime_periodicity_check(tile, cotiler)) periods.push_back(vec_to_json(p));
        j["prime_periods"] = periods;
    }
    return j;
}

json block_lines_json(const BlockLinesReport& rep) {
    json j;
    j["direction"] = vec_to_json(rep.direction.vec());
    j["block"] = {rep.block_m, rep.block_n};
    j["disjoint_count"] = rep.disjoint_count;
    json lines = json::array();
    for (const auto& line : rep.lines) {
        json lj;
        lj["anchor"] = vec_to_json(line.anchor);
        lj["distinct_blocks"] = static_cast<std::int64_t>(line.blocks.size());
        lj["samples"] = line.samples;
        lines.push_back(lj);
    }
    j["lines"] = lines;
    return j;
}

}  // namespace polyconf
