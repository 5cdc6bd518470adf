#include "polyconf.h"

#include <cstring>
#include <stdexcept>
#include <string>

#include "config_nodes.hpp"
#include "polyconf/builtin.hpp"
#include "polyconf/config_io.hpp"
#include "polyconf/render.hpp"
#include "reports.hpp"

using namespace polyconf;
using nlohmann::json;

struct polyconf_poly {
    LaurentPoly value;
};

struct polyconf_config {
    Configuration value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
polyconf_status guarded(Fn&& fn) {
    try {
        fn();
        return POLYCONF_OK;
    } catch (const PolyParseError& e) {
        g_last_error = e.what();
        return POLYCONF_ERROR_PARSE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return POLYCONF_ERROR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return POLYCONF_ERROR_DOMAIN;
    } catch (const std::overflow_error& e) {
        g_last_error = e.what();
        return POLYCONF_ERROR_OVERFLOW;
    } catch (const std::logic_error& e) {
        g_last_error = e.what();
        return POLYCONF_ERROR_INTERNAL;
    } catch (const std::runtime_error& e) {
        g_last_error = e.what();
        return POLYCONF_ERROR_INCONSISTENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return POLYCONF_ERROR_INTERNAL;
    }
}

polyconf_status need(bool ok, const char* what) {
    if (ok) return POLYCONF_OK;
    g_last_error = std::string("null argument: ") + what;
    return POLYCONF_ERROR_INVALID_ARGUMENT;
}

Box parse_region(const char* text, int dim) {
    if (text == nullptr) throw std::invalid_argument("region string is null");
    return Box::parse(text, dim);
}

}  // namespace

extern "C" {

const char* polyconf_version(void) { return "0.1.0"; }

const char* polyconf_last_error(void) { return g_last_error.c_str(); }

void polyconf_string_free(char* s) { std::free(s); }
void polyconf_bytes_free(unsigned char* p) { std::free(p); }

polyconf_status polyconf_poly_parse(const char* text, int dim, polyconf_poly** out) {
    if (auto st = need(text && out, "text/out")) return st;
    return guarded([&] { *out = new polyconf_poly{parse_poly(text, dim)}; });
}

void polyconf_poly_free(polyconf_poly* f) { delete f; }

polyconf_status polyconf_poly_to_string(const polyconf_poly* f, char** out) {
    if (auto st = need(f && out, "poly/out")) return st;
    return guarded([&] { *out = dup_string(to_string(f->value)); });
}

polyconf_status polyconf_config_from_json(const char* json_text, polyconf_config** out) {
    if (auto st = need(json_text && out, "json/out")) return st;
    return guarded([&] { *out = new polyconf_config{config_from_json(json_text)}; });
}

polyconf_status polyconf_config_builtin(const char* name, polyconf_config** out) {
    if (auto st = need(name && out, "name/out")) return st;
    return guarded([&] { *out = new polyconf_config{builtin_config(name)}; });
}

void polyconf_config_free(polyconf_config* c) { delete c; }

polyconf_status polyconf_config_dim(const polyconf_config* c, int* out) {
    if (auto st = need(c && out, "config/out")) return st;
    *out = c->value.dim();
    return POLYCONF_OK;
}

polyconf_status polyconf_config_exactness(const polyconf_config* c, char** out) {
    if (auto st = need(c && out, "config/out")) return st;
    return guarded([&] { *out = dup_string(to_string(c->value.exactness())); });
}

polyconf_status polyconf_config_descriptor(const polyconf_config* c, char** json_out) {
    if (auto st = need(c && json_out, "config/out")) return st;
    return guarded([&] { *json_out = dup_string(config_to_json(c->value, 2)); });
}

polyconf_status polyconf_config_coefficient(const polyconf_config* c, const int64_t* point,
                                            int dim, char** value_out) {
    if (auto st = need(c && point && value_out, "config/point/out")) return st;
    return guarded([&] {
        ExpVec p(point, point + dim);
        *value_out = dup_string(c->value.coefficient(p).get_str());
    });
}

polyconf_status polyconf_config_window_json(const polyconf_config* c, const char* box,
                                            char** json_out) {
    if (auto st = need(c && box && json_out, "config/box/out")) return st;
    return guarded([&] {
        Box b = parse_region(box, c->value.dim());
        *json_out = dup_string(window_json(c->value, b).dump());
    });
}

polyconf_status polyconf_builtin_shape_json(const char* name, char** json_out) {
    if (auto st = need(name && json_out, "name/out")) return st;
    return guarded([&] {
        json cells = json::array();
        for (const auto& p : builtin_shape(name)) {
            json row = json::array();
            for (auto x : p) row.push_back(x);
            cells.push_back(row);
        }
        json j;
        j["name"] = name;
        j["cells"] = cells;
        *json_out = dup_string(j.dump());
    });
}

polyconf_status polyconf_verify_json(const polyconf_poly* f, const polyconf_config* c,
                                     const char* region, int* verdict_kind, char** json_out) {
    if (auto st = need(f && c && region && verdict_kind && json_out, "poly/config/region/out"))
        return st;
    return guarded([&] {
        Box r = parse_region(region, c->value.dim());
        auto v = verify_annihilator(f->value, c->value, r);
        *verdict_kind = static_cast<int>(v.status);
        json j;
        j["poly"] = to_string(f->value);
        j["exactness"] = to_string(c->value.exactness());
        j["verdict"] = verdict_json(v);
        *json_out = dup_string(j.dump());
    });
}

polyconf_status polyconf_scan_json(const polyconf_config* c, int64_t max_m, int64_t max_n,
                                   const char* region, char** json_out) {
    if (auto st = need(c && region && json_out, "config/region/out")) return st;
    return guarded([&] {
        Box r = parse_region(region, c->value.dim());
        auto rows = nivat_scan(c->value, max_m, max_n, r);
        *json_out = dup_string(scan_json(c->value, rows, r).dump());
    });
}

polyconf_status polyconf_scan_tsv(const polyconf_config* c, int64_t max_m, int64_t max_n,
                                  const char* region, char** out) {
    if (auto st = need(c && region && out, "config/region/out")) return st;
    return guarded([&] {
        Box r = parse_region(region, c->value.dim());
        *out = dup_string(scan_tsv(nivat_scan(c->value, max_m, max_n, r)));
    });
}

polyconf_status polyconf_find_annihilator_json(const polyconf_config* c, const char* shape_box,
                                               const char* region, int* found, char** json_out) {
    if (auto st = need(c && shape_box && region && found && json_out, "config/shape/region/out"))
        return st;
    return guarded([&] {
        Box shape = parse_region(shape_box, c->value.dim());
        Box r = parse_region(region, c->value.dim());
        auto res = find_annihilator(c->value, box_shape(shape), r);
        json j;
        if (res) {
            *found = 1;
            auto recheck = verify_annihilator(res->f, c->value, r);
            j = annihilator_json(c->value, *res, recheck, r);
        } else {
            *found = 0;
            j["found"] = false;
            j["note"] = "pattern matrix kernel is trivial on the region";
        }
        *json_out = dup_string(j.dump());
    });
}

polyconf_status polyconf_find_difference_product_json(const polyconf_config* c, int64_t max_norm,
                                                      int max_factors, const char* region,
                                                      int* found, char** json_out) {
    if (auto st = need(c && region && found && json_out, "config/region/out")) return st;
    return guarded([&] {
        Box r = parse_region(region, c->value.dim());
        auto cert = find_difference_product(c->value, max_norm, max_factors, r);
        json j;
        if (cert) {
            *found = 1;
            j = certificate_json(*cert);
        } else {
            *found = 0;
            j["found"] = false;
            j["note"] = "no difference product within the search budget";
        }
        *json_out = dup_string(j.dump());
    });
}

polyconf_status polyconf_classify_json(const polyconf_config* c, int64_t max_norm, int max_factors,
                                       int64_t bound, const char* region, int* found, int* kind,
                                       char** json_out) {
    if (auto st = need(c && region && found && kind && json_out, "config/region/out")) return st;
    return guarded([&] {
        Box r = parse_region(region, c->value.dim());
        auto cert = find_difference_product(c->value, max_norm, max_factors, r);
        json j;
        if (!cert) {
            *found = 0;
            *kind = -1;
            j["found"] = false;
            j["note"] = "no difference product within the search budget";
        } else {
            *found = 1;
            auto cls = classify_periodicity(*cert, c->value, bound, r);
            *kind = static_cast<int>(cls.kind);
            j = classification_json(c->value, cls);
            j["certificate"] = certificate_json(*cert);
        }
        *json_out = dup_string(j.dump());
    });
}

polyconf_status polyconf_decompose_json(const polyconf_config* c,
                                        const polyconf_poly* const* factors, size_t n_factors,
                                        const char* window, int with_dumps, char** json_out) {
    if (auto st = need(c && factors && window && json_out, "config/factors/window/out")) return st;
    return guarded([&] {
        std::vector<LaurentPoly> fs;
        fs.reserve(n_factors);
        for (size_t i = 0; i < n_factors; ++i) {
            if (!factors[i]) throw std::invalid_argument("null factor handle");
            fs.push_back(factors[i]->value);
        }
        Box w = parse_region(window, c->value.dim());
        auto dec = decompose_by_factors(c->value, fs, w);
        *json_out = dup_string(decomposition_json(c->value, dec, with_dumps != 0).dump());
    });
}

polyconf_status polyconf_tile_check_json(const char* tile_json, const char* cotiler_json,
                                         int* tiles, char** json_out) {
    if (auto st = need(tile_json && cotiler_json && tiles && json_out, "tile/cotiler/out"))
        return st;
    return guarded([&] {
        json tj = json::parse(tile_json);
        json cj = json::parse(cotiler_json);
        int dim = tj.at("dim").get<int>();
        std::vector<ExpVec> cells;
        for (const auto& cell : tj.at("cells")) {
            ExpVec p;
            for (const auto& x : cell) p.push_back(x.get<std::int64_t>());
            cells.push_back(p);
        }
        auto tile = ClusterTile::of(dim, cells);
        CoTilerSet cot = [&] {
            if (cj.contains("type")) return CoTilerSet::of_config(config_from_json(cotiler_json));
            std::vector<ExpVec> basis;
            for (const auto& row : cj.at("basis")) {
                ExpVec p;
                for (const auto& x : row) p.push_back(x.get<std::int64_t>());
                basis.push_back(p);
            }
            return CoTilerSet::of(cj.at("dim").get<int>(), basis);
        }();
        auto j = tiling_json(tile, cot);
        *tiles = j.at("cover").at("tiles").get<bool>() ? 1 : 0;
        *json_out = dup_string(j.dump());
    });
}

polyconf_status polyconf_block_lines_json(const polyconf_config* c, const int64_t* direction,
                                          int dim, int64_t block_m, int64_t block_n,
                                          const char* region, char** json_out) {
    if (auto st = need(c && direction && region && json_out, "config/direction/region/out"))
        return st;
    return guarded([&] {
        ExpVec d(direction, direction + dim);
        Box r = parse_region(region, c->value.dim());
        auto rep = block_lines(c->value, Direction::of(d), block_m, block_n, r);
        *json_out = dup_string(block_lines_json(rep).dump());
    });
}

polyconf_status polyconf_render_ascii(const polyconf_config* c, const char* region,
                                      char** grid_out, char** legend_out) {
    if (auto st = need(c && region && grid_out && legend_out, "config/region/out")) return st;
    return guarded([&] {
        Box r = parse_region(region, c->value.dim());
        auto img = ::polyconf::render_ascii(c->value, r);
        *grid_out = dup_string(img.grid);
        *legend_out = dup_string(img.legend);
    });
}

polyconf_status polyconf_render_ppm(const polyconf_config* c, const char* region,
                                    unsigned char** bytes_out, size_t* len_out,
                                    char** sidecar_json_out) {
    if (auto st = need(c && region && bytes_out && len_out && sidecar_json_out,
                       "config/region/out"))
        return st;
    return guarded([&] {
        Box r = parse_region(region, c->value.dim());
        auto img = ::polyconf::render_ppm(c->value, r);
        unsigned char* bytes = static_cast<unsigned char*>(std::malloc(img.bytes.size()));
        std::memcpy(bytes, img.bytes.data(), img.bytes.size());
        *bytes_out = bytes;
        *len_out = img.bytes.size();
        json side;
        side["format"] = "ppm-p6-gray";
        side["width"] = img.width;
        side["height"] = img.height;
        side["region"] = r.to_string();
        side["min"] = int_to_json(img.min);
        side["max"] = int_to_json(img.max);
        side["scale"] = img.scale;
        side["orientation"] = "top row is the largest y, columns increase with x";
        *sidecar_json_out = dup_string(side.dump());
    });
}

}  // extern "C"
