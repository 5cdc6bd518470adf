// polyconf command line front end. Talks to the library exclusively through
// the C API in polyconf.h; JSON assembly of manifests is local to the tool.

#include <polyconf.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;       // verification failure, witness printed
constexpr int kExitUsage = 2;         // bad flags or malformed input
constexpr int kExitInconclusive = 3;  // search budget exhausted

struct CString {
    char* ptr = nullptr;
    ~CString() { polyconf_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct ConfigHandle {
    polyconf_config* ptr = nullptr;
    ~ConfigHandle() { polyconf_config_free(ptr); }
};

struct PolyHandle {
    polyconf_poly* ptr = nullptr;
    ~PolyHandle() { polyconf_poly_free(ptr); }
};

int exit_code_for(polyconf_status st) {
    switch (st) {
        case POLYCONF_OK: return kExitOk;
        case POLYCONF_ERROR_INVALID_ARGUMENT:
        case POLYCONF_ERROR_PARSE: return kExitUsage;
        default: return kExitFailure;
    }
}

[[noreturn]] void die(polyconf_status st) {
    std::cerr << "polyconf: error: " << polyconf_last_error() << "\n";
    std::exit(exit_code_for(st));
}

void check(polyconf_status st) {
    if (st != POLYCONF_OK) die(st);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "polyconf: cannot read " << path << "\n";
        std::exit(kExitUsage);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "polyconf: cannot write " << path << "\n";
        std::exit(kExitUsage);
    }
    out << data;
}

// "--config" accepts a descriptor path, inline JSON, or builtin:NAME
ConfigHandle load_config(const std::string& source) {
    ConfigHandle c;
    if (source.rfind("builtin:", 0) == 0) {
        check(polyconf_config_builtin(source.substr(8).c_str(), &c.ptr));
        return c;
    }
    std::string text = (!source.empty() && source[0] == '{') ? source : read_file(source);
    check(polyconf_config_from_json(text.c_str(), &c.ptr));
    return c;
}

json manifest(const std::string& command, const std::vector<std::string>& inputs,
              const json& parameters, const std::vector<std::string>& outputs, long long seed) {
    json m;
    m["command"] = command;
    m["inputs"] = inputs;
    m["parameters"] = parameters;
    m["outputs"] = outputs;
    m["seed"] = seed;
    m["tool"] = std::string("polyconf ") + polyconf_version();
    return m;
}

std::string with_manifest(const json& m, const std::string& result_json) {
    json j;
    j["manifest"] = m;
    j["result"] = json::parse(result_json);
    return j.dump(2) + "\n";
}

std::string manifest_comment(const json& m) { return "# manifest: " + m.dump() + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of low-complexity lattice configurations"};
    app.require_subcommand(1);
    long long seed = 0;
    app.add_option("--seed", seed, "seed echoed into output manifests")->capture_default_str();

    // ---- examples ------------------------------------------------------
    auto* cmd_examples = app.add_subcommand("examples", "materialize built-in configurations and shapes");
    std::string ex_name, ex_out, ex_window, ex_format = "json";
    cmd_examples->add_option("--name", ex_name, "builtin name (twolines3d[-c1|-c2], golden[-c1..c3], tshape)")->required();
    cmd_examples->add_option("--out", ex_out, "output path (default stdout)");
    cmd_examples->add_option("--window", ex_window, "render window a..b[,a..b]");
    cmd_examples->add_option("--format", ex_format, "json|ascii|ppm (ascii implied by --window)");

    // ---- scan ----------------------------------------------------------
    auto* cmd_scan = app.add_subcommand("scan", "rectangle complexity scan");
    std::string sc_config, sc_region, sc_out, sc_format = "tsv";
    long long sc_max = 0, sc_max_m = 0, sc_max_n = 0;
    cmd_scan->add_option("--config", sc_config, "descriptor path, inline JSON, or builtin:NAME")->required();
    cmd_scan->add_option("--region", sc_region, "scan region a..b[,a..b]")->required();
    cmd_scan->add_option("--max", sc_max, "scan rectangles up to max x max");
    cmd_scan->add_option("--max-m", sc_max_m, "widest rectangle");
    cmd_scan->add_option("--max-n", sc_max_n, "tallest rectangle");
    cmd_scan->add_option("--format", sc_format, "tsv|json");
    cmd_scan->add_option("--out", sc_out, "output path (default stdout)");

    // ---- annihilate ----------------------------------------------------
    auto* cmd_ann = app.add_subcommand("annihilate", "search for annihilating polynomials");
    std::string an_config, an_region, an_shape, an_out;
    long long an_norm = 0;
    int an_factors = 3;
    cmd_ann->add_option("--config", an_config)->required();
    cmd_ann->add_option("--region", an_region, "evidence region")->required();
    cmd_ann->add_option("--shape-box", an_shape, "pattern shape box for the kernel search, e.g. 0..2,0..2");
    cmd_ann->add_option("--max-norm,--budget", an_norm, "difference-product search: vector norm budget");
    cmd_ann->add_option("--max-factors", an_factors, "difference-product search: factor budget");
    cmd_ann->add_option("--out", an_out);

    // ---- verify --------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "verify that a polynomial annihilates a configuration");
    std::string ve_poly, ve_config, ve_out;
    cmd_verify->add_option("--poly", ve_poly)->required();
    cmd_verify->add_option("--config", ve_config)->required();
    std::string ve_region = "-32..32";
    cmd_verify->add_option("--region", ve_region, "evidence region, used by oracle-only configurations")->capture_default_str();
    cmd_verify->add_option("--out", ve_out);

    // ---- decompose -----------------------------------------------------
    auto* cmd_dec = app.add_subcommand("decompose", "decompose into periodic components");
    std::string de_config, de_window, de_out;
    std::vector<std::string> de_factors;
    bool de_dumps = false;
    cmd_dec->add_option("--config", de_config)->required();
    cmd_dec->add_option("--factor", de_factors, "line polynomial factor (repeatable)")->required();
    cmd_dec->add_option("--window", de_window, "evidence window")->required();
    cmd_dec->add_flag("--dumps", de_dumps, "include component window dumps");
    cmd_dec->add_option("--out", de_out);

    // ---- classify ------------------------------------------------------
    auto* cmd_cls = app.add_subcommand("classify", "periodicity classification via difference products");
    std::string cl_config, cl_region, cl_out;
    long long cl_norm = 2, cl_bound = 6;
    int cl_factors = 3;
    cmd_cls->add_option("--config", cl_config)->required();
    cmd_cls->add_option("--region", cl_region)->required();
    cmd_cls->add_option("--max-norm,--budget", cl_norm)->capture_default_str();
    cmd_cls->add_option("--max-factors", cl_factors)->capture_default_str();
    cmd_cls->add_option("--bound", cl_bound, "period search bound for the cross-check")->capture_default_str();
    cmd_cls->add_option("--out", cl_out);

    // ---- tile ----------------------------------------------------------
    auto* cmd_tile = app.add_subcommand("tile", "cluster tile / co-tiler verification");
    std::string ti_tile, ti_cot, ti_out;
    cmd_tile->add_option("--tile", ti_tile, "tile JSON path or inline {\"dim\":..,\"cells\":[..]}")->required();
    cmd_tile->add_option("--cotiler", ti_cot, "lattice JSON path or inline {\"dim\":..,\"basis\":[..]}")->required();
    cmd_tile->add_option("--out", ti_out);

    // ---- render --------------------------------------------------------
    auto* cmd_render = app.add_subcommand("render", "render a window as text or PPM");
    std::string re_config, re_region, re_out, re_format = "ascii";
    cmd_render->add_option("--config", re_config)->required();
    cmd_render->add_option("--region", re_region)->required();
    cmd_render->add_option("--format", re_format, "ascii|ppm");
    cmd_render->add_option("--out", re_out, "output path (required for ppm)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_examples->parsed()) {
        bool is_shape = ex_name == "tshape" || ex_name == "square3";
        if (!ex_window.empty() && cmd_examples->count("--format") == 0) ex_format = "ascii";
        json params{{"name", ex_name}, {"format", ex_format}};
        if (!ex_window.empty()) params["window"] = ex_window;
        json m = manifest("examples", {}, params, {ex_out.empty() ? "-" : ex_out}, seed);

        if (is_shape) {
            CString shape;
            check(polyconf_builtin_shape_json(ex_name.c_str(), &shape.ptr));
            write_output(ex_out, with_manifest(m, shape.str()));
            return kExitOk;
        }
        ConfigHandle c;
        check(polyconf_config_builtin(ex_name.c_str(), &c.ptr));
        if (ex_format == "json") {
            CString desc;
            check(polyconf_config_descriptor(c.ptr, &desc.ptr));
            write_output(ex_out, with_manifest(m, desc.str()));
        } else if (ex_format == "ascii") {
            if (ex_window.empty()) {
                std::cerr << "polyconf: ascii output needs --window\n";
                return kExitUsage;
            }
            CString grid, legend;
            check(polyconf_render_ascii(c.ptr, ex_window.c_str(), &grid.ptr, &legend.ptr));
            write_output(ex_out, manifest_comment(m) + "# " + legend.str() + "\n" + grid.str());
        } else if (ex_format == "ppm") {
            if (ex_window.empty() || ex_out.empty()) {
                std::cerr << "polyconf: ppm output needs --window and --out\n";
                return kExitUsage;
            }
            unsigned char* bytes = nullptr;
            size_t len = 0;
            CString side;
            check(polyconf_render_ppm(c.ptr, ex_window.c_str(), &bytes, &len, &side.ptr));
            write_output(ex_out, std::string(reinterpret_cast<char*>(bytes), len));
            polyconf_bytes_free(bytes);
            write_output(ex_out + ".json", with_manifest(m, side.str()));
        } else {
            std::cerr << "polyconf: unknown format " << ex_format << "\n";
            return kExitUsage;
        }
        return kExitOk;
    }

    if (cmd_scan->parsed()) {
        if (sc_max > 0) sc_max_m = sc_max_n = sc_max;
        if (sc_max_m < 1 || sc_max_n < 1) {
            std::cerr << "polyconf: scan needs --max or both --max-m and --max-n\n";
            return kExitUsage;
        }
        ConfigHandle c = load_config(sc_config);
        json params{{"max_m", sc_max_m}, {"max_n", sc_max_n}, {"region", sc_region}, {"format", sc_format}};
        json m = manifest("scan", {sc_config}, params, {sc_out.empty() ? "-" : sc_out}, seed);
        if (sc_format == "json") {
            CString out;
            check(polyconf_scan_json(c.ptr, sc_max_m, sc_max_n, sc_region.c_str(), &out.ptr));
            write_output(sc_out, with_manifest(m, out.str()));
        } else if (sc_format == "tsv") {
            CString out;
            check(polyconf_scan_tsv(c.ptr, sc_max_m, sc_max_n, sc_region.c_str(), &out.ptr));
            write_output(sc_out, manifest_comment(m) + out.str());
        } else {
            std::cerr << "polyconf: unknown format " << sc_format << "\n";
            return kExitUsage;
        }
        return kExitOk;
    }

    if (cmd_ann->parsed()) {
        ConfigHandle c = load_config(an_config);
        bool kernel_mode = !an_shape.empty();
        json params{{"region", an_region}};
        if (kernel_mode) params["shape_box"] = an_shape;
        if (an_norm > 0) {
            params["max_norm"] = an_norm;
            params["max_factors"] = an_factors;
        }
        json m = manifest("annihilate", {an_config}, params, {an_out.empty() ? "-" : an_out}, seed);
        if (!kernel_mode && an_norm <= 0) {
            std::cerr << "polyconf: annihilate needs --shape-box (kernel search) or --max-norm (difference products)\n";
            return kExitUsage;
        }
        int found = 0;
        CString out;
        if (kernel_mode) {
            check(polyconf_find_annihilator_json(c.ptr, an_shape.c_str(), an_region.c_str(), &found,
                                                 &out.ptr));
        } else {
            check(polyconf_find_difference_product_json(c.ptr, an_norm, an_factors,
                                                        an_region.c_str(), &found, &out.ptr));
        }
        write_output(an_out, with_manifest(m, out.str()));
        if (!found) {
            std::cerr << "polyconf: no annihilator within the search budget\n";
            return kExitInconclusive;
        }
        return kExitOk;
    }

    if (cmd_verify->parsed()) {
        ConfigHandle c = load_config(ve_config);
        PolyHandle f;
        int dim = 0;
        check(polyconf_config_dim(c.ptr, &dim));
        check(polyconf_poly_parse(ve_poly.c_str(), dim, &f.ptr));
        json m = manifest("verify", {ve_config}, {{"poly", ve_poly}, {"region", ve_region}},
                          {ve_out.empty() ? "-" : ve_out}, seed);
        int kind = 0;
        CString out;
        check(polyconf_verify_json(f.ptr, c.ptr, ve_region.c_str(), &kind, &out.ptr));
        write_output(ve_out, with_manifest(m, out.str()));
        if (kind == 2) {
            std::cerr << "polyconf: verification failed: " << out.str() << "\n";
            return kExitFailure;
        }
        return kExitOk;
    }

    if (cmd_dec->parsed()) {
        ConfigHandle c = load_config(de_config);
        int dim = 0;
        check(polyconf_config_dim(c.ptr, &dim));
        std::vector<std::unique_ptr<PolyHandle>> handles;
        std::vector<const polyconf_poly*> raw;
        for (const auto& text : de_factors) {
            auto h = std::make_unique<PolyHandle>();
            check(polyconf_poly_parse(text.c_str(), dim, &h->ptr));
            raw.push_back(h->ptr);
            handles.push_back(std::move(h));
        }
        json m = manifest("decompose", {de_config},
                          {{"factors", de_factors}, {"window", de_window}, {"dumps", de_dumps}},
                          {de_out.empty() ? "-" : de_out}, seed);
        CString out;
        check(polyconf_decompose_json(c.ptr, raw.data(), raw.size(), de_window.c_str(),
                                      de_dumps ? 1 : 0, &out.ptr));
        write_output(de_out, with_manifest(m, out.str()));
        return kExitOk;
    }

    if (cmd_cls->parsed()) {
        ConfigHandle c = load_config(cl_config);
        json m = manifest("classify", {cl_config},
                          {{"max_norm", cl_norm},
                           {"max_factors", cl_factors},
                           {"bound", cl_bound},
                           {"region", cl_region}},
                          {cl_out.empty() ? "-" : cl_out}, seed);
        int found = 0, kind = -1;
        CString out;
        check(polyconf_classify_json(c.ptr, cl_norm, cl_factors, cl_bound, cl_region.c_str(),
                                     &found, &kind, &out.ptr));
        write_output(cl_out, with_manifest(m, out.str()));
        if (!found) {
            std::cerr << "polyconf: no certificate within the search budget\n";
            return kExitInconclusive;
        }
        return kExitOk;
    }

    if (cmd_tile->parsed()) {
        std::string tile_text = (!ti_tile.empty() && ti_tile[0] == '{') ? ti_tile : read_file(ti_tile);
        std::string cot_text = (!ti_cot.empty() && ti_cot[0] == '{') ? ti_cot : read_file(ti_cot);
        json m = manifest("tile", {ti_tile, ti_cot}, json::object(), {ti_out.empty() ? "-" : ti_out},
                          seed);
        int tiles = 0;
        CString out;
        check(polyconf_tile_check_json(tile_text.c_str(), cot_text.c_str(), &tiles, &out.ptr));
        write_output(ti_out, with_manifest(m, out.str()));
        if (!tiles) {
            std::cerr << "polyconf: the pair does not tile\n";
            return kExitFailure;
        }
        return kExitOk;
    }

    if (cmd_render->parsed()) {
        ConfigHandle c = load_config(re_config);
        json m = manifest("render", {re_config}, {{"region", re_region}, {"format", re_format}},
                          {re_out.empty() ? "-" : re_out}, seed);
        if (re_format == "ascii") {
            CString grid, legend;
            check(polyconf_render_ascii(c.ptr, re_region.c_str(), &grid.ptr, &legend.ptr));
            write_output(re_out, manifest_comment(m) + "# " + legend.str() + "\n" + grid.str());
        } else if (re_format == "ppm") {
            if (re_out.empty()) {
                std::cerr << "polyconf: ppm output needs --out\n";
                return kExitUsage;
            }
            unsigned char* bytes = nullptr;
            size_t len = 0;
            CString side;
            check(polyconf_render_ppm(c.ptr, re_region.c_str(), &bytes, &len, &side.ptr));
            write_output(re_out, std::string(reinterpret_cast<char*>(bytes), len));
            polyconf_bytes_free(bytes);
            write_output(re_out + ".json", with_manifest(m, side.str()));
        } else {
            std::cerr << "polyconf: unknown format " << re_format << "\n";
            return kExitUsage;
        }
        return kExitOk;
    }

    return kExitUsage;
}
