#include "polyconf/config_io.hpp"

#include <stdexcept>

#include "config_nodes.hpp"
#include "polyconf/builtin.hpp"
#include "polyconf/decompose.hpp"

namespace polyconf {

namespace {

using nlohmann::json;

Configuration build(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("descriptor: expected an object with a \"type\" field");
    const std::string type = j.at("type").get<std::string>();

    auto dim_of = [&]() -> int {
        if (!j.contains("dim")) throw std::invalid_argument("descriptor: missing \"dim\" for " + type);
        return j.at("dim").get<int>();
    };
    auto alphabet_of = [&]() -> std::optional<std::vector<Int>> {
        if (!j.contains("alphabet")) return std::nullopt;
        std::vector<Int> a;
        for (const auto& v : j.at("alphabet")) a.push_back(int_from_json(v));
        return a;
    };
    auto wrap = [&](Configuration c) {
        auto a = alphabet_of();
        return a ? c.with_alphabet(std::move(*a)) : c;
    };

    if (type == "builtin") return wrap(builtin_config(j.at("name").get<std::string>()));

    if (type == "full_periodic") {
        int dim = dim_of();
        std::vector<ExpVec> basis;
        for (const auto& row : j.at("basis")) basis.push_back(vec_from_json(row, dim));
        std::vector<Int> values;
        for (const auto& v : j.at("values")) values.push_back(int_from_json(v));
        return Configuration::full_periodic_values(dim, basis, values, alphabet_of());
    }
    if (type == "fiber_periodic") {
        int dim = dim_of();
        ExpVec dir = vec_from_json(j.at("direction"), dim);
        std::int64_t mult = j.at("multiplicity").get<std::int64_t>();
        std::vector<std::pair<ExpVec, std::vector<Int>>> fibers;
        for (const auto& f : j.at("fibers")) {
            ExpVec base = vec_from_json(f.at("base"), dim);
            std::vector<Int> values;
            for (const auto& v : f.at("values")) values.push_back(int_from_json(v));
            fibers.emplace_back(base, values);
        }
        return Configuration::fiber_periodic(dim, dir, mult, fibers, alphabet_of());
    }
    if (type == "beatty") {
        int dim = dim_of();
        const auto& a = j.at("alpha");
        return wrap(Configuration::beatty(dim, int_from_json(a.at("p")), int_from_json(a.at("s")),
                                          int_from_json(a.at("q")), int_from_json(a.at("r")),
                                          vec_from_json(j.at("weight"), dim)));
    }
    if (type == "constant") {
        int dim = dim_of();
        return wrap(Configuration::constant(dim, int_from_json(j.at("value"))));
    }
    if (type == "sum") {
        std::vector<Configuration> children;
        for (const auto& ch : j.at("children")) children.push_back(build(ch));
        return wrap(Configuration::sum(children));
    }
    if (type == "difference") {
        return wrap(Configuration::difference(build(j.at("minuend")), build(j.at("subtrahend"))));
    }
    if (type == "scale") {
        return wrap(Configuration::scale(int_from_json(j.at("k")), build(j.at("child"))));
    }
    if (type == "translate") {
        Configuration child = build(j.at("child"));
        return wrap(Configuration::translate(child, vec_from_json(j.at("by"), child.dim())));
    }
    if (type == "mirror") {
        return wrap(Configuration::mirror(build(j.at("child")), j.at("axis").get<int>()));
    }
    if (type == "poly_apply") {
        Configuration child = build(j.at("child"));
        LaurentPoly f = parse_poly(j.at("poly").get<std::string>(), child.dim());
        return wrap(Configuration::poly_apply(f, child));
    }
    if (type == "binarize") {
        Configuration child = build(j.at("child"));
        std::vector<Int> ones;
        for (const auto& v : j.at("ones")) ones.push_back(int_from_json(v));
        return wrap(Configuration::binarize(child, ones));
    }
    if (type == "coset_filter") {
        Configuration child = build(j.at("child"));
        std::vector<ExpVec> basis;
        for (const auto& row : j.at("basis")) basis.push_back(vec_from_json(row, child.dim()));
        std::vector<ExpVec> cosets;
        for (const auto& r : j.at("cosets")) cosets.push_back(vec_from_json(r, child.dim()));
        return wrap(Configuration::coset_filter(child, Lattice::from_exp_rows(child.dim(), basis), cosets));
    }
    if (type == "discrete_integrate") {
        Configuration child = build(j.at("child"));
        LaurentPoly f = parse_poly(j.at("factor").get<std::string>(), child.dim());
        LaurentPoly g = parse_poly(j.at("annihilator").get<std::string>(), child.dim());
        return wrap(discrete_integrate(f, child, g));
    }
    throw std::invalid_argument("descriptor: unknown type \"" + type + "\"");
}

}  // namespace

Configuration config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("descriptor: invalid JSON: ") + e.what());
    }
    return build(j);
}

std::string config_to_json(const Configuration& c, int indent) {
    return c.node()->descriptor().dump(indent);
}

}  // namespace polyconf
