#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyconf/annihilate.hpp"
#include "polyconf/builtin.hpp"
#include "polyconf/complexity.hpp"

using namespace polyconf;

namespace {

std::mt19937_64 rng(460395113);

LaurentPoly P(const std::string& s, int dim = 2) { return parse_poly(s, dim); }

Box R2(std::int64_t a, std::int64_t b) { return Box::cube(2, a, b); }

Configuration random_full_periodic(int dim) {
    std::uniform_int_distribution<int> period(1, 4), val(-3, 3);
    std::vector<ExpVec> basis;
    for (int i = 0; i < dim; ++i) {
        ExpVec row(dim, 0);
        row[i] = period(rng);
        basis.push_back(row);
    }
    Lattice lat = Lattice::from_exp_rows(dim, basis);
    std::vector<Int> values;
    for (auto n = to_i64(lat.index()); n-- > 0;) values.emplace_back(val(rng));
    return Configuration::full_periodic_values(dim, basis, values);
}

LaurentPoly random_poly(int dim) {
    std::uniform_int_distribution<int> nterms(1, 5), expd(-3, 3), coefd(-9, 9);
    LaurentPoly f(dim);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ExpVec e(dim);
        for (int i = 0; i < dim; ++i) e[i] = expd(rng);
        f.set_coeff(e, f.coeff(e) + coefd(rng));
    }
    return f;
}

}  // namespace

TEST_CASE("rational_nullspace") {
    CHECK(rational_nullspace({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}).empty());

    auto k1 = rational_nullspace({{Rat(1), Rat(1)}});
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == std::vector<Rat>{1, -1});

    auto k2 = rational_nullspace({{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}});
    REQUIRE(k2.size() == 2);
    CHECK(k2[0] == std::vector<Rat>{2, -1, 0});
    CHECK(k2[1] == std::vector<Rat>{3, 0, -1});
    for (const auto& x : k2) CHECK(x[0] * 1 + x[1] * 2 + x[2] * 3 == 0);

    // rational entries are cleared exactly
    auto k3 = rational_nullspace({{Rat(1, 2), Rat(1, 3)}});
    REQUIRE(k3.size() == 1);
    CHECK(k3[0][0] * Rat(1, 2) + k3[0][1] * Rat(1, 3) == 0);
}

TEST_CASE("verify_annihilator: certified tiers") {
    auto lines = two_lines_3d(4);
    auto v = verify_annihilator(parse_poly("(x-1)*(z-1)", 3), lines, Box::cube(3, -5, 5));
    CHECK(v.status == AnnihilationVerdict::Status::ProvenZero);
    CHECK(*v.tier == ExactnessClass::FiberPeriodicFinite);

    auto stripes = Configuration::full_periodic_values(2, {{2, 0}, {0, 1}}, {Int(1), Int(5)});
    auto v2 = verify_annihilator(P("x^2-1"), stripes, R2(-4, 4));
    CHECK(v2.status == AnnihilationVerdict::Status::ProvenZero);
    CHECK(*v2.tier == ExactnessClass::FullLatticePeriodic);

    // a failing certified check yields a concrete global witness
    auto v3 = verify_annihilator(P("x-1"), stripes, R2(-4, 4));
    REQUIRE(v3.status == AnnihilationVerdict::Status::NonzeroAt);
    auto fc = Configuration::poly_apply(P("x-1"), stripes);
    CHECK(fc.coefficient(*v3.position) == *v3.value);
    CHECK(*v3.value != 0);

    auto v4 = verify_annihilator(parse_poly("x-1", 3), lines, Box::cube(3, -5, 5));
    REQUIRE(v4.status == AnnihilationVerdict::Status::NonzeroAt);
    auto fc4 = Configuration::poly_apply(parse_poly("x-1", 3), lines);
    CHECK(fc4.coefficient(*v4.position) == *v4.value);
}

TEST_CASE("verify_annihilator: sums of lattice pieces use the intersection lattice") {
    auto a = Configuration::full_periodic_values(2, {{3, 0}, {0, 1}}, {Int(1), Int(0), Int(2)});
    auto b = Configuration::full_periodic_values(2, {{2, 0}, {0, 2}}, {Int(5), Int(0), Int(0), Int(5)});
    auto c = Configuration::sum(a, b);
    CHECK(c.exactness() == ExactnessClass::FullLatticePeriodic);
    auto v = verify_annihilator(parse_poly("x^6-1", 2), c, Box::cube(2, -4, 4));
    CHECK(v.status == AnnihilationVerdict::Status::ProvenZero);
    auto v2 = verify_annihilator(parse_poly("x^3-1", 2), c, Box::cube(2, -4, 4));
    REQUIRE(v2.status == AnnihilationVerdict::Status::NonzeroAt);
    auto fc = Configuration::poly_apply(parse_poly("x^3-1", 2), c);
    CHECK(fc.coefficient(*v2.position) == *v2.value);
}

TEST_CASE("verify_annihilator: mixed lattice and fiber sums") {
    auto fiber = Configuration::fiber_periodic(2, {1, 0}, 2, {{{0, 0}, {Int(1), Int(3)}}});
    auto checker =
        Configuration::full_periodic_values(2, {{2, 0}, {0, 2}}, {Int(0), Int(1), Int(1), Int(0)});
    auto c = Configuration::sum(fiber, checker);
    CHECK(c.exactness() == ExactnessClass::FiberPeriodicFinite);

    // (x^2-1) kills both the band and the checkerboard
    auto v = verify_annihilator(parse_poly("x^2-1", 2), c, Box::cube(2, -4, 4));
    CHECK(v.status == AnnihilationVerdict::Status::ProvenZero);
    CHECK(*v.tier == ExactnessClass::FiberPeriodicFinite);

    // (x^2-1)(y-1) fails on the checkerboard: the witness escapes the band
    auto bad = parse_poly("(x^2-1)*(y-1)", 2);
    auto v2 = verify_annihilator(parse_poly("y^2-1", 2), c, Box::cube(2, -4, 4));
    CHECK(v2.status == AnnihilationVerdict::Status::NonzeroAt);  // the band is not y-periodic
    auto v3 = verify_annihilator(bad, c, Box::cube(2, -4, 4));
    CHECK(v3.status == AnnihilationVerdict::Status::ProvenZero);

    auto v4 = verify_annihilator(parse_poly("y^2-1", 2), checker, Box::cube(2, -4, 4));
    CHECK(v4.status == AnnihilationVerdict::Status::ProvenZero);
    auto fc = Configuration::poly_apply(parse_poly("y^2-1", 2), c);
    CHECK(fc.coefficient(*v2.position) == *v2.value);
}

TEST_CASE("verify_annihilator: oracle tier") {
    auto golden = golden_difference();
    auto triple = P("(x-1)*(y-1)*(x*y^-1-1)");
    auto v = verify_annihilator(triple, golden, R2(-30, 30));
    CHECK(v.status == AnnihilationVerdict::Status::ZeroOnRegion);
    CHECK(v.region->to_string() == "-30..30,-30..30");

    auto v2 = verify_annihilator(P("x-1"), golden, R2(-30, 30));
    REQUIRE(v2.status == AnnihilationVerdict::Status::NonzeroAt);
    auto fc = Configuration::poly_apply(P("x-1"), golden);
    CHECK(fc.coefficient(*v2.position) == *v2.value);

    CHECK_THROWS_AS(verify_annihilator(LaurentPoly::zero(2), golden, R2(-2, 2)),
                    std::invalid_argument);
}

TEST_CASE("find_annihilator: constant configuration") {
    auto c = Configuration::constant(2, 5);
    auto res = find_annihilator(c, {{0, 0}, {1, 0}}, R2(-6, 6));
    REQUIRE(res.has_value());
    CHECK_FALSE(res->g.is_zero());
    // g*c is the promised constant on the anchors
    auto gc = Configuration::poly_apply(res->g, c);
    CHECK(gc.coefficient({0, 0}) == res->constant);
    auto v = verify_annihilator(res->f, c, R2(-6, 6));
    CHECK(v.status == AnnihilationVerdict::Status::ProvenZero);
}

TEST_CASE("find_annihilator: two-lines configuration has a low-complexity annihilator") {
    auto c = two_lines_3d(4);
    auto res = find_annihilator(c, box_shape(Box::cube(3, 0, 2)), Box::cube(3, -10, 10));
    REQUIRE(res.has_value());
    CHECK_FALSE(res->f.is_zero());
    CHECK(res->f.is_integral());
    auto v = verify_annihilator(res->f, c, Box::cube(3, -10, 10));
    CHECK(v.status == AnnihilationVerdict::Status::ProvenZero);
}

TEST_CASE("find_annihilator: full-rank pattern matrix yields none") {
    // random binary table over a large period: the shape {0, e1} sees all four
    // pattern rows, so the matrix has full column rank
    std::vector<Int> values;
    for (int i = 0; i < 17 * 13; ++i) values.emplace_back(static_cast<long>(rng() % 2));
    auto c = Configuration::full_periodic_values(2, {{17, 0}, {0, 13}}, values);
    CHECK_FALSE(find_annihilator(c, {{0, 0}, {1, 0}}, R2(-20, 20)).has_value());
    CHECK_THROWS_AS(find_annihilator(c, {{0, 0}, {1, 0}}, R2(0, 0)), std::invalid_argument);
}

TEST_CASE("normalize") {
    auto c2 = Configuration::constant(2, 2);
    auto w = normalize(c2, {{0, 0}, {1, 0}}, R2(-5, 5));
    REQUIRE(w.status == NormalizationWitness::Status::Witness);
    CHECK(*w.a != 0);
    CHECK(*w.a * 2 + *w.b == 0);  // a*c + b*1 must be the zero configuration here

    // alternating stripes have a sigma != 0 witness: (x+1)c = 1
    auto stripes = Configuration::full_periodic_values(2, {{2, 0}, {0, 1}}, {Int(0), Int(1)});
    auto w2 = normalize(stripes, {{0, 0}, {1, 0}}, R2(-6, 6));
    REQUIRE(w2.status == NormalizationWitness::Status::Witness);
    CHECK(*w2.a != 0);
    auto fixed = Configuration::sum(Configuration::scale(*w2.a, stripes),
                                    Configuration::constant(2, *w2.b));
    // the normalized configuration only produces the zero constant: every
    // constant-producing witness is an annihilator
    auto zc = find_annihilator(fixed, {{0, 0}, {1, 0}}, R2(-6, 6));
    REQUIRE(zc.has_value());
    CHECK(zc->constant == 0);
    CHECK(verify_annihilator(zc->g, fixed, R2(-6, 6)).is_zero());
    auto probe = normalize(fixed, {{0, 0}, {1, 0}}, R2(-6, 6));
    if (probe.status == NormalizationWitness::Status::Witness) CHECK(*probe.b == 0);

    // no constant-producing polynomial fits in a 2x2 window of the golden
    // configuration: the search is inconclusive, not AlreadyNormalized
    auto golden = golden_difference();
    auto wg = normalize(golden, box_shape(R2(0, 1)), R2(-24, 24));
    CHECK(wg.status == NormalizationWitness::Status::Inconclusive);

    // every constant-producer of the golden configuration has coefficient sum
    // zero (they are all divisible by two of the three line factors), so any
    // integer-affine image of it reports AlreadyNormalized
    auto skewed = Configuration::sum(Configuration::scale(2, golden), Configuration::constant(2, 3))
                      .with_alphabet({Int(3), Int(5)});
    auto ws = normalize(skewed, box_shape(R2(0, 2)), R2(-20, 20));
    CHECK(ws.status == NormalizationWitness::Status::AlreadyNormalized);
    // and its constant-producers indeed annihilate: the config is normalized
    auto res = find_annihilator(skewed, box_shape(R2(0, 2)), R2(-20, 20));
    REQUIRE(res.has_value());
    CHECK(res->constant == 0);
    CHECK(verify_annihilator(res->g, skewed, R2(-18, 18)).is_zero());
}

TEST_CASE("expansion_check") {
    auto lines = two_lines_3d(4);
    auto f = parse_poly("(x-1)*(z-1)", 3);
    auto per_n = expansion_check(f, lines, {1, 2, 3, 5}, Box::cube(3, -6, 6));
    REQUIRE(per_n.size() == 4);
    for (const auto& [n, v] : per_n) CHECK(v.status == AnnihilationVerdict::Status::ProvenZero);

    auto golden = golden_difference();
    auto triple = P("(x-1)*(y-1)*(x*y^-1-1)");
    auto g_per_n = expansion_check(triple, golden, {2, 3}, R2(-16, 16));
    for (const auto& [n, v] : g_per_n) CHECK(v.status == AnnihilationVerdict::Status::ZeroOnRegion);

    CHECK_THROWS_AS(expansion_check(P("x-1"), golden, {2}, R2(-10, 10)), std::invalid_argument);
}

TEST_CASE("candidate_vectors order") {
    auto v2 = candidate_vectors(2, 2);
    REQUIRE(v2.size() == 12);
    CHECK(v2[0] == ExpVec{0, 1});
    CHECK(v2[1] == ExpVec{1, -1});
    CHECK(v2[2] == ExpVec{1, 0});
    CHECK(v2[3] == ExpVec{1, 1});
    CHECK(v2[4] == ExpVec{0, 2});
    for (const auto& v : v2) CHECK(chebyshev(v) <= 2);
}

TEST_CASE("find_difference_product") {
    auto grid = Configuration::full_periodic_values(2, {{2, 0}, {0, 3}},
                                                    {Int(1), Int(2), Int(3), Int(4), Int(5), Int(6)});
    auto cert = find_difference_product(grid, 3, 2, R2(-8, 8));
    REQUIRE(cert.has_value());
    CHECK(cert->vectors == std::vector<ExpVec>{{2, 0}});
    CHECK(cert->verdict.status == AnnihilationVerdict::Status::ProvenZero);

    auto lines = two_lines_3d(4);
    auto cert2 = find_difference_product(lines, 1, 2, Box::cube(3, -8, 8));
    REQUIRE(cert2.has_value());
    CHECK(cert2->vectors == std::vector<ExpVec>{{0, 0, 1}, {1, 0, 0}});
    CHECK(cert2->verdict.status == AnnihilationVerdict::Status::ProvenZero);

    auto golden = golden_difference();
    auto cert3 = find_difference_product(golden, 2, 3, R2(-24, 24));
    REQUIRE(cert3.has_value());
    CHECK(cert3->vectors == std::vector<ExpVec>{{0, 1}, {1, -1}, {1, 0}});
    CHECK(cert3->verdict.status == AnnihilationVerdict::Status::ZeroOnRegion);

    auto hard = golden_difference();
    CHECK_FALSE(find_difference_product(hard, 1, 2, R2(-16, 16)).has_value());
}

TEST_CASE("classify_periodicity") {
    // a constant configuration is doubly periodic
    auto k = Configuration::constant(2, 7);
    auto ck = find_difference_product(k, 1, 1, R2(-4, 4));
    REQUIRE(ck.has_value());
    auto cls = classify_periodicity(*ck, k, 3, R2(-4, 4));
    CHECK(cls.kind == PeriodicityClassification::Kind::DoublyPeriodic);
    REQUIRE(cls.periods.size() == 2);
    CHECK(cls.proven);

    // vertical stripes: period (2,0) only, fibers vertically non-periodic
    auto stripes = Configuration::fiber_periodic(
        2, {1, 0}, 2,
        {{{0, 0}, {Int(1), Int(0)}}, {{0, 1}, {Int(1), Int(1)}}, {{0, 3}, {Int(0), Int(1)}}});
    auto cs = find_difference_product(stripes, 2, 2, R2(-8, 8));
    REQUIRE(cs.has_value());
    auto cls2 = classify_periodicity(*cs, stripes, 4, R2(-8, 8));
    CHECK(cls2.kind == PeriodicityClassification::Kind::OnePeriodic);
    CHECK(cls2.direction->vec() == ExpVec{1, 0});
    CHECK(cls2.proven);

    // golden difference: three essential factors, no period
    auto golden = golden_difference();
    auto cg = find_difference_product(golden, 2, 3, R2(-24, 24));
    REQUIRE(cg.has_value());
    auto cls3 = classify_periodicity(*cg, golden, 3, R2(-40, 40));
    CHECK(cls3.kind == PeriodicityClassification::Kind::NonPeriodicEvidence);
    CHECK(cls3.reduced_vectors.size() == 3);
    CHECK_FALSE(cls3.proven);
}

TEST_CASE("property: the annihilator set is closed under products and monomials") {
    int done = 0;
    while (done < 100) {
        auto c = random_full_periodic(2);
        auto cert = find_difference_product(c, 4, 2, R2(-6, 6));
        if (!cert.has_value()) continue;
        auto g = random_poly(2);
        if (g.is_zero()) continue;
        auto v = verify_annihilator(g * cert->product, c, R2(-6, 6));
        CHECK(v.status == AnnihilationVerdict::Status::ProvenZero);
        ExpVec mono{static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 7) - 3};
        auto vm = verify_annihilator(LaurentPoly::monomial(mono, 1) * cert->product, c, R2(-6, 6));
        CHECK(vm.status == AnnihilationVerdict::Status::ProvenZero);
        ++done;
    }
}

TEST_CASE("property: line-polynomial powers are radical on fiber configurations") {
    std::uniform_int_distribution<int> multd(1, 4), kd(1, 6), vald(0, 2), fibd(1, 3);
    for (int t = 0; t < 100; ++t) {
        int mult = multd(rng);
        std::vector<std::pair<ExpVec, std::vector<Int>>> fibers;
        int nf = fibd(rng);
        for (int i = 0; i < nf; ++i) {
            std::vector<Int> content;
            for (int j = 0; j < mult; ++j) content.emplace_back(vald(rng));
            fibers.push_back({{0, static_cast<std::int64_t>(i)}, content});
        }
        auto c = Configuration::fiber_periodic(2, {1, 0}, mult, fibers);
        auto f = difference_poly({kd(rng), 0}, 2);
        auto once = verify_annihilator(f, c, R2(-6, 6));
        auto twice = verify_annihilator(f * f, c, R2(-6, 6));
        CHECK(once.is_zero() == twice.is_zero());
        CHECK(once.is_zero() == (once.status == AnnihilationVerdict::Status::ProvenZero));
    }
}

TEST_CASE("property: certified verdicts agree with brute-force window checks") {
    std::uniform_int_distribution<int> multd(1, 2), vald(-2, 2), coordd(-2, 2), kd(-2, 2);
    int done = 0;
    while (done < 100) {
        // random structured configuration: fiber band + fiber band or lattice
        ExpVec u{1, coordd(rng)};
        ExpVec v{coordd(rng), 1};
        if (Direction::of(u) == Direction::of(v)) continue;
        Lattice line_u = Lattice::from_exp_rows(2, {Direction::of(u).vec()});
        std::int64_t mu = multd(rng);
        std::vector<Int> content;
        bool nonzero = false;
        for (std::int64_t j = 0; j < mu; ++j) {
            content.emplace_back(vald(rng));
            nonzero = nonzero || content.back() != 0;
        }
        if (!nonzero) continue;
        auto band = Configuration::fiber_periodic(
            2, Direction::of(u).vec(), mu,
            {{line_u.reduce(ExpVec{coordd(rng), coordd(rng)}), content}});
        Configuration other = (rng() % 2) ? random_full_periodic(2)
                                          : Configuration::fiber_periodic(
                                                2, Direction::of(v).vec(), 1,
                                                {{{coordd(rng), coordd(rng)}, {Int(1 + vald(rng) * 0)}}});
        auto c = Configuration::sum(band, other);

        // random small polynomial, often a difference product
        LaurentPoly f(2);
        if (rng() % 2) {
            ExpVec w{kd(rng), kd(rng)};
            if (vec_is_zero(w)) continue;
            f = difference_poly(vec_scale(mu, Direction::of(u).vec()), 2) * difference_poly(w, 2);
        } else {
            for (int i = 0, n = 1 + static_cast<int>(rng() % 3); i < n; ++i) {
                ExpVec e{kd(rng), kd(rng)};
                f.set_coeff(e, f.coeff(e) + vald(rng));
            }
            if (f.is_zero()) continue;
        }

        auto verdict = verify_annihilator(f, c, R2(-4, 4));
        auto fc = Configuration::poly_apply(f, c);
        if (verdict.status == AnnihilationVerdict::Status::ProvenZero) {
            bool all_zero = true;
            for_each_point(R2(-15, 15), [&](const ExpVec& p) {
                if (fc.coefficient(p) != 0) all_zero = false;
            });
            CHECK(all_zero);
        } else {
            REQUIRE(verdict.status == AnnihilationVerdict::Status::NonzeroAt);
            CHECK(fc.coefficient(*verdict.position) == *verdict.value);
            CHECK(*verdict.value != 0);
        }
        ++done;
    }
}
