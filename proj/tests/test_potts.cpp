#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tgf/potts.hpp"
#include "tgf/verify.hpp"

using namespace tgf;

namespace {

Multigraph k2() { return build_family(Family::path, 1); }
Multigraph c3() { return build_family(Family::cycle, 3); }

std::vector<std::vector<cplx>> dense(const EdgeKernel& k) {
    std::vector<std::vector<cplx>> w(static_cast<std::size_t>(k.q), std::vector<cplx>(static_cast<std::size_t>(k.q)));
    for (int a = 0; a < k.q; ++a)
        for (int b = 0; b < k.q; ++b) w[a][b] = k(a, b);
    return w;
}

}  // namespace

TEST_CASE("monochromial brute force") {
    CHECK(monochromial(k2(), 2, 0.0) == cplx(2.0));
    CHECK(monochromial(c3(), 2, 0.0) == cplx(0.0));
    CHECK(monochromial(build_family(Family::complete, 3), 3, 0.0) == cplx(6.0));
}

TEST_CASE("monochromial closed form") {
    CHECK(std::abs(monochromial_closed(k2(), 2, 0.0) - 2.0) < 1e-12);
    CHECK(std::abs(monochromial_closed(c3(), 3, 0.0) - 6.0) < 1e-12);
    CHECK_THROWS_AS(monochromial_closed(c3(), 3, 1.0), InputError);
}

TEST_CASE("monochromial closure on the corpus") {
    for (const Multigraph& g : corpus(4, 6))
        for (int q = 1; q <= 4; ++q)
            for (cplx y : {cplx(0.0), cplx(2.0), cplx(3.0), cplx(-0.5, 0.5)})
                CHECK(rel_error(monochromial(g, q, y), monochromial_closed(g, q, y)) <= 1e-6);
}

TEST_CASE("proper colourings agree with the oracle and the chromatic form") {
    for (const Multigraph& g : corpus(4, 6))
        for (int q = 1; q <= 4; ++q) {
            const auto n = count_proper_colourings(g, q);
            CHECK(static_cast<long long>(n) == oracle::proper_colourings(g, q));
            CHECK(std::abs(monochromial_closed(g, q, 0.0) - static_cast<double>(n)) < 1e-6);
        }
}

TEST_CASE("potts_partition") {
    for (const Multigraph& g : {k2(), c3(), build_family(Family::star, 3)}) {
        EdgeKernel ones(3);
        for (auto& v : ones.entries) v = 1.0;
        CHECK(potts_partition(g, ones) == std::pow(3.0, g.vertex_count()));
    }
    CHECK(potts_partition(k2(), EdgeKernel::hamming(2, 1.0, 0.0)) == cplx(2.0));
    EdgeKernel single(2);
    single(0, 1) = 1.0;
    CHECK(potts_partition(k2(), single) == cplx(1.0));
}

TEST_CASE("potts_partition agrees with the oracle on random kernels") {
    Rng rng(11);
    for (const Multigraph& g : corpus(3, 4))
        for (int q = 1; q <= 3; ++q) {
            EdgeKernel k(q);
            for (auto& v : k.entries) v = rng.unit_disc();
            CHECK(rel_error(potts_partition(g, k), oracle::partition(g, dense(k))) < 1e-12);
        }
}

TEST_CASE("potts_closed special values") {
    CHECK(std::abs(potts_closed(k2(), 2, 1.0, 0.0) - 2.0) < 1e-12);
    for (const Multigraph& g : corpus(3, 4)) {
        CHECK(std::abs(potts_closed(g, 3, 1.0, 1.0) - std::pow(3.0, g.vertex_count())) < 1e-9);
        // w = 0 keeps only colourings constant on each component.
        const double expected = std::pow(3.0, graph_stats(g).components) * std::pow(2.0, g.edge_count());
        CHECK(std::abs(potts_closed(g, 3, 0.0, 2.0) - expected) < 1e-9);
        CHECK(std::abs(potts_partition(g, EdgeKernel::hamming(3, 0.0, 2.0)) - expected) < 1e-9);
    }
}

TEST_CASE("potts closure on the corpus") {
    Rng rng(5);
    for (const Multigraph& g : corpus(4, 6))
        for (int q = 1; q <= 4; ++q)
            for (int i = 0; i < 3; ++i) {
                const cplx w = rng.unit_disc() * 2.0, y = rng.unit_disc() * 2.0;
                CHECK(rel_error(potts_partition(g, EdgeKernel::hamming(q, w, y)), potts_closed(g, q, w, y)) <= 1e-6);
            }
}

TEST_CASE("potts_closed reduces to the monochromial at w = 1") {
    for (const Multigraph& g : corpus(3, 5))
        CHECK(rel_error(potts_closed(g, 3, 1.0, 2.5), monochromial_closed(g, 3, 2.5)) < 1e-9);
}

TEST_CASE("tg_matrix_test") {
    EdgeKernel ones(3);
    for (auto& v : ones.entries) v = 1.0;
    auto a = tg_matrix_test(ones);
    REQUIRE(a);
    CHECK(a->w == cplx(1.0));
    CHECK(a->y == cplx(1.0));
    auto b = tg_matrix_test(EdgeKernel::hamming(3, 1.0, 0.0));
    REQUIRE(b);
    CHECK(b->w == cplx(1.0));
    CHECK(b->y == cplx(0.0));
    ones(0, 1) += 1.0;
    CHECK_FALSE(tg_matrix_test(ones));
}

TEST_CASE("tg_family_probe accepts Hamming kernels") {
    const FamilyProbeReport r = tg_family_probe(EdgeKernel::hamming(3, cplx(0.5, 0.2), cplx(2.0)), 6);
    CHECK(r.consistent());
    CHECK(std::string(FamilyProbeReport::note).find("not a proof") != std::string::npos);
    CHECK(std::abs(r.y - 2.0) < 1e-9);
}

TEST_CASE("tg_family_probe rejects the character kernel") {
    EdgeKernel k(3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) k(a, b) = root_of_unity(a * b, 3);
    CHECK_FALSE(tg_family_probe(k, 4).consistent());
}

TEST_CASE("tg_family_probe flags orientation dependence") {
    EdgeKernel k(2);
    k(0, 0) = 1.0;
    k(0, 1) = 2.0;
    k(1, 0) = 3.0;
    k(1, 1) = 1.0;
    const FamilyProbeReport r = tg_family_probe(k, 4);
    REQUIRE_FALSE(r.consistent());
    CHECK(r.first_violation()->find("X_2^") != std::string::npos);
    CHECK(r.first_violation()->find("orientation") != std::string::npos);
    CHECK_THROWS_AS(tg_family_probe(k, 0), InputError);
    CHECK_THROWS_AS(tg_family_probe(k, 9), InputError);
}
