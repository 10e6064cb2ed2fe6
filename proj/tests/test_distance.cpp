#include "doctest.h"

#include <cmath>

#include "gainspec/distance.hpp"
#include "gainspec/spectra.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gainspec;
using namespace gainspec::testing;

namespace {

const UnitGain one;
const UnitGain iu = UnitGain::from_pi_fraction(1, 2);

GainGraph make_graph(int n, std::initializer_list<GainEdge> edges) {
    return GainGraph(n, std::vector<GainEdge>(edges));
}

GainGraph c4_one_gain_i() {
    return make_graph(4, {GainEdge{0, 1, iu}, GainEdge{1, 2, one}, GainEdge{2, 3, one},
                          GainEdge{0, 3, one}});
}

GainGraph c4_conjugate_pair() {
    const auto third = UnitGain::from_pi_fraction(1, 3);
    return make_graph(4, {GainEdge{0, 1, third}, GainEdge{1, 2, one}, GainEdge{2, 3, one},
                          GainEdge{0, 3, third.conj()}});
}

// Two triangles sharing the edge (1,2): unbalanced, non-geodetic, yet both
// length-2 paths between 0 and 3 carry the same gain i (class B).
GainGraph diamond_class_b() {
    return make_graph(4, {GainEdge{0, 1, iu}, GainEdge{0, 2, one}, GainEdge{1, 2, one},
                          GainEdge{1, 3, one}, GainEdge{2, 3, iu}});
}

GainGraph all_ones_triangle() {
    return make_graph(3, {GainEdge{0, 1, one}, GainEdge{1, 2, one}, GainEdge{0, 2, one}});
}

}  // namespace

TEST_CASE("vertex order validation and construction") {
    CHECK_THROWS_AS(VertexOrder({0, 0, 1}), DimensionError);
    CHECK_THROWS_AS(VertexOrder({0, 3, 1}), DimensionError);
    const auto std3 = VertexOrder::standard(3);
    CHECK(std3.less(0, 2));
    const auto rev3 = VertexOrder::reversed(3);
    CHECK(rev3.less(2, 0));
}

TEST_CASE("auxiliary gain examples") {
    const auto std4 = VertexOrder::standard(4);
    SUBCASE("unique shortest path ignores the order") {
        const auto g = make_graph(3, {GainEdge{0, 1, iu}, GainEdge{1, 2, iu}});
        const auto rev = VertexOrder::reversed(3);
        CHECK(auxiliary_gain_max(g, std4.size() == 4 ? VertexOrder::standard(3) : VertexOrder::standard(3), 0, 2)
                  .approx_equal(-one));  // i * i
        CHECK(auxiliary_gain_max(g, rev, 0, 2).approx_equal(-one));
        CHECK(auxiliary_gain_min(g, rev, 0, 2).approx_equal(-one));
    }
    SUBCASE("C4 with gains {i, 1}") {
        const auto g = c4_one_gain_i();
        CHECK(auxiliary_gain_max(g, std4, 0, 2).approx_equal(one));
        CHECK(auxiliary_gain_min(g, std4, 0, 2).approx_equal(iu));
        // reversed pair direction conjugates
        CHECK(auxiliary_gain_max(g, std4, 2, 0).approx_equal(one));
        CHECK(auxiliary_gain_min(g, std4, 2, 0).approx_equal(iu.conj()));
    }
    SUBCASE("C4 with conjugate gains resolves the Re tie by Im") {
        const auto g = c4_conjugate_pair();
        const auto third = UnitGain::from_pi_fraction(1, 3);
        CHECK(auxiliary_gain_max(g, std4, 0, 2).approx_equal(third));
        CHECK(auxiliary_gain_min(g, std4, 0, 2).approx_equal(third.conj()));
    }
    SUBCASE("diagonal convention") {
        CHECK(auxiliary_gain_max(c4_one_gain_i(), std4, 1, 1).approx_equal(one));
    }
}

TEST_CASE("distance matrix examples") {
    SUBCASE("P3 with two pi/4 gains") {
        const auto eighth = UnitGain::from_pi_fraction(1, 4);
        const auto g = make_graph(3, {GainEdge{0, 1, eighth}, GainEdge{1, 2, eighth}});
        const auto m = distance_matrices(g, VertexOrder::standard(3));
        CHECK(std::abs(m.dmax.at(0, 2) - Complex(0.0, 2.0)) < 1e-12);
        CHECK(std::abs(m.dmax.at(2, 0) - Complex(0.0, -2.0)) < 1e-12);
        CHECK(m.dmax.approx_equal(m.dmin, 1e-12));
    }
    SUBCASE("C4 with one gain i splits max and min") {
        const auto m = distance_matrices(c4_one_gain_i(), VertexOrder::standard(4));
        CHECK(std::abs(m.dmax.at(0, 2) - Complex(2.0, 0.0)) < 1e-12);
        CHECK(std::abs(m.dmin.at(0, 2) - Complex(0.0, 2.0)) < 1e-12);
    }
    SUBCASE("all-ones gains reproduce the classical distance matrix") {
        Rng rng(71);
        const auto g = random_connected_graph(rng, 7, 0.4);
        const auto m = distance_matrices(g, VertexOrder::standard(7));
        const auto d = distances_bruteforce(g);
        for (int i = 0; i < 7; ++i) {
            for (int j = 0; j < 7; ++j) {
                CHECK(std::abs(m.dmax.at(i, j) - Complex(d[i][j], 0.0)) < 1e-12);
                CHECK(std::abs(m.dmin.at(i, j) - Complex(d[i][j], 0.0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("distance matrices are Hermitian with classical moduli, any order") {
    Rng rng(81);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 4 + trial % 5;
        const auto g = with_random_gains(rng, random_connected_graph(rng, n, 0.5));
        std::vector<int> perm(n);
        for (int k = 0; k < n; ++k) perm[k] = k;
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto m = distance_matrices(g, VertexOrder(perm));
        const auto d = distances_bruteforce(g);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                CHECK(std::abs(m.dmax.at(i, j) - std::conj(m.dmax.at(j, i))) < 1e-12);
                CHECK(std::abs(std::abs(m.dmax.at(i, j)) - d[i][j]) < 1e-9);
                CHECK(std::abs(std::abs(m.dmin.at(i, j)) - d[i][j]) < 1e-9);
                CHECK(m.dmax.at(i, j).real() >= m.dmin.at(i, j).real() - 1e-12);
            }
        }
    }
}

TEST_CASE("order independence") {
    SUBCASE("signed gains are always order independent") {
        Rng rng(91);
        for (int trial = 0; trial < 15; ++trial) {
            const auto g = with_random_signs(rng, random_connected_graph(rng, 7, 0.5));
            CHECK(is_order_independent(g).independent);
        }
    }
    SUBCASE("conjugate-pair C4 is order dependent with witness") {
        const auto r = is_order_independent(c4_conjugate_pair());
        REQUIRE_FALSE(r.independent);
        CHECK(*r.witness_pair == std::pair<int, int>{0, 2});
        REQUIRE(r.witness_gains.size() == 2);
        CHECK(r.witness_gains[0].approx_equal(r.witness_gains[1].conj()));
    }
    SUBCASE("trees are order independent") {
        Rng rng(92);
        const auto tree = with_random_gains(
            rng, make_graph(5, {GainEdge{0, 1, one}, GainEdge{1, 2, one},
                                GainEdge{1, 3, one}, GainEdge{3, 4, one}}));
        CHECK(is_order_independent(tree).independent);
    }
}

TEST_CASE("order independence matches the standard-vs-reversed definition") {
    Rng rng(93);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + trial % 5;
        GainGraph g = [&] {
            const int kind = trial % 3;
            if (kind == 0) return with_random_gains(rng, random_connected_graph(rng, n, 0.5));
            if (kind == 1) return with_random_signs(rng, random_connected_graph(rng, n, 0.5));
            return planted_conjugate_pair(rng, n - 4);
        }();
        const auto std_m = distance_matrices(g, VertexOrder::standard(g.order()));
        const auto rev_m = distance_matrices(g, VertexOrder::reversed(g.order()));
        const bool by_definition = std_m.dmax.approx_equal(rev_m.dmax, 1e-9) &&
                                   std_m.dmin.approx_equal(rev_m.dmin, 1e-9);
        CHECK(is_order_independent(g).independent == by_definition);
    }
}

TEST_CASE("compatibility") {
    SUBCASE("balanced graphs are compatible") {
        Rng rng(94);
        for (int trial = 0; trial < 10; ++trial) {
            const auto g = random_balanced(rng, random_connected_graph(rng, 7, 0.5));
            const auto r = is_distance_compatible(g);
            CHECK(r.compatible);
            REQUIRE(r.distance_matrix.has_value());
        }
    }
    SUBCASE("C4 with one gain i is incompatible at the opposite pair") {
        const auto r = is_distance_compatible(c4_one_gain_i());
        REQUIRE_FALSE(r.compatible);
        CHECK(*r.witness_pair == std::pair<int, int>{0, 2});
        REQUIRE(r.witness_gains.size() == 2);
        CHECK(r.witness_gains[0].approx_equal(one));
        CHECK(r.witness_gains[1].approx_equal(iu));
    }
    SUBCASE("geodetic graphs are compatible whatever the gains") {
        Rng rng(95);
        const auto c5 = with_random_gains(
            rng, make_graph(5, {GainEdge{0, 1, one}, GainEdge{1, 2, one}, GainEdge{2, 3, one},
                                GainEdge{3, 4, one}, GainEdge{0, 4, one}}));
        CHECK(is_distance_compatible(c5).compatible);
    }
}

TEST_CASE("compatibility at the standard order extends to sampled orders") {
    Rng rng(96);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 4 + trial;
        const auto base = random_connected_graph(rng, n, 0.5);
        const auto g = (trial % 2 == 0) ? with_random_gains(rng, base)
                                        : random_balanced(rng, base);
        const auto std_m = distance_matrices(g, VertexOrder::standard(n));
        const bool std_eq = std_m.dmax.approx_equal(std_m.dmin, 1e-9);
        for (int sample = 0; sample < 20; ++sample) {
            std::vector<int> perm(n);
            for (int k = 0; k < n; ++k) perm[k] = k;
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto m = distance_matrices(g, VertexOrder(perm));
            CHECK(m.dmax.approx_equal(m.dmin, 1e-9) == std_eq);
        }
    }
}

TEST_CASE("classification") {
    CHECK(classify(all_ones_triangle()) == BalanceClass::A);
    CHECK(to_char(classify(all_ones_triangle())) == 'A');
    CHECK(classify(diamond_class_b()) == BalanceClass::B);
    CHECK(classify(c4_one_gain_i()) == BalanceClass::C);
    CHECK(classify(c4_conjugate_pair()) == BalanceClass::D);
}

TEST_CASE("diamond class B facts") {
    const auto g = diamond_class_b();
    CHECK_FALSE(is_balanced(g).balanced);
    CHECK_FALSE(is_antibalanced(g));
    CHECK_FALSE(is_geodetic(g));
    CHECK(is_order_independent(g).independent);
    CHECK(is_distance_compatible(g).compatible);
}

TEST_CASE("completions") {
    const auto std4 = VertexOrder::standard(4);
    SUBCASE("complete graphs come back unchanged") {
        const auto g = all_ones_triangle();
        const auto k = completion_max(g, VertexOrder::standard(3));
        CHECK(k.edge_count() == 3);
        for (const auto& e : k.edges()) CHECK(e.gain.approx_equal(one));
    }
    SUBCASE("P3 completes with the product gain") {
        const auto a = UnitGain::from_pi_fraction(1, 5);
        const auto b = UnitGain::from_pi_fraction(1, 7);
        const auto g = make_graph(3, {GainEdge{0, 1, a}, GainEdge{1, 2, b}});
        const auto k = completion_max(g, VertexOrder::standard(3));
        CHECK(k.gain(0, 2).approx_equal(a * b));
        const auto kmin = completion_min(g, VertexOrder::standard(3));
        CHECK(kmin.gain(0, 2).approx_equal(a * b));
    }
    SUBCASE("C4 with one gain i: max and min completions differ on the diagonal") {
        const auto g = c4_one_gain_i();
        const auto kmax = completion_max(g, std4);
        const auto kmin = completion_min(g, std4);
        CHECK(kmax.gain(0, 2).approx_equal(one));
        CHECK(kmin.gain(0, 2).approx_equal(iu));
        // original edges kept
        CHECK(kmax.gain(0, 1).approx_equal(iu));
        CHECK(kmin.gain(0, 1).approx_equal(iu));
        CHECK(kmax.edge_count() == 6);
    }
    SUBCASE("balanced graphs complete to balanced complete graphs") {
        Rng rng(97);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 4 + trial % 4;
            const auto g = random_balanced(rng, random_connected_graph(rng, n, 0.45));
            const auto k = completion_max(g, VertexOrder::standard(n));
            CHECK(is_balanced(k).balanced);
            CHECK(is_balanced_bruteforce(k));
            CHECK(is_distance_compatible(g).compatible);
        }
    }
}

TEST_CASE("switching preserves compatibility and the distance spectrum") {
    Rng rng(98);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4 + trial % 4;
        // compatible instances: balanced ones and geodetic odd cycles
        GainGraph g = (trial % 2 == 0)
                          ? random_balanced(rng, random_connected_graph(rng, n, 0.5))
                          : with_random_gains(
                                rng, make_graph(5, {GainEdge{0, 1, one}, GainEdge{1, 2, one},
                                                    GainEdge{2, 3, one}, GainEdge{3, 4, one},
                                                    GainEdge{0, 4, one}}));
        const auto before = is_distance_compatible(g);
        REQUIRE(before.compatible);
        const auto h = switched(g, random_switching(rng, g.order()));
        const auto after = is_distance_compatible(h);
        REQUIRE(after.compatible);
        const auto spec_g = eigenvalues_hermitian(*before.distance_matrix);
        const auto spec_h = eigenvalues_hermitian(*after.distance_matrix);
        for (std::size_t k = 0; k < spec_g.eigenvalues.size(); ++k) {
            CHECK(spec_g.eigenvalues[k] == doctest::Approx(spec_h.eigenvalues[k]).epsilon(1e-8));
        }
    }
}
