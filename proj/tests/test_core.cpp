#include "doctest.h"

#include <cmath>

#include "gainspec/core.hpp"
#include "gainspec/spectra.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gainspec;
using namespace gainspec::testing;

namespace {

GainGraph make_graph(int n, std::initializer_list<GainEdge> edges) {
    return GainGraph(n, std::vector<GainEdge>(edges));
}

const UnitGain one;
const UnitGain iu = UnitGain::from_pi_fraction(1, 2);

// C4 0-1-2-3-0 with gain i on the first edge.
GainGraph c4_one_gain_i() {
    return make_graph(4, {GainEdge{0, 1, iu}, GainEdge{1, 2, one}, GainEdge{2, 3, one},
                          GainEdge{0, 3, one}});
}

}  // namespace

TEST_CASE("unit gain construction and equality") {
    CHECK_THROWS_AS(UnitGain(Complex(1.0 + 1e-6, 0.0)), Error);
    CHECK_THROWS_AS(UnitGain(Complex(0.0, 0.0)), Error);
    CHECK_NOTHROW(UnitGain(Complex(1.0, 0.0)));
    // looser admission normalizes
    const UnitGain g = UnitGain::normalized(Complex(1.0 + 1e-7, 0.0), 1e-6);
    CHECK(std::abs(std::abs(g.value()) - 1.0) <= 1e-15);
    CHECK(UnitGain::from_pi_fraction(1, 2).approx_equal(UnitGain(Complex(0.0, 1.0))));
    CHECK_FALSE(one.approx_equal(iu));
}

TEST_CASE("graph model rejects loops, duplicates, bad ids") {
    CHECK_THROWS_AS(make_graph(2, {GainEdge{0, 0, one}}), Error);
    CHECK_THROWS_AS(make_graph(2, {GainEdge{0, 1, one}, GainEdge{1, 0, one}}), Error);
    CHECK_THROWS_AS(make_graph(2, {GainEdge{0, 2, one}}), DimensionError);
}

TEST_CASE("gain accessor conjugates the reverse orientation") {
    const auto g = make_graph(2, {GainEdge{1, 0, iu}});  // stored as 0 -> 1 conjugated
    CHECK(g.gain(1, 0).approx_equal(iu));
    CHECK(g.gain(0, 1).approx_equal(iu.conj()));
    CHECK_THROWS_AS(g.gain(0, 0), InvalidPathError);
}

TEST_CASE("adjacency matrix examples") {
    SUBCASE("single edge gain 1") {
        const auto a = adjacency(make_graph(2, {GainEdge{0, 1, one}}));
        CHECK(a.at(0, 1) == Complex(1.0, 0.0));
        CHECK(a.at(1, 0) == Complex(1.0, 0.0));
        CHECK(a.at(0, 0) == Complex(0.0, 0.0));
    }
    SUBCASE("single edge gain i forces conjugate symmetry") {
        const auto a = adjacency(make_graph(2, {GainEdge{0, 1, iu}}));
        CHECK(std::abs(a.at(0, 1) - Complex(0.0, 1.0)) < 1e-15);
        CHECK(std::abs(a.at(1, 0) - Complex(0.0, -1.0)) < 1e-15);
    }
    SUBCASE("triangle with gains i, i, -1") {
        // gain given on 3 -> 1, stored on 1 -> 3 as conj(-1) = -1
        const auto g = make_graph(3, {GainEdge{0, 1, iu}, GainEdge{1, 2, iu},
                                      GainEdge{2, 0, -one}});
        const auto a = adjacency(g);
        CHECK(std::abs(a.at(0, 1) - Complex(0.0, 1.0)) < 1e-15);
        CHECK(std::abs(a.at(1, 2) - Complex(0.0, 1.0)) < 1e-15);
        CHECK(std::abs(a.at(0, 2) - Complex(-1.0, 0.0)) < 1e-15);
    }
}

TEST_CASE("switching examples") {
    const auto g = make_graph(2, {GainEdge{0, 1, iu}});
    SUBCASE("identity switching changes nothing") {
        const auto h = switched(g, SwitchingFunction::identity(2));
        CHECK(h.gain(0, 1).approx_equal(iu));
    }
    SUBCASE("direct product") {
        const auto h = switched(g, SwitchingFunction({one, -iu}));  // zeta = (1, -i)
        CHECK(h.gain(0, 1).approx_equal(one));
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(switched(g, SwitchingFunction::identity(3)), DimensionError);
    }
}

TEST_CASE("inverse switching restores the graph") {
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = with_random_gains(rng, random_connected_graph(rng, 7, 0.5));
        const auto zeta = random_switching(rng, 7);
        const auto back = switched(switched(g, zeta), zeta.conjugated());
        for (int idx = 0; idx < g.edge_count(); ++idx) {
            CHECK(back.edges()[idx].gain.approx_equal(g.edges()[idx].gain));
        }
    }
}

TEST_CASE("path gain examples") {
    const auto eighth = UnitGain::from_pi_fraction(1, 4);
    const auto g = make_graph(3, {GainEdge{0, 1, eighth}, GainEdge{1, 2, eighth}});
    const std::vector<int> forward{0, 1, 2};
    const std::vector<int> backward{2, 1, 0};
    CHECK(path_gain(g, forward).approx_equal(iu));
    CHECK(path_gain(g, backward).approx_equal(iu.conj()));
    const std::vector<int> single{0, 1};
    CHECK(path_gain(g, single).approx_equal(eighth));
    const std::vector<int> bad{0, 2};
    CHECK_THROWS_AS(path_gain(g, bad), InvalidPathError);
    CHECK_THROWS_AS(path_gain(g, std::vector<int>{}), InvalidPathError);
}

TEST_CASE("closed walk times its reversal is neutral") {
    Rng rng(707);
    const auto g = with_random_gains(rng, random_connected_graph(rng, 6, 0.6));
    const auto cycles = simple_cycles_bruteforce(g);
    REQUIRE(!cycles.empty());
    for (const auto& c : cycles) {
        std::vector<int> walk = c;
        walk.push_back(c.front());  // close it
        std::vector<int> reversed(walk.rbegin(), walk.rend());
        CHECK((path_gain(g, walk) * path_gain(g, reversed)).approx_equal(one));
    }
}

TEST_CASE("balance examples") {
    SUBCASE("all-ones triangle") {
        const auto g = make_graph(3, {GainEdge{0, 1, one}, GainEdge{1, 2, one},
                                      GainEdge{0, 2, one}});
        const auto r = is_balanced(g);
        REQUIRE(r.balanced);
        for (const auto& z : r.switching->values()) CHECK(z.approx_equal(one));
    }
    SUBCASE("C4 with one gain i is unbalanced with imaginary certificate") {
        const auto r = is_balanced(c4_one_gain_i());
        REQUIRE_FALSE(r.balanced);
        CHECK(r.certificate_cycle.size() == 4);
        CHECK(std::abs(std::abs(r.certificate_gain.im()) - 1.0) < 1e-12);
    }
    SUBCASE("triangle i, i, -1 is balanced") {
        const auto g = make_graph(3, {GainEdge{0, 1, iu}, GainEdge{1, 2, iu},
                                      GainEdge{2, 0, -one}});
        CHECK(is_balanced(g).balanced);
        CHECK(is_balanced_bruteforce(g));
    }
    SUBCASE("disconnected input is rejected") {
        const auto g = make_graph(4, {GainEdge{0, 1, one}, GainEdge{2, 3, one}});
        CHECK_THROWS_AS(is_balanced(g), ConnectivityError);
    }
    SUBCASE("trees are balanced and anti-balanced") {
        const auto g = make_graph(4, {GainEdge{0, 1, iu}, GainEdge{1, 2, iu},
                                      GainEdge{1, 3, -one}});
        CHECK(is_balanced(g).balanced);
        CHECK(is_antibalanced(g));
    }
}

TEST_CASE("balance switching certificate yields all-ones gains") {
    Rng rng(202);
    for (int trial = 0; trial < 25; ++trial) {
        const auto base = random_connected_graph(rng, 3 + trial % 6, 0.55);
        const auto g = random_balanced(rng, base);
        const auto r = is_balanced(g);
        REQUIRE(r.balanced);
        const auto a = adjacency(switched(g, *r.switching));
        for (int i = 0; i < a.order(); ++i) {
            for (int j = 0; j < a.order(); ++j) {
                const double re = a.at(i, j).real();
                CHECK(std::abs(a.at(i, j).imag()) <= kGainEps);
                CHECK((std::abs(re) <= kGainEps || std::abs(re - 1.0) <= kGainEps));
            }
        }
    }
}

TEST_CASE("balance agrees with the exhaustive cycle oracle") {
    Rng rng(303);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + trial % 6;  // up to 8
        const auto base = random_connected_graph(rng, n, 0.5);
        const auto g = (trial % 3 == 0) ? random_balanced(rng, base)
                                        : with_random_gains(rng, base);
        CHECK(is_balanced(g).balanced == is_balanced_bruteforce(g));
        CHECK(is_antibalanced(g) == is_antibalanced_bruteforce(g));
    }
}

TEST_CASE("anti-balance examples") {
    const auto minus = -one;
    SUBCASE("triangle with cycle gain -1") {
        const auto g = make_graph(3, {GainEdge{0, 1, minus}, GainEdge{1, 2, one},
                                      GainEdge{0, 2, one}});
        CHECK_FALSE(is_balanced(g).balanced);
        CHECK(is_antibalanced(g));
    }
    SUBCASE("all-ones triangle is not anti-balanced") {
        const auto g = make_graph(3, {GainEdge{0, 1, one}, GainEdge{1, 2, one},
                                      GainEdge{0, 2, one}});
        CHECK_FALSE(is_antibalanced(g));
    }
}

TEST_CASE("switching equivalence") {
    Rng rng(404);
    SUBCASE("a graph is equivalent to any switching of itself") {
        const auto g = with_random_gains(rng, random_connected_graph(rng, 7, 0.5));
        const auto h = switched(g, random_switching(rng, 7));
        CHECK(switching_equivalent(g, h));
    }
    SUBCASE("all-ones C4 differs from C4 with one gain i") {
        const auto c4 = make_graph(4, {GainEdge{0, 1, one}, GainEdge{1, 2, one},
                                       GainEdge{2, 3, one}, GainEdge{0, 3, one}});
        CHECK_FALSE(switching_equivalent(c4, c4_one_gain_i()));
    }
    SUBCASE("same cycle gain on different edges is equivalent") {
        const auto third = UnitGain::from_pi_fraction(1, 3);
        const auto g1 = make_graph(4, {GainEdge{0, 1, third}, GainEdge{1, 2, one},
                                       GainEdge{2, 3, one}, GainEdge{0, 3, one}});
        const auto g2 = make_graph(4, {GainEdge{0, 1, one}, GainEdge{1, 2, third},
                                       GainEdge{2, 3, one}, GainEdge{0, 3, one}});
        CHECK(switching_equivalent(g1, g2));
    }
    SUBCASE("different underlying graphs are rejected") {
        const auto p2 = make_graph(3, {GainEdge{0, 1, one}});
        const auto p2b = make_graph(3, {GainEdge{1, 2, one}});
        CHECK_THROWS_AS(switching_equivalent(p2, p2b), MismatchError);
    }
}

TEST_CASE("hermitian matrix type validates input") {
    CHECK_THROWS_AS(HermitianMatrix(2, {Complex(0, 0), Complex(1, 0), Complex(2, 0),
                                        Complex(0, 0)}),
                    NumericalError);
    CHECK_THROWS_AS(HermitianMatrix(2, {Complex(0, 1), Complex(1, 0), Complex(1, 0),
                                        Complex(0, 0)}),
                    NumericalError);  // complex diagonal
    CHECK_NOTHROW(HermitianMatrix(2, {Complex(1, 0), Complex(0, 1), Complex(0, -1),
                                      Complex(2, 0)}));
}
