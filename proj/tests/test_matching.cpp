#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pdgm/matching.hpp"
#include "pdgm/random.hpp"

using namespace pdgm;
using namespace pdgm::testing;

TEST_CASE("bottleneck basics") {
    const auto [zero, id_matching] = bottleneck(fig1(), fig1());
    CHECK(zero.is_zero());
    CHECK(is_valid_matching(fig1(), fig1(), id_matching));
    CHECK(matching_cost(fig1(), fig1(), id_matching).is_zero());

    CHECK(bottleneck(crossing_left(), crossing_right()).first == q(1));
    // a single short bar: sending both points to the diagonal beats the
    // direct match of cost 7/8
    CHECK(bottleneck(dgm({{q(0), q(1)}}), dgm({{q(0), q(1, 8)}})).first == q(1, 2));
    CHECK(bottleneck(PersistenceDiagram{}, PersistenceDiagram{}).first.is_zero());
    CHECK(bottleneck(PersistenceDiagram{}, fig1()).first == q(3));
}

TEST_CASE("bottleneck witnesses are valid and realize the distance") {
    Sampler rng(31);
    for (int i = 0; i < 200; ++i) {
        const PersistenceDiagram a = rng.diagram(6), b = rng.diagram(6);
        const auto [dist, witness] = bottleneck(a, b);
        CHECK(is_valid_matching(a, b, witness));
        CHECK(matching_cost(a, b, witness) == dist);
        CHECK(witness.cost == dist);
    }
}

TEST_CASE("bottleneck equals exhaustive enumeration") {
    Sampler rng(32);
    CHECK(oracle::bottleneck_bruteforce(fig1(), fig1()).is_zero());
    CHECK(oracle::bottleneck_bruteforce(crossing_left(), crossing_right()) == q(1));
    for (int i = 0; i < 300; ++i) {
        PersistenceDiagram a, b;
        do {
            a = rng.diagram(5);
            b = rng.diagram(5);
        } while (a.total_points() + b.total_points() > 12);
        INFO("left:\n" << oracle::diagram_text(a) << "right:\n" << oracle::diagram_text(b));
        CHECK(bottleneck(a, b).first == oracle::bottleneck_bruteforce(a, b));
    }
    PersistenceDiagram big;
    for (long i = 0; i < 13; ++i) big.add({q(i), q(i + 1)});
    CHECK_THROWS_AS(oracle::bottleneck_bruteforce(big, PersistenceDiagram{}), std::invalid_argument);
}

TEST_CASE("matching validity is a partition check") {
    const PersistenceDiagram a = dgm({{q(0), q(4)}});
    const PersistenceDiagram b = dgm({{q(2), q(6)}});
    PartialMatching m;
    m.matched = {{0, 0}};
    CHECK(is_valid_matching(a, b, m));
    m.unmatched_left = {0};  // index 0 used twice
    CHECK_FALSE(is_valid_matching(a, b, m));
    m.unmatched_left = {};
    m.matched = {};
    CHECK_FALSE(is_valid_matching(a, b, m));  // nothing covered
    m.unmatched_left = {0};
    m.unmatched_right = {0};
    CHECK(is_valid_matching(a, b, m));
    m.unmatched_right = {7};
    CHECK_FALSE(is_valid_matching(a, b, m));
}

TEST_CASE("interpolation endpoints and midpoint") {
    const PersistenceDiagram a = dgm({{q(0), q(4)}});
    const PersistenceDiagram b = dgm({{q(2), q(6)}});
    PartialMatching m;
    m.matched = {{0, 0}};
    CHECK(interpolate_matched(a, b, m, q(0)) == a);
    CHECK(interpolate_matched(a, b, m, q(1)) == b);
    CHECK(interpolate_matched(a, b, m, q(1, 2)) == dgm({{q(1), q(5)}}));
    CHECK_THROWS_AS(interpolate_matched(a, b, m, q(2)), std::invalid_argument);
    CHECK_THROWS_AS(interpolate_matched(a, b, m, q(-1, 2)), std::invalid_argument);

    PartialMatching bad;
    CHECK_THROWS_AS(interpolate_matched(a, b, bad, q(1, 2)), std::invalid_argument);
}

TEST_CASE("interpolation drops points exactly on the diagonal") {
    const PersistenceDiagram a = dgm({{q(0), q(4)}});
    const PersistenceDiagram b = dgm({{q(6), q(8)}});
    PartialMatching m;
    m.unmatched_left = {0};
    m.unmatched_right = {0};
    // the left point shrinks onto (2,2) and disappears only at t = 1; the
    // right point grows out of (7,7) and is absent only at t = 0
    CHECK(interpolate_matched(a, b, m, q(0)) == a);
    CHECK(interpolate_matched(a, b, m, q(1)) == b);
    CHECK(interpolate_matched(a, b, m, q(1, 2)) == dgm({{q(1), q(3)}, {q(13, 2), q(15, 2)}}));

    Sampler rng(33);
    for (int i = 0; i < 100; ++i) {
        const PersistenceDiagram y = rng.diagram(5), z = rng.diagram(5);
        const auto witness = bottleneck(y, z).second;
        CHECK(interpolate_matched(y, z, witness, q(0)) == y);
        CHECK(interpolate_matched(y, z, witness, q(1)) == z);
    }
}
