#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pdgm/metrics.hpp"
#include "pdgm/random.hpp"

using namespace pdgm;
using namespace pdgm::testing;

TEST_CASE("erosion distance via landscapes") {
    CHECK(erosion(fig1(), fig1()).is_zero());
    CHECK(erosion(crossing_left(), crossing_right()) == q(1));
    CHECK(erosion(fig1(), PersistenceDiagram{}) == q(3));  // tallest tent peak
    CHECK(landscape_distance(fig1(), PersistenceDiagram{}) == q(3));
}

TEST_CASE("erosion against the empty diagram is the tallest half-persistence") {
    Sampler rng(40);
    for (int i = 0; i < 100; ++i) {
        const PersistenceDiagram y = rng.nonempty_diagram(8);
        Rational tallest(0);
        for (const auto& e : y.entries()) tallest = std::max(tallest, e.pair.persistence().half());
        CHECK(erosion(y, PersistenceDiagram{}) == tallest);
    }
}

TEST_CASE("both distances satisfy the pseudometric axioms exactly") {
    Sampler rng(47);
    for (int i = 0; i < 60; ++i) {
        const PersistenceDiagram a = rng.diagram(5), b = rng.diagram(5), c = rng.diagram(5);
        CHECK(erosion(a, a).is_zero());
        CHECK(bottleneck(a, a).first.is_zero());
        CHECK(erosion(a, b) == erosion(b, a));
        CHECK(bottleneck(a, b).first == bottleneck(b, a).first);
        CHECK(erosion(a, c) <= erosion(a, b) + erosion(b, c));
        CHECK(bottleneck(a, c).first <= bottleneck(a, b).first + bottleneck(b, c).first);
    }
}

TEST_CASE("rank-route bisection brackets the erosion distance") {
    const Rational tol(1, 1 << 20);
    const ErosionBracket same = erosion_direct(fig1(), fig1(), tol);
    CHECK(same.lo.is_zero());
    CHECK(same.hi.is_zero());

    const ErosionBracket cross = erosion_direct(crossing_left(), crossing_right(), tol);
    CHECK(cross.contains(q(1)));
    CHECK(cross.hi - cross.lo <= tol);
    CHECK_THROWS_AS(erosion_direct(fig1(), fig1(), q(0)), std::invalid_argument);

    Sampler rng(41);
    for (int i = 0; i < 150; ++i) {
        const PersistenceDiagram a = rng.diagram(8), b = rng.diagram(8);
        const ErosionBracket bracket = erosion_direct(a, b, tol);
        INFO("left:\n" << oracle::diagram_text(a) << "right:\n" << oracle::diagram_text(b));
        CHECK(bracket.hi - bracket.lo <= tol);
        CHECK(bracket.contains(erosion(a, b)));
    }
}

TEST_CASE("birth-zero closed form") {
    CHECK(birthzero_distance(dgm({{q(0), q(1)}}), dgm({{q(0), q(1, 8)}})) == q(1, 2));
    const PersistenceDiagram same = dgm({{q(0), q(4)}, {q(0), q(2)}});
    CHECK(birthzero_distance(same, same).is_zero());
    CHECK(birthzero_distance(same, PersistenceDiagram{}) == q(2));
    CHECK_THROWS_AS(birthzero_distance(fig1(), same), std::invalid_argument);

    Sampler rng(42);
    for (int i = 0; i < 200; ++i) {
        const PersistenceDiagram a = rng.birth_zero_diagram(6), b = rng.birth_zero_diagram(6);
        const Rational closed = birthzero_distance(a, b);
        CHECK(closed == bottleneck(a, b).first);
        CHECK(closed == erosion(a, b));
    }
}

TEST_CASE("death vectorization and its distance") {
    CHECK(death_vectorization(PersistenceDiagram{}).entries().empty());
    PersistenceDiagram y;
    y.add({q(0), q(3)});
    y.add({q(0), q(5)}, 2);
    CHECK(death_vectorization(y).entries() == std::vector<Rational>{q(5), q(5), q(3)});
    CHECK(diagram_from_death_vector(death_vectorization(y)) == y);
    CHECK_THROWS_AS(death_vectorization(fig1()), std::invalid_argument);
    CHECK_THROWS_AS(DeathVector({q(1), q(2)}), std::invalid_argument);
    CHECK_THROWS_AS(DeathVector({q(2), q(0)}), std::invalid_argument);

    const DeathVector u = death_vectorization(dgm({{q(0), q(1)}}));
    const DeathVector v = death_vectorization(dgm({{q(0), q(1, 8)}}));
    CHECK(dv_distance(u, u).is_zero());
    CHECK(dv_distance(u, v) == q(7, 8));

    Sampler rng(43);
    for (int i = 0; i < 300; ++i) {
        const PersistenceDiagram a = rng.birth_zero_diagram(6), b = rng.birth_zero_diagram(6);
        const Rational d = birthzero_distance(a, b);
        const Rational dv = dv_distance(death_vectorization(a), death_vectorization(b));
        CHECK(d <= dv);
        CHECK(dv <= d + d);
        CHECK(diagram_from_death_vector(death_vectorization(a)) == a);
    }
}

TEST_CASE("finite metrics are validated with the violated axiom named") {
    using Catch = std::invalid_argument;
    CHECK_THROWS_WITH_AS(FiniteMetric::from_matrix(2, {q(0), q(1), q(2), q(0)}),
                         doctest::Contains("symmetry"), Catch);
    CHECK_THROWS_WITH_AS(FiniteMetric::from_matrix(1, {q(1)}), doctest::Contains("zero diagonal"), Catch);
    CHECK_THROWS_WITH_AS(FiniteMetric::from_matrix(2, {q(0), q(0), q(0), q(0)}),
                         doctest::Contains("positivity"), Catch);
    CHECK_THROWS_WITH_AS(
        FiniteMetric::from_matrix(3, {q(0), q(1), q(5), q(1), q(0), q(1), q(5), q(1), q(0)}),
        doctest::Contains("triangle"), Catch);
    CHECK_THROWS_AS(FiniteMetric::from_matrix(2, {q(0), q(1)}), Catch);
}

TEST_CASE("metric embedding is an exact isometry") {
    const auto one = embed_finite_metric(FiniteMetric::from_matrix(1, {q(0)}));
    CHECK(one.size() == 1);
    CHECK(one[0].all_births_zero());

    const auto two = embed_finite_metric(FiniteMetric::from_matrix(2, {q(0), q(3), q(3), q(0)}));
    REQUIRE(two.size() == 2);
    CHECK(birthzero_distance(two[0], two[1]) == q(3));

    Sampler rng(44);
    for (int i = 0; i < 50; ++i) {
        const FiniteMetric m = rng.metric(6);
        const auto diagrams = embed_finite_metric(m);
        REQUIRE(diagrams.size() == m.size());
        for (std::size_t a = 0; a < diagrams.size(); ++a)
            for (std::size_t b = a + 1; b < diagrams.size(); ++b)
                CHECK(birthzero_distance(diagrams[a], diagrams[b]) == m.at(a, b));
    }
}

TEST_CASE("erosion path length") {
    const PersistenceDiagram a = crossing_left(), b = crossing_right();
    CHECK(erosion_path_length(a, b, 1) == erosion(a, b));
    CHECK(erosion_path_length(a, b, 64) == q(1));
    CHECK_THROWS_AS(erosion_path_length(a, b, 0), std::invalid_argument);

    Sampler rng(45);
    for (int i = 0; i < 15; ++i) {
        const PersistenceDiagram y = rng.diagram(4), z = rng.diagram(4);
        Rational prev = erosion_path_length(y, z, 1);
        CHECK(prev == erosion(y, z));
        const Rational upper = bottleneck(y, z).first;
        for (unsigned segs = 2; segs <= 64; segs *= 2) {
            const Rational len = erosion_path_length(y, z, segs);
            CHECK(prev <= len);
            CHECK(len <= upper);
            prev = len;
        }
    }
}

TEST_CASE("the gap witness separates erosion from bottleneck") {
    const GapWitness w = gap_example();
    CHECK(w.bottleneck_value == q(1));
    CHECK(w.erosion_value == q(1, 2));
    CHECK(w.erosion_value < w.bottleneck_value);
    // verified by both independent routes
    CHECK(oracle::bottleneck_bruteforce(w.left, w.right) == q(1));
    CHECK(erosion_direct(w.left, w.right, q(1, 1 << 20)).contains(q(1, 2)));
    CHECK(erosion_feasible(w.left, w.right, q(1, 2)));
    CHECK_FALSE(erosion_feasible(w.left, w.right, q(1, 2) - q(1, 64)));
}

TEST_CASE("erosion never exceeds bottleneck") {
    Sampler rng(46);
    for (int i = 0; i < 200; ++i) {
        const PersistenceDiagram a = rng.diagram(6), b = rng.diagram(6);
        INFO("left:\n" << oracle::diagram_text(a) << "right:\n" << oracle::diagram_text(b));
        CHECK(erosion(a, b) <= bottleneck(a, b).first);
    }
}

TEST_CASE("box-band neighborhood membership") {
    const PersistenceDiagram y = dgm({{q(0), q(4)}});
    CHECK(in_box_band_neighborhood(y, dgm({{q(1, 4), q(17, 4)}}), q(1, 2)));
    CHECK_FALSE(in_box_band_neighborhood(y, dgm({{q(1), q(5)}}), q(1, 2)));
    // extra points are fine inside the band, fatal outside
    CHECK(in_box_band_neighborhood(y, dgm({{q(0), q(4)}, {q(10), q(21, 2)}}), q(1, 2)));
    CHECK_FALSE(in_box_band_neighborhood(y, dgm({{q(0), q(4)}, {q(10), q(14)}}), q(1, 2)));
    CHECK_THROWS_AS(in_box_band_neighborhood(y, y, q(0)), std::invalid_argument);
}
