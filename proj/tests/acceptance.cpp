// Acceptance suite: one check per shipped guarantee, each printed as a
// PASS/FAIL line. Everything is exact rational arithmetic; every comparison
// below is equality or containment, never approximate.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pdgm/diagram.hpp"
#include "pdgm/landscape.hpp"
#include "pdgm/matching.hpp"
#include "pdgm/metrics.hpp"
#include "pdgm/random.hpp"

using namespace pdgm;

namespace {

constexpr std::uint64_t kSeed = 20250809;

struct Check {
    int id;
    const char* title;
    std::function<bool(std::ostream&)> run;
};

PersistenceDiagram fig1() {
    PersistenceDiagram d;
    d.add({Rational(1), Rational(7)});
    d.add({Rational(3), Rational(8)});
    d.add({Rational(2), Rational(5)}, 2);
    d.add({Rational(9), Rational(10)});
    return d;
}

PersistenceDiagram crossing_left() {
    PersistenceDiagram d;
    d.add({Rational(0), Rational(10)});
    d.add({Rational(1), Rational(11)});
    return d;
}

PersistenceDiagram crossing_right() {
    PersistenceDiagram d;
    d.add({Rational(0), Rational(11)});
    d.add({Rational(1), Rational(10)});
    return d;
}

bool complain(std::ostream& log, const char* what, const PersistenceDiagram& a,
              const PersistenceDiagram& b) {
    log << what << "\nfirst diagram:\n"
        << oracle::diagram_text(a) << "second diagram:\n"
        << oracle::diagram_text(b);
    return false;
}

// 1. The landscape-route erosion lies inside the rank-route bisection bracket.
bool check_route_agreement(std::ostream& log) {
    Sampler rng(kSeed);
    const Rational tol(1, 1 << 20);
    for (int i = 0; i < 1000; ++i) {
        const PersistenceDiagram a = rng.diagram(8), b = rng.diagram(8);
        const Rational via_landscapes = erosion(a, b);
        const ErosionBracket bracket = erosion_direct(a, b, tol);
        if (tol < bracket.hi - bracket.lo) return complain(log, "bracket too wide", a, b);
        if (!bracket.contains(via_landscapes))
            return complain(log, "landscape-route erosion escapes the rank-route bracket", a, b);
    }
    return true;
}

// 2. Both inversions recover the diagram from its landscape; the worked
// example has exactly four nonzero curves.
bool check_round_trip(std::ostream& log) {
    Sampler rng(kSeed + 1);
    for (int i = 0; i < 1000; ++i) {
        const PersistenceDiagram y = rng.diagram(8);
        const LandscapeSequence lam = build_landscape(y);
        if (invert_by_degree(lam) != y) return complain(log, "degree inversion failed", y, y);
        if (invert_by_peeling(lam) != y) return complain(log, "peeling inversion failed", y, y);
    }
    const LandscapeSequence golden = build_landscape(fig1());
    if (golden.depth() != 4) {
        log << "expected exactly 4 nonzero curves, got " << golden.depth() << "\n";
        return false;
    }
    return invert_by_degree(golden) == fig1() && invert_by_peeling(golden) == fig1();
}

// 3. The landscape is the direct sum of its tents, exactly.
bool check_decomposition(std::ostream& log) {
    Sampler rng(kSeed + 2);
    auto tent_sum = [](const PersistenceDiagram& y) {
        LandscapeSequence sum;
        for (const auto& e : y.entries())
            for (std::int64_t m = 0; m < e.multiplicity; ++m)
                sum = direct_sum(sum,
                                 LandscapeSequence::from_curves_unchecked({tent(e.pair.birth, e.pair.death)}));
        return sum;
    };
    for (int i = 0; i < 1000; ++i) {
        const PersistenceDiagram y = rng.diagram(8);
        if (tent_sum(y) != build_landscape(y)) return complain(log, "tent decomposition failed", y, y);
    }
    return tent_sum(fig1()) == build_landscape(fig1());
}

// 4. Coflow laws on both sides and equivariance between them.
bool check_coflows(std::ostream& log) {
    Sampler rng(kSeed + 3);
    for (int i = 0; i < 500; ++i) {
        const PersistenceDiagram y = rng.diagram(8);
        const Rational e1 = rng.dyadic(4, 3), e2 = rng.dyadic(4, 3);
        if (shrink_diagram(y, Rational(0)) != y) return complain(log, "shrink(., 0) != id", y, y);
        if (!diagram_leq(shrink_diagram(y, e1), y)) return complain(log, "shrink not dominated", y, y);
        if (shrink_diagram(shrink_diagram(y, e2), e1) != shrink_diagram(y, e1 + e2))
            return complain(log, "shrink not additive", y, y);
        const LandscapeSequence lam = build_landscape(y);
        if (flow(lam, Rational(0)) != lam) return complain(log, "flow(., 0) != id", y, y);
        if (!landscape_leq(flow(lam, e1), lam)) return complain(log, "flow not dominated", y, y);
        if (flow(flow(lam, e2), e1) != flow(lam, e1 + e2)) return complain(log, "flow not additive", y, y);
        if (build_landscape(shrink_diagram(y, e1)) != flow(lam, e1))
            return complain(log, "equivariance failed", y, shrink_diagram(y, e1));
    }
    return true;
}

// 5. The diagram order and the landscape order agree, both directions.
bool check_order_preservation(std::ostream& log) {
    Sampler rng(kSeed + 4);
    for (int i = 0; i < 500; ++i) {
        const PersistenceDiagram y = rng.diagram(6);
        const PersistenceDiagram z = (i % 2 == 0) ? rng.diagram(6) : shrink_diagram(y, rng.dyadic(4, 3));
        const LandscapeSequence ly = build_landscape(y), lz = build_landscape(z);
        if (diagram_leq(z, y) != landscape_leq(lz, ly)) return complain(log, "order mismatch", z, y);
        if (diagram_leq(y, z) != landscape_leq(ly, lz)) return complain(log, "order mismatch", y, z);
    }
    return true;
}

// 6. Erosion never exceeds bottleneck; the gap witness separates them with
// d_B = 1 and erosion = 1/2, certified by both independent oracles.
bool check_gap(std::ostream& log) {
    Sampler rng(kSeed + 5);
    for (int i = 0; i < 500; ++i) {
        const PersistenceDiagram a = rng.diagram(6), b = rng.diagram(6);
        if (bottleneck(a, b).first < erosion(a, b)) return complain(log, "erosion exceeds bottleneck", a, b);
    }
    const GapWitness w = gap_example();
    if (w.bottleneck_value != Rational(1) || w.erosion_value != Rational(1, 2)) {
        log << "witness values: bottleneck " << w.bottleneck_value << ", erosion " << w.erosion_value
            << "\n";
        return false;
    }
    if (oracle::bottleneck_bruteforce(w.left, w.right) != Rational(1))
        return complain(log, "enumeration oracle disagrees on d_B", w.left, w.right);
    if (!erosion_direct(w.left, w.right, Rational(1, 1 << 20)).contains(Rational(1, 2)))
        return complain(log, "rank-route oracle disagrees on erosion", w.left, w.right);
    return w.erosion_value < w.bottleneck_value;
}

// 7. Inside the local radius the two distances coincide, and the three
// descriptions of the open ball (bottleneck, erosion, box-band) agree.
bool check_local_isometry(std::ostream& log) {
    Sampler rng(kSeed + 6);
    for (int i = 0; i < 200; ++i) {
        const PersistenceDiagram y = rng.nonempty_diagram(5);
        const Rational r = local_radius(y);
        const PersistenceDiagram inside = rng.perturb_within(y, r);
        if (bottleneck(y, inside).first != erosion(y, inside))
            return complain(log, "bottleneck != erosion inside the local radius", y, inside);

        PersistenceDiagram outside = inside;
        Rational top(0);
        for (const auto& e : y.entries()) top = std::max(top, e.pair.death);
        const Rational far_birth = top + r + Rational(1);
        outside.add({far_birth, far_birth + std::max(Rational(4), r + r + r + r)});

        for (const PersistenceDiagram* z : {&inside, static_cast<const PersistenceDiagram*>(&outside)}) {
            const bool in_bottleneck = bottleneck(y, *z).first < r;
            const bool in_erosion = erosion(y, *z) < r;
            const bool in_box_band = in_box_band_neighborhood(y, *z, r);
            if (in_bottleneck != in_erosion || in_erosion != in_box_band)
                return complain(log, "open ball memberships disagree", y, *z);
        }
        if (!in_box_band_neighborhood(y, inside, r))
            return complain(log, "constructed perturbation left the neighborhood", y, inside);
        if (in_box_band_neighborhood(y, outside, r))
            return complain(log, "far point stayed inside the neighborhood", y, outside);
    }
    return true;
}

// 8. On birth-zero diagrams the closed form equals both distances, and the
// death-vector distance is squeezed between d and 2d; the small worked pair
// realizes d = 1/2, dv = 7/8.
bool check_birth_zero(std::ostream& log) {
    Sampler rng(kSeed + 7);
    for (int i = 0; i < 500; ++i) {
        const PersistenceDiagram a = rng.birth_zero_diagram(6), b = rng.birth_zero_diagram(6);
        const Rational d = birthzero_distance(a, b);
        if (d != bottleneck(a, b).first) return complain(log, "closed form != bottleneck", a, b);
        if (d != erosion(a, b)) return complain(log, "closed form != erosion", a, b);
        const Rational dv = dv_distance(death_vectorization(a), death_vectorization(b));
        if (dv < d || d + d < dv) return complain(log, "death-vector sandwich failed", a, b);
    }
    PersistenceDiagram unit, eighth;
    unit.add({Rational(0), Rational(1)});
    eighth.add({Rational(0), Rational(1, 8)});
    const Rational d = birthzero_distance(unit, eighth);
    const Rational dv = dv_distance(death_vectorization(unit), death_vectorization(eighth));
    if (d != Rational(1, 2) || dv != Rational(7, 8)) {
        log << "tightness pair gave d = " << d << ", dv = " << dv << "\n";
        return false;
    }
    return true;
}

// 9. Finite metric spaces embed with exact pairwise distances.
bool check_embedding(std::ostream& log) {
    Sampler rng(kSeed + 8);
    for (int i = 0; i < 100; ++i) {
        const FiniteMetric m = rng.metric(6);
        const auto diagrams = embed_finite_metric(m);
        for (std::size_t a = 0; a < diagrams.size(); ++a)
            for (std::size_t b = a + 1; b < diagrams.size(); ++b)
                if (birthzero_distance(diagrams[a], diagrams[b]) != m.at(a, b))
                    return complain(log, "embedding distorted a distance", diagrams[a], diagrams[b]);
    }
    return true;
}

// 10. Along the matched path between the crossing pair, summed erosion reaches
// the bottleneck distance exactly and refinement never shrinks it.
bool check_intrinsic_path(std::ostream& log) {
    const PersistenceDiagram a = crossing_left(), b = crossing_right();
    const Rational d_b = bottleneck(a, b).first;
    Rational prev = erosion_path_length(a, b, 1);
    for (unsigned segs = 2; segs <= 64; segs *= 2) {
        const Rational len = erosion_path_length(a, b, segs);
        if (len < prev) {
            log << "length shrank from " << prev << " to " << len << " at " << segs << " segments\n";
            return false;
        }
        prev = len;
    }
    if (prev != d_b || d_b != Rational(1)) {
        log << "64-segment length " << prev << " vs bottleneck " << d_b << "\n";
        return false;
    }
    return true;
}

// 11. The polynomial-time bottleneck equals exhaustive enumeration.
bool check_bottleneck_vs_bruteforce(std::ostream& log) {
    Sampler rng(kSeed + 9);
    for (int i = 0; i < 300; ++i) {
        PersistenceDiagram a, b;
        do {
            a = rng.diagram(5);
            b = rng.diagram(5);
        } while (a.total_points() + b.total_points() > 12);
        if (bottleneck(a, b).first != oracle::bottleneck_bruteforce(a, b))
            return complain(log, "bottleneck disagrees with enumeration", a, b);
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Check> checks = {
        {1, "erosion via landscapes lies in the rank-route bracket (1000 pairs, tol 2^-20)",
         check_route_agreement},
        {2, "landscape inversions round-trip 1000 diagrams + worked example depth 4", check_round_trip},
        {3, "tent direct-sum decomposition, 1000 diagrams + worked example", check_decomposition},
        {4, "coflow laws and equivariance, 500 cases", check_coflows},
        {5, "order preservation both directions, 500 pairs", check_order_preservation},
        {6, "erosion <= bottleneck everywhere; gap witness d_B = 1, erosion = 1/2", check_gap},
        {7, "local isometry and open-ball agreement, 200 perturbations", check_local_isometry},
        {8, "birth-zero closed form, equalities and death-vector sandwich, 500 pairs", check_birth_zero},
        {9, "finite metrics embed isometrically, 100 spaces", check_embedding},
        {10, "path length over the crossing pair refines monotonically to d_B = 1", check_intrinsic_path},
        {11, "bottleneck equals brute-force enumeration, 300 pairs", check_bottleneck_vs_bruteforce},
    };

    int failures = 0;
    for (const auto& check : checks) {
        std::ostringstream log;
        const auto started = std::chrono::steady_clock::now();
        const bool ok = check.run(log);
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << check.id << ": " << check.title
                  << " (" << elapsed << " ms)\n";
        if (!ok) {
            std::cout << log.str();
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
