#include "pdgm/verify.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pdgm/io.hpp"
#include "pdgm/landscape.hpp"
#include "pdgm/matching.hpp"
#include "pdgm/metrics.hpp"
#include "pdgm/random.hpp"

namespace pdgm {

namespace {

struct Failure {
    std::string what;
    std::vector<PersistenceDiagram> inputs;
};

class Context {
public:
    Context(std::uint64_t seed, std::uint64_t cases) : sampler_(seed), cases_(cases) {}

    Sampler& sampler() { return sampler_; }
    std::uint64_t cases() const { return cases_; }

    void fail(std::string what, std::vector<PersistenceDiagram> inputs) {
        if (!failure_) failure_ = Failure{std::move(what), std::move(inputs)};
    }
    const Failure* failure() const { return failure_ ? &*failure_ : nullptr; }

private:
    Sampler sampler_;
    std::uint64_t cases_;
    std::optional<Failure> failure_;
};

using Suite = void (*)(Context&);

void suite_diagram_coflow(Context& ctx) {
    for (std::uint64_t i = 0; i < ctx.cases() && !ctx.failure(); ++i) {
        auto& rng = ctx.sampler();
        const PersistenceDiagram y = rng.diagram(8);
        const Rational e1 = rng.dyadic(4, 3), e2 = rng.dyadic(4, 3);
        if (shrink_diagram(y, Rational(0)) != y) ctx.fail("shrink by 0 is not the identity", {y});
        if (!diagram_leq(shrink_diagram(y, e1), y)) ctx.fail("shrink is not dominated by the input", {y});
        if (shrink_diagram(shrink_diagram(y, e2), e1) != shrink_diagram(y, e1 + e2))
            ctx.fail("shrink is not additive in eps", {y});
        // rank of the shrunken diagram equals rank of the grown query
        const Rational b = rng.dyadic(16, 2);
        const Rational d = b + rng.dyadic(8, 2);
        if (rank_at(shrink_diagram(y, e1), {b, d}) != rank_at(y, {b - e1, d + e1}))
            ctx.fail("rank/grow identity violated", {y});
    }
}

void suite_landscape_coflow(Context& ctx) {
    for (std::uint64_t i = 0; i < ctx.cases() && !ctx.failure(); ++i) {
        auto& rng = ctx.sampler();
        const PersistenceDiagram y = rng.diagram(8);
        const LandscapeSequence lam = build_landscape(y);
        const Rational e1 = rng.dyadic(4, 3), e2 = rng.dyadic(4, 3);
        if (flow(lam, Rational(0)) != lam) ctx.fail("flow by 0 is not the identity", {y});
        if (!landscape_leq(flow(lam, e1), lam)) ctx.fail("flow is not dominated by the input", {y});
        if (flow(flow(lam, e2), e1) != flow(lam, e1 + e2)) ctx.fail("flow is not additive in eps", {y});
        if (build_landscape(shrink_diagram(y, e1)) != flow(lam, e1))
            ctx.fail("landscape of shrunken diagram differs from flowed landscape", {y});
    }
}

void suite_round_trip(Context& ctx) {
    for (std::uint64_t i = 0; i < ctx.cases() && !ctx.failure(); ++i) {
        const PersistenceDiagram y = ctx.sampler().diagram(8);
        const LandscapeSequence lam = build_landscape(y);
        if (invert_by_degree(lam) != y) ctx.fail("degree inversion does not reproduce the diagram", {y});
        if (invert_by_peeling(lam) != y) ctx.fail("peeling inversion does not reproduce the diagram", {y});
        const auto report = validate([&] {
            std::vector<RawCurve> raw;
            for (const auto& c : lam.curves()) raw.push_back(c.breakpoints());
            return raw;
        }());
        if (!report.ok) ctx.fail("built landscape fails validation: " + report.violations.front(), {y});
    }
}

void suite_decomposition(Context& ctx) {
    for (std::uint64_t i = 0; i < ctx.cases() && !ctx.failure(); ++i) {
        const PersistenceDiagram y = ctx.sampler().diagram(8);
        LandscapeSequence sum;
        for (const auto& e : y.entries())
            for (std::int64_t m = 0; m < e.multiplicity; ++m)
                sum = direct_sum(sum, LandscapeSequence::from_curves_unchecked(
                                          {tent(e.pair.birth, e.pair.death)}));
        if (sum != build_landscape(y)) ctx.fail("tent direct sum differs from the built landscape", {y});
    }
}

void suite_order_preservation(Context& ctx) {
    for (std::uint64_t i = 0; i < ctx.cases() && !ctx.failure(); ++i) {
        auto& rng = ctx.sampler();
        const PersistenceDiagram y = rng.diagram(6);
        const PersistenceDiagram z =
            (i % 2 == 0) ? rng.diagram(6) : shrink_diagram(y, rng.dyadic(4, 3));
        const bool diagrams = diagram_leq(z, y);
        const bool landscapes = landscape_leq(build_landscape(z), build_landscape(y));
        if (diagrams != landscapes) ctx.fail("diagram order and landscape order disagree", {z, y});
    }
}

void suite_erosion_agreement(Context& ctx) {
    const Rational tol(1, 1 << 20);
    for (std::uint64_t i = 0; i < ctx.cases() && !ctx.failure(); ++i) {
        auto& rng = ctx.sampler();
        const PersistenceDiagram y = rng.diagram(8);
        const PersistenceDiagram z = rng.diagram(8);
        const Rational e = erosion(y, z);
        if (!erosion_direct(y, z, tol).contains(e))
            ctx.fail("landscape-route erosion escapes the rank-route bracket", {y, z});
    }
}

void suite_metric_inequalities(Context& ctx) {
    for (std::uint64_t i = 0; i < ctx.cases() && !ctx.failure(); ++i) {
        auto& rng = ctx.sampler();
        const PersistenceDiagram a = rng.diagram(6), b = rng.diagram(6), c = rng.diagram(6);
        const Rational ab = erosion(a, b), ba = erosion(b, a);
        if (ab != ba) ctx.fail("erosion is not symmetric", {a, b});
        if (!erosion(a, a).is_zero()) ctx.fail("erosion of a diagram with itself is nonzero", {a});
        if (erosion(a, c) > ab + erosion(b, c)) ctx.fail("erosion violates the triangle inequality", {a, b, c});
        const Rational bd = bottleneck(a, b).first;
        if (bottleneck(b, a).first != bd) ctx.fail("bottleneck is not symmetric", {a, b});
        if (bottleneck(a, c).first > bd + bottleneck(b, c).first)
            ctx.fail("bottleneck violates the triangle inequality", {a, b, c});
        if (ab > bd) ctx.fail("erosion exceeds bottleneck", {a, b});
    }
    const GapWitness gap = gap_example();
    if (gap.bottleneck_value != Rational(1) || gap.erosion_value != Rational(1, 2))
        ctx.fail("gap witness does not produce d_B = 1, erosion = 1/2", {gap.left, gap.right});
}

void suite_local_isometry(Context& ctx) {
    for (std::uint64_t i = 0; i < ctx.cases() && !ctx.failure(); ++i) {
        auto& rng = ctx.sampler();
        const PersistenceDiagram y = rng.nonempty_diagram(5);
        const Rational r = local_radius(y);
        const PersistenceDiagram z = rng.perturb_within(y, r);
        if (bottleneck(y, z).first != erosion(y, z))
            ctx.fail("bottleneck and erosion disagree inside the local radius", {y, z});
        const bool in_b = bottleneck(y, z).first < r;
        const bool in_e = erosion(y, z) < r;
        const bool in_u = in_box_band_neighborhood(y, z, r);
        if (in_b != in_e || in_b != in_u)
            ctx.fail("open-ball membership tests disagree at the local radius", {y, z});
    }
}

void suite_birth_zero(Context& ctx) {
    for (std::uint64_t i = 0; i < ctx.cases() && !ctx.failure(); ++i) {
        auto& rng = ctx.sampler();
        const PersistenceDiagram y = rng.birth_zero_diagram(6), z = rng.birth_zero_diagram(6);
        const Rational closed = birthzero_distance(y, z);
        if (closed != bottleneck(y, z).first) ctx.fail("closed form differs from bottleneck", {y, z});
        if (closed != erosion(y, z)) ctx.fail("closed form differs from erosion", {y, z});
        const Rational dv = dv_distance(death_vectorization(y), death_vectorization(z));
        if (dv < closed || closed + closed < dv)
            ctx.fail("death-vector distance escapes its two-sided bound", {y, z});
        if (diagram_from_death_vector(death_vectorization(y)) != y)
            ctx.fail("death vectorization round trip fails", {y});
    }
}

void suite_embedding(Context& ctx) {
    for (std::uint64_t i = 0; i < ctx.cases() && !ctx.failure(); ++i) {
        const FiniteMetric m = ctx.sampler().metric(5);
        const auto diagrams = embed_finite_metric(m);
        for (std::size_t a = 0; a < diagrams.size() && !ctx.failure(); ++a)
            for (std::size_t b = a + 1; b < diagrams.size(); ++b)
                if (birthzero_distance(diagrams[a], diagrams[b]) != m.at(a, b)) {
                    ctx.fail("embedded diagrams are not isometric to the metric",
                             {diagrams[a], diagrams[b]});
                    break;
                }
    }
}

void suite_path_refinement(Context& ctx) {
    const std::uint64_t rounds = std::max<std::uint64_t>(1, ctx.cases() / 10);
    for (std::uint64_t i = 0; i < rounds && !ctx.failure(); ++i) {
        auto& rng = ctx.sampler();
        const PersistenceDiagram y = rng.diagram(4), z = rng.diagram(4);
        Rational prev = erosion_path_length(y, z, 1);
        if (prev != erosion(y, z)) ctx.fail("single-segment path length differs from erosion", {y, z});
        for (unsigned segs = 2; segs <= 16; segs *= 2) {
            const Rational len = erosion_path_length(y, z, segs);
            if (len < prev) ctx.fail("path length decreased under refinement", {y, z});
            if (len > bottleneck(y, z).first) ctx.fail("path length exceeds bottleneck", {y, z});
            prev = len;
        }
    }
}

}  // namespace

bool run_verification(std::uint64_t seed, std::uint64_t cases, std::ostream& out) {
    const std::pair<const char*, Suite> suites[] = {
        {"diagram coflow laws", suite_diagram_coflow},
        {"landscape coflow laws and equivariance", suite_landscape_coflow},
        {"landscape round trips", suite_round_trip},
        {"tent decomposition", suite_decomposition},
        {"order preservation", suite_order_preservation},
        {"erosion route agreement", suite_erosion_agreement},
        {"metric inequalities and gap witness", suite_metric_inequalities},
        {"local isometry and open balls", suite_local_isometry},
        {"birth-zero identities", suite_birth_zero},
        {"finite metric embedding", suite_embedding},
        {"path length refinement", suite_path_refinement},
    };
    bool all_ok = true;
    std::uint64_t salt = 0;
    for (const auto& [name, suite] : suites) {
        Context ctx(seed + salt++, cases);
        suite(ctx);
        if (const Failure* f = ctx.failure()) {
            all_ok = false;
            out << "FAIL " << name << ": " << f->what << "\n";
            for (std::size_t i = 0; i < f->inputs.size(); ++i) {
                out << "# counterexample diagram " << (i + 1) << "\n";
                write_diagram(out, f->inputs[i]);
            }
        } else {
            out << "ok   " << name << " (" << cases << " cases)\n";
        }
    }
    return all_ok;
}

}  // namespace pdgm
