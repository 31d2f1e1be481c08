#include "pdgm/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pdgm {

Rational erosion(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs) {
    return sup_norm_dist(build_landscape(lhs), build_landscape(rhs));
}

Rational landscape_distance(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs) {
    return erosion(lhs, rhs);
}

ErosionBracket erosion_direct(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs,
                              const Rational& tol) {
    if (tol.sign() <= 0) throw std::invalid_argument("erosion_direct: tol must be positive");
    if (erosion_feasible(lhs, rhs, Rational(0))) return {Rational(0), Rational(0)};

    // At half the maximum persistence both shrunken diagrams are empty, so the
    // rank conditions hold vacuously; that makes a valid initial upper bound.
    Rational hi(0);
    for (const auto* d : {&lhs, &rhs})
        for (const auto& e : d->entries()) hi = std::max(hi, e.pair.persistence().half());
    Rational lo(0);
    while (tol < hi - lo) {
        Rational mid = (lo + hi).half();
        if (erosion_feasible(lhs, rhs, mid))
            hi = std::move(mid);
        else
            lo = std::move(mid);
    }
    return {std::move(lo), std::move(hi)};
}

namespace {

std::vector<Rational> descending_deaths(const PersistenceDiagram& diagram) {
    std::vector<Rational> deaths;
    for (const auto& e : diagram.entries())
        for (std::int64_t i = 0; i < e.multiplicity; ++i) deaths.push_back(e.pair.death);
    std::sort(deaths.begin(), deaths.end(), [](const Rational& a, const Rational& b) { return b < a; });
    return deaths;
}

void require_birth_zero(const PersistenceDiagram& diagram, const char* who) {
    if (!diagram.all_births_zero()) throw std::invalid_argument(std::string(who) + ": diagram has a non-zero birth");
}

}  // namespace

Rational birthzero_distance(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs) {
    require_birth_zero(lhs, "birthzero_distance");
    require_birth_zero(rhs, "birthzero_distance");
    auto a = descending_deaths(lhs);
    auto b = descending_deaths(rhs);
    const std::size_t n = std::max(a.size(), b.size());
    a.resize(n, Rational(0));
    b.resize(n, Rational(0));
    Rational best(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rational candidate = std::min(abs(a[i] - b[i]), std::max(a[i].half(), b[i].half()));
        best = std::max(best, std::move(candidate));
    }
    return best;
}

DeathVector::DeathVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].sign() <= 0) throw std::invalid_argument("DeathVector: entries must be positive");
        if (i > 0 && entries_[i - 1] < entries_[i])
            throw std::invalid_argument("DeathVector: entries must be non-increasing");
    }
}

DeathVector death_vectorization(const PersistenceDiagram& diagram) {
    require_birth_zero(diagram, "death_vectorization");
    return DeathVector(descending_deaths(diagram));
}

PersistenceDiagram diagram_from_death_vector(const DeathVector& v) {
    PersistenceDiagram out;
    for (const auto& d : v.entries()) out.add(BirthDeathPair{Rational(0), d});
    return out;
}

Rational dv_distance(const DeathVector& lhs, const DeathVector& rhs) {
    const auto& a = lhs.entries();
    const auto& b = rhs.entries();
    Rational best(0);
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        const Rational x = i < a.size() ? a[i] : Rational(0);
        const Rational y = i < b.size() ? b[i] : Rational(0);
        best = std::max(best, abs(x - y));
    }
    return best;
}

FiniteMetric FiniteMetric::from_matrix(std::size_t n, std::vector<Rational> dist) {
    if (n == 0) throw std::invalid_argument("FiniteMetric: need at least one point");
    if (dist.size() != n * n) throw std::invalid_argument("FiniteMetric: matrix size mismatch");
    FiniteMetric m;
    m.n_ = n;
    m.dist_ = std::move(dist);
    for (std::size_t i = 0; i < n; ++i) {
        if (!m.at(i, i).is_zero())
            throw std::invalid_argument("FiniteMetric: zero diagonal violated at point " + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("FiniteMetric: symmetry violated at (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
            if (i != j && m.at(i, j).sign() <= 0)
                throw std::invalid_argument("FiniteMetric: positivity violated at (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
            for (std::size_t k = 0; k < n; ++k) {
                if (m.at(i, k) + m.at(k, j) < m.at(i, j))
                    throw std::invalid_argument("FiniteMetric: triangle inequality violated at (" +
                                                std::to_string(i) + ", " + std::to_string(j) + ", " +
                                                std::to_string(k) + ")");
            }
        }
    }
    return m;
}

std::vector<PersistenceDiagram> embed_finite_metric(const FiniteMetric& metric) {
    const std::size_t n = metric.size();
    // Kuratowski rows: a^i = (d(i, 0), ..., d(i, n-1)), an isometric copy of
    // the space inside (R^n, l_inf).
    // Offset constant c exceeding every row entry and every entry difference.
    Rational c(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            c = std::max(c, abs(metric.at(i, k)));
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) c = std::max(c, abs(metric.at(i, k) - metric.at(j, l)));
        }
    c += Rational(1);
    const Rational two_c = c + c;

    std::vector<PersistenceDiagram> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> entries;
        entries.reserve(n);
        for (std::size_t k = 0; k < n; ++k)
            entries.push_back(two_c * Rational(static_cast<long>(n + 1 - k)) + metric.at(i, k));
        out.push_back(diagram_from_death_vector(DeathVector(std::move(entries))));
    }
    return out;
}

Rational erosion_path_length(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs,
                             unsigned segments) {
    if (segments == 0) throw std::invalid_argument("erosion_path_length: need at least one segment");
    const PartialMatching matching = bottleneck(lhs, rhs).second;
    Rational total(0);
    PersistenceDiagram previous = lhs;
    for (unsigned j = 1; j <= segments; ++j) {
        PersistenceDiagram next = j == segments
                                      ? rhs
                                      : interpolate_matched(lhs, rhs, matching,
                                                            Rational(static_cast<long>(j), static_cast<long>(segments)));
        total += erosion(previous, next);
        previous = std::move(next);
    }
    return total;
}

GapWitness gap_example() {
    PersistenceDiagram left;
    left.add({Rational(0), Rational(2)});
    left.add({Rational(1), Rational(3)});
    PersistenceDiagram right;
    right.add({Rational(1, 2), Rational(5, 2)});
    GapWitness w;
    w.bottleneck_value = bottleneck(left, right).first;
    w.erosion_value = erosion(left, right);
    w.left = std::move(left);
    w.right = std::move(right);
    return w;
}

bool in_box_band_neighborhood(const PersistenceDiagram& center, const PersistenceDiagram& candidate,
                              const Rational& r) {
    if (r.sign() <= 0) throw std::invalid_argument("in_box_band_neighborhood: r must be positive");
    const auto points = candidate.flatten();
    // every center point of multiplicity m traps exactly m candidate points in
    // its open r-box
    for (const auto& e : center.entries()) {
        std::int64_t inside = 0;
        for (const auto& p : points)
            if (linf_dist(e.pair, p) < r) ++inside;
        if (inside != e.multiplicity) return false;
    }
    // every candidate point sits in some box or in the open diagonal band
    for (const auto& p : points) {
        if (p.persistence().half() < r) continue;
        bool boxed = false;
        for (const auto& e : center.entries())
            if (linf_dist(e.pair, p) < r) {
                boxed = true;
                break;
            }
        if (!boxed) return false;
    }
    return true;
}

}  // namespace pdgm
