#include "pdgm/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdgm {

PersistenceDiagram PersistenceDiagram::from_pairs(const std::vector<BirthDeathPair>& pairs) {
    PersistenceDiagram d;
    for (const auto& p : pairs) d.add(p);
    return d;
}

void PersistenceDiagram::add(const BirthDeathPair& pair, std::int64_t count) {
    if (count <= 0) throw std::invalid_argument("PersistenceDiagram::add: multiplicity must be positive");
    if (!(pair.birth < pair.death))
        throw std::invalid_argument("PersistenceDiagram::add: birth must be strictly below death");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), pair,
                               [](const Entry& e, const BirthDeathPair& p) { return e.pair < p; });
    if (it != entries_.end() && it->pair == pair)
        it->multiplicity += count;
    else
        entries_.insert(it, Entry{pair, count});
}

std::int64_t PersistenceDiagram::total_points() const {
    std::int64_t n = 0;
    for (const auto& e : entries_) n += e.multiplicity;
    return n;
}

std::vector<BirthDeathPair> PersistenceDiagram::flatten() const {
    std::vector<BirthDeathPair> out;
    out.reserve(static_cast<std::size_t>(total_points()));
    for (const auto& e : entries_)
        for (std::int64_t i = 0; i < e.multiplicity; ++i) out.push_back(e.pair);
    return out;
}

bool PersistenceDiagram::all_births_zero() const {
    for (const auto& e : entries_)
        if (!e.pair.birth.is_zero()) return false;
    return true;
}

std::int64_t rank_at(const PersistenceDiagram& diagram, const RankQuery& query) {
    if (query.b > query.d) throw std::invalid_argument("rank_at: query needs b <= d");
    std::int64_t n = 0;
    for (const auto& e : diagram.entries())
        if (e.pair.birth <= query.b && query.d < e.pair.death) n += e.multiplicity;
    return n;
}

PersistenceDiagram shrink_diagram(const PersistenceDiagram& diagram, const Rational& eps) {
    if (eps.sign() < 0) throw std::invalid_argument("shrink_diagram: eps must be non-negative");
    PersistenceDiagram out;
    for (const auto& e : diagram.entries()) {
        Rational b = e.pair.birth + eps;
        Rational d = e.pair.death - eps;
        if (b < d) out.add(BirthDeathPair{std::move(b), std::move(d)}, e.multiplicity);
    }
    return out;
}

namespace {

// Sorted unique birth / death coordinates of both diagrams.
void collect_thresholds(const PersistenceDiagram& a, const PersistenceDiagram& b,
                        std::vector<Rational>& births, std::vector<Rational>& deaths) {
    for (const auto* d : {&a, &b}) {
        for (const auto& e : d->entries()) {
            births.push_back(e.pair.birth);
            deaths.push_back(e.pair.death);
        }
    }
    std::sort(births.begin(), births.end());
    births.erase(std::unique(births.begin(), births.end()), births.end());
    std::sort(deaths.begin(), deaths.end());
    deaths.erase(std::unique(deaths.begin(), deaths.end()), deaths.end());
}

// Counts deaths strictly greater than delta in a sorted vector.
std::int64_t count_deaths_above(const std::vector<Rational>& sorted_deaths, const Rational& delta) {
    auto it = std::upper_bound(sorted_deaths.begin(), sorted_deaths.end(), delta);
    return static_cast<std::int64_t>(sorted_deaths.end() - it);
}

}  // namespace

bool diagram_leq(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs) {
    // Finite sufficient test set. Both rank functions are constant on the
    // half-open cells [beta_k, beta_{k+1}) x [delta_l, delta_{l+1}) induced by
    // the birth thresholds B and death thresholds D of the two diagrams
    // (rank counts birth_i <= b, left-closed, and d < death_i, right-open).
    // Every cell that meets {b <= d} contains either its lower-left corner
    // (beta, delta) with beta <= delta, or the diagonal point (beta, beta).
    // Cells left of all betas or above all deltas have both ranks zero.
    // Checking the inequality at these finitely many points decides it on all
    // of {b <= d}.
    std::vector<Rational> births, deaths;
    collect_thresholds(lhs, rhs, births, deaths);

    // Flattened points sorted by birth, for incremental "births <= beta" sweeps.
    struct SweepState {
        std::vector<BirthDeathPair> by_birth;
        std::size_t next = 0;
        std::vector<Rational> active_deaths;  // sorted
        explicit SweepState(const PersistenceDiagram& d) : by_birth(d.flatten()) {}
        void advance_to(const Rational& beta) {
            while (next < by_birth.size() && by_birth[next].birth <= beta) {
                auto& deaths = active_deaths;
                deaths.insert(std::upper_bound(deaths.begin(), deaths.end(), by_birth[next].death),
                              by_birth[next].death);
                ++next;
            }
        }
    };
    SweepState left(lhs), right(rhs);

    for (const Rational& beta : births) {
        left.advance_to(beta);
        right.advance_to(beta);
        // delta = beta covers the diagonal representatives of this birth slab.
        if (count_deaths_above(left.active_deaths, beta) > count_deaths_above(right.active_deaths, beta))
            return false;
        for (const Rational& delta : deaths) {
            if (delta < beta) continue;
            if (count_deaths_above(left.active_deaths, delta) >
                count_deaths_above(right.active_deaths, delta))
                return false;
        }
    }
    return true;
}

bool erosion_feasible(const PersistenceDiagram& lhs, const PersistenceDiagram& rhs, const Rational& eps) {
    if (eps.sign() < 0) throw std::invalid_argument("erosion_feasible: eps must be non-negative");
    return diagram_leq(shrink_diagram(lhs, eps), rhs) && diagram_leq(shrink_diagram(rhs, eps), lhs);
}

Rational local_radius(const PersistenceDiagram& diagram) {
    if (diagram.empty()) throw std::invalid_argument("local_radius: undefined for the empty diagram");
    const auto& entries = diagram.entries();

    bool have = false;
    Rational best;
    auto consider = [&](const Rational& candidate) {
        if (!have || candidate < best) {
            best = candidate;
            have = true;
        }
    };

    // Half-persistence terms always participate; coordinate gaps only between
    // genuinely distinct births (resp. deaths), so diagrams whose births all
    // coincide contribute no birth terms at all.
    for (const auto& e : entries) consider(e.pair.persistence().half());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const auto& p = entries[i].pair;
            const auto& q = entries[j].pair;
            if (p.birth != q.birth) consider(abs(p.birth - q.birth));
            if (p.death != q.death) consider(abs(p.death - q.death));
        }
    }
    return best.half();
}

}  // namespace pdgm
