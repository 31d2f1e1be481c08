#include "pdgm/matching.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace pdgm {

Rational linf_dist(const BirthDeathPair& a, const BirthDeathPair& b) {
    return std::max(abs(a.birth - b.birth), abs(a.death - b.death));
}

bool is_valid_matching(const PersistenceDiagram& left, const PersistenceDiagram& right,
                       const PartialMatching& matching) {
    const std::size_t n = static_cast<std::size_t>(left.total_points());
    const std::size_t m = static_cast<std::size_t>(right.total_points());
    std::vector<char> seen_left(n, 0), seen_right(m, 0);
    auto mark = [](std::vector<char>& seen, std::size_t i) {
        if (i >= seen.size() || seen[i]) return false;
        seen[i] = 1;
        return true;
    };
    for (const auto& [i, j] : matching.matched)
        if (!mark(seen_left, i) || !mark(seen_right, j)) return false;
    for (std::size_t i : matching.unmatched_left)
        if (!mark(seen_left, i)) return false;
    for (std::size_t j : matching.unmatched_right)
        if (!mark(seen_right, j)) return false;
    return std::count(seen_left.begin(), seen_left.end(), 1) == static_cast<long>(n) &&
           std::count(seen_right.begin(), seen_right.end(), 1) == static_cast<long>(m);
}

Rational matching_cost(const PersistenceDiagram& left, const PersistenceDiagram& right,
                       const PartialMatching& matching) {
    const auto a = left.flatten();
    const auto b = right.flatten();
    Rational cost(0);
    for (const auto& [i, j] : matching.matched) cost = std::max(cost, linf_dist(a[i], b[j]));
    for (std::size_t i : matching.unmatched_left) cost = std::max(cost, a[i].persistence().half());
    for (std::size_t j : matching.unmatched_right) cost = std::max(cost, b[j].persistence().half());
    return cost;
}

namespace {

// Hopcroft-Karp maximum matching on an explicit bipartite adjacency list.
class BipartiteMatcher {
public:
    BipartiteMatcher(std::size_t left, std::size_t right) : adj_(left), match_left_(left), match_right_(right) {}

    void add_edge(std::size_t u, std::size_t v) { adj_[u].push_back(v); }

    std::size_t solve() {
        std::fill(match_left_.begin(), match_left_.end(), npos);
        std::fill(match_right_.begin(), match_right_.end(), npos);
        std::size_t matched = 0;
        while (bfs()) {
            for (std::size_t u = 0; u < adj_.size(); ++u)
                if (match_left_[u] == npos && dfs(u)) ++matched;
        }
        return matched;
    }

    std::size_t partner_of_left(std::size_t u) const { return match_left_[u]; }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool bfs() {
        std::queue<std::size_t> q;
        dist_.assign(adj_.size(), npos);
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            if (match_left_[u] == npos) {
                dist_[u] = 0;
                q.push(u);
            }
        }
        bool reachable = false;
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj_[u]) {
                const std::size_t w = match_right_[v];
                if (w == npos)
                    reachable = true;
                else if (dist_[w] == npos) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return reachable;
    }

    bool dfs(std::size_t u) {
        for (std::size_t v : adj_[u]) {
            const std::size_t w = match_right_[v];
            if (w == npos || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        dist_[u] = npos;
        return false;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> dist_;
};

// Diagonal augmentation: left nodes are the points of A plus one diagonal slot
// per point of B; right nodes symmetrically. A point may use a diagonal slot
// only within half its persistence; slots pair with each other for free. A
// perfect matching of all n+m nodes exists iff some partial matching between
// the diagrams has cost <= delta.
struct Feasibility {
    const std::vector<BirthDeathPair>& a;
    const std::vector<BirthDeathPair>& b;

    bool run(const Rational& delta, PartialMatching* witness) const {
        const std::size_t n = a.size(), m = b.size();
        BipartiteMatcher matcher(n + m, m + n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                if (linf_dist(a[i], b[j]) <= delta) matcher.add_edge(i, j);
            if (a[i].persistence().half() <= delta) matcher.add_edge(i, m + i);
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (b[j].persistence().half() <= delta) matcher.add_edge(n + j, j);
            for (std::size_t i = 0; i < n; ++i) matcher.add_edge(n + j, m + i);
        }
        if (matcher.solve() != n + m) return false;
        if (witness != nullptr) {
            witness->matched.clear();
            witness->unmatched_left.clear();
            witness->unmatched_right.clear();
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t v = matcher.partner_of_left(i);
                if (v < m)
                    witness->matched.emplace_back(i, v);
                else
                    witness->unmatched_left.push_back(i);
            }
            for (std::size_t j = 0; j < m; ++j) {
                const std::size_t v = matcher.partner_of_left(n + j);
                if (v == j) witness->unmatched_right.push_back(j);
            }
        }
        return true;
    }
};

}  // namespace

std::pair<Rational, PartialMatching> bottleneck(const PersistenceDiagram& left,
                                                const PersistenceDiagram& right) {
    const auto a = left.flatten();
    const auto b = right.flatten();

    std::vector<Rational> candidates;
    candidates.push_back(Rational(0));
    for (const auto& p : a) candidates.push_back(p.persistence().half());
    for (const auto& q : b) candidates.push_back(q.persistence().half());
    for (const auto& p : a)
        for (const auto& q : b) candidates.push_back(linf_dist(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    const Feasibility feasibility{a, b};
    // smallest feasible candidate; the largest is always feasible
    std::size_t lo = 0, hi = candidates.size() - 1;
    if (feasibility.run(candidates[0], nullptr)) {
        hi = 0;
    } else {
        while (hi - lo > 1) {
            const std::size_t mid = lo + (hi - lo) / 2;
            (feasibility.run(candidates[mid], nullptr) ? hi : lo) = mid;
        }
    }
    PartialMatching witness;
    feasibility.run(candidates[hi], &witness);
    witness.cost = matching_cost(left, right, witness);
    return {candidates[hi], std::move(witness)};
}

PersistenceDiagram interpolate_matched(const PersistenceDiagram& left, const PersistenceDiagram& right,
                                       const PartialMatching& matching, const Rational& t) {
    if (t.sign() < 0 || Rational(1) < t)
        throw std::invalid_argument("interpolate_matched: t must lie in [0, 1]");
    if (!is_valid_matching(left, right, matching))
        throw std::invalid_argument("interpolate_matched: matching does not partition the diagrams");

    const auto a = left.flatten();
    const auto b = right.flatten();
    const Rational s = Rational(1) - t;

    PersistenceDiagram out;
    auto emit = [&out](Rational birth, Rational death) {
        if (birth < death) out.add(BirthDeathPair{std::move(birth), std::move(death)});
    };
    for (const auto& [i, j] : matching.matched)
        emit(s * a[i].birth + t * b[j].birth, s * a[i].death + t * b[j].death);
    for (std::size_t i : matching.unmatched_left) {
        const Rational mid = (a[i].birth + a[i].death).half();
        emit(s * a[i].birth + t * mid, s * a[i].death + t * mid);
    }
    for (std::size_t j : matching.unmatched_right) {
        const Rational mid = (b[j].birth + b[j].death).half();
        emit(s * mid + t * b[j].birth, s * mid + t * b[j].death);
    }
    return out;
}

}  // namespace pdgm
