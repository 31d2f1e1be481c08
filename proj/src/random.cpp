#include "pdgm/random.hpp"

#include <algorithm>
#include <vector>

namespace pdgm {

std::uint64_t Sampler::uniform(std::uint64_t bound) {
    if (bound <= 1) return 0;
    // unbiased rejection sampling on the raw 64-bit stream
    const std::uint64_t limit = (~std::uint64_t{0} / bound) * bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

Rational Sampler::dyadic(long range, unsigned denom_pow) {
    const long den = 1L << denom_pow;
    const auto num = static_cast<long>(uniform(static_cast<std::uint64_t>(range * den + 1)));
    return Rational(num, den);
}

PersistenceDiagram Sampler::diagram(std::size_t max_points, long coord_range) {
    PersistenceDiagram out;
    const std::size_t n = uniform(max_points + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned g = static_cast<unsigned>(uniform(4));
        const long den = 1L << g;
        const long birth_num = static_cast<long>(uniform(static_cast<std::uint64_t>(coord_range * den)));
        const long death_num =
            birth_num + 1 + static_cast<long>(uniform(static_cast<std::uint64_t>(coord_range * den - birth_num)));
        BirthDeathPair pair{Rational(birth_num, den), Rational(death_num, den)};
        out.add(pair);
        if (uniform(5) == 0) out.add(pair);  // duplicate for multiplicity coverage
    }
    return out;
}

PersistenceDiagram Sampler::nonempty_diagram(std::size_t max_points, long coord_range) {
    PersistenceDiagram out;
    do {
        out = diagram(max_points, coord_range);
    } while (out.empty());
    return out;
}

PersistenceDiagram Sampler::birth_zero_diagram(std::size_t max_points, long coord_range) {
    PersistenceDiagram out;
    const std::size_t n = uniform(max_points + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned g = static_cast<unsigned>(uniform(4));
        const long den = 1L << g;
        const long death_num = 1 + static_cast<long>(uniform(static_cast<std::uint64_t>(coord_range * den)));
        out.add(BirthDeathPair{Rational(0), Rational(death_num, den)});
    }
    return out;
}

PersistenceDiagram Sampler::perturb_within(const PersistenceDiagram& center, const Rational& r) {
    PersistenceDiagram out;
    Rational top(0);
    auto offset = [&]() {
        // in (-r, r), granularity r/8
        const long k = static_cast<long>(uniform(15)) - 7;
        return r * Rational(k, 8);
    };
    for (const auto& e : center.entries()) {
        top = std::max(top, e.pair.death);
        for (std::int64_t i = 0; i < e.multiplicity; ++i)
            out.add(BirthDeathPair{e.pair.birth + offset(), e.pair.death + offset()});
    }
    const std::size_t spurious = uniform(3);
    for (std::size_t i = 0; i < spurious; ++i) {
        // persistence 2h with h in (0, r)
        const Rational h = r * Rational(1 + static_cast<long>(uniform(7)), 8);
        const Rational x = Rational(static_cast<long>(uniform(33)), 2) + top;
        out.add(BirthDeathPair{x, x + h + h});
    }
    return out;
}

FiniteMetric Sampler::metric(std::size_t max_points) {
    const std::size_t n = 1 + uniform(max_points);
    std::vector<Rational> d(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational w(1 + static_cast<long>(uniform(64)), 4);
            d[i * n + j] = w;
            d[j * n + i] = w;
        }
    // shortest-path repair makes the weights a metric
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i * n + k] + d[k * n + j] < d[i * n + j]) d[i * n + j] = d[i * n + k] + d[k * n + j];
    return FiniteMetric::from_matrix(n, std::move(d));
}

}  // namespace pdgm
