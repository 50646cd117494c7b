#include "random_divides.hpp"

#include "divlat/corpus.hpp"
#include "divlat/faces.hpp"

#include <cmath>
#include <numbers>

namespace randdiv {

using namespace divlat;

namespace {

constexpr long long kRadius = 100;

IntPoint on_circle(double angle, double radius) {
    return {std::llround(radius * std::cos(angle)), std::llround(radius * std::sin(angle))};
}

Sign random_sign(Rng& rng) {
    return std::bernoulli_distribution(0.5)(rng) ? Sign::Plus : Sign::Minus;
}

IntPoint inside(Rng& rng, long long r) {
    std::uniform_int_distribution<long long> c(-r, r);
    for (;;) {
        IntPoint p{c(rng), c(rng)};
        if (p[0] * p[0] + p[1] * p[1] < r * r) {
            return p;
        }
    }
}

std::optional<Divide> finish(PolylineDivide p, Rng& rng) {
    p.disc_radius = kRadius;
    p.seed_point = inside(rng, kRadius - 1);
    p.seed_sign = random_sign(rng);
    try {
        Divide d = ingest_polyline(p);
        if (d.num_double_points() == 0) {
            return std::nullopt;
        }
        sign_divide(d);
        return d;
    } catch (const DivideError&) {
        return std::nullopt;
    }
}

} // namespace

std::optional<Divide> line_arrangement(Rng& rng) {
    std::uniform_int_distribution<int> count(2, 4);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> spread(0.5, 1.0);
    PolylineDivide p;
    p.name = "lines";
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        const double a = angle(rng);
        const double b = a + std::numbers::pi * spread(rng) * (std::bernoulli_distribution(0.5)(rng) ? 1 : -1);
        p.branches.push_back(Polyline{{on_circle(a, 3.0 * kRadius), on_circle(b, 3.0 * kRadius)}, false});
    }
    return finish(std::move(p), rng);
}

std::optional<Divide> bent_polylines(Rng& rng) {
    std::uniform_int_distribution<int> count(1, 2);
    std::uniform_int_distribution<int> bends(1, 3);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    PolylineDivide p;
    p.name = "bent";
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        Polyline line;
        line.points.push_back(on_circle(angle(rng), 1.5 * kRadius));
        const int m = bends(rng);
        for (int j = 0; j < m; ++j) {
            line.points.push_back(inside(rng, kRadius - 5));
        }
        line.points.push_back(on_circle(angle(rng), 1.5 * kRadius));
        p.branches.push_back(std::move(line));
    }
    return finish(std::move(p), rng);
}

Divide any(Rng& rng) {
    std::uniform_int_distribution<int> family(0, 9);
    for (;;) {
        const int f = family(rng);
        if (f == 0) {
            Divide d = gen_a(std::uniform_int_distribution<int>(1, 8)(rng)).divide;
            d.sign_seed.sign = random_sign(rng);
            return d;
        }
        auto d = f < 6 ? line_arrangement(rng) : bent_polylines(rng);
        if (d) {
            return *d;
        }
    }
}

} // namespace randdiv
