#include "roughlim/generators.hpp"

#include <set>

#include "roughlim/rng.hpp"

namespace roughlim {

namespace {

void check_metric(const Matrix& d) {
    const std::size_t n = d.size();
    for (const auto& row : d) {
        if (row.size() != n) throw StructuralError("metric matrix must be square");
    }
    for (PointIndex x = 0; x < n; ++x) {
        if (!d[x][x].is_zero()) {
            throw DomainError("metric requires zero diagonal, got " + d[x][x].str() + " at (" +
                              std::to_string(x) + "," + std::to_string(x) + ")");
        }
        for (PointIndex y = x + 1; y < n; ++y) {
            if (d[x][y] != d[y][x]) {
                throw DomainError("metric must be symmetric at (" + std::to_string(x) + "," +
                                  std::to_string(y) + ")");
            }
            if (!d[x][y].is_positive()) {
                throw DomainError("metric requires positive distance for distinct points (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
            }
        }
    }
    for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y = 0; y < n; ++y) {
            for (PointIndex z = 0; z < n; ++z) {
                if (d[x][y] > d[x][z] + d[z][y]) {
                    throw DomainError("metric triangle inequality fails at (" + std::to_string(x) +
                                      "," + std::to_string(y) + "," + std::to_string(z) + ")");
                }
            }
        }
    }
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = "x" + std::to_string(i);
    return labels;
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Metric: return "metric";
        case Family::ConstantSelfDistance: return "constant";
        case Family::LipschitzWeights: return "general";
    }
    return "?";
}

Space gen_weighted(const Matrix& metric, const std::vector<Rational>& weights,
                   std::vector<std::string> labels) {
    check_metric(metric);
    const std::size_t n = metric.size();
    if (weights.size() != n) throw StructuralError("weight count does not match metric dimension");
    for (PointIndex x = 0; x < n; ++x) {
        if (weights[x].is_negative()) {
            throw DomainError("weights must be nonnegative, got " + weights[x].str() + " at " +
                              std::to_string(x));
        }
    }
    const Rational two(2);
    for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y = x + 1; y < n; ++y) {
            if (abs(weights[x] - weights[y]) > two * metric[x][y]) {
                throw DomainError("weights violate |w(x)-w(y)| <= 2 d(x,y) at pair (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
            }
        }
    }
    Matrix p(n, std::vector<Rational>(n));
    for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y = 0; y < n; ++y) {
            p[x][y] = metric[x][y] + (weights[x] + weights[y]) / two;
        }
    }
    if (labels.empty()) labels = default_labels(n);
    return make_space(std::move(labels), std::move(p));
}

Space gen_example31(const std::vector<long long>& ks) {
    if (ks.empty()) throw DomainError("need at least one positive integer");
    std::set<long long> seen;
    for (long long k : ks) {
        if (k <= 0) throw DomainError("carrier entries must be positive integers, got " +
                                      std::to_string(k));
        if (!seen.insert(k).second) throw DomainError("duplicate carrier entry " + std::to_string(k));
    }
    const std::size_t n = ks.size() + 1;
    std::vector<std::string> labels(n);
    labels[0] = "0";
    for (std::size_t i = 0; i < ks.size(); ++i) labels[i + 1] = std::to_string(ks[i]);

    const Rational one(1);
    const auto inv = [](long long k) { return Rational(1, k); };
    Matrix p(n, std::vector<Rational>(n, one));
    for (std::size_t i = 0; i < ks.size(); ++i) {
        p[0][i + 1] = p[i + 1][0] = one + inv(ks[i]);
        for (std::size_t j = i + 1; j < ks.size(); ++j) {
            p[i + 1][j + 1] = p[j + 1][i + 1] = one + inv(ks[i]) + inv(ks[j]);
        }
    }
    return make_space(std::move(labels), std::move(p));
}

Space gen_max(const std::vector<Rational>& values) {
    if (values.empty()) throw DomainError("need at least one value");
    std::vector<std::string> labels;
    labels.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].is_negative()) throw DomainError("values must be nonnegative");
        for (std::size_t j = 0; j < i; ++j) {
            if (values[i] == values[j]) {
                throw DomainError("values must be pairwise distinct, duplicate " + values[i].str());
            }
        }
        labels.push_back(values[i].str());
    }
    const std::size_t n = values.size();
    Matrix p(n, std::vector<Rational>(n));
    for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y = 0; y < n; ++y) {
            p[x][y] = max(values[x], values[y]);
        }
    }
    return make_space(std::move(labels), std::move(p));
}

Space gen_random(std::uint64_t seed, std::size_t n, const GenParams& params) {
    if (n == 0) throw DomainError("need at least one point");
    Rng rng(seed);

    std::vector<Rational> weights(n, Rational(0));
    const auto fill_weights = [&] {
        switch (params.family) {
            case Family::Metric:
                break;
            case Family::ConstantSelfDistance: {
                // Mostly positive; zero now and then to cover the metric edge.
                const Rational a = rng.chance(1, 8)
                                       ? Rational(0)
                                       : rng.positive_rational(params.max_weight_numerator,
                                                               params.denominators);
                for (auto& w : weights) w = a;
                break;
            }
            case Family::LipschitzWeights:
                for (auto& w : weights) {
                    w = rng.rational(params.max_weight_numerator, params.denominators);
                }
                break;
        }
    };

    if (n == 1) {
        fill_weights();
        return make_space(default_labels(1), {{weights[0]}});
    }

    // Random positive symmetric edge weights, closed under shortest paths.
    Matrix d(n, std::vector<Rational>(n, Rational(0)));
    for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y = x + 1; y < n; ++y) {
            d[x][y] = d[y][x] =
                rng.positive_rational(params.max_edge_numerator, params.denominators);
        }
    }
    for (PointIndex via = 0; via < n; ++via) {
        for (PointIndex x = 0; x < n; ++x) {
            for (PointIndex y = 0; y < n; ++y) {
                if (x == y) continue;
                d[x][y] = min(d[x][y], d[x][via] + d[via][y]);
            }
        }
    }

    fill_weights();
    if (params.family == Family::LipschitzWeights) {
        // One smoothing pass makes the weights 2d-Lipschitz; d already
        // satisfies the triangle inequality so a single pass suffices and the
        // result can sit exactly on the Lipschitz boundary, which is where
        // zero ball thresholds (non-T1 behavior) come from.
        const Rational two(2);
        std::vector<Rational> smoothed(n);
        for (PointIndex x = 0; x < n; ++x) {
            Rational best = weights[x];
            for (PointIndex y = 0; y < n; ++y) {
                if (y != x) best = min(best, weights[y] + two * d[x][y]);
            }
            smoothed[x] = best;
        }
        weights = std::move(smoothed);
    }

    // gen_weighted re-validates every axiom on the result; a throw here is a
    // construction bug, not a caller error.
    return gen_weighted(d, weights, default_labels(n));
}

} // namespace roughlim
