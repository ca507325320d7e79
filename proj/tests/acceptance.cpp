// Acceptance gate: one criterion per function, one PASS/FAIL line each.
// Every numeric claim is exact rational arithmetic; the only tolerances are
// the per-criterion wall-clock budgets pinned below.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "roughlim/cli.hpp"
#include "roughlim/generators.hpp"
#include "roughlim/theorems.hpp"

#ifndef ROUGHLIM_TEST_DATA_DIR
#define ROUGHLIM_TEST_DATA_DIR "."
#endif

using namespace roughlim;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// 1. Exact reproduction of the worked harmonic-space example: minimal
//    two-sided degrees 1/2, 1/2, 5/6 and an empty classical limit set.
Outcome criterion_example31() {
    const Space s = gen_example31({2, 3});
    const Sequence z{{}, {0, 1}};
    const Rational expected[] = {Rational(1, 2), Rational(1, 2), Rational(5, 6)};
    for (PointIndex x = 0; x < 3; ++x) {
        const Rational got = minimal_roughness(s, z, x, Side::TwoSided);
        if (got != expected[x]) {
            return {false, "degree at " + s.label(x) + " is " + got.str() + ", expected " +
                               expected[x].str()};
        }
    }
    if (!rough_limit_set(s, z, Rational(0), Side::TwoSided).empty()) {
        return {false, "LIM^0 should be empty"};
    }
    if (rough_limit_set(s, z, Rational(1, 2), Side::TwoSided) != PointSet{0, 1}) {
        return {false, "LIM^{1/2} should be {0, 2}"};
    }
    return {true, "degrees 1/2, 1/2, 5/6 exact; LIM^0 empty"};
}

// 2. The closed-form degree test agrees with an independent brute-force
//    epsilon-k scan on >= 1000 randomized (space, sequence, candidate, side,
//    r) instances, with r drawn from an 8-value grid straddling the minimal
//    degree.
Outcome criterion_oracle() {
    Rng rng(20240001);
    std::size_t agreements = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.index(5); // at most 6 points
        GenParams params;
        params.family = static_cast<Family>(trial % 3);
        const Space space = gen_random(rng.next(), n, params);
        const Sequence seq = sample_sequence(rng, n, 3, 4); // cycle at most 4
        const PointIndex x = rng.index(n);
        for (const Side side : {Side::TwoSided, Side::Right, Side::Left}) {
            const Rational m = minimal_roughness(space, seq, x, side);
            for (const Rational& r : testing::agreement_grid(m)) {
                const bool fast = is_r_convergent(space, seq, x, r, side);
                const bool brute = testing::epsilon_k_convergent(space, seq, x, r, side);
                if (fast != brute) {
                    return {false, "disagreement at trial " + std::to_string(trial) + ", r = " +
                                       r.str() + ", side " + side_name(side)};
                }
                ++agreements;
            }
        }
    }
    if (agreements < 1000) {
        return {false, "only " + std::to_string(agreements) + " instances checked"};
    }
    return {true, std::to_string(agreements) + " instances, zero disagreements"};
}

// 3. Randomized theorem suite: seed 42, 500 trials, carriers up to 6 points.
//    Zero failures; every theorem at least 20 non-vacuous instances, with the
//    paired theorems measured inside the zero-self-distance family where
//    their hypotheses are satisfiable.
Outcome criterion_search() {
    SearchConfig config;
    config.seed = 42;
    config.trials = 500;
    config.max_points = 6;
    const SearchReport report = search(config);
    if (!report.all_passed()) {
        return {false, std::to_string(report.failures.size()) + " theorem failure(s): " +
                           search_report_to_json(report)["failures"][0].dump()};
    }
    for (TheoremId id : all_theorems()) {
        if (id == TheoremId::Paired || id == TheoremId::PairedConst) continue;
        const std::size_t nv = report.summary.at(id).non_vacuous();
        if (nv < 20) {
            return {false, std::string(theorem_name(id)) + " only " + std::to_string(nv) +
                               " non-vacuous instances"};
        }
    }

    SearchConfig metric_only = config;
    metric_only.families = {Family::Metric};
    const SearchReport metric_report = search(metric_only);
    if (!metric_report.all_passed()) {
        return {false, "failure in the zero-self-distance family"};
    }
    for (TheoremId id : {TheoremId::Paired, TheoremId::PairedConst}) {
        const std::size_t nv = metric_report.summary.at(id).non_vacuous();
        if (nv < 20) {
            return {false, std::string(theorem_name(id)) + " only " + std::to_string(nv) +
                               " non-vacuous metric instances"};
        }
    }
    return {true, "500 trials, zero failures, all theorems >= 20 non-vacuous"};
}

// 4. Diameter bound: on constant-self-distance instances whose limit set has
//    at least two points, diam(LIM^r) <= 2r + 2a exactly.
Outcome criterion_diameter() {
    Rng rng(20240004);
    GenParams params;
    params.family = Family::ConstantSelfDistance;
    std::size_t multi_point = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng.index(5);
        const Space space = gen_random(rng.next(), n, params);
        const Rational a = *self_distance_summary(space).constant;
        const Sequence seq = sample_sequence(rng, n, 3, 4);
        // r at the second-smallest minimal degree guarantees two members.
        std::vector<Rational> degrees;
        for (PointIndex x = 0; x < n; ++x) {
            degrees.push_back(minimal_roughness(space, seq, x, Side::TwoSided));
        }
        std::sort(degrees.begin(), degrees.end());
        for (const Rational& r : {degrees[1], degrees.back(), degrees[1] + Rational(1, 6)}) {
            const PointSet lim = rough_limit_set(space, seq, r, Side::TwoSided);
            if (lim.size() < 2) continue;
            ++multi_point;
            if (diameter(space, lim) > 2 * r + 2 * a) {
                return {false,
                        "bound violated: " +
                            verdict_to_json(check_diameter_bound(space, seq, r)).dump()};
            }
            const TheoremVerdict v = check_diameter_bound(space, seq, r);
            if (!v.holds || !v.hypotheses_met) return {false, "checker disagrees"};
        }
    }
    if (multi_point < 100) {
        return {false, "only " + std::to_string(multi_point) + " multi-point limit sets"};
    }
    return {true, std::to_string(multi_point) + " multi-point limit sets within bound"};
}

// 5. The two-sided minimal degree equals max(right, left) exactly on every
//    randomized instance.
Outcome criterion_sidedness() {
    Rng rng(20240005);
    std::size_t checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + rng.index(6);
        GenParams params;
        params.family = static_cast<Family>(trial % 3);
        const Space space = gen_random(rng.next(), n, params);
        const Sequence seq = sample_sequence(rng, n, 3, 4);
        for (PointIndex x = 0; x < n; ++x) {
            const RoughnessReport rep = roughness_report(space, seq, x);
            if (rep.r_two != max(rep.r_right, rep.r_left)) {
                return {false, "identity fails at trial " + std::to_string(trial) + ", point " +
                                   space.label(x)};
            }
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " candidates, identity exact"};
}

// 6. R-LIM^r is closed in the generated ball topology on every randomized
//    instance with at most 8 points, and the harmonic-space topology matches
//    its golden file byte for byte.
Outcome criterion_closedness() {
    Rng rng(20240006);
    std::size_t checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.index(7); // at most 8 points
        GenParams params;
        params.family = static_cast<Family>(trial % 3);
        const Space space = gen_random(rng.next(), n, params);
        const Topology topo = generate_topology(space);
        const Sequence seq = sample_sequence(rng, n, 3, 4);
        for (const Rational& r : default_r_grid()) {
            if (!is_closed(topo, rough_limit_set(space, seq, r, Side::Right))) {
                return {false, "open right limit set at trial " + std::to_string(trial) +
                                   ", r = " + r.str()};
            }
            ++checked;
        }
    }

    std::ostringstream out, err;
    if (run_cli({"topology", "--space", "example31:2,3", "--format", "json"}, out, err) != 0) {
        return {false, "topology command failed: " + err.str()};
    }
    std::ifstream golden_file(std::string(ROUGHLIM_TEST_DATA_DIR) +
                              "/golden/example31_topology.json");
    if (!golden_file) return {false, "golden file missing"};
    std::ostringstream golden;
    golden << golden_file.rdbuf();
    if (out.str() != golden.str()) return {false, "golden topology mismatch"};
    return {true, std::to_string(checked) + " limit sets closed; golden topology matches"};
}

// 7. Axiom validator: detects every seeded single-axiom mutation of a valid
//    space and reports nothing on valid ones.
Outcome criterion_mutations() {
    Rng rng(20240007);
    std::size_t valid_checked = 0;
    std::size_t mutants_detected = 0;

    const auto contains_axiom = [](const std::vector<AxiomViolation>& violations, Axiom a) {
        return std::any_of(violations.begin(), violations.end(),
                           [&](const AxiomViolation& v) { return v.axiom == a; });
    };

    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + rng.index(4);
        GenParams params;
        params.family = static_cast<Family>(trial % 3);
        const Space space = gen_random(rng.next(), n, params);
        if (!validate_axioms(space.matrix()).empty()) {
            return {false, "false positive on a generated space"};
        }
        ++valid_checked;

        const PointIndex x = rng.index(n);
        PointIndex y = rng.index(n);
        if (y == x) y = (y + 1) % n;
        const Axiom target = static_cast<Axiom>(trial % 4);
        Matrix m = space.matrix();
        switch (target) {
        case Axiom::P1:
            // Self-distance raised above a row neighbor.
            m[x][x] = m[x][y] + 1;
            break;
        case Axiom::P2: {
            // Plant indistancy between the pair of points with the closest
            // self-distances by flattening the connecting entry.
            PointIndex a = 0, b = 1;
            Rational best = abs(m[0][0] - m[1][1]);
            for (PointIndex i = 0; i < n; ++i) {
                for (PointIndex j = i + 1; j < n; ++j) {
                    if (abs(m[i][i] - m[j][j]) < best) {
                        best = abs(m[i][i] - m[j][j]);
                        a = i;
                        b = j;
                    }
                }
            }
            m[b][b] = m[a][a];
            m[a][b] = m[a][a];
            m[b][a] = m[a][a];
            break;
        }
        case Axiom::P3:
            // One-sided bump breaks symmetry and nothing the detector could
            // miss it behind.
            m[x][y] = m[x][y] + 1;
            break;
        case Axiom::P4: {
            // Raise one symmetric entry just above the tightest relaxed
            // triangle bound through any third point.
            PointIndex z0 = (x != 0 && y != 0) ? 0 : ((x != 1 && y != 1) ? 1 : 2);
            Rational bound = m[x][z0] + m[z0][y] - m[z0][z0];
            for (PointIndex z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                bound = min(bound, m[x][z] + m[z][y] - m[z][z]);
            }
            m[x][y] = bound + 1;
            m[y][x] = bound + 1;
            break;
        }
        }
        const auto violations = validate_axioms(m);
        if (violations.empty() || !contains_axiom(violations, target)) {
            return {false, std::string("missed a seeded ") + axiom_name(target) + " mutation"};
        }
        ++mutants_detected;
    }
    return {true, std::to_string(mutants_detected) + "/100 mutants detected, " +
                      std::to_string(valid_checked) + " valid spaces clean"};
}

struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    double budget_seconds; // 0 = report timing only
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"example31 exact degrees", criterion_example31, 1.0},
        {"epsilon-k oracle agreement", criterion_oracle, 30.0},
        {"randomized theorem suite", criterion_search, 120.0},
        {"diameter bound 2r+2a", criterion_diameter, 0.0},
        {"sidedness identity", criterion_sidedness, 0.0},
        {"right limit sets closed", criterion_closedness, 0.0},
        {"axiom mutation detection", criterion_mutations, 0.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = outcome.ok;
        std::string note = outcome.detail;
        if (ok && criteria[i].budget_seconds > 0 && seconds > criteria[i].budget_seconds) {
            ok = false;
            note += " [over budget of " + std::to_string(criteria[i].budget_seconds) + "s]";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name << "  ("
             << seconds << "s)  " << note;
        std::cout << line.str() << '\n';
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
