#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "roughlim/generators.hpp"
#include "roughlim/rng.hpp"
#include "roughlim/sequence.hpp"
#include "roughlim/serialize.hpp"
#include "roughlim/topology.hpp"

namespace roughlim {

enum class TheoremId {
    Diam,        // diam(LIM^r) <= 2r + 2a under constant self-distance a
    SidesConv,   // convergent iff convergent from right and left (r = 0)
    SidesRough,  // r-convergent iff r-convergent from right and left
    BallRlim,    // {y in closed ball_r(x) : p(y,y)=p(x,x)} in R-LIM^r for convergent sequences
    RlimClosed,  // R-LIM^r is closed in the ball topology
    LimitInRlim, // limits of convergent probes inside LIM^r / R-LIM^r land in R-LIM^r
    Bounded,     // every r-convergent sequence is bounded
    FourM2M,     // bounded by M => right degree <= 4M and left degree <= 2M toward any term
    Subseq,      // LIM^r of the sequence is contained in LIM^r of any subsequence
    Paired,      // vanishing gap + vanishing self-distance transfers r-convergence (right)
    PairedConst, // gap vanishing + self-distance <= c transfers as (r + c) from right
    Product2R,   // p(x_n,y_n) -> p(x,y) from right with degree 2r
    ClusterBall, // LIM^r within the closed r-ball of any cluster point (constant self-distance)
};

const char* theorem_name(TheoremId id);
const std::vector<TheoremId>& all_theorems();

/// Outcome of checking one theorem instance. holds may be false only when
/// the hypotheses were met; vacuous instances (hypotheses_met == false) hold
/// by convention. skipped marks instances the checker refused to evaluate
/// (carrier above the topology cap); they hold vacuously as well.
struct TheoremVerdict {
    TheoremId theorem_id;
    bool holds = true;
    bool hypotheses_met = false;
    bool skipped = false;
    Json witness;
};

// One checker per theorem. Each returns pass/fail plus a witness carrying
// the full instance (space, sequences, parameters, intermediate values), so
// any failure is replayable without the original run.

TheoremVerdict check_diameter_bound(const Space& space, const Sequence& seq, const Rational& r);

TheoremVerdict check_sidedness(const Space& space, const Sequence& seq, PointIndex x,
                               const Rational& r);

TheoremVerdict check_ball_in_rlim(const Space& space, const Sequence& seq, PointIndex x,
                                  const Rational& r);

TheoremVerdict check_rlim_closed(const Space& space, const Sequence& seq, const Rational& r,
                                 std::size_t topology_cap = kDefaultTopologyCap,
                                 const Topology* cached = nullptr);

/// Which limit set the probe must live in; the conclusion is membership of
/// the probe's limits in R-LIM^r either way.
enum class LimitSource { RightSet, TwoSidedSet };

TheoremVerdict check_limit_in_rlim(const Space& space, const Sequence& seq, const Rational& r,
                                   const Sequence& probe_seq,
                                   LimitSource source = LimitSource::RightSet);

TheoremVerdict check_bounded(const Space& space, const Sequence& seq, PointIndex x,
                             const Rational& r);

TheoremVerdict check_4m_2m(const Space& space, const Sequence& seq, const Rational& bound,
                           std::size_t probe_position);

TheoremVerdict check_subsequence(const Space& space, const Sequence& seq, const Rational& r,
                                 std::size_t offset, std::size_t step);

struct PairedVariant {
    enum Kind { Vanishing, ConstantC, ConstantD } kind = Vanishing;
    Rational budget; // c for ConstantC, d for ConstantD
};

TheoremVerdict check_paired(const Space& space, const Sequence& seq_x, const Sequence& seq_y,
                            PointIndex x, const Rational& r, const PairedVariant& variant);

TheoremVerdict check_product_2r(const Space& space, const Sequence& seq_x, const Sequence& seq_y,
                                PointIndex x, PointIndex y, const Rational& r);

TheoremVerdict check_cluster_ball(const Space& space, const Sequence& seq, PointIndex c,
                                  const Rational& r);

std::vector<Rational> default_r_grid();

/// Randomized counterexample search configuration. A (seed, config) pair
/// fully determines every generated instance and thus the report bytes.
struct SearchConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t max_points = 6;
    std::size_t max_cycle = 4;
    std::vector<Rational> r_grid = default_r_grid();
    std::vector<Family> families = {Family::Metric, Family::ConstantSelfDistance,
                                    Family::LipschitzWeights};
    std::size_t topology_cap = kDefaultTopologyCap;
};

struct SearchCounts {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t vacuous = 0;
    std::size_t skipped = 0;

    std::size_t non_vacuous() const { return pass + fail; }
};

struct SearchReport {
    std::map<TheoremId, SearchCounts> summary;
    std::vector<TheoremVerdict> failures;

    bool all_passed() const { return failures.empty(); }
};

/// Runs every checker over randomly generated spaces, sequences and
/// parameters. Expected outcome: zero failures; any failure is returned with
/// its full witness, never suppressed.
SearchReport search(const SearchConfig& config);

/// Runs the whole checker battery against one concrete instance, enumerating
/// candidates (used by the CLI's one-shot theorem command).
SearchReport run_instance_suite(const Space& space, const Sequence& seq,
                                const std::optional<Sequence>& second, const Rational& r,
                                std::size_t topology_cap = kDefaultTopologyCap);

/// {"summary": {name: {"pass": n, "fail": n, "vacuous": n, "skipped": n}},
///  "failures": [verdicts]}
Json search_report_to_json(const SearchReport& report);
Json verdict_to_json(const TheoremVerdict& verdict);

/// Random eventually periodic sequence over a carrier of the given size.
Sequence sample_sequence(Rng& rng, std::size_t points, std::size_t max_prefix,
                         std::size_t max_cycle);

} // namespace roughlim
