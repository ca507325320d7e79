#include "roughlim/theorems.hpp"

#include <algorithm>
#include <utility>

namespace roughlim {

const char* theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::Diam: return "T_DIAM";
    case TheoremId::SidesConv: return "T_SIDES_CONV";
    case TheoremId::SidesRough: return "T_SIDES_ROUGH";
    case TheoremId::BallRlim: return "T_BALL_RLIM";
    case TheoremId::RlimClosed: return "T_RLIM_CLOSED";
    case TheoremId::LimitInRlim: return "T_LIMIT_IN_RLIM";
    case TheoremId::Bounded: return "T_BOUNDED";
    case TheoremId::FourM2M: return "T_4M2M";
    case TheoremId::Subseq: return "T_SUBSEQ";
    case TheoremId::Paired: return "T_PAIRED";
    case TheoremId::PairedConst: return "T_PAIRED_CONST";
    case TheoremId::Product2R: return "T_PRODUCT_2R";
    case TheoremId::ClusterBall: return "T_CLUSTER_BALL";
    }
    return "T_UNKNOWN";
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = {
        TheoremId::Diam,       TheoremId::SidesConv,   TheoremId::SidesRough,
        TheoremId::BallRlim,   TheoremId::RlimClosed,  TheoremId::LimitInRlim,
        TheoremId::Bounded,    TheoremId::FourM2M,     TheoremId::Subseq,
        TheoremId::Paired,     TheoremId::PairedConst, TheoremId::Product2R,
        TheoremId::ClusterBall,
    };
    return ids;
}

namespace {

Json base_witness(const Space& space, const Sequence& seq, const Rational& r) {
    Json w;
    w["space"] = space_to_json(space);
    w["sequence"] = sequence_to_json(seq);
    w["r"] = rational_to_json(r);
    return w;
}

TheoremVerdict vacuous_pass(TheoremId id, Json witness) {
    TheoremVerdict v;
    v.theorem_id = id;
    v.holds = true;
    v.hypotheses_met = false;
    v.witness = std::move(witness);
    return v;
}

PointSet visited_points(const Sequence& seq) {
    PointSet out = seq.prefix;
    out.insert(out.end(), seq.cycle.begin(), seq.cycle.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational max_cycle_self_distance(const Space& space, const Sequence& seq) {
    Rational m = space.self_distance(seq.cycle.front());
    for (PointIndex z : seq.cycle) m = max(m, space.self_distance(z));
    return m;
}

} // namespace

TheoremVerdict check_diameter_bound(const Space& space, const Sequence& seq, const Rational& r) {
    Json w = base_witness(space, seq, r);
    const SelfDistanceSummary diag = self_distance_summary(space);
    if (!diag.constant.has_value()) {
        w["reason"] = "self-distance not constant";
        return vacuous_pass(TheoremId::Diam, std::move(w));
    }
    TheoremVerdict v;
    v.theorem_id = TheoremId::Diam;
    v.hypotheses_met = true;
    const Rational bound = 2 * r + 2 * diag.constant.value();
    const PointSet lim = rough_limit_set(space, seq, r, Side::TwoSided);
    w["limit_set"] = point_set_to_json(space, lim);
    w["bound"] = rational_to_json(bound);
    if (lim.size() < 2) {
        w["diameter"] = nullptr;
        v.holds = true;
    } else {
        const Rational diam = diameter(space, lim);
        w["diameter"] = rational_to_json(diam);
        v.holds = diam <= bound;
    }
    v.witness = std::move(w);
    return v;
}

TheoremVerdict check_sidedness(const Space& space, const Sequence& seq, PointIndex x,
                               const Rational& r) {
    TheoremVerdict v;
    v.theorem_id = r == Rational(0) ? TheoremId::SidesConv : TheoremId::SidesRough;
    Json w = base_witness(space, seq, r);
    w["candidate"] = space.label(x);
    w["r_two"] = rational_to_json(minimal_roughness(space, seq, x, Side::TwoSided));
    w["r_right"] = rational_to_json(minimal_roughness(space, seq, x, Side::Right));
    w["r_left"] = rational_to_json(minimal_roughness(space, seq, x, Side::Left));
    const auto equivalent_at = [&](const Rational& rr) {
        const bool two = is_r_convergent(space, seq, x, rr, Side::TwoSided);
        const bool right = is_r_convergent(space, seq, x, rr, Side::Right);
        const bool left = is_r_convergent(space, seq, x, rr, Side::Left);
        return two == (right && left);
    };
    v.hypotheses_met = true;
    v.holds = equivalent_at(r) && equivalent_at(Rational(0));
    v.witness = std::move(w);
    return v;
}

TheoremVerdict check_ball_in_rlim(const Space& space, const Sequence& seq, PointIndex x,
                                  const Rational& r) {
    Json w = base_witness(space, seq, r);
    w["candidate"] = space.label(x);
    if (!converges_to(space, seq, x)) {
        w["reason"] = "sequence does not converge to the candidate";
        return vacuous_pass(TheoremId::BallRlim, std::move(w));
    }
    TheoremVerdict v;
    v.theorem_id = TheoremId::BallRlim;
    v.hypotheses_met = true;
    v.holds = true;
    PointSet eligible;
    for (PointIndex y : closed_ball(space, x, r)) {
        if (space.self_distance(y) == space.self_distance(x)) eligible.push_back(y);
    }
    w["eligible"] = point_set_to_json(space, eligible);
    for (PointIndex y : eligible) {
        if (!is_r_convergent(space, seq, y, r, Side::Right)) {
            v.holds = false;
            w["counterexample"] = space.label(y);
            w["right_degree"] = rational_to_json(minimal_roughness(space, seq, y, Side::Right));
            break;
        }
    }
    v.witness = std::move(w);
    return v;
}

TheoremVerdict check_rlim_closed(const Space& space, const Sequence& seq, const Rational& r,
                                 std::size_t topology_cap, const Topology* cached) {
    TheoremVerdict v;
    v.theorem_id = TheoremId::RlimClosed;
    Json w = base_witness(space, seq, r);
    const PointSet rlim = rough_limit_set(space, seq, r, Side::Right);
    w["right_limit_set"] = point_set_to_json(space, rlim);
    const auto finish = [&](const Topology& topo) {
        v.hypotheses_met = true;
        v.holds = is_closed(topo, rlim);
        if (!v.holds) w["closure"] = point_set_to_json(space, closure(topo, rlim));
    };
    if (cached != nullptr) {
        finish(*cached);
    } else {
        try {
            finish(generate_topology(space, topology_cap));
        } catch (const TopologyCapError&) {
            v.skipped = true;
            v.hypotheses_met = false;
            v.holds = true;
            w["reason"] = "carrier above topology cap";
        }
    }
    v.witness = std::move(w);
    return v;
}

TheoremVerdict check_limit_in_rlim(const Space& space, const Sequence& seq, const Rational& r,
                                   const Sequence& probe_seq, LimitSource source) {
    Json w = base_witness(space, seq, r);
    w["probe"] = sequence_to_json(probe_seq);
    w["source"] = source == LimitSource::RightSet ? "right" : "two_sided";
    const Side source_side = source == LimitSource::RightSet ? Side::Right : Side::TwoSided;
    const PointSet source_set = rough_limit_set(space, seq, r, source_side);
    const PointSet right_set = source == LimitSource::RightSet
                                   ? source_set
                                   : rough_limit_set(space, seq, r, Side::Right);
    w["source_set"] = point_set_to_json(space, source_set);
    w["right_limit_set"] = point_set_to_json(space, right_set);

    const bool values_inside = is_subset(visited_points(probe_seq), source_set);
    PointSet probe_limits;
    for (PointIndex y : space.all_points()) {
        if (converges_to(space, probe_seq, y)) probe_limits.push_back(y);
    }
    w["probe_limits"] = point_set_to_json(space, probe_limits);
    if (!values_inside || probe_limits.empty()) {
        w["reason"] = values_inside ? "probe does not converge" : "probe leaves the source set";
        return vacuous_pass(TheoremId::LimitInRlim, std::move(w));
    }
    TheoremVerdict v;
    v.theorem_id = TheoremId::LimitInRlim;
    v.hypotheses_met = true;
    v.holds = is_subset(probe_limits, right_set);
    v.witness = std::move(w);
    return v;
}

TheoremVerdict check_bounded(const Space& space, const Sequence& seq, PointIndex x,
                             const Rational& r) {
    Json w = base_witness(space, seq, r);
    w["candidate"] = space.label(x);
    if (!is_r_convergent(space, seq, x, r, Side::TwoSided)) {
        w["reason"] = "sequence is not r-convergent to the candidate";
        return vacuous_pass(TheoremId::Bounded, std::move(w));
    }
    TheoremVerdict v;
    v.theorem_id = TheoremId::Bounded;
    v.hypotheses_met = true;
    const Rational sup = diameter(space, visited_points(seq));
    const Rational bound = sup + 1;
    w["sup"] = rational_to_json(sup);
    w["bound"] = rational_to_json(bound);
    v.holds = is_bounded_sequence(space, seq, bound);
    v.witness = std::move(w);
    return v;
}

TheoremVerdict check_4m_2m(const Space& space, const Sequence& seq, const Rational& bound,
                           std::size_t probe_position) {
    Json w;
    w["space"] = space_to_json(space);
    w["sequence"] = sequence_to_json(seq);
    w["M"] = rational_to_json(bound);
    w["probe_position"] = probe_position;
    const PointIndex probe = seq.term(probe_position);
    w["probe"] = space.label(probe);
    if (!is_bounded_sequence(space, seq, bound)) {
        w["reason"] = "sequence is not bounded by M";
        return vacuous_pass(TheoremId::FourM2M, std::move(w));
    }
    TheoremVerdict v;
    v.theorem_id = TheoremId::FourM2M;
    v.hypotheses_met = true;
    const Rational right = minimal_roughness(space, seq, probe, Side::Right);
    const Rational left = minimal_roughness(space, seq, probe, Side::Left);
    w["right_degree"] = rational_to_json(right);
    w["left_degree"] = rational_to_json(left);
    w["right_bound"] = rational_to_json(4 * bound);
    w["left_bound"] = rational_to_json(2 * bound);
    v.holds = right <= 4 * bound && left <= 2 * bound;
    v.witness = std::move(w);
    return v;
}

TheoremVerdict check_subsequence(const Space& space, const Sequence& seq, const Rational& r,
                                 std::size_t offset, std::size_t step) {
    const Sequence sub = arithmetic_subsequence(seq, offset, step);
    const PointSet lim = rough_limit_set(space, seq, r, Side::TwoSided);
    const PointSet sub_lim = rough_limit_set(space, sub, r, Side::TwoSided);
    Json w = base_witness(space, seq, r);
    w["offset"] = offset;
    w["step"] = step;
    w["subsequence"] = sequence_to_json(sub);
    w["limit_set"] = point_set_to_json(space, lim);
    w["sub_limit_set"] = point_set_to_json(space, sub_lim);
    TheoremVerdict v;
    v.theorem_id = TheoremId::Subseq;
    v.hypotheses_met = !lim.empty();
    v.holds = is_subset(lim, sub_lim);
    v.witness = std::move(w);
    return v;
}

TheoremVerdict check_paired(const Space& space, const Sequence& seq_x, const Sequence& seq_y,
                            PointIndex x, const Rational& r, const PairedVariant& variant) {
    if (variant.kind == PairedVariant::ConstantD) {
        // The converse direction of the constant theorem: the budget applies
        // to seq_y's self-distances and the conclusion transfers to seq_x.
        PairedVariant swapped{PairedVariant::ConstantC, variant.budget};
        TheoremVerdict v = check_paired(space, seq_y, seq_x, x, r, swapped);
        v.witness["variant"] = "constant_d";
        return v;
    }
    const bool vanishing = variant.kind == PairedVariant::Vanishing;
    const TheoremId id = vanishing ? TheoremId::Paired : TheoremId::PairedConst;
    Json w;
    w["space"] = space_to_json(space);
    w["sequence_x"] = sequence_to_json(seq_x);
    w["sequence_y"] = sequence_to_json(seq_y);
    w["candidate"] = space.label(x);
    w["r"] = rational_to_json(r);
    w["variant"] = vanishing ? "vanishing" : "constant_c";
    if (!vanishing) w["budget"] = rational_to_json(variant.budget);

    const Profile gap = pair_profile(space, seq_x, seq_y);
    const bool gap_vanishes = gap.limsup() == Rational(0); // values are >= 0
    const Rational self = max_cycle_self_distance(space, seq_x);
    w["gap_limsup"] = rational_to_json(gap.limsup());
    w["max_cycle_self_distance"] = rational_to_json(self);
    const bool self_ok = vanishing ? self == Rational(0) : self <= variant.budget;
    if (!gap_vanishes || !self_ok) {
        w["reason"] = gap_vanishes ? "self-distance hypothesis fails" : "gap does not vanish";
        return vacuous_pass(id, std::move(w));
    }
    TheoremVerdict v;
    v.theorem_id = id;
    v.hypotheses_met = true;
    const bool antecedent = is_r_convergent(space, seq_x, x, r, Side::TwoSided);
    w["antecedent"] = antecedent;
    if (!antecedent) {
        v.holds = true;
    } else {
        const Rational allowance = vanishing ? r : r + variant.budget;
        const Rational right = minimal_roughness(space, seq_y, x, Side::Right);
        w["allowance"] = rational_to_json(allowance);
        w["right_degree"] = rational_to_json(right);
        v.holds = right <= allowance;
    }
    v.witness = std::move(w);
    return v;
}

TheoremVerdict check_product_2r(const Space& space, const Sequence& seq_x, const Sequence& seq_y,
                                PointIndex x, PointIndex y, const Rational& r) {
    Json w;
    w["space"] = space_to_json(space);
    w["sequence_x"] = sequence_to_json(seq_x);
    w["sequence_y"] = sequence_to_json(seq_y);
    w["x"] = space.label(x);
    w["y"] = space.label(y);
    w["r"] = rational_to_json(r);
    const bool hx = is_r_convergent(space, seq_x, x, r, Side::TwoSided);
    const bool hy = is_r_convergent(space, seq_y, y, r, Side::TwoSided);
    if (!hx || !hy) {
        w["reason"] = "one of the sequences is not r-convergent to its target";
        return vacuous_pass(TheoremId::Product2R, std::move(w));
    }
    TheoremVerdict v;
    v.theorem_id = TheoremId::Product2R;
    v.hypotheses_met = true;
    const Profile prof = pair_profile(space, seq_x, seq_y);
    const Rational target = space.distance(x, y);
    const Rational right = real_right_roughness(prof, target);
    w["target"] = rational_to_json(target);
    w["right_roughness"] = rational_to_json(right);
    w["bound"] = rational_to_json(2 * r);
    v.holds = right <= 2 * r;
    v.witness = std::move(w);
    return v;
}

TheoremVerdict check_cluster_ball(const Space& space, const Sequence& seq, PointIndex c,
                                  const Rational& r) {
    Json w = base_witness(space, seq, r);
    w["candidate"] = space.label(c);
    const SelfDistanceSummary diag = self_distance_summary(space);
    const PointSet clusters = cluster_points(space, seq);
    w["cluster_points"] = point_set_to_json(space, clusters);
    if (!diag.constant.has_value() || !set_contains(clusters, c)) {
        w["reason"] = diag.constant.has_value() ? "candidate is not a cluster point"
                                                : "self-distance not constant";
        return vacuous_pass(TheoremId::ClusterBall, std::move(w));
    }
    TheoremVerdict v;
    v.theorem_id = TheoremId::ClusterBall;
    v.hypotheses_met = true;
    const PointSet lim = rough_limit_set(space, seq, r, Side::TwoSided);
    const PointSet ball = closed_ball(space, c, r);
    w["limit_set"] = point_set_to_json(space, lim);
    w["closed_ball"] = point_set_to_json(space, ball);
    v.holds = is_subset(lim, ball);
    v.witness = std::move(w);
    return v;
}

std::vector<Rational> default_r_grid() {
    return {Rational(0),      Rational(1, 6), Rational(1, 3), Rational(1, 2),
            Rational(1),      Rational(2),    Rational(4),    Rational(12)};
}

Sequence sample_sequence(Rng& rng, std::size_t points, std::size_t max_prefix,
                         std::size_t max_cycle) {
    Sequence s;
    const std::size_t prefix_len = rng.index(max_prefix + 1);
    const std::size_t cycle_len = 1 + rng.index(std::max<std::size_t>(max_cycle, 1));
    for (std::size_t i = 0; i < prefix_len; ++i) s.prefix.push_back(rng.index(points));
    for (std::size_t i = 0; i < cycle_len; ++i) s.cycle.push_back(rng.index(points));
    return s;
}

namespace {

void record(SearchReport& report, const TheoremVerdict& v) {
    SearchCounts& row = report.summary[v.theorem_id];
    if (v.skipped) {
        ++row.skipped;
    } else if (!v.hypotheses_met) {
        ++row.vacuous;
    } else if (v.holds) {
        ++row.pass;
    } else {
        ++row.fail;
    }
    if (!v.holds) report.failures.push_back(v);
}

void init_summary(SearchReport& report) {
    for (TheoremId id : all_theorems()) report.summary[id] = SearchCounts{};
}

/// Partner with the same eventual values as seq but its own prefix: the
/// cycle is rotated so aligned positions agree, which makes the paired
/// theorems' gap hypothesis hold exactly in zero-self-distance spaces.
Sequence aligned_partner(Rng& rng, const Sequence& seq, std::size_t points) {
    Sequence out;
    const std::size_t prefix_len = rng.index(4);
    for (std::size_t i = 0; i < prefix_len; ++i) out.prefix.push_back(rng.index(points));
    const auto cycle_len = static_cast<long long>(seq.cycle.size());
    const long long diff = static_cast<long long>(prefix_len) -
                           static_cast<long long>(seq.prefix.size());
    const auto shift = static_cast<std::size_t>(((diff % cycle_len) + cycle_len) % cycle_len);
    for (std::size_t j = 0; j < seq.cycle.size(); ++j) {
        out.cycle.push_back(seq.cycle[(j + shift) % seq.cycle.size()]);
    }
    return out;
}

/// Probe sequence whose values stay inside the given set and which converges
/// (constant tail at a member). Falls back to an arbitrary point when the
/// set is empty, which makes the instance vacuous by construction.
Sequence sampled_probe(Rng& rng, const PointSet& set, std::size_t points) {
    Sequence probe;
    if (set.empty()) {
        probe.cycle.push_back(rng.index(points));
        return probe;
    }
    const std::size_t prefix_len = rng.index(3);
    for (std::size_t i = 0; i < prefix_len; ++i) probe.prefix.push_back(set[rng.index(set.size())]);
    probe.cycle.push_back(set[rng.index(set.size())]);
    return probe;
}

} // namespace

SearchReport search(const SearchConfig& config) {
    SearchReport report;
    init_summary(report);
    if (config.trials == 0 || config.families.empty()) return report;

    Rng rng(config.seed);
    const std::size_t max_points = std::max<std::size_t>(config.max_points, 2);
    const std::size_t max_cycle = std::max<std::size_t>(config.max_cycle, 1);

    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        GenParams params;
        params.family = config.families[trial % config.families.size()];
        const std::size_t n = 2 + rng.index(max_points - 1);
        const Space space = gen_random(rng.next(), n, params);

        const Sequence sx = sample_sequence(rng, n, 3, max_cycle);
        const Sequence s2 = sample_sequence(rng, n, 3, max_cycle);
        const Sequence sy = aligned_partner(rng, sx, n);
        const PointIndex x = rng.index(n);
        const PointIndex y = rng.index(n);
        const std::size_t offset = rng.index(4);
        const std::size_t step = 1 + rng.index(3);
        const Rational c_budget = rng.rational(2, {1, 2});
        const Rational d_budget = rng.rational(2, {1, 2});

        const PointSet clusters = cluster_points(space, sx);
        const PointIndex c =
            clusters.empty() ? rng.index(n) : clusters[rng.index(clusters.size())];

        Sequence conv; // converges to x by construction
        const std::size_t conv_prefix = rng.index(3);
        for (std::size_t i = 0; i < conv_prefix; ++i) conv.prefix.push_back(rng.index(n));
        conv.cycle.push_back(x);

        const Rational sup = diameter(space, visited_points(sx));
        const bool tight = rng.chance(1, 4);
        const Rational bound_m = (tight && sup > Rational(0)) ? sup : sup + 1;
        const std::size_t horizon = sx.prefix.size() + 2 * sx.cycle.size();
        const std::size_t probe_pos = rng.index(horizon);

        std::optional<Topology> topo;
        try {
            topo.emplace(generate_topology(space, config.topology_cap));
        } catch (const TopologyCapError&) {
            // leave empty; the checker records the skip itself
        }

        for (const Rational& r : config.r_grid) {
            record(report, check_diameter_bound(space, sx, r));
            record(report, check_sidedness(space, sx, x, r));
            record(report, check_ball_in_rlim(space, conv, x, r));
            record(report, check_ball_in_rlim(space, sx, x, r));
            record(report, check_rlim_closed(space, sx, r, config.topology_cap,
                                             topo ? &*topo : nullptr));
            for (const LimitSource source : {LimitSource::RightSet, LimitSource::TwoSidedSet}) {
                const Side side =
                    source == LimitSource::RightSet ? Side::Right : Side::TwoSided;
                const PointSet set = rough_limit_set(space, sx, r, side);
                const Sequence probe = sampled_probe(rng, set, n);
                record(report, check_limit_in_rlim(space, sx, r, probe, source));
            }
            record(report, check_bounded(space, sx, x, r));
            record(report, check_subsequence(space, sx, r, offset, step));
            record(report, check_paired(space, sx, sy, x, r, {PairedVariant::Vanishing, {}}));
            record(report, check_paired(space, sy, sx, x, r, {PairedVariant::Vanishing, {}}));
            record(report,
                   check_paired(space, sx, sy, x, r, {PairedVariant::ConstantC, c_budget}));
            record(report,
                   check_paired(space, sx, sy, x, r, {PairedVariant::ConstantD, d_budget}));
            record(report, check_product_2r(space, sx, s2, x, y, r));
            record(report, check_cluster_ball(space, sx, c, r));
        }
        record(report, check_sidedness(space, sx, x, Rational(0)));
        record(report, check_4m_2m(space, sx, bound_m, probe_pos));
    }
    return report;
}

SearchReport run_instance_suite(const Space& space, const Sequence& seq,
                                const std::optional<Sequence>& second, const Rational& r,
                                std::size_t topology_cap) {
    SearchReport report;
    init_summary(report);
    const std::size_t n = space.points();
    const Sequence& sx = seq;
    const Sequence sy = second.value_or(sx);

    std::optional<Topology> topo;
    try {
        topo.emplace(generate_topology(space, topology_cap));
    } catch (const TopologyCapError&) {
    }

    record(report, check_diameter_bound(space, sx, r));
    record(report, check_rlim_closed(space, sx, r, topology_cap, topo ? &*topo : nullptr));

    const Rational c_budget = max_cycle_self_distance(space, sx);
    const Rational d_budget = max_cycle_self_distance(space, sy);
    for (PointIndex p = 0; p < n; ++p) {
        record(report, check_sidedness(space, sx, p, r));
        record(report, check_sidedness(space, sx, p, Rational(0)));
        record(report, check_ball_in_rlim(space, sx, p, r));
        record(report, check_bounded(space, sx, p, r));
        record(report, check_cluster_ball(space, sx, p, r));
        record(report, check_paired(space, sx, sy, p, r, {PairedVariant::Vanishing, {}}));
        record(report, check_paired(space, sy, sx, p, r, {PairedVariant::Vanishing, {}}));
        record(report, check_paired(space, sx, sy, p, r, {PairedVariant::ConstantC, c_budget}));
        record(report, check_paired(space, sx, sy, p, r, {PairedVariant::ConstantD, d_budget}));
        for (PointIndex q = 0; q < n; ++q) {
            record(report, check_product_2r(space, sx, sy, p, q, r));
        }
    }

    for (const LimitSource source : {LimitSource::RightSet, LimitSource::TwoSidedSet}) {
        const Side side = source == LimitSource::RightSet ? Side::Right : Side::TwoSided;
        const PointSet set = rough_limit_set(space, sx, r, side);
        if (set.empty()) {
            Sequence probe;
            probe.cycle.push_back(0);
            record(report, check_limit_in_rlim(space, sx, r, probe, source));
            continue;
        }
        for (PointIndex z : set) {
            Sequence probe;
            probe.cycle.push_back(z);
            record(report, check_limit_in_rlim(space, sx, r, probe, source));
        }
    }

    const std::size_t pairs[][2] = {{0, 1}, {0, 2}, {1, 2}, {2, 3}};
    for (const auto& os : pairs) {
        record(report, check_subsequence(space, sx, r, os[0], os[1]));
    }

    const Rational sup = diameter(space, visited_points(sx));
    const Rational bound_m = sup + 1;
    const std::size_t horizon = sx.prefix.size() + sx.cycle.size();
    for (std::size_t pos = 0; pos < std::min<std::size_t>(horizon, 4); ++pos) {
        record(report, check_4m_2m(space, sx, bound_m, pos));
    }
    return report;
}

Json verdict_to_json(const TheoremVerdict& verdict) {
    Json out;
    out["theorem"] = theorem_name(verdict.theorem_id);
    out["holds"] = verdict.holds;
    out["hypotheses_met"] = verdict.hypotheses_met;
    out["skipped"] = verdict.skipped;
    out["witness"] = verdict.witness;
    return out;
}

Json search_report_to_json(const SearchReport& report) {
    Json summary = Json::object();
    for (const auto& [id, row] : report.summary) {
        Json cell;
        cell["pass"] = row.pass;
        cell["fail"] = row.fail;
        cell["vacuous"] = row.vacuous;
        cell["skipped"] = row.skipped;
        summary[theorem_name(id)] = cell;
    }
    Json failures = Json::array();
    for (const TheoremVerdict& v : report.failures) failures.push_back(verdict_to_json(v));
    Json out;
    out["summary"] = summary;
    out["failures"] = failures;
    return out;
}

} // namespace roughlim
