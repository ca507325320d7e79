#include "roughlim/sequence.hpp"

#include <algorithm>
#include <numeric>

namespace roughlim {

namespace {

void check_sequence(const Space& space, const Sequence& seq) {
    if (seq.cycle.empty()) throw StructuralError("sequence cycle must be nonempty");
    for (PointIndex p : seq.prefix) {
        if (p >= space.points()) throw DomainError("sequence prefix index out of range");
    }
    for (PointIndex p : seq.cycle) {
        if (p >= space.points()) throw DomainError("sequence cycle index out of range");
    }
}

void check_candidate(const Space& space, PointIndex x) {
    if (x >= space.points()) throw DomainError("candidate index out of range");
}

Rational positive_part(const Rational& v) { return v.is_positive() ? v : Rational(0); }

/// Distinct points visited by the sequence (prefix and cycle).
PointSet visited_points(const Sequence& seq) {
    PointSet pts(seq.prefix);
    pts.insert(pts.end(), seq.cycle.begin(), seq.cycle.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

const char* side_name(Side s) {
    switch (s) {
        case Side::TwoSided: return "two_sided";
        case Side::Right: return "right";
        case Side::Left: return "left";
    }
    return "?";
}

PointIndex Sequence::term(std::size_t n) const {
    if (n < prefix.size()) return prefix[n];
    return cycle[(n - prefix.size()) % cycle.size()];
}

Sequence Sequence::normalized() const {
    Sequence s = *this;
    // Cut the cycle to its primitive period.
    const std::size_t p = s.cycle.size();
    for (std::size_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < p && periodic; ++i) periodic = s.cycle[i] == s.cycle[i % d];
        if (periodic) {
            s.cycle.resize(d);
            break;
        }
    }
    // Roll trailing prefix entries into the cycle: if the last prefix term
    // equals the last cycle term, dropping it and rotating the cycle right
    // denotes the same function.
    while (!s.prefix.empty() && s.prefix.back() == s.cycle.back()) {
        s.prefix.pop_back();
        std::rotate(s.cycle.rbegin(), s.cycle.rbegin() + 1, s.cycle.rend());
    }
    return s;
}

bool operator==(const Sequence& a, const Sequence& b) {
    const Sequence na = a.normalized();
    const Sequence nb = b.normalized();
    return na.prefix == nb.prefix && na.cycle == nb.cycle;
}

Rational Profile::limsup() const {
    Rational best = cycle_vals.front();
    for (const auto& v : cycle_vals) best = max(best, v);
    return best;
}

Rational Profile::liminf() const {
    Rational best = cycle_vals.front();
    for (const auto& v : cycle_vals) best = min(best, v);
    return best;
}

Profile value_profile(const Space& space, const Sequence& seq, PointIndex x) {
    check_sequence(space, seq);
    check_candidate(space, x);
    Profile out;
    out.prefix_vals.reserve(seq.prefix.size());
    for (PointIndex p : seq.prefix) out.prefix_vals.push_back(space.distance(p, x));
    out.cycle_vals.reserve(seq.cycle.size());
    for (PointIndex p : seq.cycle) out.cycle_vals.push_back(space.distance(p, x));
    return out;
}

Rational minimal_roughness(const Space& space, const Sequence& seq, PointIndex x, Side side) {
    const Profile profile = value_profile(space, seq, x);
    const Rational& center = space.self_distance(x);
    Rational best(0);
    for (const auto& v : profile.cycle_vals) {
        switch (side) {
            case Side::TwoSided: best = max(best, abs(v - center)); break;
            case Side::Right: best = max(best, positive_part(v - center)); break;
            case Side::Left: best = max(best, positive_part(center - v)); break;
        }
    }
    return best;
}

bool is_r_convergent(const Space& space, const Sequence& seq, PointIndex x, const Rational& r,
                     Side side) {
    if (r.is_negative()) throw DomainError("roughness degree must be nonnegative");
    return minimal_roughness(space, seq, x, side) <= r;
}

PointSet rough_limit_set(const Space& space, const Sequence& seq, const Rational& r, Side side) {
    if (r.is_negative()) throw DomainError("roughness degree must be nonnegative");
    PointSet out;
    for (PointIndex x = 0; x < space.points(); ++x) {
        if (minimal_roughness(space, seq, x, side) <= r) out.push_back(x);
    }
    return out;
}

bool converges_to(const Space& space, const Sequence& seq, PointIndex x) {
    const Profile profile = value_profile(space, seq, x);
    const Rational& center = space.self_distance(x);
    return std::all_of(profile.cycle_vals.begin(), profile.cycle_vals.end(),
                       [&](const Rational& v) { return v == center; });
}

bool is_cauchy(const Space& space, const Sequence& seq) {
    check_sequence(space, seq);
    const Rational first = space.distance(seq.cycle[0], seq.cycle[0]);
    for (PointIndex u : seq.cycle) {
        for (PointIndex v : seq.cycle) {
            if (space.distance(u, v) != first) return false;
        }
    }
    return true;
}

bool is_bounded_sequence(const Space& space, const Sequence& seq, const Rational& bound) {
    check_sequence(space, seq);
    if (!bound.is_positive()) throw DomainError("bound must be positive");
    const PointSet pts = visited_points(seq);
    return diameter(space, pts) < bound;
}

PointSet cluster_points(const Space& space, const Sequence& seq) {
    check_sequence(space, seq);
    PointSet out;
    for (PointIndex c = 0; c < space.points(); ++c) {
        const Rational& center = space.self_distance(c);
        const bool hit = std::any_of(seq.cycle.begin(), seq.cycle.end(), [&](PointIndex p) {
            return space.distance(p, c) == center;
        });
        if (hit) out.push_back(c);
    }
    return out;
}

Sequence arithmetic_subsequence(const Sequence& seq, std::size_t offset, std::size_t step) {
    if (seq.cycle.empty()) throw StructuralError("sequence cycle must be nonempty");
    if (step == 0) throw DomainError("subsequence step must be at least 1");
    const std::size_t m = seq.prefix.size();
    const std::size_t p = seq.cycle.size();

    Sequence out;
    // Terms still inside the original prefix.
    const std::size_t in_prefix = offset >= m ? 0 : (m - offset + step - 1) / step;
    out.prefix.reserve(in_prefix);
    for (std::size_t i = 0; i < in_prefix; ++i) out.prefix.push_back(seq.term(offset + i * step));
    // From there on positions advance by step modulo the cycle, an orbit of
    // length p / gcd(p, step).
    const std::size_t base = (offset + in_prefix * step - m) % p;
    const std::size_t len = p / std::gcd(p, step);
    out.cycle.reserve(len);
    for (std::size_t t = 0; t < len; ++t) out.cycle.push_back(seq.cycle[(base + t * step) % p]);
    return out;
}

Profile pair_profile(const Space& space, const Sequence& seq_x, const Sequence& seq_y) {
    check_sequence(space, seq_x);
    check_sequence(space, seq_y);
    const std::size_t m = std::max(seq_x.prefix.size(), seq_y.prefix.size());
    const std::size_t p = std::lcm(seq_x.cycle.size(), seq_y.cycle.size());
    Profile out;
    out.prefix_vals.reserve(m);
    for (std::size_t n = 0; n < m; ++n) {
        out.prefix_vals.push_back(space.distance(seq_x.term(n), seq_y.term(n)));
    }
    out.cycle_vals.reserve(p);
    for (std::size_t j = 0; j < p; ++j) {
        out.cycle_vals.push_back(space.distance(seq_x.term(m + j), seq_y.term(m + j)));
    }
    return out;
}

Rational real_right_roughness(const Profile& profile, const Rational& target) {
    Rational best(0);
    for (const auto& v : profile.cycle_vals) best = max(best, positive_part(v - target));
    return best;
}

RoughnessReport roughness_report(const Space& space, const Sequence& seq, PointIndex candidate) {
    return RoughnessReport{
        candidate,
        minimal_roughness(space, seq, candidate, Side::TwoSided),
        minimal_roughness(space, seq, candidate, Side::Right),
        minimal_roughness(space, seq, candidate, Side::Left),
    };
}

} // namespace roughlim
