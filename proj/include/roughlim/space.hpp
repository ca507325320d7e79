#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roughlim/errors.hpp"
#include "roughlim/rational.hpp"

namespace roughlim {

using PointIndex = std::size_t;

/// Sorted, duplicate-free list of point indices.
using PointSet = std::vector<PointIndex>;

using Matrix = std::vector<std::vector<Rational>>;

enum class Axiom { P1, P2, P3, P4 };

const char* axiom_name(Axiom a);

/// One concrete failure of a partial-metric axiom. Re-evaluating the named
/// axiom at the witness indices reproduces lhs/rhs and the failed comparison.
struct AxiomViolation {
    Axiom axiom;
    std::vector<PointIndex> witness; // two indices for p1-p3, three for p4
    Rational lhs;
    Rational rhs;

    std::string describe(const std::vector<std::string>* labels = nullptr) const;
};

/// Raised when construction of a Space hits axiom violations.
class AxiomError : public Error {
public:
    explicit AxiomError(std::vector<AxiomViolation> violations);
    const std::vector<AxiomViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<AxiomViolation> violations_;
};

/// Checks p1-p4 against a square nonnegative matrix and returns every
/// violation found, each with a concrete witness. An empty result means the
/// matrix is a partial metric. Non-square or negative input is a structural
/// error, not an axiom violation.
///
///   p1: p(x,x) <= p(x,y)
///   p2: p(x,x) = p(x,y) = p(y,y) only for x = y (checked on distinct pairs)
///   p3: p(x,y) = p(y,x)
///   p4: p(x,y) <= p(x,z) + p(z,y) - p(z,z)
std::vector<AxiomViolation> validate_axioms(const Matrix& matrix);

/// Finite partial metric space: labeled points plus the exact distance
/// matrix. Immutable after construction; construction validates p1-p4.
class Space {
public:
    Space(std::vector<std::string> labels, Matrix matrix);

    std::size_t points() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(PointIndex i) const { return labels_.at(i); }
    const Matrix& matrix() const noexcept { return matrix_; }

    const Rational& distance(PointIndex i, PointIndex j) const { return matrix_.at(i).at(j); }
    const Rational& self_distance(PointIndex i) const { return matrix_.at(i).at(i); }

    std::optional<PointIndex> index_of(const std::string& label) const;

    /// All point indices, i.e. {0, ..., points()-1}.
    PointSet all_points() const;

private:
    std::vector<std::string> labels_;
    Matrix matrix_;
};

/// Validating constructor; throws AxiomError with the full violation list,
/// or StructuralError for shape problems.
Space make_space(std::vector<std::string> labels, Matrix matrix);

/// {y : p(center,y) < p(center,center) + radius}; requires radius > 0.
PointSet open_ball(const Space& space, PointIndex center, const Rational& radius);

/// {y : p(center,y) <= p(center,center) + radius}; requires radius >= 0.
PointSet closed_ball(const Space& space, PointIndex center, const Rational& radius);

/// Max of p over all pairs from the subset (self-pairs included, so a
/// singleton {x} has diameter p(x,x)). Requires a nonempty subset.
Rational diameter(const Space& space, const PointSet& subset);

/// True iff diameter(subset) < M, strictly.
bool is_bounded_set(const Space& space, const PointSet& subset, const Rational& bound);

/// Present iff every diagonal entry has the same value.
struct SelfDistanceSummary {
    std::optional<Rational> constant;
};

SelfDistanceSummary self_distance_summary(const Space& space);

// PointSet helpers shared across modules.
bool set_contains(const PointSet& set, PointIndex p);
bool is_subset(const PointSet& inner, const PointSet& outer);

} // namespace roughlim
