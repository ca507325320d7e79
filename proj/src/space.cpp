#include "roughlim/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace roughlim {

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::P1: return "p1";
        case Axiom::P2: return "p2";
        case Axiom::P3: return "p3";
        case Axiom::P4: return "p4";
    }
    return "?";
}

std::string AxiomViolation::describe(const std::vector<std::string>* labels) const {
    const auto point = [&](PointIndex i) {
        return labels != nullptr && i < labels->size() ? (*labels)[i] : "#" + std::to_string(i);
    };
    std::ostringstream os;
    os << axiom_name(axiom) << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i != 0) os << ",";
        os << point(witness[i]);
    }
    os << "): ";
    switch (axiom) {
        case Axiom::P1:
            os << "p(x,x)=" << lhs << " > p(x,y)=" << rhs;
            break;
        case Axiom::P2:
            os << "distinct points with p(x,x)=p(x,y)=p(y,y)=" << lhs;
            break;
        case Axiom::P3:
            os << "p(x,y)=" << lhs << " != p(y,x)=" << rhs;
            break;
        case Axiom::P4:
            os << "p(x,y)=" << lhs << " > p(x,z)+p(z,y)-p(z,z)=" << rhs;
            break;
    }
    return os.str();
}

AxiomError::AxiomError(std::vector<AxiomViolation> violations)
    : Error([&violations] {
          std::ostringstream os;
          os << "partial metric axioms violated (" << violations.size() << "):";
          for (const auto& v : violations) os << "\n  " << v.describe();
          return os.str();
      }()),
      violations_(std::move(violations)) {}

static void check_matrix_shape(const Matrix& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) throw StructuralError("matrix must have at least one row");
    for (const auto& row : matrix) {
        if (row.size() != n) throw StructuralError("matrix must be square");
        for (const auto& entry : row) {
            if (entry.is_negative()) throw StructuralError("matrix entries must be nonnegative");
        }
    }
}

std::vector<AxiomViolation> validate_axioms(const Matrix& matrix) {
    check_matrix_shape(matrix);
    const std::size_t n = matrix.size();
    std::vector<AxiomViolation> out;

    // p1: p(x,x) <= p(x,y)
    for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y = 0; y < n; ++y) {
            if (x == y) continue;
            if (matrix[x][x] > matrix[x][y]) {
                out.push_back({Axiom::P1, {x, y}, matrix[x][x], matrix[x][y]});
            }
        }
    }
    // p2: indistancy on a distinct pair
    for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y = x + 1; y < n; ++y) {
            if (matrix[x][x] == matrix[x][y] && matrix[x][y] == matrix[y][y]) {
                out.push_back({Axiom::P2, {x, y}, matrix[x][y], matrix[x][y]});
            }
        }
    }
    // p3: symmetry
    for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y = x + 1; y < n; ++y) {
            if (matrix[x][y] != matrix[y][x]) {
                out.push_back({Axiom::P3, {x, y}, matrix[x][y], matrix[y][x]});
            }
        }
    }
    // p4: p(x,y) <= p(x,z) + p(z,y) - p(z,z). The x == y case is a real
    // constraint; z in {x, y} reduces to a tautology and is skipped.
    for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y = 0; y < n; ++y) {
            for (PointIndex z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                const Rational rhs = matrix[x][z] + matrix[z][y] - matrix[z][z];
                if (matrix[x][y] > rhs) {
                    out.push_back({Axiom::P4, {x, y, z}, matrix[x][y], rhs});
                }
            }
        }
    }
    return out;
}

Space::Space(std::vector<std::string> labels, Matrix matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
    if (labels_.empty()) throw StructuralError("space needs at least one point");
    if (labels_.size() != matrix_.size()) {
        throw StructuralError("label count does not match matrix dimension");
    }
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) throw StructuralError("duplicate point label \"" + l + "\"");
    }
    auto violations = validate_axioms(matrix_);
    if (!violations.empty()) throw AxiomError(std::move(violations));
}

std::optional<PointIndex> Space::index_of(const std::string& label) const {
    for (PointIndex i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

PointSet Space::all_points() const {
    PointSet s(points());
    for (PointIndex i = 0; i < s.size(); ++i) s[i] = i;
    return s;
}

Space make_space(std::vector<std::string> labels, Matrix matrix) {
    return Space(std::move(labels), std::move(matrix));
}

static void check_point(const Space& space, PointIndex p, const char* what) {
    if (p >= space.points()) {
        throw DomainError(std::string(what) + " index " + std::to_string(p) + " out of range");
    }
}

static void check_subset(const Space& space, const PointSet& subset) {
    for (PointIndex p : subset) check_point(space, p, "subset point");
}

PointSet open_ball(const Space& space, PointIndex center, const Rational& radius) {
    check_point(space, center, "center");
    if (!radius.is_positive()) throw DomainError("open ball radius must be positive");
    const Rational threshold = space.self_distance(center) + radius;
    PointSet out;
    for (PointIndex y = 0; y < space.points(); ++y) {
        if (space.distance(center, y) < threshold) out.push_back(y);
    }
    return out;
}

PointSet closed_ball(const Space& space, PointIndex center, const Rational& radius) {
    check_point(space, center, "center");
    if (radius.is_negative()) throw DomainError("closed ball radius must be nonnegative");
    const Rational threshold = space.self_distance(center) + radius;
    PointSet out;
    for (PointIndex y = 0; y < space.points(); ++y) {
        if (space.distance(center, y) <= threshold) out.push_back(y);
    }
    return out;
}

Rational diameter(const Space& space, const PointSet& subset) {
    if (subset.empty()) throw DomainError("diameter of an empty subset is undefined");
    check_subset(space, subset);
    Rational best = space.distance(subset[0], subset[0]);
    for (PointIndex a : subset) {
        for (PointIndex b : subset) {
            best = max(best, space.distance(a, b));
        }
    }
    return best;
}

bool is_bounded_set(const Space& space, const PointSet& subset, const Rational& bound) {
    return diameter(space, subset) < bound;
}

SelfDistanceSummary self_distance_summary(const Space& space) {
    const Rational first = space.self_distance(0);
    for (PointIndex i = 1; i < space.points(); ++i) {
        if (space.self_distance(i) != first) return {std::nullopt};
    }
    return {first};
}

bool set_contains(const PointSet& set, PointIndex p) {
    return std::binary_search(set.begin(), set.end(), p);
}

bool is_subset(const PointSet& inner, const PointSet& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

} // namespace roughlim
