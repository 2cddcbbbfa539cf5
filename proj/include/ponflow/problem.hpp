#ifndef PONFLOW_PROBLEM_HPP
#define PONFLOW_PROBLEM_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ponflow {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };
enum class VarKind { continuous, binary };

/// What a variable stands for in the shuffle-routing model. Lets a solver
/// point be mapped back to flows/scale/indicators without name parsing.
struct VarRole {
    enum class Kind { none, flow, scale, indicator };
    Kind kind = Kind::none;
    int commodity = -1;  // flow only
    int arc = -1;        // flow only
    int device = -1;     // indicator only
};

struct Variable {
    std::string name;
    double lower = 0.0;
    double upper = kInf;
    VarKind kind = VarKind::continuous;
    VarRole role;
};

struct LinearConstraint {
    std::string name;
    std::vector<std::pair<int, double>> terms;  // (variable index, coefficient)
    Relation rel = Relation::less_equal;
    double rhs = 0.0;
};

/// Solver-neutral normal form: bounded variables, sparse linear rows, one
/// linear objective. Binary variables carry [0,1] bounds by construction.
class OptimizationProblem {
public:
    Sense sense = Sense::minimize;
    std::vector<Variable> variables;
    std::vector<LinearConstraint> constraints;
    std::vector<std::pair<int, double>> objective;  // sparse (var, coeff)

    // Set by the shuffle formulation when the demand set has no routable
    // commodity; downstream reporting short-circuits to T=0, power=0.
    bool degenerate = false;

    int add_variable(std::string name, double lo, double hi,
                     VarKind kind = VarKind::continuous, VarRole role = {}) {
        if (kind == VarKind::binary) {
            if (lo < 0.0 || hi > 1.0)
                throw std::invalid_argument("binary variable '" + name +
                                            "' must have bounds within [0,1]");
        }
        variables.push_back({std::move(name), lo, hi, kind, role});
        return static_cast<int>(variables.size()) - 1;
    }

    void add_constraint(std::string name, std::vector<std::pair<int, double>> terms,
                        Relation rel, double rhs) {
        constraints.push_back({std::move(name), std::move(terms), rel, rhs});
    }

    std::size_t num_variables() const { return variables.size(); }
    std::size_t num_constraints() const { return constraints.size(); }

    bool has_integrality() const {
        for (const auto& v : variables)
            if (v.kind == VarKind::binary) return true;
        return false;
    }

    /// Structural sanity: every referenced index exists, binaries sit in
    /// [0,1], and no coefficient is NaN or infinite.
    void check_well_formed() const {
        const int n = static_cast<int>(variables.size());
        auto check_terms = [&](const std::vector<std::pair<int, double>>& ts,
                               const std::string& where) {
            for (const auto& [idx, coeff] : ts) {
                if (idx < 0 || idx >= n)
                    throw std::invalid_argument(where + ": variable index " +
                                                std::to_string(idx) + " out of range");
                if (!std::isfinite(coeff))
                    throw std::invalid_argument(where + ": non-finite coefficient");
            }
        };
        check_terms(objective, "objective");
        for (const auto& c : constraints) {
            check_terms(c.terms, "constraint '" + c.name + "'");
            if (std::isnan(c.rhs))
                throw std::invalid_argument("constraint '" + c.name + "': NaN rhs");
        }
        for (const auto& v : variables) {
            if (v.kind == VarKind::binary && (v.lower < 0.0 || v.upper > 1.0))
                throw std::invalid_argument("binary variable '" + v.name +
                                            "' has bounds outside [0,1]");
            if (v.lower > v.upper)
                throw std::invalid_argument("variable '" + v.name + "' has lower > upper");
        }
    }

    /// Objective value of a point (no feasibility implied).
    double objective_value(const std::vector<double>& x) const {
        double v = 0.0;
        for (const auto& [j, c] : objective) v += c * x[static_cast<std::size_t>(j)];
        return v;
    }
};

}  // namespace ponflow

#endif  // PONFLOW_PROBLEM_HPP
