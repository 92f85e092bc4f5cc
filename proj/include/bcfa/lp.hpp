#pragma once

// Exact-rational linear programming: dense two-phase simplex with Bland's
// anti-cycling rule. Every answer (value, point, status) is exact.

#include <cstddef>
#include <utility>
#include <vector>

#include "bcfa/real.hpp"

namespace bcfa::lp {

enum class Relation { le, eq, ge };
enum class Sense { minimize, maximize };
enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    Rational value;              ///< objective value when optimal
    std::vector<Rational> x;     ///< primal point when optimal

    bool optimal() const { return status == Status::optimal; }
};

using Terms = std::vector<std::pair<std::size_t, Rational>>;

/// A linear program over variables that are nonnegative unless marked free.
class Program {
public:
    Program() = default;
    explicit Program(std::size_t num_vars) : free_(num_vars, false) {}

    std::size_t add_variable(bool is_free = false) {
        free_.push_back(is_free);
        return free_.size() - 1;
    }
    void set_free(std::size_t var, bool is_free = true) { free_.at(var) = is_free; }
    std::size_t num_vars() const { return free_.size(); }

    void add_constraint(Terms terms, Relation rel, Rational rhs) {
        rows_.push_back({std::move(terms), rel, std::move(rhs)});
    }
    void add_dense_constraint(const std::vector<Rational>& coeffs, Relation rel, Rational rhs) {
        Terms t;
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (sgn(coeffs[j]) != 0) t.emplace_back(j, coeffs[j]);
        add_constraint(std::move(t), rel, std::move(rhs));
    }
    void set_objective(Terms terms, Sense sense) {
        objective_ = std::move(terms);
        sense_ = sense;
    }

    Result solve() const;

private:
    struct Row {
        Terms terms;
        Relation rel;
        Rational rhs;
    };
    std::vector<bool> free_;
    std::vector<Row> rows_;
    Terms objective_;
    Sense sense_ = Sense::minimize;
};

}  // namespace bcfa::lp
