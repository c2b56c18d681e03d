#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace hcstab::lp {

// Bound magnitudes at or above this sentinel are treated as infinite.
inline constexpr double kInfinity = 1e30;

enum class Relation { le, ge, eq };

struct Row {
    std::vector<std::pair<int, double>> coeffs;  // (variable, coefficient)
    Relation rel = Relation::le;
    double rhs = 0.0;
};

// Minimization over box-bounded variables subject to linear rows.
struct Model {
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<double> objective;
    std::vector<Row> rows;

    int num_vars() const { return static_cast<int>(objective.size()); }
    int add_variable(double lo, double up, double obj);
    void add_row(Row row);  // validates indices, coalesces duplicates
};

struct Config {
    double feas_tol = 1e-7;
    double opt_tol = 1e-7;
    double pivot_tol = 1e-9;
    long max_iterations = 200000;
    int refactor_interval = 64;
    int degenerate_streak = 40;  // pivots before switching to Bland's rule
};

enum class Status { optimal, infeasible, iteration_limit, unbounded };

const char* to_string(Status s);

struct Solution {
    Status status = Status::iteration_limit;
    double objective = 0.0;
    std::vector<double> values;  // structural variables only
    long iterations = 0;

    // Basis snapshot for warm starts: one basic column per row over the
    // column space (structurals, then one slack per row); vstatus is
    // 0 at-lower, 1 at-upper, 2 basic for every column.
    std::vector<int> basis;
    std::vector<std::uint8_t> vstatus;
};

Solution solve(const Model& model, const Config& config = {});

// Appends rows and re-optimizes, warm-starting from prior when its snapshot
// matches the enlarged model (new slacks enter the basis). Result matches a
// from-scratch solve of the enlarged model within tolerance.
Solution add_rows_and_resolve(Model& model, const Solution& prior,
                              const std::vector<Row>& new_rows,
                              const Config& config = {});

// Largest bound or row violation of a structural assignment; 0 when feasible.
double primal_infeasibility(const Model& model, const std::vector<double>& values);

// Debug dump in LP text format for cross-checking with external solvers.
void write_lp_text(const Model& model, std::ostream& os);

}  // namespace hcstab::lp
