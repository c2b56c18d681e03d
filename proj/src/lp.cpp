#include "hcstab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "hcstab/kernels.hpp"

namespace hcstab::lp {

namespace {
constexpr double kDegenerateStep = 1e-12;
constexpr double kRatioTie = 1e-12;
}  // namespace

int Model::add_variable(double lo, double up, double obj) {
    if (!(lo <= up)) throw std::invalid_argument("variable bounds cross");
    if (std::abs(lo) >= kInfinity || std::abs(up) >= kInfinity)
        throw std::invalid_argument("structural bounds must be finite");
    lower.push_back(lo);
    upper.push_back(up);
    objective.push_back(obj);
    return num_vars() - 1;
}

void Model::add_row(Row row) {
    std::sort(row.coeffs.begin(), row.coeffs.end());
    std::vector<std::pair<int, double>> merged;
    merged.reserve(row.coeffs.size());
    for (auto [j, a] : row.coeffs) {
        if (j < 0 || j >= num_vars())
            throw std::invalid_argument("row references undeclared variable");
        if (!merged.empty() && merged.back().first == j)
            merged.back().second += a;
        else
            merged.emplace_back(j, a);
    }
    row.coeffs = std::move(merged);
    rows.push_back(std::move(row));
}

const char* to_string(Status s) {
    switch (s) {
        case Status::optimal: return "optimal";
        case Status::infeasible: return "infeasible";
        case Status::iteration_limit: return "iteration-limit";
        case Status::unbounded: return "unbounded";
    }
    return "unknown";
}

namespace {

// Revised simplex over columns = structurals followed by one slack per row
// (a.y + s = rhs with s >= 0 for <=, s <= 0 for >=, s = 0 for =). Keeps the
// transpose of the basis inverse dense so FTRAN/BTRAN are axpy/dot sweeps.
class Simplex {
  public:
    Simplex(const Model& model, const Config& cfg) : cfg_(cfg) {
        nrows_ = static_cast<int>(model.rows.size());
        nstruct_ = model.num_vars();
        ncols_ = nstruct_ + nrows_;
        lo_ = model.lower;
        up_ = model.upper;
        lo_.resize(static_cast<std::size_t>(ncols_));
        up_.resize(static_cast<std::size_t>(ncols_));
        cost_.assign(static_cast<std::size_t>(ncols_), 0.0);
        std::copy(model.objective.begin(), model.objective.end(), cost_.begin());
        rhs_.resize(static_cast<std::size_t>(nrows_));
        cols_.assign(static_cast<std::size_t>(ncols_), {});
        for (int r = 0; r < nrows_; ++r) {
            const Row& row = model.rows[static_cast<std::size_t>(r)];
            rhs_[static_cast<std::size_t>(r)] = row.rhs;
            for (auto [j, a] : row.coeffs) cols_[static_cast<std::size_t>(j)].push_back({r, a});
            const int sj = nstruct_ + r;
            cols_[static_cast<std::size_t>(sj)].push_back({r, 1.0});
            switch (row.rel) {
                case Relation::le:
                    lo_[static_cast<std::size_t>(sj)] = 0.0;
                    up_[static_cast<std::size_t>(sj)] = kInfinity;
                    break;
                case Relation::ge:
                    lo_[static_cast<std::size_t>(sj)] = -kInfinity;
                    up_[static_cast<std::size_t>(sj)] = 0.0;
                    break;
                case Relation::eq:
                    lo_[static_cast<std::size_t>(sj)] = 0.0;
                    up_[static_cast<std::size_t>(sj)] = 0.0;
                    break;
            }
        }
        x_.assign(static_cast<std::size_t>(ncols_), 0.0);
        w_.assign(static_cast<std::size_t>(nrows_), 0.0);
        pi_.assign(static_cast<std::size_t>(nrows_), 0.0);
        zrow_.assign(static_cast<std::size_t>(ncols_), 0.0);
    }

    void default_start() {
        vstatus_.assign(static_cast<std::size_t>(ncols_), 0);
        basis_.resize(static_cast<std::size_t>(nrows_));
        for (int r = 0; r < nrows_; ++r) {
            basis_[static_cast<std::size_t>(r)] = nstruct_ + r;
            vstatus_[static_cast<std::size_t>(nstruct_ + r)] = 2;
        }
        for (int j = 0; j < nstruct_; ++j)
            if (lo_[static_cast<std::size_t>(j)] <= -kInfinity) vstatus_[static_cast<std::size_t>(j)] = 1;
        binvT_.assign(static_cast<std::size_t>(nrows_) * static_cast<std::size_t>(nrows_), 0.0);
        for (int i = 0; i < nrows_; ++i) binvT_[idx(i, i)] = 1.0;
        recompute_x();
    }

    bool warm_start(const Solution& prior, int prior_rows) {
        if (static_cast<int>(prior.basis.size()) != prior_rows) return false;
        if (static_cast<int>(prior.vstatus.size()) != nstruct_ + prior_rows) return false;
        vstatus_ = prior.vstatus;
        basis_ = prior.basis;
        for (int b : basis_)
            if (b < 0 || b >= nstruct_ + prior_rows) return false;
        vstatus_.resize(static_cast<std::size_t>(ncols_));
        basis_.resize(static_cast<std::size_t>(nrows_));
        for (int r = prior_rows; r < nrows_; ++r) {
            basis_[static_cast<std::size_t>(r)] = nstruct_ + r;
            vstatus_[static_cast<std::size_t>(nstruct_ + r)] = 2;
        }
        if (!refactor()) return false;
        recompute_x();
        return true;
    }

    Solution optimize() {
        Status st = run_phase(true);
        if (st == Status::optimal) st = run_phase(false);
        Solution out;
        out.status = st;
        out.iterations = iterations_;
        out.values.assign(x_.begin(), x_.begin() + nstruct_);
        double obj = 0.0;
        for (int j = 0; j < nstruct_; ++j)
            obj += cost_[static_cast<std::size_t>(j)] * x_[static_cast<std::size_t>(j)];
        out.objective = obj;
        out.basis = basis_;
        out.vstatus = vstatus_;
        return out;
    }

  private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(nrows_) +
               static_cast<std::size_t>(c);
    }
    double* binv_row(int r) { return binvT_.data() + idx(r, 0); }

    double bound_value(int j) const {
        if (vstatus_[static_cast<std::size_t>(j)] == 1)
            return up_[static_cast<std::size_t>(j)] < kInfinity ? up_[static_cast<std::size_t>(j)] : 0.0;
        return lo_[static_cast<std::size_t>(j)] > -kInfinity ? lo_[static_cast<std::size_t>(j)] : 0.0;
    }

    void recompute_x() {
        std::vector<double> resid = rhs_;
        for (int j = 0; j < ncols_; ++j) {
            if (vstatus_[static_cast<std::size_t>(j)] == 2) continue;
            const double v = bound_value(j);
            x_[static_cast<std::size_t>(j)] = v;
            if (v == 0.0) continue;
            for (auto [r, a] : cols_[static_cast<std::size_t>(j)])
                resid[static_cast<std::size_t>(r)] -= a * v;
        }
        std::fill(w_.begin(), w_.end(), 0.0);
        for (int r = 0; r < nrows_; ++r)
            if (resid[static_cast<std::size_t>(r)] != 0.0)
                kernels::axpy(resid[static_cast<std::size_t>(r)], binv_row(r), w_.data(),
                              static_cast<std::size_t>(nrows_));
        for (int i = 0; i < nrows_; ++i)
            x_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] =
                w_[static_cast<std::size_t>(i)];
    }

    // binvT_ = (B^T)^{-1} by Gauss-Jordan with partial pivoting.
    bool refactor() {
        const std::size_t m = static_cast<std::size_t>(nrows_);
        std::vector<double> bt(m * m, 0.0);
        for (int i = 0; i < nrows_; ++i)
            for (auto [r, a] : cols_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])])
                bt[idx(i, r)] = a;
        std::vector<double> inv(m * m, 0.0);
        for (int i = 0; i < nrows_; ++i) inv[idx(i, i)] = 1.0;
        for (int c = 0; c < nrows_; ++c) {
            int p = c;
            double best = std::abs(bt[idx(c, c)]);
            for (int r = c + 1; r < nrows_; ++r)
                if (std::abs(bt[idx(r, c)]) > best) {
                    best = std::abs(bt[idx(r, c)]);
                    p = r;
                }
            if (best < 1e-11) return false;
            if (p != c) {
                std::swap_ranges(bt.begin() + static_cast<std::ptrdiff_t>(idx(c, 0)),
                                 bt.begin() + static_cast<std::ptrdiff_t>(idx(c + 1, 0)),
                                 bt.begin() + static_cast<std::ptrdiff_t>(idx(p, 0)));
                std::swap_ranges(inv.begin() + static_cast<std::ptrdiff_t>(idx(c, 0)),
                                 inv.begin() + static_cast<std::ptrdiff_t>(idx(c + 1, 0)),
                                 inv.begin() + static_cast<std::ptrdiff_t>(idx(p, 0)));
            }
            const double s = 1.0 / bt[idx(c, c)];
            for (int k = 0; k < nrows_; ++k) {
                bt[idx(c, k)] *= s;
                inv[idx(c, k)] *= s;
            }
            for (int r = 0; r < nrows_; ++r) {
                if (r == c) continue;
                const double f = bt[idx(r, c)];
                if (f == 0.0) continue;
                kernels::axpy(-f, &bt[idx(c, 0)], &bt[idx(r, 0)], m);
                kernels::axpy(-f, &inv[idx(c, 0)], &inv[idx(r, 0)], m);
                bt[idx(r, c)] = 0.0;
            }
        }
        binvT_ = std::move(inv);
        pivots_since_refactor_ = 0;
        return true;
    }

    // w = B^{-1} * column j.
    void ftran_col(int j) {
        std::fill(w_.begin(), w_.end(), 0.0);
        for (auto [r, a] : cols_[static_cast<std::size_t>(j)])
            kernels::axpy(a, binv_row(r), w_.data(), static_cast<std::size_t>(nrows_));
    }

    // pi = (B^T)^{-1} cb, then zrow_[j] = pi . A_j over all columns.
    void price(const std::vector<double>& cb) {
        for (int i = 0; i < nrows_; ++i)
            pi_[static_cast<std::size_t>(i)] =
                kernels::dot(binv_row(i), cb.data(), static_cast<std::size_t>(nrows_));
        std::fill(zrow_.begin(), zrow_.end(), 0.0);
        for (int j = 0; j < ncols_; ++j) {
            double z = 0.0;
            for (auto [r, a] : cols_[static_cast<std::size_t>(j)])
                z += pi_[static_cast<std::size_t>(r)] * a;
            zrow_[static_cast<std::size_t>(j)] = z;
        }
    }

    double max_bound_violation() const {
        double worst = 0.0;
        for (int i = 0; i < nrows_; ++i) {
            const int col = basis_[static_cast<std::size_t>(i)];
            const double v = x_[static_cast<std::size_t>(col)];
            worst = std::max(worst, lo_[static_cast<std::size_t>(col)] - v);
            worst = std::max(worst, v - up_[static_cast<std::size_t>(col)]);
        }
        return worst;
    }

    void eta_update(int leave_pos) {
        const double wr = w_[static_cast<std::size_t>(leave_pos)];
        for (int k = 0; k < nrows_; ++k) {
            double* row = binv_row(k);
            const double s = row[leave_pos] / wr;
            if (s == 0.0) continue;
            kernels::axpy(-s, w_.data(), row, static_cast<std::size_t>(nrows_));
            row[leave_pos] = s;
        }
    }

    Status run_phase(bool phase1) {
        std::vector<double> cb(static_cast<std::size_t>(nrows_), 0.0);
        bool fresh = false;
        while (true) {
            if (iterations_ >= cfg_.max_iterations) return Status::iteration_limit;

            if (phase1) {
                if (max_bound_violation() <= cfg_.feas_tol) {
                    if (!fresh && pivots_since_refactor_ > 0) {
                        if (!refactor()) throw std::runtime_error("singular basis");
                        recompute_x();
                        fresh = true;
                        continue;
                    }
                    return Status::optimal;
                }
                for (int i = 0; i < nrows_; ++i) {
                    const int col = basis_[static_cast<std::size_t>(i)];
                    const double v = x_[static_cast<std::size_t>(col)];
                    double c = 0.0;
                    if (v < lo_[static_cast<std::size_t>(col)] - cfg_.feas_tol) c = -1.0;
                    else if (v > up_[static_cast<std::size_t>(col)] + cfg_.feas_tol) c = 1.0;
                    cb[static_cast<std::size_t>(i)] = c;
                }
            } else {
                for (int i = 0; i < nrows_; ++i)
                    cb[static_cast<std::size_t>(i)] =
                        cost_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
            }
            price(cb);

            const bool bland = degen_streak_ >= cfg_.degenerate_streak;
            int enter = -1, dir = 0;
            double best_score = cfg_.opt_tol;
            for (int j = 0; j < ncols_; ++j) {
                const std::uint8_t st = vstatus_[static_cast<std::size_t>(j)];
                if (st == 2) continue;
                if (lo_[static_cast<std::size_t>(j)] == up_[static_cast<std::size_t>(j)]) continue;
                const double cj = phase1 ? 0.0 : cost_[static_cast<std::size_t>(j)];
                const double d = cj - zrow_[static_cast<std::size_t>(j)];
                int cand_dir = 0;
                if (st == 0 && d < -cfg_.opt_tol) cand_dir = 1;
                else if (st == 1 && d > cfg_.opt_tol) cand_dir = -1;
                if (cand_dir == 0) continue;
                if (bland) {
                    enter = j;
                    dir = cand_dir;
                    break;
                }
                if (std::abs(d) > best_score) {
                    best_score = std::abs(d);
                    enter = j;
                    dir = cand_dir;
                }
            }

            if (enter < 0) {
                if (!fresh && pivots_since_refactor_ > 0) {
                    if (!refactor()) throw std::runtime_error("singular basis");
                    recompute_x();
                    fresh = true;
                    continue;
                }
                if (phase1)
                    return max_bound_violation() <= cfg_.feas_tol ? Status::optimal
                                                                  : Status::infeasible;
                return Status::optimal;
            }

            ftran_col(enter);

            // Ratio test. Basic i changes at rate g = -dir*w_i per unit step;
            // in phase 1 an infeasible basic blocks at the bound it violates
            // (first kink), a feasible basic at the bound it approaches.
            const double range = up_[static_cast<std::size_t>(enter)] -
                                 lo_[static_cast<std::size_t>(enter)];
            double step = range;  // own bound-flip cap, may be infinite
            int leave_pos = -1;
            double leave_bound = 0.0;
            bool leave_to_upper = false;
            double leave_weight = 0.0;
            for (int i = 0; i < nrows_; ++i) {
                const double wi = w_[static_cast<std::size_t>(i)];
                if (std::abs(wi) <= cfg_.pivot_tol) continue;
                const double g = -static_cast<double>(dir) * wi;
                const int col = basis_[static_cast<std::size_t>(i)];
                const double v = x_[static_cast<std::size_t>(col)];
                const double lb = lo_[static_cast<std::size_t>(col)];
                const double ub = up_[static_cast<std::size_t>(col)];
                double ratio = kInfinity, bound = 0.0;
                bool to_upper = false;
                if (phase1 && v < lb - cfg_.feas_tol) {
                    if (g > 0.0) {
                        ratio = (lb - v) / g;
                        bound = lb;
                    } else {
                        continue;
                    }
                } else if (phase1 && v > ub + cfg_.feas_tol) {
                    if (g < 0.0) {
                        ratio = (v - ub) / -g;
                        bound = ub;
                        to_upper = true;
                    } else {
                        continue;
                    }
                } else if (g > 0.0) {
                    if (ub >= kInfinity) continue;
                    ratio = (ub - v) / g;
                    bound = ub;
                    to_upper = true;
                } else {
                    if (lb <= -kInfinity) continue;
                    ratio = (v - lb) / -g;
                    bound = lb;
                }
                if (ratio < 0.0) ratio = 0.0;
                const bool better =
                    ratio < step - kRatioTie ||
                    (ratio < step + kRatioTie && leave_pos >= 0 &&
                     (bland ? col < basis_[static_cast<std::size_t>(leave_pos)]
                            : std::abs(wi) > leave_weight));
                if (leave_pos < 0 ? ratio < step - kRatioTie : better) {
                    step = ratio;
                    leave_pos = i;
                    leave_bound = bound;
                    leave_to_upper = to_upper;
                    leave_weight = std::abs(wi);
                }
            }

            if (leave_pos < 0 && step >= kInfinity) {
                if (phase1) throw std::runtime_error("phase-1 ray without blocking bound");
                return Status::unbounded;
            }

            ++iterations_;
            fresh = false;
            degen_streak_ = step <= kDegenerateStep ? degen_streak_ + 1 : 0;

            if (leave_pos < 0) {
                // Bound flip: entering traverses its whole range.
                for (int i = 0; i < nrows_; ++i) {
                    const double wi = w_[static_cast<std::size_t>(i)];
                    if (wi == 0.0) continue;
                    x_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] -=
                        static_cast<double>(dir) * wi * step;
                }
                vstatus_[static_cast<std::size_t>(enter)] = dir > 0 ? 1 : 0;
                x_[static_cast<std::size_t>(enter)] = bound_value(enter);
                continue;
            }

            for (int i = 0; i < nrows_; ++i) {
                const double wi = w_[static_cast<std::size_t>(i)];
                if (wi == 0.0) continue;
                x_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] -=
                    static_cast<double>(dir) * wi * step;
            }
            const int leave_col = basis_[static_cast<std::size_t>(leave_pos)];
            x_[static_cast<std::size_t>(leave_col)] = leave_bound;
            x_[static_cast<std::size_t>(enter)] += static_cast<double>(dir) * step;
            vstatus_[static_cast<std::size_t>(leave_col)] = leave_to_upper ? 1 : 0;
            vstatus_[static_cast<std::size_t>(enter)] = 2;
            basis_[static_cast<std::size_t>(leave_pos)] = enter;
            eta_update(leave_pos);
            if (++pivots_since_refactor_ >= cfg_.refactor_interval) {
                if (!refactor()) throw std::runtime_error("singular basis");
                recompute_x();
            }
        }
    }

    Config cfg_;
    int nrows_ = 0, nstruct_ = 0, ncols_ = 0;
    std::vector<double> lo_, up_, cost_, rhs_;
    std::vector<std::vector<std::pair<int, double>>> cols_;
    std::vector<int> basis_;
    std::vector<std::uint8_t> vstatus_;
    std::vector<double> x_, binvT_, w_, pi_, zrow_;
    long iterations_ = 0;
    int pivots_since_refactor_ = 0;
    int degen_streak_ = 0;
};

}  // namespace

Solution solve(const Model& model, const Config& config) {
    Simplex s(model, config);
    s.default_start();
    return s.optimize();
}

Solution add_rows_and_resolve(Model& model, const Solution& prior,
                              const std::vector<Row>& new_rows, const Config& config) {
    const int prior_rows = static_cast<int>(model.rows.size());
    for (const Row& r : new_rows) model.add_row(r);
    Simplex s(model, config);
    if (prior.status != Status::optimal || !s.warm_start(prior, prior_rows))
        s.default_start();
    return s.optimize();
}

double primal_infeasibility(const Model& model, const std::vector<double>& values) {
    if (static_cast<int>(values.size()) != model.num_vars())
        throw std::invalid_argument("value vector length mismatch");
    double worst = 0.0;
    for (int j = 0; j < model.num_vars(); ++j) {
        worst = std::max(worst, model.lower[static_cast<std::size_t>(j)] -
                                    values[static_cast<std::size_t>(j)]);
        worst = std::max(worst, values[static_cast<std::size_t>(j)] -
                                    model.upper[static_cast<std::size_t>(j)]);
    }
    for (const Row& row : model.rows) {
        double lhs = 0.0;
        for (auto [j, a] : row.coeffs) lhs += a * values[static_cast<std::size_t>(j)];
        switch (row.rel) {
            case Relation::le: worst = std::max(worst, lhs - row.rhs); break;
            case Relation::ge: worst = std::max(worst, row.rhs - lhs); break;
            case Relation::eq: worst = std::max(worst, std::abs(lhs - row.rhs)); break;
        }
    }
    return worst;
}

void write_lp_text(const Model& model, std::ostream& os) {
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    auto terms = [&](const std::vector<std::pair<int, double>>& coeffs) {
        std::string out;
        for (auto [j, a] : coeffs) {
            out += a < 0 ? " - " : " + ";
            out += num(std::abs(a)) + " x" + std::to_string(j);
        }
        return out.empty() ? std::string(" 0 x0") : out;
    };
    os << "Minimize\n obj:";
    std::vector<std::pair<int, double>> obj;
    for (int j = 0; j < model.num_vars(); ++j)
        if (model.objective[static_cast<std::size_t>(j)] != 0.0)
            obj.emplace_back(j, model.objective[static_cast<std::size_t>(j)]);
    os << terms(obj) << "\nSubject To\n";
    for (std::size_t r = 0; r < model.rows.size(); ++r) {
        const Row& row = model.rows[r];
        const char* rel = row.rel == Relation::le ? "<=" : row.rel == Relation::ge ? ">=" : "=";
        os << " c" << r << ":" << terms(row.coeffs) << " " << rel << " " << num(row.rhs)
           << "\n";
    }
    os << "Bounds\n";
    for (int j = 0; j < model.num_vars(); ++j) {
        const double lo = model.lower[static_cast<std::size_t>(j)];
        const double up = model.upper[static_cast<std::size_t>(j)];
        if (lo == up)
            os << " x" << j << " = " << num(lo) << "\n";
        else
            os << " " << num(lo) << " <= x" << j << " <= " << num(up) << "\n";
    }
    os << "End\n";
}

}  // namespace hcstab::lp
