#include "bcfa/lp.hpp"

#include <optional>
#include <stdexcept>

namespace bcfa::lp {

namespace {

/// Simplex tableau in canonical form: rows[i] . x = rhs with basis[i] the
/// basic column of row i; `cost` holds reduced costs and -objective.
class Tableau {
public:
    Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis, std::size_t cols)
        : rows_(std::move(rows)), basis_(std::move(basis)), cols_(cols) {}

    std::size_t num_rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t>& basis() const { return basis_; }
    const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const Rational& rhs(std::size_t i) const { return rows_[i][cols_]; }

    /// Installs a cost vector (length cols) and prices out the basis.
    void set_cost(const std::vector<Rational>& c) {
        cost_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < cols_; ++j) cost_[j] = c[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational cb = cost_[basis_[i]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= cb * rows_[i][j];
        }
    }
    Rational objective() const { return -cost_[cols_]; }

    /// Minimizes over the allowed columns with Bland's rule. Returns false
    /// when the objective is unbounded below.
    bool run(const std::vector<bool>& allowed) {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (allowed[j] && sgn(cost_[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& a = rows_[i][*enter];
                if (sgn(a) <= 0) continue;
                Rational ratio = rows_[i][cols_] / a;
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        auto& prow = rows_[r];
        const Rational inv = 1 / prow[c];
        for (auto& v : prow) v *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || sgn(rows_[i][c]) == 0) continue;
            const Rational f = rows_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(prow[j]) != 0) rows_[i][j] -= f * prow[j];
        }
        if (!cost_.empty() && sgn(cost_[c]) != 0) {
            const Rational f = cost_[c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(prow[j]) != 0) cost_[j] -= f * prow[j];
        }
        basis_[r] = c;
    }

    void drop_row(std::size_t r) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

private:
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
    std::size_t cols_;
    std::vector<Rational> cost_;
};

}  // namespace

Result Program::solve() const {
    // Column layout: structural (free variables split in two), slacks, artificials.
    const std::size_t nv = free_.size();
    std::vector<std::size_t> pos_col(nv), neg_col(nv, SIZE_MAX);
    std::size_t cols = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        pos_col[v] = cols++;
        if (free_[v]) neg_col[v] = cols++;
    }
    const std::size_t structural = cols;

    const std::size_t m = rows_.size();
    std::vector<std::vector<Rational>> dense(m, std::vector<Rational>(structural));
    std::vector<Relation> rel(m);
    std::vector<Rational> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto& [v, a] : rows_[i].terms) {
            if (v >= nv) throw std::out_of_range("LP constraint references unknown variable");
            dense[i][pos_col[v]] += a;
            if (neg_col[v] != SIZE_MAX) dense[i][neg_col[v]] -= a;
        }
        rel[i] = rows_[i].rel;
        rhs[i] = rows_[i].rhs;
        if (sgn(rhs[i]) < 0) {
            for (auto& a : dense[i]) a = -a;
            rhs[i] = -rhs[i];
            if (rel[i] == Relation::le)
                rel[i] = Relation::ge;
            else if (rel[i] == Relation::ge)
                rel[i] = Relation::le;
        }
    }

    std::size_t slacks = 0, artificials = 0;
    for (auto r : rel) {
        if (r != Relation::eq) ++slacks;
        if (r != Relation::le) ++artificials;
    }
    const std::size_t total = structural + slacks + artificials;
    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(total + 1));
    std::vector<std::size_t> basis(m);
    std::size_t s = structural, a = structural + slacks;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < structural; ++j) rows[i][j] = dense[i][j];
        rows[i][total] = rhs[i];
        switch (rel[i]) {
            case Relation::le:
                rows[i][s] = 1;
                basis[i] = s++;
                break;
            case Relation::ge:
                rows[i][s++] = -1;
                rows[i][a] = 1;
                basis[i] = a++;
                break;
            case Relation::eq:
                rows[i][a] = 1;
                basis[i] = a++;
                break;
        }
    }

    Tableau tab(std::move(rows), std::move(basis), total);
    const std::size_t first_art = structural + slacks;

    if (artificials > 0) {
        std::vector<Rational> phase1(total);
        for (std::size_t j = first_art; j < total; ++j) phase1[j] = 1;
        tab.set_cost(phase1);
        std::vector<bool> all(total, true);
        tab.run(all);
        if (sgn(tab.objective()) > 0) return {Status::infeasible, {}, {}};
        // Drive zero-level artificials out of the basis, dropping redundant rows.
        for (std::size_t i = 0; i < tab.num_rows();) {
            if (tab.basis()[i] < first_art) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < first_art; ++j) {
                if (sgn(tab.at(i, j)) != 0) {
                    col = j;
                    break;
                }
            }
            if (col) {
                tab.pivot(i, *col);
                ++i;
            } else {
                tab.drop_row(i);
            }
        }
    }

    std::vector<Rational> cost(total);
    for (const auto& [v, c] : objective_) {
        const Rational cc = sense_ == Sense::maximize ? Rational(-c) : c;
        cost[pos_col[v]] += cc;
        if (neg_col[v] != SIZE_MAX) cost[neg_col[v]] -= cc;
    }
    tab.set_cost(cost);
    std::vector<bool> allowed(total, false);
    for (std::size_t j = 0; j < first_art; ++j) allowed[j] = true;
    if (!tab.run(allowed)) return {Status::unbounded, {}, {}};

    std::vector<Rational> colval(total);
    for (std::size_t i = 0; i < tab.num_rows(); ++i) colval[tab.basis()[i]] = tab.rhs(i);
    Result res;
    res.status = Status::optimal;
    res.value = sense_ == Sense::maximize ? Rational(-tab.objective()) : tab.objective();
    res.x.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        res.x[v] = colval[pos_col[v]];
        if (neg_col[v] != SIZE_MAX) res.x[v] -= colval[neg_col[v]];
    }
    return res;
}

}  // namespace bcfa::lp
