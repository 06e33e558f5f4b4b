#include "schreier/lp.hpp"

namespace schreier {

namespace {

class Tableau {
public:
    // columns: 0..n-1 original, n..n+m-1 artificial, last = rhs
    Tableau(const LinearProgram& lp)
        : m_(lp.rows.size()), n_(lp.cost.size()), t_(m_, std::vector<Rat>(n_ + m_ + 1)),
          basis_(m_) {
        for (std::size_t i = 0; i < m_; ++i) {
            bool neg = lp.rhs[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = neg ? -lp.rows[i][j] : lp.rows[i][j];
            t_[i][n_ + i] = 1;
            t_[i].back() = neg ? -lp.rhs[i] : lp.rhs[i];
            basis_[i] = n_ + i;
        }
    }

    // phase 1: minimize the sum of artificials
    bool phase1() {
        std::vector<Rat> r(n_ + m_ + 1);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j <= n_ + m_; ++j) r[j] -= t_[i][j];
        for (std::size_t i = 0; i < m_; ++i) r[n_ + i] = 0;
        iterate(r, n_ + m_);
        return -r.back() == 0; // phase-1 objective value
    }

    void drop_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            // pivot the artificial out on any original column, else the row
            // is a redundant equation and can be zeroed
            std::size_t j = 0;
            for (; j < n_; ++j)
                if (t_[i][j] != 0) break;
            if (j < n_)
                pivot(i, j);
            else
                for (auto& v : t_[i]) v = 0;
        }
    }

    LPResult phase2(const std::vector<Rat>& cost) {
        std::vector<Rat> r(n_ + m_ + 1);
        for (std::size_t j = 0; j < n_; ++j) r[j] = cost[j];
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue; // zeroed redundant row
            const Rat& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= n_ + m_; ++j) r[j] -= cb * t_[i][j];
        }
        if (!iterate(r, n_)) return {LPResult::Status::Unbounded, Rat(0), {}};
        LPResult res;
        res.status = LPResult::Status::Optimal;
        res.solution.assign(n_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) res.solution[basis_[i]] = t_[i].back();
        res.objective = Rat(0);
        for (std::size_t j = 0; j < n_; ++j) res.objective += cost[j] * res.solution[j];
        return res;
    }

private:
    std::size_t m_, n_;
    std::vector<std::vector<Rat>> t_;
    std::vector<std::size_t> basis_;

    void pivot(std::size_t row, std::size_t col) {
        Rat piv = t_[row][col];
        for (auto& v : t_[row]) v /= piv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || t_[i][col] == 0) continue;
            Rat factor = t_[i][col];
            for (std::size_t j = 0; j <= n_ + m_; ++j) t_[i][j] -= factor * t_[row][j];
        }
        basis_[row] = col;
    }

    static void eliminate(std::vector<Rat>& r, const std::vector<Rat>& row, std::size_t col) {
        if (r[col] == 0) return;
        Rat factor = r[col];
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= factor * row[j];
    }

    // Bland's rule; entering columns restricted to < limit
    bool iterate(std::vector<Rat>& r, std::size_t limit) {
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j)
                if (r[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == limit) return true;
            std::size_t leave = m_;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                if (leave == m_) {
                    leave = i;
                    continue;
                }
                Rat cur = t_[i].back() / t_[i][enter];
                Rat best = t_[leave].back() / t_[leave][enter];
                if (cur < best || (cur == best && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave == m_) return false; // unbounded
            pivot(leave, enter);
            eliminate(r, t_[leave], enter);
        }
    }
};

} // namespace

LPResult solve_lp(const LinearProgram& lp) {
    for (const auto& row : lp.rows)
        if (row.size() != lp.cost.size()) throw DomainError("LP row width mismatch");
    if (lp.rows.size() != lp.rhs.size()) throw DomainError("LP rhs size mismatch");

    Tableau t(lp);
    if (!t.phase1()) return {LPResult::Status::Infeasible, Rat(0), {}};
    t.drop_artificials();
    return t.phase2(lp.cost);
}

} // namespace schreier
