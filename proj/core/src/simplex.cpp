#include "hermcert/simplex.hpp"

#include <stdexcept>

namespace hermcert {

// Variables are laid out [u_0..u_{m-1}, v_0..v_{m-1}, c+_0..c+_{k-1},
// c-_0..c-_{k-1}], all nonnegative, with residual r = t + A c written as
// u - v. Constraints: u - v - A c+ + A c- = t. Objective: sum(u) + sum(v).
LpResult l1_minimize(const std::vector<std::vector<Rational>>& columns,
                     const std::vector<Rational>& target) {
    const std::size_t m = target.size();
    const std::size_t k = columns.size();
    for (const auto& col : columns)
        if (col.size() != m) throw std::invalid_argument("l1_minimize: column row mismatch");

    LpResult res;
    res.coefficients.assign(k, Rational(0));
    if (m == 0) {
        res.optimum = 0;
        return res;
    }

    const std::size_t n_vars = 2 * m + 2 * k;
    auto full_col = [&](std::size_t i, std::size_t j) -> Rational {
        if (j < m) return i == j ? Rational(1) : Rational(0);
        if (j < 2 * m) return i == j - m ? Rational(-1) : Rational(0);
        if (j < 2 * m + k) return -columns[j - 2 * m][i];
        return columns[j - 2 * m - k][i];
    };
    auto var_cost = [&](std::size_t j) -> int { return j < 2 * m ? 1 : 0; };

    // Tableau rows 0..m-1 plus the reduced-cost row at index m; column n_vars
    // holds the right-hand side (and -objective in the cost row).
    std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(n_vars + 1, Rational(0)));
    std::vector<std::size_t> basis(m);

    for (std::size_t i = 0; i < m; ++i) {
        int sign = target[i] >= 0 ? 1 : -1;
        basis[i] = sign > 0 ? i : m + i;  // u_i or v_i
        for (std::size_t j = 0; j < n_vars; ++j) {
            Rational a = full_col(i, j);
            if (sign < 0) a = -a;
            t[i][j] = a;
        }
        t[i][n_vars] = sign > 0 ? target[i] : -target[i];
    }
    for (std::size_t j = 0; j < n_vars; ++j) {
        Rational z(var_cost(j));
        for (std::size_t i = 0; i < m; ++i) z -= t[i][j];  // initial basic costs are all 1
        t[m][j] = z;
    }
    for (std::size_t i = 0; i < m; ++i) t[m][n_vars] -= t[i][n_vars];

    while (true) {
        // Bland: entering variable with the smallest index among negative
        // reduced costs.
        std::size_t enter = n_vars;
        for (std::size_t j = 0; j < n_vars; ++j) {
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n_vars) break;  // optimal

        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][n_vars] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m)
            throw std::logic_error("l1_minimize: unbounded LP (impossible by construction)");

        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) continue;
            Rational f = t[i][enter];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= n_vars; ++j) {
                if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
            }
        }
        basis[leave] = enter;
        ++res.iterations;
    }

    res.optimum = -t[m][n_vars];
    res.optimum.canonicalize();
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t b = basis[i];
        if (b >= 2 * m && b < 2 * m + k)
            res.coefficients[b - 2 * m] += t[i][n_vars];
        else if (b >= 2 * m + k)
            res.coefficients[b - 2 * m - k] -= t[i][n_vars];
    }
    for (auto& c : res.coefficients) c.canonicalize();
    return res;
}

}  // namespace hermcert
