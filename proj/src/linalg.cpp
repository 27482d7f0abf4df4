#include "linalg.hpp"

#include <numeric>

namespace cutvor {

BigInt det_bareiss(IMat a) {
    const int n = (int)a.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

// Clear denominators row by row; returns integer augmented matrix.
IMat clear_rows(const RMat& a, const std::vector<Rat>& b) {
    const int m = (int)a.size();
    const int n = m ? (int)a[0].size() : 0;
    IMat w(m, std::vector<BigInt>(n + 1));
    for (int i = 0; i < m; ++i) {
        BigInt l = 1;
        for (int j = 0; j < n; ++j) l = lcm(l, denominator(a[i][j]));
        l = lcm(l, denominator(b[i]));
        for (int j = 0; j < n; ++j)
            w[i][j] = numerator(a[i][j]) * (l / denominator(a[i][j]));
        w[i][n] = numerator(b[i]) * (l / denominator(b[i]));
    }
    return w;
}

}  // namespace

SolveOutcome solve_system(const RMat& a, const std::vector<Rat>& b) {
    SolveOutcome out;
    const int m = (int)a.size();
    const int n = m ? (int)a[0].size() : 0;
    IMat w = clear_rows(a, b);

    // Fraction-free row echelon with column pivot bookkeeping.
    std::vector<int> pivot_col;
    BigInt prev = 1;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int p = -1;
        for (int i = row; i < m; ++i)
            if (w[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(w[row], w[p]);
        for (int i = row + 1; i < m; ++i) {
            for (int j = col + 1; j <= n; ++j)
                w[i][j] = (w[row][col] * w[i][j] - w[i][col] * w[row][j]) / prev;
            w[i][col] = 0;
        }
        prev = w[row][col];
        pivot_col.push_back(col);
        ++row;
    }
    out.rank = row;
    for (int i = row; i < m; ++i)
        if (w[i][n] != 0) {
            out.consistent = false;
            return out;
        }
    out.consistent = true;
    out.unique = (out.rank == n);
    out.x.assign(n, Rat(0));
    for (int i = out.rank - 1; i >= 0; --i) {
        int c = pivot_col[i];
        Rat s = Rat(w[i][n]);
        for (int j = c + 1; j < n; ++j) s -= Rat(w[i][j]) * out.x[j];
        out.x[c] = s / Rat(w[i][c]);
    }
    return out;
}

int rank_of(const RMat& a) {
    if (a.empty()) return 0;
    std::vector<Rat> zero(a.size(), Rat(0));
    return solve_system(a, zero).rank;
}

}  // namespace cutvor
