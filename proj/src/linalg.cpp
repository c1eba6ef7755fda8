#include "anticyc/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace anticyc {

IMat identity_imat(int n) {
    IMat m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat mul(const IMat& a, const IMat& b) {
    int n = static_cast<int>(a.size());
    int k = n ? static_cast<int>(a[0].size()) : 0;
    int m = b.empty() ? 0 : static_cast<int>(b[0].size());
    IMat r(n, std::vector<Int>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    return r;
}

IMat transpose(const IMat& a) {
    int n = static_cast<int>(a.size());
    int m = n ? static_cast<int>(a[0].size()) : 0;
    IMat r(m, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

Int det_bareiss(IMat a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    if (static_cast<int>(a[0].size()) != n)
        throw std::invalid_argument("det: matrix not square");
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

IMat hermite_normal_form(IMat a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // gcd out column c below row r by row operations
        while (true) {
            int p = -1;
            for (int i = r; i < rows; ++i)
                if (a[i][c] != 0 && (p < 0 || cmp(abs(a[i][c]), abs(a[p][c])) < 0)) p = i;
            if (p < 0) break;
            std::swap(a[r], a[p]);
            bool done = true;
            for (int i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Int q = a[i][c] / a[r][c];
                for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r < rows && a[r][c] != 0) {
            if (a[r][c] < 0)
                for (int j = 0; j < cols; ++j) a[r][j] = -a[r][j];
            // reduce entries above the pivot
            for (int i = 0; i < r; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                if (q != 0)
                    for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
            }
            ++r;
        }
    }
    a.resize(r);
    return a;
}

namespace {

void row_op(IMat& m, int i, int j, const Int& q) {  // row_i -= q * row_j
    for (size_t t = 0; t < m[i].size(); ++t) m[i][t] -= q * m[j][t];
}
void col_op(IMat& m, int i, int j, const Int& q) {  // col_i -= q * col_j
    for (auto& row : m) row[i] -= q * row[j];
}
void swap_cols(IMat& m, int i, int j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

}  // namespace

SmithResult smith_normal_form(const IMat& a0) {
    int rows = static_cast<int>(a0.size());
    int cols = rows ? static_cast<int>(a0[0].size()) : 0;
    SmithResult res;
    res.s = a0;
    res.u = identity_imat(rows);
    res.v = identity_imat(cols);
    IMat& s = res.s;

    int t = 0;
    int limit = std::min(rows, cols);
    while (t < limit) {
        // find a nonzero pivot in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (s[i][j] != 0 &&
                    (pi < 0 || cmp(abs(s[i][j]), abs(s[pi][pj])) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(s[t], s[pi]);
        std::swap(res.u[t], res.u[pi]);
        swap_cols(s, t, pj);
        swap_cols(res.v, t, pj);

        bool clean = true;
        for (int i = t + 1; i < rows; ++i) {
            if (s[i][t] == 0) continue;
            Int q = s[i][t] / s[t][t];
            row_op(s, i, t, q);
            row_op(res.u, i, t, q);
            if (s[i][t] != 0) clean = false;
        }
        for (int j = t + 1; j < cols; ++j) {
            if (s[t][j] == 0) continue;
            Int q = s[t][j] / s[t][t];
            col_op(s, j, t, q);
            col_op(res.v, j, t, q);
            if (s[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // pivot shrank; repeat at same t

        // pivot must divide every remaining entry
        bool divides_all = true;
        for (int i = t + 1; i < rows && divides_all; ++i)
            for (int j = t + 1; j < cols; ++j)
                if (s[i][j] % s[t][t] != 0) {
                    // fold row i into row t and restart the step
                    row_op(s, t, i, Int(-1));
                    row_op(res.u, t, i, Int(-1));
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;

        if (s[t][t] < 0) {
            for (int j = 0; j < cols; ++j) s[t][j] = -s[t][j];
            for (int j = 0; j < rows; ++j) res.u[t][j] = -res.u[t][j];
        }
        ++t;
    }
    return res;
}

IMat kernel_basis(const IMat& a) {
    int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    if (a.empty()) return identity_imat(cols);
    SmithResult sr = smith_normal_form(a);
    int rank = 0;
    int limit = std::min(a.size(), a[0].size());
    for (int i = 0; i < static_cast<int>(limit); ++i)
        if (sr.s[i][i] != 0) ++rank;
    // a * v = u^{-1} * s  =>  columns of v beyond rank span the kernel
    IMat basis;
    for (int j = rank; j < cols; ++j) {
        std::vector<Int> row(cols);
        for (int i = 0; i < cols; ++i) row[i] = sr.v[i][j];
        basis.push_back(std::move(row));
    }
    return hermite_normal_form(std::move(basis));
}

bool is_negative_definite(const IMat& a) {
    int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("is_negative_definite: matrix not square");
    for (int k = 1; k <= n; ++k) {
        IMat minor(k, std::vector<Int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = -a[i][j];
        if (det_bareiss(minor) <= 0) return false;
    }
    return true;
}

QMat to_qmat(const IMat& a) {
    QMat q(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        q[i].reserve(a[i].size());
        for (const auto& x : a[i]) q[i].emplace_back(x);
    }
    return q;
}

std::optional<QMat> inverse_rational(const QMat& a0) {
    int n = static_cast<int>(a0.size());
    QMat a = a0;
    QMat inv(n, QVec(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) return std::nullopt;
        std::swap(a[c], a[p]);
        std::swap(inv[c], inv[p]);
        Rat piv = a[c][c];
        for (int j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

std::optional<QVec> solve_rational(const IMat& a, const QVec& b) {
    int n = static_cast<int>(a.size());
    if (n == 0) return QVec{};
    if (static_cast<int>(a[0].size()) != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_rational: shape mismatch");
    QMat m = to_qmat(a);
    QVec rhs = b;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) return std::nullopt;
        std::swap(m[c], m[p]);
        std::swap(rhs[c], rhs[p]);
        Rat piv = m[c][c];
        for (int j = c; j < n; ++j) m[c][j] /= piv;
        rhs[c] /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    return rhs;
}

bool is_integral(const QVec& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

bool is_integral(const QMat& a) {
    for (const auto& row : a)
        if (!is_integral(row)) return false;
    return true;
}

}  // namespace anticyc
