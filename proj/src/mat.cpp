#include "lat5/mat.hpp"

#include <algorithm>

namespace lat5 {

MatQ to_rational(const MatZ& m) {
    MatQ r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

std::pair<MatZ, Int> clear_denominators(const MatQ& m) {
    Int d = 1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).get_den());
    MatZ z(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Rat s = m(i, j) * d;
            z(i, j) = s.get_num();
        }
    return {z, d};
}

MatZ to_integer(const MatQ& m) {
    MatZ z(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j))) throw std::invalid_argument("matrix entry not an integer");
            z(i, j) = m(i, j).get_num();
        }
    return z;
}

VecQ to_rational(const VecZ& v) {
    VecQ r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

VecQ mul_vec(const VecQ& x, const MatQ& m) {
    assert(int(x.size()) == m.rows());
    VecQ r(m.cols(), Rat(0));
    for (int i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) r[j] += x[i] * m(i, j);
    }
    return r;
}

Rat dot(const VecQ& x, const VecQ& y) {
    assert(x.size() == y.size());
    Rat r(0);
    for (size_t i = 0; i < x.size(); ++i) r += x[i] * y[i];
    return r;
}

HnfResult hnf(const MatZ& m) {
    HnfResult res;
    res.h = m;
    res.u = MatZ::identity(m.rows());
    MatZ& h = res.h;
    MatZ& u = res.u;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        // clear column c below row r by gcd steps
        while (true) {
            int pivot = -1;
            for (int i = r; i < m.rows(); ++i) {
                if (h(i, c) == 0) continue;
                if (pivot < 0 || mpz_cmpabs(h(i, c).get_mpz_t(), h(pivot, c).get_mpz_t()) < 0) pivot = i;
            }
            if (pivot < 0) break;
            h.swap_rows(r, pivot);
            u.swap_rows(r, pivot);
            bool cleared = true;
            for (int i = r + 1; i < m.rows(); ++i) {
                if (h(i, c) == 0) continue;
                Int q = floor_div(h(i, c), h(r, c));
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(h(i, c), h(r, c));
            if (q != 0) {
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
        }
        ++r;
    }
    res.rank = r;
    return res;
}

std::vector<Int> SnfResult::invariants() const {
    std::vector<Int> inv;
    int n = std::min(s.rows(), s.cols());
    for (int i = 0; i < n; ++i)
        if (s(i, i) != 0) inv.push_back(s(i, i));
    return inv;
}

SnfResult snf(const MatZ& m) {
    SnfResult res;
    res.s = m;
    res.u = MatZ::identity(m.rows());
    res.v = MatZ::identity(m.cols());
    MatZ& s = res.s;
    MatZ& u = res.u;
    MatZ& v = res.v;
    auto swap_cols = [&](MatZ& a, int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    };
    auto add_col_multiple = [&](MatZ& a, int i, int j, const Int& c) {
        if (c == 0) return;
        for (int r = 0; r < a.rows(); ++r) a(r, i) += c * a(r, j);
    };
    int n = std::min(m.rows(), m.cols());
    for (int t = 0; t < n; ++t) {
        // move a nonzero entry of minimal absolute value to (t, t)
        auto find_pivot = [&]() -> std::pair<int, int> {
            int bi = -1, bj = -1;
            for (int i = t; i < s.rows(); ++i)
                for (int j = t; j < s.cols(); ++j) {
                    if (s(i, j) == 0) continue;
                    if (bi < 0 || mpz_cmpabs(s(i, j).get_mpz_t(), s(bi, bj).get_mpz_t()) < 0) {
                        bi = i;
                        bj = j;
                    }
                }
            return {bi, bj};
        };
        auto [pi, pj] = find_pivot();
        if (pi < 0) break;
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        swap_cols(s, t, pj);
        swap_cols(v, t, pj);
        while (true) {
            bool dirty = false;
            for (int i = t + 1; i < s.rows(); ++i) {
                if (s(i, t) == 0) continue;
                Int q = floor_div(s(i, t), s(t, t));
                s.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (s(i, t) != 0) {
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < s.cols(); ++j) {
                if (s(t, j) == 0) continue;
                Int q = floor_div(s(t, j), s(t, t));
                add_col_multiple(s, j, t, -q);
                add_col_multiple(v, j, t, -q);
                if (s(t, j) != 0) {
                    swap_cols(s, t, j);
                    swap_cols(v, t, j);
                    dirty = true;
                }
            }
            if (!dirty) break;
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    // enforce the divisibility chain
    for (int t = 0; t + 1 < n; ++t) {
        for (int k = t + 1; k < n; ++k) {
            if (s(k, k) == 0 || s(t, t) == 0) continue;
            if (s(k, k) % s(t, t) == 0) continue;
            // fold s(k,k) into position t via one gcd round
            add_col_multiple(s, t, k, 1);
            add_col_multiple(v, t, k, 1);
            while (true) {
                bool dirty = false;
                if (s(k, t) != 0) {
                    Int q = floor_div(s(k, t), s(t, t));
                    s.add_row_multiple(k, t, -q);
                    u.add_row_multiple(k, t, -q);
                    if (s(k, t) != 0) {
                        s.swap_rows(t, k);
                        u.swap_rows(t, k);
                        dirty = true;
                    }
                }
                if (s(t, k) != 0) {
                    Int q = floor_div(s(t, k), s(t, t));
                    add_col_multiple(s, k, t, -q);
                    add_col_multiple(v, k, t, -q);
                    if (s(t, k) != 0) {
                        swap_cols(s, t, k);
                        swap_cols(v, t, k);
                        dirty = true;
                    }
                }
                if (!dirty) break;
            }
            if (s(t, t) < 0) {
                s.negate_row(t);
                u.negate_row(t);
            }
            // restart the chain check from t
            k = t;
        }
    }
    return res;
}

Int det(const MatZ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    int n = m.rows();
    if (n == 0) return 1;
    MatZ a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = t / prev;  // exact (Bareiss)
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Rat det(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    auto [z, d] = clear_denominators(m);
    Rat r(det(z));
    Rat dn(d);
    for (int i = 0; i < m.rows(); ++i) r /= dn;
    return r;
}

MatQ rref(const MatQ& m, int* rank_out) {
    MatQ a = m;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        a.swap_rows(r, p);
        Rat inv = 1 / a(r, c);
        for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    if (rank_out) *rank_out = r;
    return a;
}

int rank(const MatQ& m) {
    int r = 0;
    rref(m, &r);
    return r;
}

MatQ kernel(const MatQ& m) {
    // left kernel of m = right kernel of m^T, computed from rref of m^T
    MatQ t = m.transposed();
    int r = 0;
    MatQ e = rref(t, &r);
    int n = m.rows();
    std::vector<int> pivot_col(r, -1);
    std::vector<bool> is_pivot(n, false);
    for (int i = 0, c = 0; i < r; ++i) {
        while (c < n && e(i, c) == 0) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    MatQ k(n - r, n);
    int row = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        k(row, c) = 1;
        for (int i = 0; i < r; ++i) k(row, pivot_col[i]) = -e(i, c);
        ++row;
    }
    // rows are already in reduced echelon form up to row order; normalize order
    return k;
}

MatZ integer_kernel(const MatZ& m) {
    HnfResult h = hnf(m);
    int zero_rows = m.rows() - h.rank;
    MatZ k(zero_rows, m.rows());
    for (int i = 0; i < zero_rows; ++i)
        for (int j = 0; j < m.rows(); ++j) k(i, j) = h.u(h.rank + i, j);
    return k;
}

std::optional<VecQ> solve(const MatQ& m, const VecQ& b) {
    if (int(b.size()) != m.cols()) throw std::invalid_argument("solve: dimension mismatch");
    // x * m = b  <=>  m^T x^T = b^T; eliminate on [m^T | b^T]
    MatQ aug(m.cols(), m.rows() + 1);
    for (int i = 0; i < m.cols(); ++i) {
        for (int j = 0; j < m.rows(); ++j) aug(i, j) = m(j, i);
        aug(i, m.rows()) = b[i];
    }
    int r = 0;
    MatQ e = rref(aug, &r);
    VecQ x(m.rows(), Rat(0));
    for (int i = 0; i < r; ++i) {
        int c = 0;
        while (c <= m.rows() && e(i, c) == 0) ++c;
        if (c == m.rows()) return std::nullopt;  // 0 = 1: inconsistent system
        if (c > m.rows()) break;
        x[c] = e(i, m.rows());
    }
    return x;
}

std::optional<MatQ> solve(const MatQ& m, const MatQ& b) {
    MatQ x(b.rows(), m.rows());
    for (int i = 0; i < b.rows(); ++i) {
        auto xi = solve(m, b.row(i));
        if (!xi) return std::nullopt;
        x.set_row(i, *xi);
    }
    return x;
}

MatQ inverse(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    int n = m.rows();
    MatQ aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    int r = 0;
    MatQ e = rref(aug, &r);
    if (r < n) throw std::invalid_argument("inverse: singular matrix");
    MatQ inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = e(i, n + j);
    return inv;
}

MatZ lll_reduce(const MatQ& gram, const Rat& delta) {
    if (!gram.is_symmetric()) throw std::invalid_argument("lll_reduce: gram not symmetric");
    if (!(delta > Rat(1, 4) && delta < 1)) throw std::invalid_argument("lll_reduce: delta out of range");
    int n = gram.rows();
    MatZ t = MatZ::identity(n);
    MatQ g = gram;  // current t * gram * t^T

    std::vector<VecQ> mu(n, VecQ(n, Rat(0)));
    VecQ bstar(n, Rat(0));
    // exact Gram-Schmidt data from the current gram
    auto recompute = [&]() {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                Rat s = g(i, j);
                for (int k = 0; k < j; ++k) s -= mu[i][k] * mu[j][k] * bstar[k];
                if (bstar[j] == 0) throw std::invalid_argument("lll_reduce: gram not positive definite");
                mu[i][j] = s / bstar[j];
            }
            Rat b = g(i, i);
            for (int k = 0; k < i; ++k) b -= mu[i][k] * mu[i][k] * bstar[k];
            bstar[i] = b;
            if (bstar[i] <= 0) throw std::invalid_argument("lll_reduce: gram not positive definite");
        }
    };
    auto apply_row_op = [&](int i, int j, const Int& q) {
        // row_i -= q * row_j on the implicit basis
        t.add_row_multiple(i, j, -q);
        Rat qr(q);
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            Rat v = g(i, k) - qr * g(j, k);
            g(i, k) = v;
            g(k, i) = v;
        }
        g(i, i) = g(i, i) - 2 * qr * g(i, j) + qr * qr * g(j, j);
        // careful: g(i, j) above already modified through g(i, k) loop at k == j
    };
    recompute();
    int k = 1;
    while (k < n) {
        // size reduction of row k against rows k-1..0
        for (int j = k - 1; j >= 0; --j) {
            Rat m2 = mu[k][j];
            Int q = rat_round(m2);
            // round to nearest integer (ties any direction keep |mu| <= 1/2 + eps-free exactness)
            Rat diff = m2 - Rat(q);
            if (diff > Rat(1, 2)) q += 1;
            if (diff < Rat(-1, 2)) q -= 1;
            if (q != 0) {
                apply_row_op(k, j, q);
                for (int l = 0; l <= j; ++l) mu[k][l] -= Rat(q) * mu[j][l];
                mu[k][j] = m2 - Rat(q);
            }
        }
        if (bstar[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
            ++k;
        } else {
            t.swap_rows(k, k - 1);
            g.swap_rows(k, k - 1);
            for (int c = 0; c < n; ++c) std::swap(g(c, k), g(c, k - 1));
            recompute();
            k = std::max(k - 1, 1);
        }
    }
    return t;
}

}  // namespace lat5
