#include "nctori/exactla.hpp"

#include <algorithm>
#include <stdexcept>

namespace nctori::exactla {

namespace {

void swap_rows(IntMatrix &m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix &m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
void row_axpy(IntMatrix &m, std::size_t a, std::size_t b, const Int &q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(b, j) != 0) m.at(a, j) -= q * m.at(b, j);
}

// col[a] -= q * col[b]
void col_axpy(IntMatrix &m, std::size_t a, std::size_t b, const Int &q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m.at(i, b) != 0) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntMatrix &m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// First nonzero coordinate positive; content already 1 for unimodular columns.
void normalize_kernel_vector(std::vector<Int> &v) {
    Int c = content(v);
    if (c > 1)
        for (auto &e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), c.get_mpz_t());
    for (const auto &e : v) {
        if (e == 0) continue;
        if (e < 0)
            for (auto &f : v) f = -f;
        break;
    }
}

} // namespace

SnfResult smith_normal_form(const IntMatrix &m) {
    const std::size_t r = m.rows(), c = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(r);
    IntMatrix v = IntMatrix::identity(c);
    const std::size_t steps = std::min(r, c);

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // minimal |entry| pivot in the trailing block, ties by (i, j)
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    const Int &e = a.at(i, j);
                    if (e == 0) continue;
                    Int ae = abs(e);
                    if (!found || ae < best) {
                        found = true;
                        best = ae;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) goto block_done;

            swap_rows(a, t, pi);
            swap_rows(u, t, pi);
            swap_cols(a, t, pj);
            swap_cols(v, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = div_round(a.at(i, t), a.at(t, t));
                row_axpy(a, i, t, q);
                row_axpy(u, i, t, q);
                if (a.at(i, t) != 0) clean = false;
            }
            if (!clean) continue;
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = div_round(a.at(t, j), a.at(t, t));
                col_axpy(a, j, t, q);
                col_axpy(v, j, t, q);
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the whole trailing block for the chain
            bool divisible = true;
            for (std::size_t i = t + 1; i < r && divisible; ++i)
                for (std::size_t j = t + 1; j < c; ++j) {
                    Int rem;
                    mpz_tdiv_r(rem.get_mpz_t(), a.at(i, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                    if (rem != 0) {
                        row_axpy(a, t, i, Int(-1));
                        row_axpy(u, t, i, Int(-1));
                        divisible = false;
                        break;
                    }
                }
            if (divisible) break;
        }
    }
block_done:

    for (std::size_t t = 0; t < steps; ++t)
        if (a.at(t, t) < 0) {
            negate_row(a, t);
            negate_row(u, t);
        }

    return SnfResult{std::move(u), std::move(a), std::move(v)};
}

std::vector<std::vector<Int>> int_kernel(const IntMatrix &m) {
    SnfResult snf = smith_normal_form(m);
    const std::size_t r = m.rows(), c = m.cols();
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = 0; j < c; ++j) {
        bool in_kernel = (j >= std::min(r, c)) || snf.d.at(j, j) == 0;
        if (!in_kernel) continue;
        std::vector<Int> vec = snf.v.col_vector(j);
        normalize_kernel_vector(vec);
        basis.push_back(std::move(vec));
    }
    return basis;
}

std::vector<std::vector<Int>> congruence_lattice(const IntMatrix &m, const Int &modulus) {
    if (modulus < 1) throw std::invalid_argument("congruence_lattice: modulus must be >= 1");
    const std::size_t r = m.rows(), c = m.cols();
    SnfResult snf = smith_normal_form(m);
    std::vector<std::vector<Int>> basis;
    basis.reserve(c);
    for (std::size_t j = 0; j < c; ++j) {
        Int dj = (j < std::min(r, c)) ? snf.d.at(j, j) : Int(0);
        Int scale = modulus / gcd(dj, modulus);
        std::vector<Int> vec = snf.v.col_vector(j);
        bool neg = false;
        for (const auto &e : vec) {
            if (e == 0) continue;
            neg = (e < 0);
            break;
        }
        for (auto &e : vec) {
            if (neg) e = -e;
            e *= scale;
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

std::vector<RatMatrix> rat_kernel(const RatMatrix &m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    RatMatrix a = m;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(rank, j));
        Rat inv = Rat(1) / a.at(rank, c);
        for (std::size_t j = c; j < cols; ++j) a.at(rank, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(rank, j);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<RatMatrix> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatMatrix vec(cols, 1);
        vec.at(f, 0) = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) vec.at(pivot_col[k], 0) = -a.at(k, f);
        basis.push_back(std::move(vec));
    }
    return basis;
}

Int det(const IntMatrix &m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    IntMatrix a = m;
    Int prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return Int(0);
            swap_rows(a, k, p);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sgn > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::size_t rank_q(const IntMatrix &m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    auto reduce_content = [](std::vector<Int> &row) {
        Int c = content(row);
        if (c > 1)
            for (auto &e : row) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), c.get_mpz_t());
    };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Int g = gcd(a[rank][c], a[i][c]);
            Int fp, fi;
            mpz_divexact(fp.get_mpz_t(), a[rank][c].get_mpz_t(), g.get_mpz_t());
            mpz_divexact(fi.get_mpz_t(), a[i][c].get_mpz_t(), g.get_mpz_t());
            for (std::size_t j = c; j < cols; ++j) a[i][j] = fp * a[i][j] - fi * a[rank][j];
            reduce_content(a[i]);
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_q(const RatMatrix &m) {
    IntMatrix scaled(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).get_den());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rat e = m.at(i, j) * Rat(l);
            scaled.at(i, j) = e.get_num();
        }
    }
    return rank_q(scaled);
}

IntMatrix inverse_unimodular(const IntMatrix &m) {
    if (!m.is_square()) throw std::invalid_argument("inverse_unimodular: matrix not square");
    Int d = det(m);
    if (d != 1 && d != -1)
        throw std::invalid_argument("inverse_unimodular: determinant is not +-1");
    const std::size_t n = m.rows();
    // Gauss-Jordan over Q on [m | I]; the result is integral for unimodular input.
    RatMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Rat(m.at(i, j));
        a.at(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a.at(p, c) == 0) ++p;
        if (p == n) throw std::logic_error("inverse_unimodular: singular despite unit determinant");
        if (p != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a.at(p, j), a.at(c, j));
        Rat inv = Rat(1) / a.at(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) a.at(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat &e = a.at(i, n + j);
            if (e.get_den() != 1)
                throw std::logic_error("inverse_unimodular: non-integral inverse");
            out.at(i, j) = e.get_num();
        }
    return out;
}

IntPoly char_poly(const IntMatrix &m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = m.rows();
    // Newton interpolation of det(xI - M) at x = 0..n.
    std::vector<Rat> nodes(n + 1), divided(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        IntMatrix shifted(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                shifted.at(i, j) = (i == j) ? Int(Int(k) - m.at(i, j)) : Int(-m.at(i, j));
        nodes[k] = Rat(Int(k));
        divided[k] = Rat(det(shifted));
    }
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t k = n; k >= level; --k)
            divided[k] = (divided[k] - divided[k - 1]) / (nodes[k] - nodes[k - level]);

    // expand sum_k divided[k] * prod_{j<k} (x - j)
    std::vector<Rat> coeffs(n + 1, Rat(0));
    std::vector<Rat> basis{Rat(1)};
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t j = 0; j < basis.size(); ++j) coeffs[j] += divided[k] * basis[j];
        if (k == n) break;
        basis.resize(basis.size() + 1, Rat(0));
        for (std::size_t j = basis.size() - 1; j > 0; --j)
            basis[j] = basis[j - 1] - Rat(Int(k)) * basis[j];
        basis[0] = -Rat(Int(k)) * basis[0];
    }
    std::vector<Int> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        if (coeffs[j].get_den() != 1)
            throw std::logic_error("char_poly: non-integral coefficient");
        out[j] = coeffs[j].get_num();
    }
    return IntPoly(std::move(out));
}

bool lattice_contains(const std::vector<std::vector<Int>> &basis, const std::vector<Int> &x) {
    if (basis.empty()) {
        for (const auto &e : x)
            if (e != 0) return false;
        return true;
    }
    const std::size_t d = basis[0].size();
    if (x.size() != d) throw std::invalid_argument("lattice_contains: dimension mismatch");
    IntMatrix b(d, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].size() != d) throw std::invalid_argument("lattice_contains: ragged basis");
        for (std::size_t i = 0; i < d; ++i) b.at(i, j) = basis[j][i];
    }
    SnfResult snf = smith_normal_form(b);
    std::vector<Int> ux = snf.u.apply(x);
    const std::size_t r = std::min(b.rows(), b.cols());
    for (std::size_t i = 0; i < d; ++i) {
        Int di = (i < r) ? snf.d.at(i, i) : Int(0);
        if (di == 0) {
            if (ux[i] != 0) return false;
        } else {
            Int rem;
            mpz_tdiv_r(rem.get_mpz_t(), ux[i].get_mpz_t(), di.get_mpz_t());
            if (rem != 0) return false;
        }
    }
    return true;
}

Int lattice_index(const std::vector<std::vector<Int>> &basis) {
    if (basis.empty()) throw std::invalid_argument("lattice_index: empty basis");
    const std::size_t d = basis[0].size();
    if (basis.size() != d) throw std::invalid_argument("lattice_index: basis is not square");
    IntMatrix b(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) b.at(i, j) = basis[j][i];
    return abs(det(b));
}

} // namespace nctori::exactla
