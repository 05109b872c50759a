#include "nctori/exterior.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nctori/exactla.hpp"

namespace nctori::exterior {

unsigned long long binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    if (!b.fits_ulong_p()) throw std::overflow_error("binomial: result does not fit");
    return b.get_ui();
}

WedgeBasis::WedgeBasis(unsigned d, unsigned l) : d_(d), l_(l) {
    if (l > d) throw std::invalid_argument("wedge basis: degree out of range");
    choose_.assign(d + 1, std::vector<unsigned long long>(d + 1, 0));
    for (unsigned n = 0; n <= d; ++n) {
        choose_[n][0] = 1;
        for (unsigned k = 1; k <= n; ++k)
            choose_[n][k] = choose_[n - 1][k - 1] + (k <= n - 1 ? choose_[n - 1][k] : 0);
    }
    size_ = static_cast<std::size_t>(choose_[d][l]);
}

std::size_t WedgeBasis::rank(const std::vector<unsigned> &subset) const {
    if (subset.size() != l_) throw std::invalid_argument("wedge rank: wrong subset size");
    std::size_t r = 0;
    unsigned prev = 0;
    for (unsigned t = 0; t < l_; ++t) {
        const unsigned it = subset[t];
        if (it >= d_ || (t > 0 && it <= subset[t - 1]))
            throw std::invalid_argument("wedge rank: subset not strictly increasing in range");
        for (unsigned v = prev; v < it; ++v)
            r += static_cast<std::size_t>(choose_[d_ - 1 - v][l_ - 1 - t]);
        prev = it + 1;
    }
    return r;
}

std::vector<unsigned> WedgeBasis::unrank(std::size_t r) const {
    if (r >= size_) throw std::invalid_argument("wedge unrank: index out of range");
    std::vector<unsigned> subset(l_);
    unsigned v = 0;
    for (unsigned t = 0; t < l_; ++t) {
        for (;; ++v) {
            const std::size_t block = static_cast<std::size_t>(choose_[d_ - 1 - v][l_ - 1 - t]);
            if (r < block) break;
            r -= block;
        }
        subset[t] = v++;
    }
    return subset;
}

Int minor_det(const IntMatrix &a, const std::vector<unsigned> &rows,
              const std::vector<unsigned> &cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor_det: not square");
    const std::size_t l = rows.size();
    if (l == 0) return Int(1);
    IntMatrix sub(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) sub.at(i, j) = a.at(rows[i], cols[j]);
    return exactla::det(sub);
}

namespace {

IntMatrix exterior_power_matrix_impl(const IntMatrix &a, unsigned l, bool parallel) {
    if (!a.is_square()) throw std::invalid_argument("exterior_power_matrix: matrix not square");
    const unsigned d = static_cast<unsigned>(a.rows());
    if (l > d) throw std::invalid_argument("exterior_power_matrix: degree out of range");
    WedgeBasis basis(d, l);
    const std::size_t n = basis.size();
    std::vector<std::vector<unsigned>> subsets(n);
    for (std::size_t r = 0; r < n; ++r) subsets[r] = basis.unrank(r);

    IntMatrix out(n, n);
    const long long total = static_cast<long long>(n) * static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (long long e = 0; e < total; ++e) {
        const std::size_t i = static_cast<std::size_t>(e) / n;
        const std::size_t j = static_cast<std::size_t>(e) % n;
        Int m = minor_det(a, subsets[i], subsets[j]);
        if (m != 0) out.at(i, j) = std::move(m);
    }
    return out;
}

} // namespace

IntMatrix exterior_power_matrix(const IntMatrix &a, unsigned l) {
    return exterior_power_matrix_impl(a, l, true);
}

IntMatrix exterior_power_matrix_serial(const IntMatrix &a, unsigned l) {
    return exterior_power_matrix_impl(a, l, false);
}

std::vector<Int> wedge_unit(const WedgeBasis &basis, const std::vector<unsigned> &subset) {
    std::vector<Int> v(basis.size(), Int(0));
    v[basis.rank(subset)] = 1;
    return v;
}

std::vector<Int> apply_exterior(const IntMatrix &a, const WedgeBasis &basis,
                                const std::vector<Int> &v) {
    if (!a.is_square() || a.rows() != basis.d())
        throw std::invalid_argument("apply_exterior: shape mismatch");
    if (v.size() != basis.size()) throw std::invalid_argument("apply_exterior: bad vector size");
    const unsigned d = basis.d(), l = basis.l();
    std::vector<Int> out(basis.size(), Int(0));
    if (l == 0) {
        out = v;
        return out;
    }

    // column nonzero counts, reused across terms
    std::vector<unsigned> col_nnz(d, 0);
    for (unsigned j = 0; j < d; ++j)
        for (unsigned i = 0; i < d; ++i)
            if (a.at(i, j) != 0) ++col_nnz[j];

    for (std::size_t r = 0; r < v.size(); ++r) {
        if (v[r] == 0) continue;
        std::vector<unsigned> subset = basis.unrank(r);
        // wedge the columns sparsest-first, tracking the reordering sign
        std::vector<unsigned> order(subset.begin(), subset.end());
        std::stable_sort(order.begin(), order.end(),
                         [&](unsigned x, unsigned y) { return col_nnz[x] < col_nnz[y]; });
        int perm_sign = 1;
        {
            std::vector<unsigned> pos(order);
            for (std::size_t i = 0; i < pos.size(); ++i)
                for (std::size_t j = i + 1; j < pos.size(); ++j)
                    if (pos[i] > pos[j]) perm_sign = -perm_sign;
        }
        std::map<std::vector<unsigned>, Int> terms;
        terms[{}] = v[r] * perm_sign;
        for (unsigned c : order) {
            std::map<std::vector<unsigned>, Int> next;
            for (const auto &[idx, coeff] : terms) {
                for (unsigned i = 0; i < d; ++i) {
                    const Int &entry = a.at(i, c);
                    if (entry == 0) continue;
                    if (std::binary_search(idx.begin(), idx.end(), i)) continue;
                    auto pos = std::upper_bound(idx.begin(), idx.end(), i);
                    const int sgn = ((idx.end() - pos) % 2 == 0) ? 1 : -1;
                    std::vector<unsigned> grown;
                    grown.reserve(idx.size() + 1);
                    grown.insert(grown.end(), idx.begin(), pos);
                    grown.push_back(i);
                    grown.insert(grown.end(), pos, idx.end());
                    next[grown] += coeff * entry * sgn;
                }
            }
            terms.swap(next);
        }
        for (const auto &[idx, coeff] : terms)
            if (coeff != 0) out[basis.rank(idx)] += coeff;
    }
    return out;
}

int shuffle_sign(const std::vector<unsigned> &subset, unsigned d) {
    // inversions between subset and its complement in the concatenated order
    std::vector<bool> in(d, false);
    for (unsigned s : subset) in[s] = true;
    long long inversions = 0;
    for (unsigned s : subset) {
        for (unsigned t = 0; t < s; ++t)
            if (!in[t]) ++inversions;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

Int wedge_top_coefficient(const std::vector<Int> &w1, unsigned l1, const std::vector<Int> &w2,
                          unsigned l2, unsigned d) {
    if (l1 + l2 != d) throw std::invalid_argument("wedge_top_coefficient: degrees must sum to d");
    WedgeBasis b1(d, l1), b2(d, l2);
    if (w1.size() != b1.size() || w2.size() != b2.size())
        throw std::invalid_argument("wedge_top_coefficient: bad vector sizes");
    Int acc = 0;
    for (std::size_t r = 0; r < w1.size(); ++r) {
        if (w1[r] == 0) continue;
        std::vector<unsigned> s = b1.unrank(r);
        std::vector<bool> in(d, false);
        for (unsigned x : s) in[x] = true;
        std::vector<unsigned> comp;
        comp.reserve(l2);
        for (unsigned x = 0; x < d; ++x)
            if (!in[x]) comp.push_back(x);
        const Int &other = w2[b2.rank(comp)];
        if (other == 0) continue;
        acc += w1[r] * other * shuffle_sign(s, d);
    }
    return acc;
}

} // namespace nctori::exterior
