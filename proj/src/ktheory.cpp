#include "nctori/ktheory.hpp"

#include <algorithm>
#include <stdexcept>

#include "nctori/cyclotomic.hpp"
#include "nctori/exactla.hpp"
#include "nctori/exterior.hpp"
#include "nctori/forms.hpp"
#include "nctori/simplicity.hpp"

namespace nctori::ktheory {

namespace {

// elementary symmetric values e_l(M) for l = 0..d, read off det(xI - M)
std::vector<Int> elementary_symmetric(const IntMatrix &m) {
    const std::size_t d = m.rows();
    IntPoly chi = exactla::char_poly(m);
    std::vector<Int> e(d + 1);
    for (std::size_t l = 0; l <= d; ++l) {
        e[l] = chi.coeff(d - l);
        if (l % 2 == 1) e[l] = -e[l];
    }
    return e;
}

std::vector<long long> profile_from_sums(const std::vector<Int> &sums, unsigned long order) {
    std::vector<long long> ranks(sums.size());
    for (std::size_t l = 0; l < sums.size(); ++l) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sums[l].get_mpz_t(), Int(order).get_mpz_t());
        if (r != 0)
            throw std::logic_error("trace_rank_profile: averaged trace is not an integer");
        if (!q.fits_slong_p())
            throw std::overflow_error("trace_rank_profile: rank exceeds machine range");
        ranks[l] = q.get_si();
    }
    return ranks;
}

std::vector<long long> trace_rank_profile_impl(const IntMatrix &a, unsigned long order,
                                               bool parallel) {
    if (!a.is_square()) throw std::invalid_argument("trace_rank_profile: matrix not square");
    if (order == 0 || !mat_pow(a, order).is_identity())
        throw std::domain_error("trace_rank_profile: A^order != I");
    const std::size_t d = a.rows();
    std::vector<std::vector<Int>> per_power(order);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long k = 0; k < static_cast<long long>(order); ++k)
        per_power[k] = elementary_symmetric(mat_pow(a, static_cast<unsigned long>(k)));
    std::vector<Int> sums(d + 1, Int(0));
    for (unsigned long k = 0; k < order; ++k)
        for (std::size_t l = 0; l <= d; ++l) sums[l] += per_power[k][l];
    return profile_from_sums(sums, order);
}

long long kernel_fixed_rank(const IntMatrix &a, unsigned l) {
    IntMatrix lam = exterior::exterior_power_matrix(a, l);
    IntMatrix shifted = lam - IntMatrix::identity(lam.rows());
    return static_cast<long long>(lam.rows() - exactla::rank_q(shifted));
}

Int closed_form_prime(unsigned long p) {
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, p - 1);
    Int num = two_pow - Int(p - 1) * Int(p - 1);
    Int den = 2 * Int(p);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("prime closed form is not an integer");
    return q;
}

bool is_prime(unsigned long n) {
    auto f = cyclotomic::factorize(n);
    return n >= 2 && f.size() == 1 && f[0].second == 1;
}

} // namespace

std::vector<long long> trace_rank_profile(const IntMatrix &a, unsigned long order) {
    return trace_rank_profile_impl(a, order, true);
}

std::vector<long long> trace_rank_profile_serial(const IntMatrix &a, unsigned long order) {
    return trace_rank_profile_impl(a, order, false);
}

long long fixed_rank(const IntMatrix &a, unsigned long order, unsigned l) {
    if (!a.is_square()) throw std::invalid_argument("fixed_rank: matrix not square");
    const std::size_t d = a.rows();
    if (l > d) throw std::invalid_argument("fixed_rank: degree out of range");
    if (order == 0 || !mat_pow(a, order).is_identity())
        throw std::domain_error("fixed_rank: A^order != I");

    IntMatrix power = IntMatrix::identity(d);
    Int sum = 0;
    for (unsigned long k = 0; k < order; ++k) {
        if (k > 0) power = mat_mul(power, a);
        sum += elementary_symmetric(power)[l];
    }
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), Int(order).get_mpz_t());
    if (r != 0) throw std::logic_error("fixed_rank: averaged trace is not an integer");
    long long trace_rank = q.get_si();

    if (exterior::binomial(static_cast<unsigned>(d), l) <= kKernelRankCap) {
        long long via_kernel = kernel_fixed_rank(a, l);
        if (via_kernel != trace_rank)
            throw std::logic_error("fixed_rank: kernel and trace methods disagree");
    }
    return trace_rank;
}

KReport s1_report(unsigned long n) {
    if (n < 2) throw std::invalid_argument("s1_report: n must be >= 2");
    const std::size_t d = cyclotomic::euler_phi(n);
    IntMatrix c = cyclotomic::companion_cyclotomic(n);

    KReport report;
    report.n = n;
    report.d = d;
    report.free_outside_origin = simplicity::is_free_outside_origin(c, n);
    if (!report.free_outside_origin)
        throw std::domain_error("s1_report: action is not free outside the origin");

    std::vector<long long> ranks = trace_rank_profile(c, n);
    long long s1 = 0;
    for (unsigned l = 0; l <= d; ++l) {
        report.per_degree_ranks.emplace_back(l, ranks[l]);
        if (l % 2 == 1) s1 += ranks[l];
        if (exterior::binomial(static_cast<unsigned>(d), l) <= kKernelRankCap) {
            if (kernel_fixed_rank(c, l) != ranks[l])
                throw std::logic_error("s1_report: kernel and trace methods disagree");
            report.kernel_checked_degrees.push_back(l);
        }
    }
    report.s1 = s1;
    report.af = (s1 == 0);
    if (n >= 3 && is_prime(n)) {
        Int cf = closed_form_prime(n);
        if (mpz_cmp_si(cf.get_mpz_t(), static_cast<long>(s1)) != 0)
            throw std::logic_error("s1_report: closed form differs from computed rank");
        report.prime_closed_form = cf;
    }
    return report;
}

bool validate_certificate(unsigned long n, std::size_t d, const PartitionCertificate &cert) {
    if (cert.set_i.empty() || cert.set_j.empty()) return false;
    if (cert.set_i.size() % 2 == 0 || cert.set_j.size() % 2 == 0) return false;
    std::vector<bool> seen(d + 1, false);
    auto mark = [&](const std::vector<unsigned> &s) {
        for (unsigned x : s) {
            if (x < 1 || x > d || seen[x]) return false;
            seen[x] = true;
        }
        return true;
    };
    if (!mark(cert.set_i) || !mark(cert.set_j)) return false;
    if (cert.set_i.size() + cert.set_j.size() != d) return false;
    std::vector<bool> residue(n, false);
    for (unsigned i : cert.set_i)
        for (unsigned j : cert.set_j) {
            long diff = (static_cast<long>(j) - static_cast<long>(i)) % static_cast<long>(n);
            if (diff < 0) diff += n;
            residue[diff] = true;
        }
    if (residue[0]) return false;
    for (unsigned long r = 1; r < n; ++r)
        if (!residue[r]) return false;
    return true;
}

namespace {

std::optional<PartitionCertificate> partition_search_impl(unsigned long n, bool parallel) {
    if (n < 7 || n % 2 == 0)
        throw std::invalid_argument("partition_search: n must be an odd integer >= 7");
    const unsigned d = static_cast<unsigned>(cyclotomic::euler_phi(n));
    if (d > 24) throw std::runtime_error("partition_search: search bound exceeded (phi(n) > 24)");

    // residues (j - i) mod n for 1-based positions
    std::vector<std::vector<unsigned>> res(d + 1, std::vector<unsigned>(d + 1));
    for (unsigned i = 1; i <= d; ++i)
        for (unsigned j = 1; j <= d; ++j) {
            long diff = (static_cast<long>(j) - static_cast<long>(i)) % static_cast<long>(n);
            if (diff < 0) diff += n;
            res[i][j] = static_cast<unsigned>(diff);
        }
    const unsigned long long full = (n >= 64) ? 0 : (((1ULL << n) - 2)); // bits 1..n-1

    // |I| odd, 1 in I by the I <-> J symmetry; |J| odd follows since d is even
    for (unsigned l = 1; l < d; l += 2) {
        exterior::WedgeBasis combos(d - 1, l - 1); // choices from positions 2..d
        const std::size_t count = combos.size();
        long long hit = -1;
#pragma omp parallel for schedule(dynamic, 1024) if (parallel) reduction(min : hit)
        for (long long rk = 0; rk < static_cast<long long>(count); ++rk) {
            std::vector<unsigned> pick = combos.unrank(static_cast<std::size_t>(rk));
            std::vector<unsigned> set_i{1};
            for (unsigned p : pick) set_i.push_back(p + 2);
            std::vector<bool> in_i(d + 1, false);
            for (unsigned x : set_i) in_i[x] = true;
            unsigned long long mask = 0;
            for (unsigned i : set_i)
                for (unsigned j = 1; j <= d; ++j)
                    if (!in_i[j]) mask |= 1ULL << res[i][j];
            if ((mask & full) == full) {
                if (hit < 0 || rk < hit) hit = rk;
            }
        }
        if (hit >= 0) {
            std::vector<unsigned> pick = combos.unrank(static_cast<std::size_t>(hit));
            PartitionCertificate cert;
            cert.set_i.push_back(1);
            for (unsigned p : pick) cert.set_i.push_back(p + 2);
            for (unsigned x = 1; x <= d; ++x)
                if (std::find(cert.set_i.begin(), cert.set_i.end(), x) == cert.set_i.end())
                    cert.set_j.push_back(x);
            return cert;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<PartitionCertificate> partition_search(unsigned long n) {
    return partition_search_impl(n, true);
}

std::optional<PartitionCertificate> partition_search_serial(unsigned long n) {
    return partition_search_impl(n, false);
}

WitnessPair fixed_witnesses(unsigned long n, const PartitionCertificate &cert) {
    const std::size_t d = cyclotomic::euler_phi(n);
    if (!validate_certificate(n, d, cert))
        throw std::domain_error("fixed_witnesses: invalid partition certificate");
    IntMatrix c = cyclotomic::companion_cyclotomic(n);

    auto averaged = [&](const std::vector<unsigned> &set_1based) {
        std::vector<unsigned> subset;
        for (unsigned x : set_1based) subset.push_back(x - 1);
        exterior::WedgeBasis basis(static_cast<unsigned>(d), static_cast<unsigned>(subset.size()));
        std::vector<Int> orbit = exterior::wedge_unit(basis, subset);
        std::vector<Int> sum = orbit;
        for (unsigned long k = 1; k < n; ++k) {
            orbit = exterior::apply_exterior(c, basis, orbit);
            for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += orbit[t];
        }
        return std::make_pair(basis, sum);
    };

    auto [basis_i, w_i] = averaged(cert.set_i);
    auto [basis_j, w_j] = averaged(cert.set_j);

    auto nonzero = [](const std::vector<Int> &v) {
        for (const auto &e : v)
            if (e != 0) return true;
        return false;
    };
    if (!nonzero(w_i) || !nonzero(w_j))
        throw std::logic_error("fixed_witnesses: averaged wedge vanished");
    if (exterior::apply_exterior(c, basis_i, w_i) != w_i ||
        exterior::apply_exterior(c, basis_j, w_j) != w_j)
        throw std::logic_error("fixed_witnesses: averaged wedge is not fixed");

    Int top = exterior::wedge_top_coefficient(w_i, basis_i.l(), w_j, basis_j.l(),
                                              static_cast<unsigned>(d));
    std::vector<unsigned> subset_i;
    for (unsigned x : cert.set_i) subset_i.push_back(x - 1);
    int orient = exterior::shuffle_sign(subset_i, static_cast<unsigned>(d));

    WitnessPair out;
    out.fixed_i = std::move(w_i);
    out.fixed_j = std::move(w_j);
    out.wedge_coefficient = top * orient; // coefficient on the e_I ^ e_J orientation
    out.orientation_sign = orient;
    return out;
}

AfReport af_verdict(unsigned long n, const ParamMatrix &theta) {
    if (n < 2) throw std::invalid_argument("af_verdict: n must be >= 2");
    const std::size_t d = cyclotomic::euler_phi(n);
    if (theta.rows() != d || theta.cols() != d)
        throw std::invalid_argument("af_verdict: form has wrong dimension for phi(n)");
    IntMatrix c = cyclotomic::companion_cyclotomic(n);

    AfReport report;
    report.n = n;
    report.theta_invariant = forms::is_invariant(c, theta);
    if (!report.theta_invariant)
        throw std::domain_error("af_verdict: form is not invariant under the cyclic action");
    report.theta_nondegenerate = simplicity::is_nondegenerate(theta).nondegenerate;
    if (!report.theta_nondegenerate)
        throw std::domain_error("af_verdict: form is degenerate, crossed product is not simple");

    KReport k = s1_report(n);
    report.free_outside_origin = k.free_outside_origin;
    report.s1 = k.s1;
    report.verdict = (k.s1 == 0) ? AfVerdict::AF : AfVerdict::NOT_AF;
    return report;
}

} // namespace nctori::ktheory
