#pragma once

#include <optional>
#include <string>

#include "nctori/param.hpp"

namespace nctori::ktheory {

/// Dense exterior-power matrices get a direct kernel-dimension cross check
/// only up to this dimension (about 2.7M entries); the averaged-trace route
/// covers every size.
inline constexpr std::size_t kKernelRankCap = 1650;

/// Ranks of the fixed submodules of the exterior powers for the cyclic
/// action generated by the cyclotomic companion matrix, the odd-degree sum
/// s1 (the K1 rank of the crossed product), and the AF verdict it decides.
struct KReport {
    unsigned long n = 0;
    std::size_t d = 0;
    std::vector<std::pair<unsigned, long long>> per_degree_ranks; // (l, rank), l = 0..d
    long long s1 = 0;
    std::string s0 = "unknown"; // rank of K0 is not computed, only its freeness is used
    bool af = false;
    std::optional<Int> prime_closed_form; // (2^{n-1} - (n-1)^2) / (2n) for prime n >= 3
    bool free_outside_origin = false;
    std::vector<unsigned> kernel_checked_degrees; // degrees verified by both routes
};

/// Partition {I, J} of {1..d} with both parts odd and the difference set
/// J - I covering every nonzero residue mod n.
struct PartitionCertificate {
    std::vector<unsigned> set_i; // 1-based, ascending
    std::vector<unsigned> set_j;
};

/// The two averaged wedge vectors attached to a certificate, their top wedge
/// coefficient relative to the e_I ^ e_J orientation (equal to n), and the
/// sign relating that orientation to e_1 ^ ... ^ e_d.
struct WitnessPair {
    std::vector<Int> fixed_i;
    std::vector<Int> fixed_j;
    Int wedge_coefficient; // on the e_I ^ e_J orientation
    int orientation_sign;  // e_I ^ e_J = orientation_sign * e_1 ^ ... ^ e_d
};

enum class AfVerdict { AF, NOT_AF };

struct AfReport {
    unsigned long n = 0;
    long long s1 = 0;
    AfVerdict verdict = AfVerdict::AF;
    bool theta_invariant = false;
    bool theta_nondegenerate = false;
    bool free_outside_origin = false;
};

/// rank of the fixed submodule of the l-th exterior power under the cyclic
/// group generated by A (A^order = I). Kernel dimension of the induced map
/// minus identity when the wedge basis is small enough, always cross-checked
/// against the averaged trace; the two must agree.
long long fixed_rank(const IntMatrix &a, unsigned long order, unsigned l);

/// Per-degree trace-route ranks l = 0..d for the group generated by A.
/// The parallel variant distributes the per-power characteristic polynomials
/// across threads; serial is the reference.
std::vector<long long> trace_rank_profile(const IntMatrix &a, unsigned long order);
std::vector<long long> trace_rank_profile_serial(const IntMatrix &a, unsigned long order);

/// Full report for the cyclic action of order n on Z^phi(n).
KReport s1_report(unsigned long n);

bool validate_certificate(unsigned long n, std::size_t d, const PartitionCertificate &cert);

/// Exhaustive search over partitions with 1 in I, smallest |I| first then
/// lexicographic; nullopt when no certificate exists. Dimension capped at 24.
std::optional<PartitionCertificate> partition_search(unsigned long n);
std::optional<PartitionCertificate> partition_search_serial(unsigned long n);

WitnessPair fixed_witnesses(unsigned long n, const PartitionCertificate &cert);

/// AF iff s1(n) = 0, valid for an invariant nondegenerate form; the
/// hypotheses are checked and recorded.
AfReport af_verdict(unsigned long n, const ParamMatrix &theta);

} // namespace nctori::ktheory
