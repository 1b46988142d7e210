#ifndef LPM_TORIC_HPP
#define LPM_TORIC_HPP

#include <string>
#include <vector>

#include "lpm/exchange.hpp"
#include "lpm/order.hpp"
#include "lpm/polymatroid.hpp"

namespace lpm {

/// phi: Y_{m_1}...Y_{m_t} -> m_1 m_2 ... m_t.
Monomial toric_image(const BaseRingMonomial& M);

/// Y_m Y_m' - Y_n Y_n' where {n, n'} arises from {m, m'} by the recorded
/// exchange (i, j). Both terms have degree 2 and equal phi-image; the zero
/// binomial (equal term pairs) is never constructed.
struct ExchangeBinomial {
    BaseRingMonomial lhs;
    BaseRingMonomial rhs;
    int i = 0;
    int j = 0;
    std::string str() const;
};

/// One binomial per unordered basis pair and exchange yielding a distinct
/// pair, deduplicated by unordered term pair, in basis-index order.
std::vector<ExchangeBinomial> exchange_binomials(const PolymatroidInstance& inst);

/// A difference of two phi-equal base ring monomials. Which term leads is
/// decided by compare_l at the point of use.
struct Binomial {
    BaseRingMonomial first;
    BaseRingMonomial second;
    bool is_zero() const { return first == second; }
    std::string str() const;
};

/// Standard S-polynomial of two binomials with leading terms designated by
/// the convention; the leading terms cancel by construction.
Binomial s_pair(const ExchangeBinomial& f, const ExchangeBinomial& g, Convention conv);

struct CertificateTerm {
    BaseRingMonomial cofactor;
    ExchangeBinomial binomial;
    int sign = 1;            ///< +1 or -1
    int generator_index = -1; ///< position in exchange_binomials(inst)
};

/// Telescoping expression of M_V - M_W as signed monomial multiples of
/// exchange binomials, one term per fiber move.
struct Certificate {
    Vertex from;
    Vertex to;
    std::vector<CertificateTerm> terms;
};

Certificate decompose_kernel_binomial(const PolymatroidInstance& inst, const Vertex& V,
                                      const Vertex& W, Convention conv);
/// Variant routed over a prebuilt fiber graph with a precomputed generator
/// list, for sweeps that decompose many pairs of one fiber.
Certificate decompose_kernel_binomial(const PolymatroidInstance& inst, const ExchangeGraph& g,
                                      const std::vector<ExchangeBinomial>& gens, const Vertex& V,
                                      const Vertex& W);

/// Re-expands the certificate with exact integer coefficients and checks
/// it reproduces M_from - M_to term for term.
bool verify_certificate(const Certificate& cert);

struct ReductionStep {
    int side = 0; ///< 0 = first term rewritten, 1 = second
    BaseRingMonomial cofactor;
    int generator_index = -1;
};

struct ReductionResult {
    bool reduced_to_zero = false;
    bool cap_exceeded = false;
    Binomial normal_form;      ///< final state (zero binomial when reduced_to_zero)
    long long iterations = 0;
    std::vector<ReductionStep> steps; ///< replay data; input = sum of signed cofactor * generator + normal form
};

/// Rewrites whichever term admits a generator's leading term as a factor,
/// largest reducible term first, until the binomial vanishes or becomes
/// irreducible. The iteration count is capped at the size of the fiber of
/// the terms' common image; exceeding it reports an order pathology
/// instead of looping.
ReductionResult reduce_binomial(const Binomial& f, const std::vector<ExchangeBinomial>& gens,
                                Convention conv, const PolymatroidInstance& inst,
                                bool record_steps = true);

struct BuchbergerFailure {
    int f_index = 0;
    int g_index = 0;
    std::string s_binomial;
    bool cap_exceeded = false;
    std::string normal_form;
};

struct BuchbergerReport {
    Convention convention = Convention::HI;
    long long generators = 0;
    long long pairs = 0;
    long long zeros = 0;
    std::vector<BuchbergerFailure> failures;
    bool failures_truncated = false;
};

/// Reduces every unordered S-pair of the symmetric exchange binomials; no
/// product-criterion skips. Failures are data, not faults.
BuchbergerReport buchberger_check(const PolymatroidInstance& inst, Convention conv, int jobs = 1);

struct FiberRow {
    std::string mu;
    int t = 0;
    int vertices = 0;
    int edges = 0;
    bool connected = true;
    int thin_count = 0;
    std::string thin;             ///< vertex text; empty when thin_count == 0
    bool greedy_matches = true;   ///< greedy candidate equals brute-force thin filtering
    std::vector<std::string> sinks;
    bool sink_unique = true;
    bool sink_is_thin = true;
    int descent_proposal_ascents = 0; ///< non-thin vertices whose proposed move does not descend
    bool descent_gap = false;         ///< some non-thin vertex has no order-decreasing neighbor
};

struct FiberDump {
    std::string reason;
    std::string mu;
    int t = 0;
    std::vector<std::string> vertices;
    std::vector<std::string> thin_flags;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> directions; ///< per edge: "u->v", "v->u"
    std::vector<int> sinks;
};

struct SweepReport {
    std::string alpha;
    std::string omega;
    bool matroid = false;
    int n = 0;
    int r = 0;
    int t_max = 0;
    Convention convention = Convention::HI;
    long long fibers = 0;
    long long connected_fibers = 0;
    long long disconnected_fibers = 0;
    long long thin_anomalies = 0;     ///< fibers without exactly one thin vertex
    long long greedy_mismatches = 0;
    long long nonunique_sink_fibers = 0;
    long long nonthin_sink_fibers = 0;
    long long descent_gap_fibers = 0;
    std::vector<FiberRow> rows;
    std::vector<FiberDump> anomalies;
    bool anomalies_truncated = false;

    /// Connectivity, thin uniqueness and greedy agreement are the hard
    /// assertions; sink statistics are recorded data.
    bool hard_failure() const {
        return disconnected_fibers > 0 || thin_anomalies > 0 || greedy_mismatches > 0;
    }
};

/// Audits every fiber with t factors, 2 <= t <= t_max: connectivity, thin
/// vertex uniqueness, greedy agreement, and per-convention sink structure.
SweepReport verify_white_up_to(const PolymatroidInstance& inst, int t_max, Convention conv,
                               int jobs = 1);

/// Same audit evaluated once and reported under several conventions.
std::vector<SweepReport> verify_white_multi(const PolymatroidInstance& inst, int t_max,
                                            const std::vector<Convention>& convs, int jobs = 1);

} // namespace lpm

#endif
