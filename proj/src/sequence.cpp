#include "zccs/sequence.hpp"

#include <stdexcept>
#include <string>

namespace zccs {

PhaseSequence psi(const Pbf& p, long q, long sigma) {
    const int a = p.vars();
    if (a > 26) throw std::invalid_argument("psi: too many variables (would be > 2^26 entries)");
    PhaseSequence out;
    out.sigma = sigma;
    const long len = 1L << a;
    out.exps.reserve(static_cast<std::size_t>(len));
    std::vector<int> point(static_cast<std::size_t>(a), 0);
    for (long r = 0; r < len; ++r) {
        for (int i = 0; i < a; ++i) point[static_cast<std::size_t>(i)] = (r >> i) & 1;
        out.exps.push_back(eval_pbf_phase(p, point, q, sigma));
    }
    return out;
}

PhaseSequence truncate_sequence(const PhaseSequence& s, int m,
                                const std::vector<int>& widths,
                                const std::vector<long>& primes) {
    if (widths.size() != primes.size())
        throw std::invalid_argument("truncate_sequence: widths/primes length mismatch");
    int total_width = m;
    for (int w : widths) {
        if (w < 1) throw std::invalid_argument("truncate_sequence: width must be >= 1");
        total_width += w;
    }
    if (s.length() != (1L << total_width))
        throw std::invalid_argument("truncate_sequence: input length is not 2^(m + sum widths)");
    PhaseSequence out;
    out.sigma = s.sigma;
    for (long r = 0; r < s.length(); ++r) {
        long t = r >> m;
        bool keep = true;
        for (std::size_t k = 0; k < widths.size(); ++k) {
            const long digit = t & ((1L << widths[k]) - 1);
            t >>= widths[k];
            if (digit >= primes[k]) {
                keep = false;
                break;
            }
        }
        if (keep) out.exps.push_back(s.exps[static_cast<std::size_t>(r)]);
    }
    return out;
}

PhaseSequence conjugate_seq(const PhaseSequence& s) {
    PhaseSequence out;
    out.sigma = s.sigma;
    out.exps.reserve(s.exps.size());
    for (long e : s.exps) out.exps.push_back(e == 0 ? 0 : s.sigma - e);
    return out;
}

CodeSet generate_zccs(const ConstructionParams& cp) {
    const long K = cp.code_rows();
    const long P = cp.prime_product();
    const long sigma = cp.sigma();
    const int n = cp.n();

    CodeSet set;
    set.params.M = cp.code_count();
    set.params.K = K;
    set.params.N = cp.code_length();
    set.params.Z = cp.zcz_width();
    set.params.sigma = sigma;
    GeneratorSpec spec;
    spec.type = cp.l() == 0 ? "ccc" : "zccs";
    spec.q = cp.q();
    spec.g = cp.g();
    spec.deleted = cp.deleted();
    spec.gamma = cp.gamma();
    spec.primes = cp.primes();
    spec.widths = cp.widths();
    spec.h_table = cp.h().table();
    set.params.generator = std::move(spec);

    set.codes.reserve(static_cast<std::size_t>(set.params.M));
    for (int family = 0; family < 2; ++family) {
        for (long r = 0; r < (1L << n); ++r) {
            for (long lidx = 0; lidx < P; ++lidx) {
                std::vector<long> lambda(static_cast<std::size_t>(cp.l()));
                long t = lidx;
                for (int i = 0; i < cp.l(); ++i) {
                    lambda[static_cast<std::size_t>(i)] = t % cp.primes()[static_cast<std::size_t>(i)];
                    t /= cp.primes()[static_cast<std::size_t>(i)];
                }
                CodeMatrix code;
                code.label.family = family == 0 ? CodeFamily::Seed : CodeFamily::ReversedConjugate;
                code.label.r = r;
                code.label.lambda = lambda;
                code.rows.reserve(static_cast<std::size_t>(K));
                for (long k = 0; k < K; ++k) {
                    std::vector<int> v(static_cast<std::size_t>(n));
                    for (int b = 0; b < n; ++b) v[static_cast<std::size_t>(b)] = (k >> b) & 1;
                    const int v_n = static_cast<int>((k >> n) & 1);
                    const Pbf member = family == 0
                                           ? build_omega_member(cp, r, lambda, v, v_n)
                                           : build_lambda_member(cp, r, lambda, v, v_n);
                    PhaseSequence row = truncate_sequence(psi(member, cp.q(), sigma), cp.m(),
                                                          cp.widths(), cp.primes());
                    if (family == 1) row = conjugate_seq(row);
                    code.rows.push_back(std::move(row));
                }
                set.codes.push_back(std::move(code));
            }
        }
    }
    return set;
}

CodeSet generate_ccc(const Gbf& g, int n, const std::vector<int>& deleted, int gamma, long q) {
    if (n != static_cast<int>(deleted.size()))
        throw std::invalid_argument("generate_ccc: n must equal the deletion set size");
    HFunction h = HFunction::from_table(
        q, n, std::vector<long>(1ull << (static_cast<unsigned>(n) + 1), 0));
    ConstructionParams cp(q, g, deleted, gamma, {}, {}, std::move(h));
    return generate_zccs(cp);
}

PlanResult plan_parameters(long target_length, int m) {
    if (m < 1) throw std::invalid_argument("plan_parameters: m must be >= 1");
    if (target_length < 2)
        throw std::invalid_argument("plan_parameters: target length must be an even integer >= 2");
    const long z = 1L << m;
    if (target_length % z != 0)
        throw std::invalid_argument("plan_parameters: target length " +
                                    std::to_string(target_length) +
                                    " is not a multiple of 2^m = " + std::to_string(z));
    PlanResult plan;
    plan.target_length = target_length;
    plan.m = m;
    plan.cofactor = target_length / z;
    long rest = plan.cofactor;
    for (long d = 2; d * d <= rest; ++d) {
        while (rest % d == 0) {
            plan.primes.push_back(d);
            rest /= d;
        }
    }
    if (rest > 1) plan.primes.push_back(rest);
    for (long p : plan.primes) {
        int s = 0;
        while ((1L << s) < p) ++s;
        plan.widths.push_back(s == 0 ? 1 : s);
    }
    return plan;
}

}  // namespace zccs
