#include "zccs/pbf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zccs {

namespace {

long mod_q(long v, long q) {
    long r = v % q;
    return r < 0 ? r + q : r;
}

}  // namespace

Pbf::Pbf(int vars) : vars_(vars) {
    if (vars < 0) throw std::invalid_argument("Pbf: negative variable count");
}

void Pbf::add_term(Monomial mono, const mpq_class& coeff) {
    if (!std::is_sorted(mono.begin(), mono.end()) ||
        std::adjacent_find(mono.begin(), mono.end()) != mono.end())
        throw std::invalid_argument("Pbf::add_term: monomial must be strictly increasing");
    if (!mono.empty() && (mono.front() < 0 || mono.back() >= vars_))
        throw std::invalid_argument("Pbf::add_term: variable index out of range");
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(std::move(mono), coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

mpq_class Pbf::eval(const std::vector<int>& point) const {
    if (static_cast<int>(point.size()) != vars_)
        throw std::invalid_argument("Pbf::eval: point has wrong arity");
    mpq_class acc(0);
    for (const auto& [mono, c] : terms_) {
        bool on = true;
        for (int i : mono) {
            if (!point[static_cast<std::size_t>(i)]) {
                on = false;
                break;
            }
        }
        if (on) acc += c;
    }
    return acc;
}

Pbf Pbf::from_gbf(const Gbf& g, int total_vars) {
    if (total_vars < g.m())
        throw std::invalid_argument("Pbf::from_gbf: total_vars smaller than the seed arity");
    Pbf p(total_vars);
    for (const auto& [key, c] : g.quad()) p.add_term({key.first, key.second}, mpq_class(c));
    for (const auto& [i, c] : g.lin()) p.add_term({i}, mpq_class(c));
    p.add_term({}, mpq_class(g.constant()));
    return p;
}

long eval_pbf_phase(const Pbf& p, const std::vector<int>& point, long q, long sigma) {
    if (q < 1 || sigma < 1 || sigma % q != 0)
        throw std::invalid_argument("eval_pbf_phase: need sigma to be a positive multiple of q");
    mpq_class e = p.eval(point) * sigma / q;
    e.canonicalize();
    if (e.get_den() != 1)
        throw std::domain_error("eval_pbf_phase: phase is not an integer multiple of 2*pi/sigma");
    mpz_class r = e.get_num() % sigma;
    if (r < 0) r += sigma;
    return r.get_si();
}

HFunction HFunction::from_table(long q, int n, std::vector<long> table) {
    if (q < 2 || q % 2 != 0) throw std::invalid_argument("HFunction: q must be even >= 2");
    if (n < 0) throw std::invalid_argument("HFunction: n must be >= 0");
    if (table.size() != (1ull << (n + 1)))
        throw std::invalid_argument("HFunction: table must have 2^(n+1) entries");
    HFunction h;
    h.q_ = q;
    h.n_ = n;
    h.table_.reserve(table.size());
    for (long v : table) h.table_.push_back(mod_q(v, q));
    return h;
}

HFunction HFunction::from_path(long q, int n, const std::vector<int>& perm,
                               const std::vector<long>& u, long u0) {
    const int a = n + 1;
    if (static_cast<int>(perm.size()) != a || static_cast<int>(u.size()) != a)
        throw std::invalid_argument("HFunction::from_path: perm and u must have n+1 entries");
    std::vector<bool> seen(static_cast<std::size_t>(a), false);
    for (int v : perm) {
        if (v < 0 || v >= a || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("HFunction::from_path: perm is not a permutation of 0..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (q < 2 || q % 2 != 0) throw std::invalid_argument("HFunction: q must be even >= 2");
    std::vector<long> table(1ull << a, 0);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        long val = u0;
        for (int t = 0; t + 1 < a; ++t) {
            const int b1 = (idx >> perm[static_cast<std::size_t>(t)]) & 1;
            const int b2 = (idx >> perm[static_cast<std::size_t>(t + 1)]) & 1;
            val += (q / 2) * b1 * b2;
        }
        for (int t = 0; t < a; ++t)
            if ((idx >> t) & 1) val += u[static_cast<std::size_t>(t)];
        table[idx] = mod_q(val, q);
    }
    return from_table(q, n, std::move(table));
}

long HFunction::value(long index) const {
    if (index < 0 || index >= static_cast<long>(table_.size()))
        throw std::out_of_range("HFunction::value: index out of range");
    return table_[static_cast<std::size_t>(index)];
}

HConditionResult check_h_condition(const HFunction& h) {
    const long q = h.q();
    for (long c = 0; c < q; ++c) {
        const long alt = mod_q(c + q / 2, q);
        bool all = true;
        for (long v : h.table()) {
            if (v != c && v != alt) {
                all = false;
                break;
            }
        }
        if (all) return {true, c};
    }
    return {false, std::nullopt};
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

ConstructionParams::ConstructionParams(long q, Gbf g, std::vector<int> deleted, int gamma,
                                       std::vector<long> primes, std::vector<int> widths,
                                       HFunction h, bool literal_reversal_tail,
                                       bool strict_widths)
    : q_(q),
      g_(std::move(g)),
      deleted_(std::move(deleted)),
      gamma_(gamma),
      primes_(std::move(primes)),
      widths_(std::move(widths)),
      h_(std::move(h)),
      literal_reversal_tail_(literal_reversal_tail) {
    if (q_ < 2 || q_ % 2 != 0)
        throw std::invalid_argument("ConstructionParams: q must be an even integer >= 2");
    if (g_.q() != q_) throw std::invalid_argument("ConstructionParams: seed function has a different q");
    if (primes_.size() != widths_.size())
        throw std::invalid_argument("ConstructionParams: primes and widths differ in length");
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        const long p = primes_[i];
        if (!is_prime(p)) {
            std::string msg = "ConstructionParams: p=" + std::to_string(p) + " is not prime";
            if (p >= 4) msg += "; factor the target length into primes first";
            throw std::invalid_argument(msg);
        }
        const int s = widths_[i];
        if (s < 1 || s > 30)
            throw std::invalid_argument("ConstructionParams: width s must be in [1, 30]");
        const long cap = 1L << s;
        if (strict_widths ? (p >= cap) : (p > cap))
            throw std::invalid_argument(
                "ConstructionParams: need p <= 2^s (strict mode: p < 2^s) for p=" +
                std::to_string(p) + ", s=" + std::to_string(s));
    }
    const PathReport rep = check_path_reduction(g_, deleted_, gamma_);
    if (!rep.ok)
        throw std::invalid_argument(std::string("ConstructionParams: deletion set check failed: ") +
                                    to_string(rep.failure));
    if (h_.q() != q_) throw std::invalid_argument("ConstructionParams: h has a different q");
    if (h_.n() != n()) throw std::invalid_argument("ConstructionParams: h arity is not n+1");
    if (total_vars() > 26)
        throw std::invalid_argument("ConstructionParams: more than 26 total variables");
}

int ConstructionParams::total_vars() const {
    return m() + std::accumulate(widths_.begin(), widths_.end(), 0);
}

long ConstructionParams::prime_product() const {
    long p = 1;
    for (long pi : primes_) p *= pi;
    return p;
}

long ConstructionParams::sigma() const {
    long s = q_;
    for (long pi : primes_) s = std::lcm(s, pi);
    return s;
}

long ConstructionParams::code_rows() const { return 1L << (n() + 1); }
long ConstructionParams::code_length() const { return (1L << m()) * prime_product(); }
long ConstructionParams::zcz_width() const { return 1L << m(); }
long ConstructionParams::code_count() const { return code_rows() * prime_product(); }

namespace {

void check_member_args(const ConstructionParams& cp, long r, const std::vector<long>& lambda,
                       const std::vector<int>& v, int v_n) {
    if (static_cast<int>(lambda.size()) != cp.l())
        throw std::invalid_argument("member: lambda has wrong length");
    for (int i = 0; i < cp.l(); ++i)
        if (lambda[static_cast<std::size_t>(i)] < 0 ||
            lambda[static_cast<std::size_t>(i)] >= cp.primes()[static_cast<std::size_t>(i)])
            throw std::invalid_argument("member: lambda_i outside [0, p_i)");
    if (r < 0 || r >= (1L << cp.n()))
        throw std::invalid_argument("member: r outside [0, 2^n)");
    if (static_cast<int>(v.size()) != cp.n())
        throw std::invalid_argument("member: v has wrong length");
    for (int b : v)
        if (b != 0 && b != 1) throw std::invalid_argument("member: v entries must be 0/1");
    if (v_n != 0 && v_n != 1) throw std::invalid_argument("member: v_n must be 0/1");
}

Pbf build_seeded(const ConstructionParams& cp, const Gbf& seed, const std::vector<long>& lambda) {
    Pbf p = Pbf::from_gbf(seed, cp.total_vars());
    int offset = cp.m();
    for (int i = 0; i < cp.l(); ++i) {
        const long pi = cp.primes()[static_cast<std::size_t>(i)];
        const int si = cp.widths()[static_cast<std::size_t>(i)];
        // lambda_i * (q/p_i) * (y_off + 2 y_{off+1} + ... + 2^{s-1} y_{off+s-1})
        mpq_class base(lambda[static_cast<std::size_t>(i)] * cp.q(), pi);
        base.canonicalize();
        for (int k = 0; k < si; ++k)
            p.add_term({offset + k}, base * (1L << k));
        offset += si;
    }
    return p;
}

}  // namespace

Pbf build_m_lambda(const ConstructionParams& cp, const std::vector<long>& lambda) {
    check_member_args(cp, 0, lambda, std::vector<int>(static_cast<std::size_t>(cp.n()), 0), 0);
    return build_seeded(cp, cp.g(), lambda);
}

Pbf build_n_lambda(const ConstructionParams& cp, const std::vector<long>& lambda) {
    check_member_args(cp, 0, lambda, std::vector<int>(static_cast<std::size_t>(cp.n()), 0), 0);
    return build_seeded(cp, cp.g().reversed(), lambda);
}

Pbf build_omega_member(const ConstructionParams& cp, long r, const std::vector<long>& lambda,
                       const std::vector<int>& v, int v_n) {
    check_member_args(cp, r, lambda, v, v_n);
    Pbf p = build_seeded(cp, cp.g(), lambda);
    const long q = cp.q();
    long h_index = v_n;
    for (int t = cp.n() - 1; t >= 0; --t)
        h_index = h_index * 2 + v[static_cast<std::size_t>(t)];
    p.add_term({}, mpq_class(cp.h().value(h_index)));
    for (int t = 0; t < cp.n(); ++t) {
        const long c = mod_q((q / 2) * (v[static_cast<std::size_t>(t)] + ((r >> t) & 1)), q);
        p.add_term({cp.deleted()[static_cast<std::size_t>(t)]}, mpq_class(c));
    }
    p.add_term({cp.gamma()}, mpq_class(mod_q((q / 2) * v_n, q)));
    return p;
}

Pbf build_lambda_member(const ConstructionParams& cp, long r, const std::vector<long>& lambda,
                        const std::vector<int>& v, int v_n) {
    check_member_args(cp, r, lambda, v, v_n);
    Pbf p = build_seeded(cp, cp.g().reversed(), lambda);
    const long q = cp.q();
    long h_index = v_n;
    for (int t = cp.n() - 1; t >= 0; --t)
        h_index = h_index * 2 + v[static_cast<std::size_t>(t)];
    p.add_term({}, mpq_class(cp.h().value(h_index)));
    for (int t = 0; t < cp.n(); ++t) {
        const long c = mod_q((q / 2) * (v[static_cast<std::size_t>(t)] + ((r >> t) & 1)), q);
        const int var = cp.deleted()[static_cast<std::size_t>(t)];
        if (cp.literal_reversal_tail() && t == cp.n() - 1) {
            // Variant that keeps the last carrier uncomplemented.
            p.add_term({var}, mpq_class(c));
        } else {
            // c * (1 - y) = c - c*y; the constant lands on the empty monomial.
            p.add_term({}, mpq_class(c));
            p.add_term({var}, mpq_class(mod_q(-c, q)));
        }
    }
    // (q/2) * (1 - v_n) * y_gamma
    p.add_term({cp.gamma()}, mpq_class(mod_q((q / 2) * (1 - v_n), q)));
    return p;
}

}  // namespace zccs
