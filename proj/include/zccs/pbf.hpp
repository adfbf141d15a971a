#pragma once

// Pseudo-Boolean functions: multilinear polynomials over 0/1 variables with
// rational coefficients.  The generator extends a quadratic seed function
// over m variables with "prime phase" tails lambda_i*(q/p_i)*(binary weight
// of a block of s_i extra variables); the resulting phases live in
// (q / sigma)-th fractions, sigma = lcm(q, p_1, ..., p_l).

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "zccs/gbf.hpp"

namespace zccs {

// Monomial = strictly increasing list of variable indices; {} is the
// constant term.
using Monomial = std::vector<int>;

class Pbf {
public:
    explicit Pbf(int vars);

    int vars() const { return vars_; }
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }

    // terms[mono] += coeff; zero accumulations are erased.
    void add_term(Monomial mono, const mpq_class& coeff);

    mpq_class eval(const std::vector<int>& point) const;

    bool operator==(const Pbf& rhs) const = default;

    // Embed a quadratic function over its own m variables into a PBF over
    // total_vars >= m variables (extra variables unused).
    static Pbf from_gbf(const Gbf& g, int total_vars);

private:
    int vars_ = 0;
    std::map<Monomial, mpq_class> terms_;
};

// Phase exponent of a PBF value: e = eval(point) * sigma / q reduced into
// [0, sigma).  Throws std::domain_error if e is not an integer (sigma does
// not clear the denominators, i.e. sigma was mis-specified).
long eval_pbf_phase(const Pbf& p, const std::vector<int>& point, long q, long sigma);

// Row-offset function h over n+1 bits with values in Z_q, stored as a
// table indexed by v'_0 + 2*v'_1 + ... + 2^n*v'_n.
class HFunction {
public:
    static HFunction from_table(long q, int n, std::vector<long> table);
    // Path form: (q/2) * sum_a v_{perm[a]} v_{perm[a+1]} + sum u_a v_a + u0.
    // Guarantees every column of a generated code is a Golay sequence.
    static HFunction from_path(long q, int n, const std::vector<int>& perm,
                               const std::vector<long>& u, long u0);

    long q() const { return q_; }
    int n() const { return n_; }
    const std::vector<long>& table() const { return table_; }
    long value(long index) const;

    bool operator==(const HFunction& rhs) const = default;

private:
    HFunction() = default;
    long q_ = 2;
    int n_ = 0;
    std::vector<long> table_;
};

// The zero-correlation proof needs h to take only the two values
// {c, c + q/2} (mod q) for a single constant c.  Returns that c if so.
struct HConditionResult {
    bool ok = false;
    std::optional<long> c;
};
HConditionResult check_h_condition(const HFunction& h);

// Everything the generator needs, validated once up front.
class ConstructionParams {
public:
    // Throws std::invalid_argument on any violated precondition: odd q,
    // composite p_i, p_i > 2^{s_i} (or >= in strict mode), bad deletion
    // set / gamma, mismatched h arity.
    ConstructionParams(long q, Gbf g, std::vector<int> deleted, int gamma,
                       std::vector<long> primes, std::vector<int> widths,
                       HFunction h, bool literal_reversal_tail = false,
                       bool strict_widths = false);

    long q() const { return q_; }
    const Gbf& g() const { return g_; }
    const std::vector<int>& deleted() const { return deleted_; }
    int gamma() const { return gamma_; }
    const std::vector<long>& primes() const { return primes_; }
    const std::vector<int>& widths() const { return widths_; }
    const HFunction& h() const { return h_; }
    bool literal_reversal_tail() const { return literal_reversal_tail_; }

    int m() const { return g_.m(); }
    int n() const { return static_cast<int>(deleted_.size()); }
    int l() const { return static_cast<int>(primes_.size()); }
    int total_vars() const;         // m + sum s_i
    long prime_product() const;     // p_1 * ... * p_l
    long sigma() const;             // lcm(q, p_1, ..., p_l)
    long code_rows() const;         // K = 2^{n+1}
    long code_length() const;       // N = 2^m * prime_product
    long zcz_width() const;         // Z = 2^m
    long code_count() const;        // M = 2^{n+1} * prime_product

private:
    long q_;
    Gbf g_;
    std::vector<int> deleted_;
    int gamma_;
    std::vector<long> primes_;
    std::vector<int> widths_;
    HFunction h_;
    bool literal_reversal_tail_;
};

bool is_prime(long p);

// Seed + prime tails:  g + sum_i (lambda_i q / p_i) sum_k 2^k y_{m+off_i+k}.
Pbf build_m_lambda(const ConstructionParams& cp, const std::vector<long>& lambda);
// Same with the reversed seed g~.
Pbf build_n_lambda(const ConstructionParams& cp, const std::vector<long>& lambda);

// One row of a first-family code:
//   M^lambda + h(v, v_n) + (q/2)((v+r) . y_deleted) + (q/2) v_n y_gamma.
Pbf build_omega_member(const ConstructionParams& cp, long r,
                       const std::vector<long>& lambda,
                       const std::vector<int>& v, int v_n);
// One row of a second-family code (before conjugation): reversed seed and
// complemented carriers 1-y in place of y.
Pbf build_lambda_member(const ConstructionParams& cp, long r,
                        const std::vector<long>& lambda,
                        const std::vector<int>& v, int v_n);

}  // namespace zccs
