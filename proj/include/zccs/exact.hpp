#pragma once

// Exact arithmetic over Z[x] and over sums of roots of unity.
//
// A correlation value produced by the generator is always an integer
// combination of sigma-th roots of unity.  Such a sum is zero exactly when
// the polynomial sum_e coeff[e] * x^e is divisible by the sigma-th
// cyclotomic polynomial, so "equal to zero" can be decided without any
// floating point.

#include <complex>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace zccs {

// Dense polynomial with arbitrary-precision integer coefficients,
// coeffs()[k] is the coefficient of x^k.  The zero polynomial has an
// empty coefficient vector and degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial x_power_minus_one(int d);  // x^d - 1

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const mpz_class& coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    // Remainder after division by a monic divisor.  Throws if the divisor
    // is not monic (leading coefficient 1) or is constant zero.
    IntPolynomial mod_monic(const IntPolynomial& divisor) const;

    // Quotient of an exact division by a monic divisor; throws if the
    // remainder is nonzero.
    static IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// d-th cyclotomic polynomial, computed as (x^d - 1) / prod_{e|d, e<d} Phi_e
// by exact division.  Results are cached; safe to call from several threads.
const IntPolynomial& cyclotomic_poly(int d);

// Integer-weighted sum of sigma-th roots of unity:
//   sum_e coeffs()[e] * exp(2*pi*i*e / sigma).
class CycloSum {
public:
    explicit CycloSum(long sigma);

    long sigma() const { return sigma_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    // coeffs[exponent] += weight; exponent must lie in [0, sigma).
    void add_root(long exponent, long long weight = 1);
    // Pointwise sum with another value over the same sigma.
    void add(const CycloSum& other);

    // True iff the sum is exactly zero as a complex number.
    bool is_zero_exact() const;

    // Floating-point value of the sum (diagnostics / cross-checks only;
    // is_zero_exact is the authoritative test).
    std::complex<double> to_complex() const;

private:
    long sigma_ = 1;
    std::vector<long long> coeffs_;
};

}  // namespace zccs
