#include "zccs/exact.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace zccs {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_power_minus_one(int d) {
    if (d < 1) throw std::invalid_argument("x_power_minus_one: d must be >= 1");
    std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1, mpz_class(0));
    c[0] = -1;
    c[static_cast<std::size_t>(d)] = 1;
    return IntPolynomial(std::move(c));
}

const mpz_class& IntPolynomial::coeff(int k) const {
    static const mpz_class zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPolynomial();
    std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::mod_monic(const IntPolynomial& divisor) const {
    const int dd = divisor.degree();
    if (dd < 0 || divisor.coeffs().back() != 1)
        throw std::invalid_argument("mod_monic: divisor must be monic");
    if (dd == 0) return IntPolynomial();  // anything mod a unit is zero
    std::vector<mpz_class> r = coeffs_;
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
        if (r[static_cast<std::size_t>(k)] == 0) continue;
        const mpz_class c = r[static_cast<std::size_t>(k)];
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeff(j);
    }
    r.resize(static_cast<std::size_t>(dd));
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
    const int dd = den.degree();
    if (dd < 0 || den.coeffs().back() != 1)
        throw std::invalid_argument("divide_exact: divisor must be monic");
    std::vector<mpz_class> r = num.coeffs();
    const int dq = num.degree() - dd;
    std::vector<mpz_class> q(dq >= 0 ? static_cast<std::size_t>(dq) + 1 : 0, mpz_class(0));
    for (int k = num.degree(); k >= dd; --k) {
        const mpz_class c = r[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        q[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(k - dd + j)] -= c * den.coeff(j);
    }
    if (!IntPolynomial(std::move(r)).is_zero())
        throw std::invalid_argument("divide_exact: division is not exact");
    return IntPolynomial(std::move(q));
}

const IntPolynomial& cyclotomic_poly(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_poly: d must be >= 1");
    static std::map<int, IntPolynomial> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
    // Fill the cache bottom-up over the divisors of d so no recursion is
    // needed while the lock is held.
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0 || cache.count(e)) continue;
        IntPolynomial prod(std::vector<mpz_class>{mpz_class(1)});
        for (int f = 1; f < e; ++f)
            if (e % f == 0) prod = prod * cache.at(f);
        cache.emplace(e, IntPolynomial::divide_exact(IntPolynomial::x_power_minus_one(e), prod));
    }
    return cache.at(d);
}

CycloSum::CycloSum(long sigma) : sigma_(sigma) {
    if (sigma < 1) throw std::invalid_argument("CycloSum: sigma must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(sigma), 0);
}

void CycloSum::add_root(long exponent, long long weight) {
    if (exponent < 0 || exponent >= sigma_)
        throw std::out_of_range("CycloSum::add_root: exponent outside [0, sigma)");
    coeffs_[static_cast<std::size_t>(exponent)] += weight;
}

void CycloSum::add(const CycloSum& other) {
    if (other.sigma_ != sigma_)
        throw std::invalid_argument("CycloSum::add: sigma mismatch");
    for (std::size_t e = 0; e < coeffs_.size(); ++e) coeffs_[e] += other.coeffs_[e];
}

bool CycloSum::is_zero_exact() const {
    std::vector<mpz_class> c;
    c.reserve(coeffs_.size());
    bool any = false;
    for (long long v : coeffs_) {
        c.emplace_back(static_cast<long>(v));
        any = any || v != 0;
    }
    if (!any) return true;
    return IntPolynomial(std::move(c)).mod_monic(cyclotomic_poly(static_cast<int>(sigma_))).is_zero();
}

std::complex<double> CycloSum::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(sigma_);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        acc += static_cast<double>(coeffs_[e]) *
               std::polar(1.0, step * static_cast<double>(e));
    }
    return acc;
}

}  // namespace zccs
