#include "zccs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <fftw3.h>

namespace zccs {

namespace {

void require_same_shape(const PhaseSequence& x, const PhaseSequence& y) {
    if (x.sigma != y.sigma) throw std::invalid_argument("accf: sigma mismatch");
    if (x.length() != y.length()) throw std::invalid_argument("accf: length mismatch");
}

// Spread work over [0, count) across opts.jobs threads; fn(first, last)
// must only touch its own slice of any shared output.
void run_chunked(long count, int jobs, const std::function<void(long, long)>& fn) {
    if (jobs <= 1 || count < 2) {
        fn(0, count);
        return;
    }
    const int workers = static_cast<int>(std::min<long>(jobs, count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const long chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long first = w * chunk;
        const long last = std::min(count, first + chunk);
        if (first >= last) break;
        pool.emplace_back(fn, first, last);
    }
    for (auto& t : pool) t.join();
}

}  // namespace

CycloSum accf_exact(const PhaseSequence& x, const PhaseSequence& y, long tau) {
    require_same_shape(x, y);
    const long n = x.length();
    CycloSum sum(x.sigma);
    if (tau >= n || tau <= -n) return sum;
    if (tau >= 0) {
        for (long i = 0; i < n - tau; ++i) {
            long e = x.exps[static_cast<std::size_t>(i + tau)] - y.exps[static_cast<std::size_t>(i)];
            if (e < 0) e += x.sigma;
            sum.add_root(e);
        }
    } else {
        for (long i = 0; i < n + tau; ++i) {
            long e = x.exps[static_cast<std::size_t>(i)] - y.exps[static_cast<std::size_t>(i - tau)];
            if (e < 0) e += x.sigma;
            sum.add_root(e);
        }
    }
    return sum;
}

std::complex<double> accf_float(const PhaseSequence& x, const PhaseSequence& y, long tau) {
    require_same_shape(x, y);
    const long n = x.length();
    if (tau >= n || tau <= -n) return {0.0, 0.0};
    const double step = 2.0 * std::numbers::pi / static_cast<double>(x.sigma);
    std::complex<double> acc(0.0, 0.0);
    if (tau >= 0) {
        for (long i = 0; i < n - tau; ++i)
            acc += std::polar(1.0, step * static_cast<double>(
                                        x.exps[static_cast<std::size_t>(i + tau)] -
                                        y.exps[static_cast<std::size_t>(i)]));
    } else {
        for (long i = 0; i < n + tau; ++i)
            acc += std::polar(1.0, step * static_cast<double>(
                                        x.exps[static_cast<std::size_t>(i)] -
                                        y.exps[static_cast<std::size_t>(i - tau)]));
    }
    return acc;
}

CycloSum set_accf(const CodeMatrix& a, const CodeMatrix& b, long tau) {
    if (a.rows_count() != b.rows_count())
        throw std::invalid_argument("set_accf: codes have different row counts");
    if (a.rows_count() == 0) throw std::invalid_argument("set_accf: empty code");
    CycloSum sum(a.rows.front().sigma);
    for (long k = 0; k < a.rows_count(); ++k)
        sum.add(accf_exact(a.rows[static_cast<std::size_t>(k)], b.rows[static_cast<std::size_t>(k)], tau));
    return sum;
}

std::complex<double> set_accf_float(const CodeMatrix& a, const CodeMatrix& b, long tau) {
    if (a.rows_count() != b.rows_count())
        throw std::invalid_argument("set_accf: codes have different row counts");
    std::complex<double> acc(0.0, 0.0);
    for (long k = 0; k < a.rows_count(); ++k)
        acc += accf_float(a.rows[static_cast<std::size_t>(k)], b.rows[static_cast<std::size_t>(k)], tau);
    return acc;
}

namespace {

void validate_set_shape(const CodeSet& set) {
    if (set.codes.empty()) throw std::invalid_argument("code set is empty");
    const long k = set.codes.front().rows_count();
    const long n = set.codes.front().length();
    if (k == 0 || n == 0) throw std::invalid_argument("code set has an empty code");
    for (const auto& code : set.codes) {
        if (code.rows_count() != k) throw std::invalid_argument("code set rows are ragged");
        for (const auto& row : code.rows) {
            if (row.length() != n) throw std::invalid_argument("code set lengths are ragged");
            if (row.sigma != set.codes.front().rows.front().sigma)
                throw std::invalid_argument("code set mixes sigma values");
        }
    }
    if (k * n > (1LL << 31))
        throw std::invalid_argument("code set too large for exact coefficient arithmetic");
}

struct PairTask {
    long d1, d2;
};

// One (delta1, delta2) pair's worth of checks; appends violations in tau order.
void check_pair(const CodeSet& set, long Z, const CheckOptions& opts, long expected_peak,
                const PairTask& task, std::vector<Violation>& out) {
    const auto& a = set.codes[static_cast<std::size_t>(task.d1)];
    const auto& b = set.codes[static_cast<std::size_t>(task.d2)];
    const bool diagonal = task.d1 == task.d2;
    const long lo = opts.fast ? (diagonal ? 0 : -(Z - 1)) : -(Z - 1);
    const long hi = Z - 1;
    const double tol = 1e-9 * static_cast<double>(expected_peak);
    for (long tau = lo; tau <= hi; ++tau) {
        const bool is_peak = diagonal && tau == 0;
        if (opts.engine == Engine::Exact) {
            CycloSum sum = set_accf(a, b, tau);
            if (is_peak) sum.add_root(0, -expected_peak);
            if (!sum.is_zero_exact())
                out.push_back({task.d1, task.d2, tau, std::abs(sum.to_complex())});
        } else {
            std::complex<double> v = set_accf_float(a, b, tau);
            if (is_peak) v -= static_cast<double>(expected_peak);
            if (std::abs(v) > tol) out.push_back({task.d1, task.d2, tau, std::abs(v)});
        }
    }
}

std::vector<Violation> run_pair_checks(const CodeSet& set, long Z, const CheckOptions& opts) {
    const long m_codes = static_cast<long>(set.codes.size());
    const long expected = set.codes.front().rows_count() * set.codes.front().length();
    std::vector<PairTask> tasks;
    for (long d1 = 0; d1 < m_codes; ++d1)
        for (long d2 = opts.fast ? d1 : 0; d2 < m_codes; ++d2)
            tasks.push_back({d1, d2});
    std::vector<std::vector<Violation>> per_task(tasks.size());
    run_chunked(static_cast<long>(tasks.size()), opts.jobs, [&](long first, long last) {
        for (long i = first; i < last; ++i)
            check_pair(set, Z, opts, expected, tasks[static_cast<std::size_t>(i)],
                       per_task[static_cast<std::size_t>(i)]);
    });
    std::vector<Violation> all;
    for (auto& v : per_task) all.insert(all.end(), v.begin(), v.end());
    // task order is already (d1, d2); taus are ascending within a task
    return all;
}

}  // namespace

CorrelationReport check_zccs(const CodeSet& set, long Z, const CheckOptions& opts) {
    validate_set_shape(set);
    const long n = set.codes.front().length();
    if (Z < 1 || Z > n) throw std::invalid_argument("check_zccs: need 1 <= Z <= N");
    CorrelationReport rep;
    rep.engine = opts.engine;
    rep.expected_peak = set.codes.front().rows_count() * n;
    rep.peak = std::llround(set_accf(set.codes.front(), set.codes.front(), 0).to_complex().real());
    rep.violations = run_pair_checks(set, Z, opts);
    rep.passed = rep.violations.empty();
    return rep;
}

CorrelationReport check_ccc(const CodeSet& set, const CheckOptions& opts) {
    validate_set_shape(set);
    const long k = set.codes.front().rows_count();
    const long n = set.codes.front().length();
    if (static_cast<long>(set.codes.size()) != k) {
        // Well-formed set, but not a complete complementary one by shape.
        CorrelationReport rep;
        rep.engine = opts.engine;
        rep.passed = false;
        rep.expected_peak = k * n;
        rep.peak = std::llround(set_accf(set.codes.front(), set.codes.front(), 0).to_complex().real());
        rep.note = "code count " + std::to_string(set.codes.size()) +
                   " differs from row count " + std::to_string(k);
        return rep;
    }
    return check_zccs(set, n, opts);
}

long measure_zcz(const CodeSet& set, int jobs) {
    validate_set_shape(set);
    const long m_codes = static_cast<long>(set.codes.size());
    const long n = set.codes.front().length();
    const long expected = set.codes.front().rows_count() * n;

    // tau = 0 layer first: diagonal peaks and off-diagonal zeros.
    for (long d1 = 0; d1 < m_codes; ++d1) {
        for (long d2 = d1; d2 < m_codes; ++d2) {
            CycloSum sum = set_accf(set.codes[static_cast<std::size_t>(d1)],
                                    set.codes[static_cast<std::size_t>(d2)], 0);
            if (d1 == d2) sum.add_root(0, -expected);
            if (!sum.is_zero_exact()) return 0;
        }
    }
    // Grow tau until some pair correlates; conjugate symmetry lets us check
    // unordered pairs at both shift signs.
    for (long tau = 1; tau < n; ++tau) {
        std::vector<PairTask> tasks;
        for (long d1 = 0; d1 < m_codes; ++d1)
            for (long d2 = d1; d2 < m_codes; ++d2) tasks.push_back({d1, d2});
        std::vector<char> bad(tasks.size(), 0);
        run_chunked(static_cast<long>(tasks.size()), jobs, [&](long first, long last) {
            for (long i = first; i < last; ++i) {
                const auto& t = tasks[static_cast<std::size_t>(i)];
                const auto& a = set.codes[static_cast<std::size_t>(t.d1)];
                const auto& b = set.codes[static_cast<std::size_t>(t.d2)];
                if (!set_accf(a, b, tau).is_zero_exact() ||
                    !set_accf(a, b, -tau).is_zero_exact())
                    bad[static_cast<std::size_t>(i)] = 1;
            }
        });
        if (std::find(bad.begin(), bad.end(), 1) != bad.end()) return tau;
    }
    return n;
}

Optimality check_optimality(long M, long K, long N, long Z) {
    if (M < 1 || K < 1 || N < 1 || Z < 1)
        throw std::invalid_argument("check_optimality: all arguments must be positive");
    const long bound = K * (N / Z);
    if (M == bound) return Optimality::Optimal;
    return M < bound ? Optimality::Suboptimal : Optimality::Invalid;
}

const char* to_string(Optimality o) {
    switch (o) {
        case Optimality::Optimal: return "optimal";
        case Optimality::Suboptimal: return "suboptimal";
        case Optimality::Invalid: return "exceeds-bound";
    }
    return "unknown";
}

std::vector<std::complex<double>> to_complex(const PhaseSequence& s) {
    std::vector<std::complex<double>> table(static_cast<std::size_t>(s.sigma));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(s.sigma);
    for (long e = 0; e < s.sigma; ++e)
        table[static_cast<std::size_t>(e)] = std::polar(1.0, step * static_cast<double>(e));
    std::vector<std::complex<double>> out;
    out.reserve(s.exps.size());
    for (long e : s.exps) out.push_back(table[static_cast<std::size_t>(e)]);
    return out;
}

std::vector<std::complex<double>> correlate_fft(const std::vector<std::complex<double>>& x,
                                                const std::vector<std::complex<double>>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("correlate_fft: length mismatch");
    if (x.empty()) throw std::invalid_argument("correlate_fft: empty input");
    const long n = static_cast<long>(x.size());
    long p = 1;
    while (p < 2 * n - 1) p <<= 1;

    // FFTW planning is not thread-safe; execution of private plans is.
    static std::mutex plan_mu;

    std::vector<std::complex<double>> xf(static_cast<std::size_t>(p), {0.0, 0.0});
    std::vector<std::complex<double>> yf(static_cast<std::size_t>(p), {0.0, 0.0});
    std::copy(x.begin(), x.end(), xf.begin());
    std::copy(y.begin(), y.end(), yf.begin());

    fftw_plan fwd_x, fwd_y, inv;
    {
        std::lock_guard<std::mutex> lock(plan_mu);
        auto* xa = reinterpret_cast<fftw_complex*>(xf.data());
        auto* ya = reinterpret_cast<fftw_complex*>(yf.data());
        fwd_x = fftw_plan_dft_1d(static_cast<int>(p), xa, xa, FFTW_FORWARD, FFTW_ESTIMATE);
        fwd_y = fftw_plan_dft_1d(static_cast<int>(p), ya, ya, FFTW_FORWARD, FFTW_ESTIMATE);
        inv = fftw_plan_dft_1d(static_cast<int>(p), xa, xa, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(fwd_x);
    fftw_execute(fwd_y);
    for (long i = 0; i < p; ++i)
        xf[static_cast<std::size_t>(i)] *= std::conj(yf[static_cast<std::size_t>(i)]);
    fftw_execute(inv);
    {
        std::lock_guard<std::mutex> lock(plan_mu);
        fftw_destroy_plan(fwd_x);
        fftw_destroy_plan(fwd_y);
        fftw_destroy_plan(inv);
    }

    std::vector<std::complex<double>> out(static_cast<std::size_t>(2 * n - 1));
    for (long tau = -(n - 1); tau <= n - 1; ++tau) {
        const long idx = tau >= 0 ? tau : p + tau;
        out[static_cast<std::size_t>(tau + n - 1)] =
            xf[static_cast<std::size_t>(idx)] / static_cast<double>(p);
    }
    return out;
}

}  // namespace zccs
