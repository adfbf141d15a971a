#include "zccs/pmepr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "zccs/verify.hpp"

namespace zccs {

PhaseSequence extract_column(const CodeMatrix& code, long i) {
    if (code.rows.empty()) throw std::invalid_argument("extract_column: empty code");
    if (i < 0 || i >= code.length()) throw std::out_of_range("extract_column: column out of range");
    PhaseSequence col;
    col.sigma = code.rows.front().sigma;
    col.exps.reserve(code.rows.size());
    for (const auto& row : code.rows) col.exps.push_back(row.exps[static_cast<std::size_t>(i)]);
    return col;
}

namespace {

double envelope_power(const std::vector<double>& base_phase, double t) {
    std::complex<double> acc(0.0, 0.0);
    const double w = 2.0 * std::numbers::pi * t;
    for (std::size_t k = 0; k < base_phase.size(); ++k)
        acc += std::polar(1.0, base_phase[k] + w * static_cast<double>(k));
    return std::norm(acc);
}

}  // namespace

PmeprResult pmepr_value(const PhaseSequence& s, int oversample) {
    if (oversample < 4) throw std::invalid_argument("pmepr_value: oversample must be >= 4");
    if (s.exps.empty()) throw std::invalid_argument("pmepr_value: empty sequence");
    const long len = s.length();
    std::vector<double> base;
    base.reserve(static_cast<std::size_t>(len));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(s.sigma);
    for (long e : s.exps) base.push_back(step * static_cast<double>(e));

    const long grid = static_cast<long>(oversample) * len;
    double best_t = 0.0, best = -1.0;
    for (long gi = 0; gi < grid; ++gi) {
        const double t = static_cast<double>(gi) / static_cast<double>(grid);
        const double v = envelope_power(base, t);
        if (v > best) {
            best = v;
            best_t = t;
        }
    }
    // |S(t)|^2 is smooth; refine inside one grid cell around the winner.
    double lo = best_t - 1.0 / static_cast<double>(grid);
    double hi = best_t + 1.0 / static_cast<double>(grid);
    for (int it = 0; it < 200; ++it) {
        const double t1 = lo + (hi - lo) / 3.0;
        const double t2 = hi - (hi - lo) / 3.0;
        if (envelope_power(base, t1) < envelope_power(base, t2))
            lo = t1;
        else
            hi = t2;
    }
    const double tr = 0.5 * (lo + hi);
    const double vr = envelope_power(base, tr);
    if (vr > best) {
        best = vr;
        best_t = tr - std::floor(tr);  // wrap back into [0, 1)
    }
    PmeprResult res;
    res.value = best / static_cast<double>(len);
    res.argmax_t = best_t;
    res.oversample = oversample;
    res.length = len;
    return res;
}

PmeprReport check_pmepr_bound(const CodeSet& set, double bound, int oversample, int jobs) {
    if (set.codes.empty()) throw std::invalid_argument("check_pmepr_bound: empty set");
    PmeprReport rep;
    rep.bound = bound;
    rep.oversample = oversample;
    const long m_codes = static_cast<long>(set.codes.size());
    const long n = set.codes.front().length();
    rep.columns.resize(static_cast<std::size_t>(m_codes * n));

    std::vector<std::thread> pool;
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(m_codes * n)));
    const long total = m_codes * n;
    const long chunk = (total + workers - 1) / workers;
    auto work = [&](long first, long last) {
        for (long idx = first; idx < last; ++idx) {
            const long c = idx / n, col = idx % n;
            PhaseSequence column = extract_column(set.codes[static_cast<std::size_t>(c)], col);
            rep.columns[static_cast<std::size_t>(idx)] = {
                c, col, pmepr_value(column, oversample).value};
        }
    };
    if (workers <= 1) {
        work(0, total);
    } else {
        for (int w = 0; w < workers; ++w) {
            const long first = w * chunk;
            if (first >= total) break;
            pool.emplace_back(work, first, std::min(total, first + chunk));
        }
        for (auto& t : pool) t.join();
    }

    rep.worst = rep.columns.front();
    for (const auto& c : rep.columns)
        if (c.value > rep.worst.value) rep.worst = c;
    rep.passed = rep.worst.value <= bound + 1e-6;
    return rep;
}

std::optional<std::size_t> find_golay_partner(const PhaseSequence& x,
                                              const std::vector<PhaseSequence>& pool) {
    for (const auto& y : pool)
        if (y.length() != x.length() || y.sigma != x.sigma)
            throw std::invalid_argument("find_golay_partner: pool entry length/sigma mismatch");
    const long n = x.length();
    for (std::size_t idx = 0; idx < pool.size(); ++idx) {
        bool all_zero = true;
        for (long tau = 1; tau < n && all_zero; ++tau) {
            CycloSum sum = accf_exact(x, x, tau);
            sum.add(accf_exact(pool[idx], pool[idx], tau));
            all_zero = sum.is_zero_exact();
        }
        if (all_zero) return idx;
    }
    return std::nullopt;
}

}  // namespace zccs
