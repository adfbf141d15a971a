#pragma once

// Correlation checks.  The aperiodic cross-correlation at shift tau is
//   tau >= 0:  sum_{i=0}^{N-1-tau} x_{i+tau} * conj(y_i)
//   tau <  0:  sum_{i=0}^{N+tau-1} x_i * conj(y_{i-tau})
// and the set correlation of two codes adds this over matching rows.  The
// exact engine represents every value as an integer sum of sigma-th roots
// of unity; the float engine is a cross-check, never the authority.

#include <complex>
#include <string>
#include <vector>

#include "zccs/exact.hpp"
#include "zccs/sequence.hpp"

namespace zccs {

enum class Engine { Exact, Float };

CycloSum accf_exact(const PhaseSequence& x, const PhaseSequence& y, long tau);
std::complex<double> accf_float(const PhaseSequence& x, const PhaseSequence& y, long tau);

CycloSum set_accf(const CodeMatrix& a, const CodeMatrix& b, long tau);
std::complex<double> set_accf_float(const CodeMatrix& a, const CodeMatrix& b, long tau);

struct Violation {
    long delta1 = 0, delta2 = 0;  // code indices
    long tau = 0;
    double magnitude = 0.0;       // |deviation from the required value|
    bool operator==(const Violation& rhs) const = default;
};

struct CheckOptions {
    Engine engine = Engine::Exact;
    // Fast mode checks each unordered code pair once and positive shifts
    // only, relying on conjugate symmetry; full mode checks every ordered
    // pair and both shift signs.
    bool fast = false;
    int jobs = 1;
};

struct CorrelationReport {
    bool passed = false;
    Engine engine = Engine::Exact;
    std::vector<Violation> violations;  // sorted by (delta1, delta2, tau)
    long long peak = 0;                 // tau=0 autocorrelation of code 0
    long long expected_peak = 0;        // K*N
    std::string note;                   // structural complaint, empty when shapes are fine
};

// Definition check for a (M, Z)-ZCCS: peaks K*N on the diagonal at tau=0,
// zero for 0 < |tau| < Z on the diagonal, zero for |tau| < Z off-diagonal.
CorrelationReport check_zccs(const CodeSet& set, long Z, const CheckOptions& opts = {});

// Complete complementary set: M == K and Z == N.
CorrelationReport check_ccc(const CodeSet& set, const CheckOptions& opts = {});

// Widest Z such that the set passes check_zccs(Z); 0 if even tau=0 fails.
// Always uses the exact engine.
long measure_zcz(const CodeSet& set, int jobs = 1);

enum class Optimality { Optimal, Suboptimal, Invalid };
Optimality check_optimality(long M, long K, long N, long Z);
const char* to_string(Optimality o);

std::vector<std::complex<double>> to_complex(const PhaseSequence& s);

// Full aperiodic cross-correlation of two equal-length complex vectors via
// FFT; result[tau + N - 1] is the value at shift tau, tau in (-N, N).
std::vector<std::complex<double>> correlate_fft(const std::vector<std::complex<double>>& x,
                                                const std::vector<std::complex<double>>& y);

}  // namespace zccs
