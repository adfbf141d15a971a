#pragma once

// Peak-to-mean envelope power ratio of the columns of a code.  A column
// (s_0, ..., s_{K-1}) of unit-magnitude symbols drives the OFDM-style
// signal S(t) = sum_k s_k exp(2*pi*i*k*t); PMEPR = max_t |S(t)|^2 / K.
// Columns of codes produced here are Golay sequences whenever the row
// offset function is in path form, which caps the PMEPR at 2.

#include <cstddef>
#include <optional>
#include <vector>

#include "zccs/sequence.hpp"

namespace zccs {

// Column i of a code as a sequence of its K symbols (top row first).
PhaseSequence extract_column(const CodeMatrix& code, long i);

struct PmeprResult {
    double value = 0.0;   // max_t |S(t)|^2 / K
    double argmax_t = 0;  // location of the maximum in [0, 1)
    int oversample = 0;
    long length = 0;
};

// Grid of oversample * length points over [0, 1), then a local ternary
// refinement around the best grid point.  oversample must be >= 4.
PmeprResult pmepr_value(const PhaseSequence& s, int oversample);

struct ColumnPmepr {
    long code = 0;
    long column = 0;
    double value = 0.0;
};

struct PmeprReport {
    bool passed = false;
    double bound = 0.0;
    int oversample = 0;
    ColumnPmepr worst;
    std::vector<ColumnPmepr> columns;  // every column of every code
};

// PMEPR of every column of every code against `bound` (with a 1e-6 slack
// for the float arithmetic).
PmeprReport check_pmepr_bound(const CodeSet& set, double bound, int oversample, int jobs = 1);

// Index of the first sequence in `pool` whose aperiodic autocorrelation
// exactly cancels that of x at every nonzero shift (i.e. a Golay partner),
// or nullopt.  All sequences must share length and sigma.
std::optional<std::size_t> find_golay_partner(const PhaseSequence& x,
                                              const std::vector<PhaseSequence>& pool);

}  // namespace zccs
