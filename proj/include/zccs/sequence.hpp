#pragma once

// Turning pseudo-Boolean functions into phase sequences and assembling
// complete code sets.
//
// Sequences are stored as exponent vectors: entry r is e_r with the actual
// symbol being exp(2*pi*i*e_r / sigma).  Bit 0 of the position index is
// variable y_0 (LSB-first throughout).

#include <optional>
#include <string>
#include <vector>

#include "zccs/pbf.hpp"

namespace zccs {

struct PhaseSequence {
    long sigma = 1;
    std::vector<long> exps;

    long length() const { return static_cast<long>(exps.size()); }
    bool operator==(const PhaseSequence& rhs) const = default;
};

enum class CodeFamily { Seed, ReversedConjugate };

struct CodeLabel {
    CodeFamily family = CodeFamily::Seed;
    long r = 0;
    std::vector<long> lambda;
    bool operator==(const CodeLabel& rhs) const = default;
};

struct CodeMatrix {
    CodeLabel label;
    std::vector<PhaseSequence> rows;

    long rows_count() const { return static_cast<long>(rows.size()); }
    long length() const { return rows.empty() ? 0 : rows.front().length(); }
};

// Construction inputs needed to rebuild / document a set; absent for sets
// loaded from files that carry no generator block.
struct GeneratorSpec {
    std::string type;  // "zccs" or "ccc"
    long q = 2;
    Gbf g;
    std::vector<int> deleted;
    int gamma = 0;
    std::vector<long> primes;
    std::vector<int> widths;
    std::vector<long> h_table;
    GeneratorSpec() : g(2, 1) {}
};

struct CodeSetParams {
    long M = 0, K = 0, N = 0, Z = 0;
    long sigma = 1;
    std::optional<GeneratorSpec> generator;
};

struct CodeSet {
    CodeSetParams params;
    std::vector<CodeMatrix> codes;
};

// Evaluate a PBF over all 2^vars points (LSB-first index order) into a
// length-2^vars exponent sequence over sigma.
PhaseSequence psi(const Pbf& p, long q, long sigma);

// Keep position r iff, writing r = j + 2^m * T and splitting T into
// fixed-width digits i_1 (low s_1 bits), i_2 (next s_2 bits), ..., every
// digit satisfies i_k < p_k.  Ascending surviving order.
PhaseSequence truncate_sequence(const PhaseSequence& s, int m,
                                const std::vector<int>& widths,
                                const std::vector<long>& primes);

// Entrywise complex conjugate: exponent e -> (sigma - e) mod sigma.
PhaseSequence conjugate_seq(const PhaseSequence& s);

// Full ZCCS of code_count codes, code_rows x code_length each.
// Code order: all first-family codes (r outer, lambda mixed-radix with
// lambda_1 fastest), then the second family in the same (r, lambda) order.
// Row k encodes v_t = bit t of k (t < n) and v_n = bit n of k.
CodeSet generate_zccs(const ConstructionParams& cp);

// Complete complementary code set from the seed alone (no prime tails):
// 2^{n+1} codes of size 2^{n+1} x 2^m with zero-correlation zone 2^m = N.
CodeSet generate_ccc(const Gbf& g, int n, const std::vector<int>& deleted, int gamma, long q);

// Pick primes/widths so that generate_zccs produces codes of the requested
// length with ZCZ 2^m.  target_length must be a multiple of 2^m; the prime
// factors are returned ascending with widths ceil(log2 p).
struct PlanResult {
    long target_length = 0;
    int m = 1;
    long cofactor = 1;           // target_length / 2^m
    std::vector<long> primes;    // factorization of cofactor, ascending
    std::vector<int> widths;
};
PlanResult plan_parameters(long target_length, int m);

}  // namespace zccs
