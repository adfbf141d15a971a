#pragma once

// Code-set file format (JSON, one object):
//   format_version  currently 1
//   sigma, q        phase denominator and seed alphabet
//   construction    type/q/m/n/g/delete/gamma/primes/widths/h_table
//   claimed         M, K, N, Z the generator asserts
//   codes           M x K x N integer exponent tensor, entries in [0, sigma)
// Writing is deterministic: the same set always produces the same bytes.

#include <string>

#include "zccs/sequence.hpp"

namespace zccs {

std::string codeset_to_json(const CodeSet& set);
CodeSet codeset_from_json(const std::string& text);

void write_codeset(const CodeSet& set, const std::string& path);
CodeSet read_codeset(const std::string& path);

// One CSV line per sequence: code index, row index, then re/im pairs at 15
// significant digits.
std::string codeset_to_csv(const CodeSet& set);
void export_csv(const CodeSet& set, const std::string& path);

}  // namespace zccs
