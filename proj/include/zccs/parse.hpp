#pragma once

// Tiny expression grammar for entering quadratic seed functions:
//   expr := term ('+' term)*
//   term := factor ('*' factor)*
//   factor := integer | 'y' integer
// Repeated variables in one product collapse (y*y = y over 0/1 inputs);
// coefficients reduce mod q.  parse and to_string are mutually stable:
// parse(to_string(g)) == g.

#include <string>

#include "zccs/gbf.hpp"

namespace zccs {

// Throws std::invalid_argument with a character position on syntax errors,
// on variables past y_{m-1}, and on products of degree > 2.
Gbf parse_gbf_expr(const std::string& text, long q, int m);

// Canonical form: quadratic terms by (i, j), then linear by i, then the
// constant; unit coefficients are omitted; the zero function prints "0".
std::string to_string(const Gbf& g);

}  // namespace zccs
