#include "zccs/parse.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace zccs {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }
    long read_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        if (pos - start > 9) fail("integer literal too long");
        return std::stol(text.substr(start, pos - start));
    }
};

struct Term {
    std::set<int> vars;
    long coeff = 1;
};

Term parse_term(Cursor& cur, long q, int m) {
    Term term;
    while (true) {
        cur.skip_ws();
        const char c = cur.peek();
        if (c == 'y') {
            ++cur.pos;
            const long idx = cur.read_integer();
            if (idx >= m)
                cur.fail("variable y" + std::to_string(idx) + " out of range (m = " +
                         std::to_string(m) + ")");
            term.vars.insert(static_cast<int>(idx));  // y*y collapses over 0/1
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            term.coeff = (term.coeff * (cur.read_integer() % q)) % q;
        } else {
            cur.fail("expected a factor (integer or yK)");
        }
        if (cur.peek() != '*') break;
        ++cur.pos;
    }
    if (term.vars.size() > 2) cur.fail("term of degree > 2");
    return term;
}

}  // namespace

Gbf parse_gbf_expr(const std::string& text, long q, int m) {
    if (q < 2 || q % 2 != 0) throw std::invalid_argument("parse_gbf_expr: q must be even >= 2");
    if (m < 1) throw std::invalid_argument("parse_gbf_expr: m must be >= 1");
    Cursor cur{text};
    if (cur.done()) cur.fail("empty expression");

    std::map<std::pair<int, int>, long> quad;
    std::map<int, long> lin;
    long cst = 0;
    while (true) {
        const Term t = parse_term(cur, q, m);
        if (t.vars.empty()) {
            cst = (cst + t.coeff) % q;
        } else if (t.vars.size() == 1) {
            lin[*t.vars.begin()] = (lin[*t.vars.begin()] + t.coeff) % q;
        } else {
            auto it = t.vars.begin();
            const int a = *it++;
            const int b = *it;
            quad[{a, b}] = (quad[{a, b}] + t.coeff) % q;
        }
        if (cur.done()) break;
        if (cur.peek() != '+') cur.fail("expected '+'");
        ++cur.pos;
        if (cur.done()) cur.fail("trailing '+'");
    }
    return Gbf(q, m, std::move(quad), std::move(lin), cst);
}

std::string to_string(const Gbf& g) {
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (!out.empty()) out += "+";
        out += piece;
    };
    for (const auto& [key, c] : g.quad()) {
        std::string piece;
        if (c != 1) piece = std::to_string(c) + "*";
        piece += "y" + std::to_string(key.first) + "*y" + std::to_string(key.second);
        append(piece);
    }
    for (const auto& [i, c] : g.lin()) {
        std::string piece;
        if (c != 1) piece = std::to_string(c) + "*";
        piece += "y" + std::to_string(i);
        append(piece);
    }
    if (g.constant() != 0) append(std::to_string(g.constant()));
    if (out.empty()) out = "0";
    return out;
}

}  // namespace zccs
