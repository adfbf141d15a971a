#include "zccs/codeset_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "zccs/parse.hpp"
#include "zccs/verify.hpp"

namespace zccs {

namespace {

using json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

json generator_to_json(const GeneratorSpec& spec) {
    json c;
    c["type"] = spec.type;
    c["q"] = spec.q;
    c["m"] = spec.g.m();
    c["n"] = spec.deleted.size();
    c["g"] = to_string(spec.g);
    c["delete"] = spec.deleted;
    c["gamma"] = spec.gamma;
    c["primes"] = spec.primes;
    c["widths"] = spec.widths;
    c["h_table"] = spec.h_table;
    return c;
}

GeneratorSpec generator_from_json(const json& c) {
    GeneratorSpec spec;
    spec.type = c.at("type").get<std::string>();
    spec.q = c.at("q").get<long>();
    const int m = c.at("m").get<int>();
    spec.g = parse_gbf_expr(c.at("g").get<std::string>(), spec.q, m);
    spec.deleted = c.at("delete").get<std::vector<int>>();
    spec.gamma = c.at("gamma").get<int>();
    spec.primes = c.at("primes").get<std::vector<long>>();
    spec.widths = c.at("widths").get<std::vector<int>>();
    spec.h_table = c.at("h_table").get<std::vector<long>>();
    if (static_cast<int>(c.at("n").get<std::size_t>()) != static_cast<int>(spec.deleted.size()))
        throw std::runtime_error("code set file: n does not match the deletion set");
    return spec;
}

}  // namespace

std::string codeset_to_json(const CodeSet& set) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["sigma"] = set.params.sigma;
    if (set.params.generator) doc["construction"] = generator_to_json(*set.params.generator);
    json claimed;
    claimed["M"] = set.params.M;
    claimed["K"] = set.params.K;
    claimed["N"] = set.params.N;
    claimed["Z"] = set.params.Z;
    doc["claimed"] = claimed;
    json codes = json::array();
    for (const auto& code : set.codes) {
        json rows = json::array();
        for (const auto& row : code.rows) rows.push_back(row.exps);
        codes.push_back(std::move(rows));
    }
    doc["codes"] = std::move(codes);
    return doc.dump();
}

CodeSet codeset_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("code set file: not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("code set file: top level is not an object");
    if (!doc.contains("format_version") || doc.at("format_version").get<int>() != kFormatVersion)
        throw std::runtime_error("code set file: missing or unsupported format_version");

    CodeSet set;
    set.params.sigma = doc.at("sigma").get<long>();
    if (set.params.sigma < 1) throw std::runtime_error("code set file: sigma must be >= 1");
    const auto& claimed = doc.at("claimed");
    set.params.M = claimed.at("M").get<long>();
    set.params.K = claimed.at("K").get<long>();
    set.params.N = claimed.at("N").get<long>();
    set.params.Z = claimed.at("Z").get<long>();
    if (doc.contains("construction"))
        set.params.generator = generator_from_json(doc.at("construction"));

    const auto& codes = doc.at("codes");
    if (!codes.is_array() || static_cast<long>(codes.size()) != set.params.M)
        throw std::runtime_error("code set file: codes array does not match claimed M");
    set.codes.reserve(codes.size());
    for (const auto& rows : codes) {
        if (!rows.is_array() || static_cast<long>(rows.size()) != set.params.K)
            throw std::runtime_error("code set file: a code does not have K rows");
        CodeMatrix code;
        for (const auto& row : rows) {
            if (!row.is_array() || static_cast<long>(row.size()) != set.params.N)
                throw std::runtime_error("code set file: a row does not have N entries");
            PhaseSequence seq;
            seq.sigma = set.params.sigma;
            seq.exps.reserve(row.size());
            for (const auto& e : row) {
                const long v = e.get<long>();
                if (v < 0 || v >= set.params.sigma)
                    throw std::runtime_error("code set file: exponent outside [0, sigma)");
                seq.exps.push_back(v);
            }
            code.rows.push_back(std::move(seq));
        }
        set.codes.push_back(std::move(code));
    }
    return set;
}

void write_codeset(const CodeSet& set, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << codeset_to_json(set) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

CodeSet read_codeset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return codeset_from_json(text);
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    std::string s(buf);
    // keep entries recognizably floating point: 1 -> 1.0
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

}  // namespace

std::string codeset_to_csv(const CodeSet& set) {
    std::string out = "code,row";
    const long n = set.codes.empty() ? 0 : set.codes.front().length();
    for (long i = 0; i < n; ++i) {
        out += ",re" + std::to_string(i) + ",im" + std::to_string(i);
    }
    out += "\n";
    for (std::size_t c = 0; c < set.codes.size(); ++c) {
        for (std::size_t r = 0; r < set.codes[c].rows.size(); ++r) {
            out += std::to_string(c) + "," + std::to_string(r);
            for (const auto& z : to_complex(set.codes[c].rows[r]))
                out += "," + format_double(z.real()) + "," + format_double(z.imag());
            out += "\n";
        }
    }
    return out;
}

void export_csv(const CodeSet& set, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << codeset_to_csv(set);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace zccs
