#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bigraded.hpp"
#include "hilbert_polynomial.hpp"
#include "hilbert_series.hpp"
#include "koszul.hpp"
#include "monomial_ideal.hpp"
#include "scan.hpp"

namespace hilbertforge {

using json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    ParseError(int line, std::string token, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what +
                             (token.empty() ? "" : " (at '" + token + "')")),
          line_(line),
          token_(std::move(token)) {}

    int line() const { return line_; }
    const std::string& token() const { return token_; }

private:
    int line_;
    std::string token_;
};

/// A parsed `ring:`/`ideal:` description: the declared variable names (their
/// order fixes the coordinates) and the ideal itself.
struct IdealInput {
    std::vector<std::string> variables;
    MonomialIdeal ideal = MonomialIdeal::zero(1);
};

namespace detail {

struct Statement {
    std::string text;  // whitespace removed
    int line;
};

inline std::vector<Statement> split_statements(const std::string& text) {
    std::vector<Statement> out;
    std::string cur;
    int line = 1, start_line = 1;
    auto flush = [&] {
        if (!cur.empty()) out.push_back({cur, start_line});
        cur.clear();
        start_line = line;
    };
    for (char ch : text) {
        if (ch == '\n' || ch == ';') {
            flush();
            if (ch == '\n') ++line;
            start_line = line;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (cur.empty()) start_line = line;
        cur.push_back(ch);
    }
    flush();
    return out;
}

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline ExponentVector parse_monomial(const std::string& text, int line,
                                     const std::map<std::string, int>& var_index, int n) {
    if (text.empty()) throw ParseError(line, "", "empty monomial");
    ExponentVector e(n, 0);
    if (text == "1") return e;
    for (const std::string& factor : split_on(text, '*')) {
        if (factor.empty()) throw ParseError(line, text, "empty factor");
        size_t pos = 0;
        if (!is_ident_start(factor[pos]))
            throw ParseError(line, factor, "expected a variable name");
        size_t begin = pos;
        while (pos < factor.size() && is_ident_char(factor[pos])) ++pos;
        std::string name = factor.substr(begin, pos - begin);
        auto it = var_index.find(name);
        if (it == var_index.end())
            throw ParseError(line, name, "variable not declared in the ring line");
        long exp = 1;
        if (pos < factor.size()) {
            if (factor[pos] != '^') throw ParseError(line, factor, "expected '^' or '*'");
            ++pos;
            if (pos >= factor.size() || !std::isdigit(static_cast<unsigned char>(factor[pos])))
                throw ParseError(line, factor, "expected an exponent after '^'");
            size_t idx = 0;
            exp = std::stol(factor.substr(pos), &idx);
            if (pos + idx != factor.size()) throw ParseError(line, factor, "trailing characters");
            if (exp < 1) throw ParseError(line, factor, "exponent must be >= 1");
        }
        e[it->second] += static_cast<int>(exp);
    }
    return e;
}

}  // namespace detail

/// Parses the two-statement ideal format:
///
///   ring: x, y, z
///   ideal: x^2*y, y*z^2, x*z
///
/// Statements are separated by newlines or ';'. Whitespace is ignored, `^e`
/// needs e >= 1, and every variable must come from the ring line. An empty
/// generator list gives the zero ideal; `1` as a generator gives the unit
/// ideal.
inline IdealInput parse_ideal_input(const std::string& text) {
    auto statements = detail::split_statements(text);
    if (statements.empty()) throw ParseError(1, "", "empty input");
    const auto& ring = statements[0];
    if (ring.text.rfind("ring:", 0) != 0)
        throw ParseError(ring.line, ring.text, "expected 'ring: <vars>' first");
    IdealInput out;
    std::map<std::string, int> var_index;
    for (const std::string& name : detail::split_on(ring.text.substr(5), ',')) {
        if (name.empty()) throw ParseError(ring.line, ring.text, "empty variable name");
        if (!detail::is_ident_start(name[0])) throw ParseError(ring.line, name, "bad variable name");
        for (char c : name)
            if (!detail::is_ident_char(c)) throw ParseError(ring.line, name, "bad variable name");
        if (var_index.count(name)) throw ParseError(ring.line, name, "duplicate variable");
        var_index[name] = static_cast<int>(out.variables.size());
        out.variables.push_back(name);
    }
    if (out.variables.empty()) throw ParseError(ring.line, "", "ring needs at least one variable");
    if (statements.size() < 2)
        throw ParseError(ring.line, "", "missing 'ideal:' statement");
    const auto& ideal = statements[1];
    if (ideal.text.rfind("ideal:", 0) != 0)
        throw ParseError(ideal.line, ideal.text, "expected 'ideal: <monomials>'");
    if (statements.size() > 2)
        throw ParseError(statements[2].line, statements[2].text, "unexpected extra statement");
    std::vector<ExponentVector> gens;
    std::string rest = ideal.text.substr(6);
    if (!rest.empty()) {
        for (const std::string& mono : detail::split_on(rest, ','))
            gens.push_back(detail::parse_monomial(mono, ideal.line, var_index,
                                                  static_cast<int>(out.variables.size())));
    }
    out.ideal = MonomialIdeal::make(static_cast<int>(out.variables.size()), std::move(gens));
    return out;
}

/// "x^2*y" style rendering; the unit monomial prints as "1".
inline std::string monomial_to_string(const ExponentVector& e,
                                      const std::vector<std::string>& names) {
    std::string out;
    for (size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[v];
        if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out.empty() ? "1" : out;
}

inline json to_json(const Int& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

inline json to_json(const HilbertSeries& hs) {
    json num = json::array();
    for (const auto& c : hs.numerator().coeffs()) num.push_back(to_json(c));
    return json{{"n", hs.vars()}, {"shift", hs.shift()}, {"numerator", num}};
}

inline json to_json(const HilbertPolynomial& p) {
    json e = json::array();
    for (const auto& v : p.e) e.push_back(to_string(v));
    return json{{"i", p.iterate}, {"d", p.dim}, {"e", e}};
}

inline json to_json(const HVector& h) {
    json entries = json::array();
    for (const auto& v : h.entries) entries.push_back(to_json(v));
    return json{{"offset", h.offset}, {"h", entries}};
}

inline json to_json(const ShiftMultiset& dec) {
    json shifts = json::object();
    for (const auto& [c, mult] : dec) shifts[std::to_string(c)] = mult;
    return json{{"shifts", shifts}};
}

inline json to_json(const KPolynomial& fit) {
    if (!fit.stable) return json{{"unstable", true}, {"window", fit.window}};
    json coeffs = json::array();
    for (const auto& c : fit.poly.coeffs()) coeffs.push_back(to_string(c));
    json verdicts = json::array();
    for (const auto& v : fit.verdicts)
        verdicts.push_back(json{{"bound", v.bound}, {"value", v.value}, {"deg", v.degree},
                                {"pass", v.pass}});
    return json{{"coeffs", coeffs},
                {"stable_from", fit.stable_from},
                {"window", fit.window},
                {"verdicts", verdicts}};
}

inline json to_json(const ScanResult& scan, const KPolynomial& fit) {
    json ks = json::array(), es = json::array(), dims = json::array();
    for (long idx = 0; idx < scan.size(); ++idx) {
        ks.push_back(scan.k_at(idx));
        es.push_back(to_string(scan.values[idx]));
        dims.push_back(scan.dims[idx]);
    }
    json out{{"i", scan.iterate}, {"j", scan.j}, {"k", ks}, {"e", es}, {"dim", dims},
             {"fit", to_json(fit)}};
    if (scan.truncated) out["truncated"] = true;
    return out;
}

inline json to_json(const BettiTable& bt) {
    json rows = json::object();
    for (const auto& [l, row] : bt.rows) {
        json r = json::object();
        for (const auto& [t, beta] : row) r[std::to_string(t)] = beta;
        rows[std::to_string(l)] = r;
    }
    return json{{"k", bt.k}, {"rows", rows}};
}

/// CSV with columns k, e, dim — the plotting interface for scans.
inline std::string scan_to_csv(const ScanResult& scan) {
    std::ostringstream os;
    os << "k,e,dim\n";
    for (long idx = 0; idx < scan.size(); ++idx)
        os << scan.k_at(idx) << "," << to_string(scan.values[idx]) << "," << scan.dims[idx]
           << "\n";
    return os.str();
}

/// CSV with columns l, t, beta.
inline std::string betti_to_csv(const BettiTable& bt) {
    std::ostringstream os;
    os << "l,t,beta\n";
    for (const auto& [l, row] : bt.rows)
        for (const auto& [t, beta] : row) os << l << "," << t << "," << beta << "\n";
    return os.str();
}

}  // namespace hilbertforge
