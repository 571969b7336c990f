#include "fpsrev/series_io.hpp"

#include "fpsrev/error.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace fpsrev {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

unsigned parse_unsigned(std::string_view token, std::size_t line, const char* what)
{
    if (token.empty() || token.size() > 9) {
        throw Error(ErrorCode::FormatError, line, std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    unsigned v = 0;
    for (char c : token) {
        if (c < '0' || c > '9') {
            throw Error(ErrorCode::FormatError, line, std::string("bad ") + what + " '" + std::string(token) + "'");
        }
        v = v * 10 + static_cast<unsigned>(c - '0');
    }
    return v;
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
            ++i;
        }
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

struct Term {
    std::size_t line;
    std::size_t component;
    MultiIndex exponent;
    Rational coefficient;
};

} // namespace

TruncatedSeriesMap parse_series(std::string_view text)
{
    std::optional<unsigned> nvars;
    std::optional<unsigned> degree;
    std::vector<Term> terms;
    std::set<std::pair<std::size_t, std::vector<MultiIndex::value_type>>> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        const std::string_view line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const auto tokens = split_ws(line);
        if (tokens[0] == "vars" || tokens[0] == "degree") {
            if (tokens.size() != 2) {
                throw Error(ErrorCode::FormatError, line_no, "header needs exactly one value");
            }
            auto& slot = tokens[0] == "vars" ? nvars : degree;
            if (slot) {
                throw Error(ErrorCode::FormatError, line_no, "repeated header '" + std::string(tokens[0]) + "'");
            }
            if (!terms.empty()) {
                throw Error(ErrorCode::FormatError, line_no, "header after coefficient lines");
            }
            const unsigned v = parse_unsigned(tokens[1], line_no, "header value");
            if (v == 0) {
                throw Error(ErrorCode::FormatError, line_no, "header value must be positive");
            }
            slot = v;
            continue;
        }
        if (tokens[0] != "comp") {
            throw Error(ErrorCode::FormatError, line_no, "unknown directive '" + std::string(tokens[0]) + "'");
        }
        if (!nvars || !degree) {
            throw Error(ErrorCode::FormatError, line_no, "coefficient line before 'vars' and 'degree'");
        }
        const auto colon = line.find(':');
        const auto arrow = line.find("->");
        if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon) {
            throw Error(ErrorCode::FormatError, line_no, "expected 'comp j: a_1 ... a_n -> c'");
        }
        const auto head = split_ws(line.substr(0, colon));
        if (head.size() != 2) {
            throw Error(ErrorCode::FormatError, line_no, "expected 'comp j:'");
        }
        const unsigned comp = parse_unsigned(head[1], line_no, "component");
        if (comp < 1 || comp > *nvars) {
            throw Error(ErrorCode::FormatError, line_no, "component " + std::to_string(comp) + " out of range");
        }
        const auto exps = split_ws(line.substr(colon + 1, arrow - colon - 1));
        if (exps.size() != *nvars) {
            throw Error(ErrorCode::FormatError, line_no,
                        "expected " + std::to_string(*nvars) + " exponents, got " + std::to_string(exps.size()));
        }
        MultiIndex alpha(*nvars);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            alpha[i] = parse_unsigned(exps[i], line_no, "exponent");
        }
        const auto coef_tokens = split_ws(line.substr(arrow + 2));
        if (coef_tokens.size() != 1) {
            throw Error(ErrorCode::FormatError, line_no, "expected a single coefficient after '->'");
        }
        Rational coef;
        try {
            coef = Rational::parse(coef_tokens[0]);
        } catch (const Error& e) {
            throw Error(e.code() == ErrorCode::DivisionByZero ? ErrorCode::FormatError : e.code(), line_no, e.what());
        }
        const unsigned w = alpha.weight();
        if (w == 0) {
            throw Error(ErrorCode::ConstantTerm, line_no, "constant term forbidden");
        }
        if (w > *degree) {
            throw Error(ErrorCode::DegreeOverflow, line_no,
                        "term of degree " + std::to_string(w) + " exceeds declared degree " + std::to_string(*degree));
        }
        const std::vector<MultiIndex::value_type> key(alpha.entries().begin(), alpha.entries().end());
        if (!seen.emplace(comp - 1, key).second) {
            throw Error(ErrorCode::DuplicateTerm, line_no, "duplicate term");
        }
        terms.push_back({line_no, comp - 1, std::move(alpha), std::move(coef)});
    }
    if (!nvars || !degree) {
        throw Error(ErrorCode::FormatError, line_no, "missing 'vars' or 'degree' header");
    }
    TruncatedSeriesMap out(SeriesContext(*nvars, *degree));
    for (const auto& t : terms) {
        out.add_term(t.component, t.exponent, t.coefficient);
    }
    return out;
}

std::string emit_terms(const std::vector<Polynomial>& components)
{
    std::ostringstream os;
    for (std::size_t j = 0; j < components.size(); ++j) {
        for (const auto& [a, c] : components[j].terms()) {
            os << "comp " << (j + 1) << ':';
            for (auto e : a.entries()) {
                os << ' ' << e;
            }
            os << " -> " << c << '\n';
        }
    }
    return os.str();
}

std::string emit_series(const TruncatedSeriesMap& f)
{
    std::ostringstream os;
    os << "vars " << f.nvars() << '\n' << "degree " << f.degree_cap() << '\n' << emit_terms(f.components());
    return os.str();
}

std::string emit_polynomial_map(const PolynomialMap& f)
{
    std::ostringstream os;
    os << "vars " << f.nvars() << '\n'
       << "degree " << std::max(1U, f.degree().value_or(1)) << '\n'
       << emit_terms(f.components());
    return os.str();
}

nlohmann::json terms_to_json(const std::vector<Polynomial>& components)
{
    auto out = nlohmann::json::array();
    for (std::size_t j = 0; j < components.size(); ++j) {
        for (const auto& [a, c] : components[j].terms()) {
            out.push_back({
                {"component", j + 1},
                {"exponent", std::vector<MultiIndex::value_type>(a.entries().begin(), a.entries().end())},
                {"coefficient", c.to_string()},
            });
        }
    }
    return out;
}

nlohmann::json series_to_json(const TruncatedSeriesMap& f)
{
    return {
        {"vars", f.nvars()},
        {"degree", f.degree_cap()},
        {"terms", terms_to_json(f.components())},
    };
}

nlohmann::json matrix_to_json(const BlockMatrix& m)
{
    const unsigned n = m.context().nvars;
    auto entries = nlohmann::json::array();
    for (const auto& [key, b] : m.blocks()) {
        const auto rows = enumerate_weight(n, key.first);
        const auto cols = enumerate_weight(n, key.second);
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                if (b.at(r, c).is_zero()) {
                    continue;
                }
                entries.push_back({
                    {"row_weight", key.first},
                    {"col_weight", key.second},
                    {"row", std::vector<MultiIndex::value_type>(rows[r].entries().begin(), rows[r].entries().end())},
                    {"col", std::vector<MultiIndex::value_type>(cols[c].entries().begin(), cols[c].entries().end())},
                    {"value", b.at(r, c).to_string()},
                });
            }
        }
    }
    return {{"vars", n}, {"degree", m.context().degree_cap}, {"entries", entries}};
}

TruncatedSeriesMap read_series_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_series(buf.str());
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
}

} // namespace fpsrev
