#pragma once

// Text and JSON formats.
//
// Matrix text: first line n, then n lines of n whitespace-separated integers.
// Matrix JSON: {"n": 3, "rows": [[0,1,0],[0,0,1],[1,0,0]]}.
// Graph text: first line "n m", then m lines "i j" (0-based, i < j).
// Orientation text: same layout, "i j" meaning the arc i -> j.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "matrix.hpp"
#include "orientations.hpp"

namespace signings {

namespace detail {

inline Integer parse_integer(const std::string& token) {
    const std::size_t pos = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
    if (pos == token.size())
        throw Error(ErrorKind::parse, "expected an integer, got '" + token + "'");
    for (std::size_t i = pos; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            throw Error(ErrorKind::parse, "expected an integer, got '" + token + "'");
    return Integer(token[0] == '+' ? token.substr(1) : token);
}

inline std::size_t parse_count(const std::string& token, const char* what) {
    const Integer v = parse_integer(token);
    if (v < 0 || v > Integer(1'000'000'000))
        throw Error(ErrorKind::parse, std::string("invalid ") + what + " '" + token + "'");
    return static_cast<std::size_t>(v);
}

inline void check_order(std::size_t n, std::size_t max_order) {
    if (n == 0) throw Error(ErrorKind::parse, "matrix order must be positive");
    if (n > max_order)
        throw Error(ErrorKind::cap_exceeded,
                    "matrix order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order));
}

inline std::vector<std::string> tokens(std::istream& in) {
    return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

} // namespace detail

inline IntMatrix parse_matrix_text(std::istream& in, std::size_t max_order = default_max_order) {
    std::string line;
    while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {}
    std::istringstream header(line);
    const auto head = detail::tokens(header);
    if (head.size() != 1) throw Error(ErrorKind::parse, "first line must hold the order n");
    const std::size_t n = detail::parse_count(head[0], "order");
    detail::check_order(n, max_order);

    IntMatrix m(n);
    std::size_t row = 0;
    while (row < n && std::getline(in, line)) {
        std::istringstream ls(line);
        const auto toks = detail::tokens(ls);
        if (toks.empty()) continue;
        if (toks.size() != n)
            throw Error(ErrorKind::parse, "row " + std::to_string(row) + " has " + std::to_string(toks.size()) +
                                              " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) m(row, j) = detail::parse_integer(toks[j]);
        ++row;
    }
    if (row != n) throw Error(ErrorKind::parse, "expected " + std::to_string(n) + " rows, got " + std::to_string(row));
    const auto rest = detail::tokens(in);
    if (!rest.empty()) throw Error(ErrorKind::parse, "trailing content after the matrix");
    return m;
}

inline IntMatrix parse_matrix_json(const std::string& text, std::size_t max_order = default_max_order) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("rows") || !j["n"].is_number_unsigned() ||
        !j["rows"].is_array())
        throw Error(ErrorKind::parse, "JSON matrix needs an unsigned \"n\" and an array \"rows\"");
    const auto n = j["n"].get<std::size_t>();
    detail::check_order(n, max_order);
    const auto& rows = j["rows"];
    if (rows.size() != n) throw Error(ErrorKind::parse, "\"rows\" length differs from n");
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw Error(ErrorKind::parse, "row " + std::to_string(i) + " must be an array of length n");
        for (std::size_t c = 0; c < n; ++c) {
            const auto& v = rows[i][c];
            if (v.is_number_integer()) m(i, c) = Integer(v.get<long long>());
            else if (v.is_string()) m(i, c) = detail::parse_integer(v.get<std::string>());
            else throw Error(ErrorKind::parse, "matrix entries must be integers");
        }
    }
    return m;
}

/// Dispatches on the first non-blank character: '{' selects JSON.
inline IntMatrix parse_matrix(const std::string& text, std::size_t max_order = default_max_order) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_matrix_json(text, max_order);
    std::istringstream in(text);
    return parse_matrix_text(in, max_order);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::parse, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline IntMatrix load_matrix(const std::string& path, std::size_t max_order = default_max_order) {
    return parse_matrix(read_file(path), max_order);
}

inline NonnegMatrix load_nonneg_matrix(const std::string& path, std::size_t max_order = default_max_order) {
    IntMatrix m = load_matrix(path, max_order);
    for (const auto& v : m.values())
        if (v < 0) throw Error(ErrorKind::parse, "'" + path + "' has a negative entry; expected a nonnegative matrix");
    return NonnegMatrix(std::move(m));
}

template <typename T>
std::string format_matrix(const BasicMatrix<T>& m) {
    std::ostringstream os;
    os << m.order() << '\n';
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) os << (j ? " " : "") << m(i, j);
        os << '\n';
    }
    return os.str();
}

inline nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.order(); ++j) {
            const Integer& v = m(i, j);
            if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
                row.push_back(static_cast<long long>(v));
            else
                row.push_back(v.str());
        }
        rows.push_back(std::move(row));
    }
    return {{"n", m.order()}, {"rows", std::move(rows)}};
}

namespace detail {

inline std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> parse_pairs(const std::string& text) {
    std::istringstream in(text);
    const auto toks = tokens(in);
    if (toks.size() < 2) throw Error(ErrorKind::parse, "first line must be 'n m'");
    const std::size_t n = parse_count(toks[0], "vertex count");
    const std::size_t m = parse_count(toks[1], "edge count");
    if (toks.size() != 2 + 2 * m)
        throw Error(ErrorKind::parse, "expected " + std::to_string(m) + " vertex pairs");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t e = 0; e < m; ++e) {
        const std::size_t i = parse_count(toks[2 + 2 * e], "vertex");
        const std::size_t j = parse_count(toks[3 + 2 * e], "vertex");
        if (i >= n || j >= n) throw Error(ErrorKind::parse, "vertex out of range in pair " + std::to_string(e));
        pairs.emplace_back(i, j);
    }
    return {n, std::move(pairs)};
}

} // namespace detail

inline Graph parse_graph(const std::string& text) {
    auto [n, pairs] = detail::parse_pairs(text);
    for (const auto& [i, j] : pairs)
        if (i >= j) throw Error(ErrorKind::parse, "graph edges must be written 'i j' with i < j");
    try {
        return Graph(n, std::move(pairs));
    } catch (const Error& e) {
        throw Error(ErrorKind::parse, e.what());
    }
}

inline Orientation parse_orientation(const std::string& text) {
    auto [n, arcs] = detail::parse_pairs(text);
    try {
        return Orientation::from_arcs(n, arcs);
    } catch (const Error& e) {
        throw Error(ErrorKind::parse, e.what());
    }
}

inline std::string format_graph(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.edges().size() << '\n';
    for (const auto& [i, j] : g.edges()) os << i << ' ' << j << '\n';
    return os.str();
}

inline std::string format_orientation(const Orientation& o) {
    std::ostringstream os;
    os << o.graph().order() << ' ' << o.arcs().size() << '\n';
    for (const auto& [i, j] : o.arcs()) os << i << ' ' << j << '\n';
    return os.str();
}

} // namespace signings
