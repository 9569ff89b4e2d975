#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "sens/graph.hpp"

namespace sens {

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream is{std::string(line)};
    std::string tok;
    while (is >> tok) {
        out.push_back(tok);
    }
    return out;
}

inline std::int64_t parse_int(const std::string& tok, std::size_t line, const char* what) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::logic_error&) {
        throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
    }
    if (pos != tok.size()) {
        throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
    }
    return v;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << text;
}

}  // namespace detail

/*
 * Edge-list document:
 *
 *     n m {directed|undirected} {weighted|unweighted}
 *     u v [w]          (m lines, 0-indexed)
 *
 * Blank lines are ignored. Edge ids follow line order.
 */
inline Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::optional<Graph> g;
    std::size_t declared_m = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        const auto tok = detail::split_ws(raw);
        if (tok.empty()) {
            continue;
        }
        if (!g) {
            if (tok.size() != 4) {
                throw ParseError(line_no, "header must be 'n m {directed|undirected} {weighted|unweighted}'");
            }
            const auto n = detail::parse_int(tok[0], line_no, "vertex count");
            const auto m = detail::parse_int(tok[1], line_no, "edge count");
            if (n < 0 || m < 0) {
                throw ParseError(line_no, "negative count in header");
            }
            if (tok[2] != "directed" && tok[2] != "undirected") {
                throw ParseError(line_no, "expected 'directed' or 'undirected', got '" + tok[2] + "'");
            }
            if (tok[3] != "weighted" && tok[3] != "unweighted") {
                throw ParseError(line_no, "expected 'weighted' or 'unweighted', got '" + tok[3] + "'");
            }
            g.emplace(static_cast<std::size_t>(n), tok[2] == "directed", tok[3] == "weighted");
            declared_m = static_cast<std::size_t>(m);
            continue;
        }
        if (g->m() == declared_m) {
            throw ParseError(line_no, "more edge lines than the declared " + std::to_string(declared_m));
        }
        const std::size_t want = g->weighted() ? 3 : 2;
        if (tok.size() != want) {
            throw ParseError(line_no, "expected " + std::to_string(want) + " fields, got " + std::to_string(tok.size()));
        }
        const auto u = detail::parse_int(tok[0], line_no, "vertex");
        const auto v = detail::parse_int(tok[1], line_no, "vertex");
        const auto w = g->weighted() ? detail::parse_int(tok[2], line_no, "weight") : 1;
        const auto n = static_cast<std::int64_t>(g->n());
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError(line_no, "vertex out of range [0," + std::to_string(n) + ")");
        }
        if (u == v) {
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        }
        if (w < 0) {
            throw ParseError(line_no, "negative weight " + std::to_string(w));
        }
        try {
            g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), w);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!g) {
        throw ParseError(line_no, "missing header");
    }
    if (g->m() != declared_m) {
        throw ParseError(line_no, "expected " + std::to_string(declared_m) + " edges, found " + std::to_string(g->m()));
    }
    return std::move(*g);
}

inline std::string write_graph(const Graph& g) {
    std::ostringstream os;
    os << g.n() << ' ' << g.m() << ' ' << (g.directed() ? "directed" : "undirected") << ' '
       << (g.weighted() ? "weighted" : "unweighted") << '\n';
    for (const Edge& e : g.edges()) {
        os << e.u << ' ' << e.v;
        if (g.weighted()) {
            os << ' ' << e.w;
        }
        os << '\n';
    }
    return os.str();
}

inline Graph load_graph(const std::string& path) { return parse_graph(detail::read_file(path)); }

inline void save_graph(const Graph& g, const std::string& path) { detail::write_file(path, write_graph(g)); }

}  // namespace sens
