#pragma once

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "sens/graph_io.hpp"

namespace sens {

/// CNF formula. Literals use DIMACS signs: +k is variable k-1, -k its negation.
struct Cnf {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;

    static bool literal_true(int lit, std::uint64_t assignment) {
        const auto var = static_cast<unsigned>(std::abs(lit) - 1);
        const bool val = ((assignment >> var) & 1U) != 0;
        return lit > 0 ? val : !val;
    }

    /// Whether the assignment (bit i = variable i) satisfies the clause.
    static bool clause_true(const std::vector<int>& clause, std::uint64_t assignment) {
        for (const int lit : clause) {
            if (literal_true(lit, assignment)) {
                return true;
            }
        }
        return false;
    }
};

inline Cnf parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool header = false;
    std::size_t declared = 0;
    Cnf f;
    std::vector<int> open;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto tok = detail::split_ws(raw);
        if (tok.empty() || tok[0] == "c" || tok[0][0] == 'c') {
            continue;
        }
        if (tok[0] == "%") {
            break;  // trailer used by some benchmark files
        }
        if (tok[0] == "p") {
            if (header) {
                throw ParseError(line_no, "duplicate problem line");
            }
            if (tok.size() != 4 || tok[1] != "cnf") {
                throw ParseError(line_no, "problem line must be 'p cnf <vars> <clauses>'");
            }
            const auto v = detail::parse_int(tok[2], line_no, "variable count");
            const auto c = detail::parse_int(tok[3], line_no, "clause count");
            if (v < 0 || c < 0) {
                throw ParseError(line_no, "negative count in problem line");
            }
            f.num_vars = static_cast<std::size_t>(v);
            declared = static_cast<std::size_t>(c);
            header = true;
            continue;
        }
        if (!header) {
            throw ParseError(line_no, "clause before the problem line");
        }
        for (const auto& t : tok) {
            const auto lit = detail::parse_int(t, line_no, "literal");
            if (lit == 0) {
                f.clauses.push_back(std::move(open));
                open.clear();
                continue;
            }
            if (static_cast<std::size_t>(std::llabs(lit)) > f.num_vars) {
                throw ParseError(line_no, "literal " + t + " exceeds the declared " + std::to_string(f.num_vars) +
                                              " variables");
            }
            open.push_back(static_cast<int>(lit));
        }
    }
    if (!header) {
        throw ParseError(line_no, "missing problem line");
    }
    if (!open.empty()) {
        f.clauses.push_back(std::move(open));
    }
    if (f.clauses.size() != declared) {
        throw ParseError(line_no, "expected " + std::to_string(declared) + " clauses, found " +
                                      std::to_string(f.clauses.size()));
    }
    return f;
}

inline std::string write_dimacs(const Cnf& f) {
    std::ostringstream os;
    os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (const int lit : c) {
            os << lit << ' ';
        }
        os << "0\n";
    }
    return os.str();
}

/// Complete tripartite graph on X, Y, Z (n each) with integer weights.
struct NegTriangleInput {
    std::size_t n = 0;
    std::vector<std::int64_t> xy;  // xy[i*n + j] = w(x_i, y_j)
    std::vector<std::int64_t> yz;  // yz[j*n + k] = w(y_j, z_k)
    std::vector<std::int64_t> xz;  // xz[i*n + k] = w(x_i, z_k)

    explicit NegTriangleInput(std::size_t size = 0) : n(size), xy(size * size), yz(size * size), xz(size * size) {}

    std::int64_t w_xy(std::size_t i, std::size_t j) const { return xy[i * n + j]; }
    std::int64_t w_yz(std::size_t j, std::size_t k) const { return yz[j * n + k]; }
    std::int64_t w_xz(std::size_t i, std::size_t k) const { return xz[i * n + k]; }

    std::int64_t max_abs() const {
        std::int64_t m = 0;
        for (const auto* mat : {&xy, &yz, &xz}) {
            for (const auto w : *mat) {
                m = std::max(m, w < 0 ? -w : w);
            }
        }
        return m;
    }
    std::int64_t min_weight() const {
        std::int64_t m = 0;
        bool any = false;
        for (const auto* mat : {&xy, &yz, &xz}) {
            for (const auto w : *mat) {
                m = any ? std::min(m, w) : w;
                any = true;
            }
        }
        return m;
    }
    std::int64_t max_weight() const {
        std::int64_t m = 0;
        bool any = false;
        for (const auto* mat : {&xy, &yz, &xz}) {
            for (const auto w : *mat) {
                m = any ? std::max(m, w) : w;
                any = true;
            }
        }
        return m;
    }
};

namespace detail {

// Splits text into blocks of non-blank lines, remembering line numbers.
struct Block {
    std::vector<std::pair<std::size_t, std::string>> lines;
};

inline std::vector<Block> text_blocks(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::vector<Block> out;
    bool open = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (split_ws(raw).empty()) {
            open = false;
            continue;
        }
        if (!open) {
            out.emplace_back();
            open = true;
        }
        out.back().lines.emplace_back(line_no, raw);
    }
    return out;
}

}  // namespace detail

/// Three n x n integer matrices (XY, YZ, XZ) separated by blank lines.
inline NegTriangleInput parse_negtri(std::string_view text) {
    const auto blocks = detail::text_blocks(text);
    if (blocks.size() != 3) {
        throw ParseError(blocks.empty() ? 0 : blocks.back().lines.back().first,
                         "expected three matrices separated by blank lines, found " + std::to_string(blocks.size()));
    }
    const std::size_t n = blocks[0].lines.size();
    NegTriangleInput h(n);
    std::vector<std::int64_t>* mats[3] = {&h.xy, &h.yz, &h.xz};
    for (std::size_t b = 0; b < 3; ++b) {
        if (blocks[b].lines.size() != n) {
            throw ParseError(blocks[b].lines.front().first, "matrix " + std::to_string(b + 1) + " has " +
                                                                std::to_string(blocks[b].lines.size()) +
                                                                " rows, expected " + std::to_string(n));
        }
        for (std::size_t r = 0; r < n; ++r) {
            const auto& [line_no, raw] = blocks[b].lines[r];
            const auto tok = detail::split_ws(raw);
            if (tok.size() != n) {
                throw ParseError(line_no, "row has " + std::to_string(tok.size()) + " entries, expected " +
                                              std::to_string(n) + " (input must be complete tripartite)");
            }
            for (std::size_t c = 0; c < n; ++c) {
                (*mats[b])[r * n + c] = detail::parse_int(tok[c], line_no, "weight");
            }
        }
    }
    return h;
}

inline std::string write_negtri(const NegTriangleInput& h) {
    std::ostringstream os;
    const std::vector<std::int64_t>* mats[3] = {&h.xy, &h.yz, &h.xz};
    for (std::size_t b = 0; b < 3; ++b) {
        if (b > 0) {
            os << '\n';
        }
        for (std::size_t r = 0; r < h.n; ++r) {
            for (std::size_t c = 0; c < h.n; ++c) {
                os << (c > 0 ? " " : "") << (*mats[b])[r * h.n + c];
            }
            os << '\n';
        }
    }
    return os.str();
}

struct BitMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> bits;

    BitMatrix() = default;
    BitMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), bits(r * c, 0) {}

    bool at(std::size_t i, std::size_t j) const { return bits[i * cols + j] != 0; }
    void set(std::size_t i, std::size_t j, bool b) { bits[i * cols + j] = b ? 1 : 0; }
};

using BitVector = std::vector<std::uint8_t>;

/// M, u and v for a Boolean vector-matrix-vector product.
struct UmvInput {
    BitMatrix M;
    BitVector u;
    BitVector v;
};

namespace detail {

// A row of 0/1 digits, optionally whitespace separated.
inline BitVector parse_bits(const std::string& raw, std::size_t line_no) {
    BitVector out;
    for (const char ch : raw) {
        if (ch == '0' || ch == '1') {
            out.push_back(ch == '1' ? 1 : 0);
        } else if (ch != ' ' && ch != '\t' && ch != '\r') {
            throw ParseError(line_no, std::string("unexpected character '") + ch + "' in 0/1 row");
        }
    }
    return out;
}

}  // namespace detail

/// Rows of M, a blank line, then the u row and the v row.
inline UmvInput parse_umv(std::string_view text) {
    const auto blocks = detail::text_blocks(text);
    if (blocks.size() != 2 || blocks[1].lines.size() != 2) {
        throw ParseError(blocks.empty() ? 0 : blocks.back().lines.back().first,
                         "expected matrix rows, a blank line, then the u and v rows");
    }
    UmvInput in;
    const auto& rows = blocks[0].lines;
    in.M = BitMatrix(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto bits = detail::parse_bits(rows[r].second, rows[r].first);
        if (r == 0) {
            in.M = BitMatrix(rows.size(), bits.size());
        } else if (bits.size() != in.M.cols) {
            throw ParseError(rows[r].first, "ragged matrix row");
        }
        for (std::size_t c = 0; c < bits.size(); ++c) {
            in.M.set(r, c, bits[c] != 0);
        }
    }
    in.u = detail::parse_bits(blocks[1].lines[0].second, blocks[1].lines[0].first);
    in.v = detail::parse_bits(blocks[1].lines[1].second, blocks[1].lines[1].first);
    if (in.u.size() != in.M.rows) {
        throw ParseError(blocks[1].lines[0].first, "u has length " + std::to_string(in.u.size()) + ", expected " +
                                                       std::to_string(in.M.rows));
    }
    if (in.v.size() != in.M.cols) {
        throw ParseError(blocks[1].lines[1].first, "v has length " + std::to_string(in.v.size()) + ", expected " +
                                                       std::to_string(in.M.cols));
    }
    return in;
}

inline std::string write_umv(const UmvInput& in) {
    std::ostringstream os;
    for (std::size_t r = 0; r < in.M.rows; ++r) {
        for (std::size_t c = 0; c < in.M.cols; ++c) {
            os << (in.M.at(r, c) ? '1' : '0');
        }
        os << '\n';
    }
    os << '\n';
    for (const auto b : in.u) {
        os << (b ? '1' : '0');
    }
    os << '\n';
    for (const auto b : in.v) {
        os << (b ? '1' : '0');
    }
    os << '\n';
    return os.str();
}

}  // namespace sens
