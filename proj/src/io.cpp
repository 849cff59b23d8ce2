#include "farkas/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace farkas::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

// Splits into data lines, dropping blank lines, '#' comments, and '\r'.
std::vector<Line> data_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string_view::npos || raw[first] == '#') continue;
        Line line{number, {}};
        std::istringstream in{std::string(raw)};
        for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
        out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

bool parse_integer(std::string_view tok, Integer& out) {
    std::size_t i = 0;
    if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) ++i;
    if (i == tok.size()) return false;
    for (std::size_t k = i; k < tok.size(); ++k)
        if (tok[k] < '0' || tok[k] > '9') return false;
    std::string s(tok[0] == '+' ? tok.substr(1) : tok);
    return out.set_str(s, 10) == 0;
}

std::size_t parse_count(const Line& line, std::size_t k, const char* what) {
    Integer v;
    if (!parse_integer(line.tokens[k], v) || v < 0 || !v.fits_ulong_p())
        fail(line.number, std::string("invalid ") + what + " '" + line.tokens[k] + "'");
    return v.get_ui();
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    for (;;) {
        const auto comma = text.find(',', pos);
        auto part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
        parts.push_back(part);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return parts;
}

}  // namespace

VectorFamily parse_vector_file(std::string_view text) {
    const auto lines = data_lines(text);
    if (lines.empty()) throw Error(ErrorKind::Parse, "line 1: missing header \"m n\"");
    const auto& header = lines.front();
    if (header.tokens.size() != 2) fail(header.number, "header must be \"m n\"");
    const std::size_t m = parse_count(header, 0, "vector count");
    const std::size_t n = parse_count(header, 1, "dimension");
    if (m == 0) fail(header.number, "vector count must be positive");
    if (n == 0) fail(header.number, "dimension must be positive");
    if (lines.size() - 1 < m)
        fail(lines.back().number, "expected " + std::to_string(m) + " vector rows, found " +
                                      std::to_string(lines.size() - 1));
    if (lines.size() - 1 > m) fail(lines[m + 1].number, "unexpected data after " + std::to_string(m) + " rows");

    std::vector<IntVector> vectors;
    for (std::size_t r = 1; r <= m; ++r) {
        const auto& line = lines[r];
        if (line.tokens.size() != n)
            fail(line.number, "expected " + std::to_string(n) + " integers, found " +
                                  std::to_string(line.tokens.size()));
        IntVector v(n);
        for (std::size_t k = 0; k < n; ++k)
            if (!parse_integer(line.tokens[k], v[k]))
                fail(line.number, "invalid integer '" + line.tokens[k] + "'");
        vectors.push_back(std::move(v));
    }
    return VectorFamily(std::move(vectors));
}

Graph parse_graph_file(std::string_view text) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, std::size_t> seen;
    std::set<std::pair<std::string, std::string>> edge_set;
    for (const auto& line : data_lines(text)) {
        if (line.tokens.size() != 2) fail(line.number, "edge line must be \"u v\"");
        const auto& a = line.tokens[0];
        const auto& b = line.tokens[1];
        if (a == b) fail(line.number, "self-loop on '" + a + "'");
        const auto key = a < b ? std::pair{a, b} : std::pair{b, a};
        if (!edge_set.insert(key).second) fail(line.number, "duplicate edge " + a + " " + b);
        for (const auto& v : {a, b})
            if (seen.emplace(v, labels.size()).second) labels.push_back(v);
        edges.emplace_back(a, b);
    }
    if (edges.empty()) throw Error(ErrorKind::Parse, "line 1: graph file has no edges");
    return Graph(std::move(labels), edges);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Integer> parse_integer_list(std::string_view text) {
    std::vector<Integer> out;
    for (auto part : split_commas(text)) {
        Integer v;
        if (!parse_integer(part, v))
            throw Error(ErrorKind::Parse, "invalid integer '" + std::string(part) + "' in list");
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    for (auto part : split_commas(text)) {
        const auto slash = part.find('/');
        Integer num, den = 1;
        const bool ok = slash == std::string_view::npos
                            ? parse_integer(part, num)
                            : parse_integer(part.substr(0, slash), num) &&
                                  parse_integer(part.substr(slash + 1), den) && den != 0;
        if (!ok) throw Error(ErrorKind::Parse, "invalid rational '" + std::string(part) + "' in list");
        Rational q(num, den);
        q.canonicalize();
        out.push_back(std::move(q));
    }
    return out;
}

std::string format_vector_file(const VectorFamily& family) {
    std::ostringstream out;
    out << family.size() << ' ' << family.dim() << '\n';
    for (const auto& v : family.vectors()) {
        for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << v[k].get_str();
        out << '\n';
    }
    return out.str();
}

std::string format_graph_file(const Graph& g) {
    std::ostringstream out;
    for (const auto& [a, b] : g.edges()) out << g.labels()[a] << ' ' << g.labels()[b] << '\n';
    return out.str();
}

}  // namespace farkas::io
