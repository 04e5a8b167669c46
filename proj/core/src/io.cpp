#include "semitd/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "semitd/errors.hpp"

namespace semitd {

namespace {

struct Lines {
    explicit Lines(std::istream& s) : in(&s) {}

    std::istream* in;
    std::size_t number = 0;
    std::string buf;

    // Next significant line: skips blanks and '#' comments.
    bool next()
    {
        while (std::getline(*in, buf)) {
            ++number;
            auto start = buf.find_first_not_of(" \t\r");
            if (start == std::string::npos)
                continue;
            if (buf[start] == '#')
                continue;
            return true;
        }
        return false;
    }
};

std::vector<long long> split_numbers(const std::string& line, bool* ok)
{
    std::vector<long long> out;
    *ok = true;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
        if (*p == ' ' || *p == '\t' || *p == '\r' || *p == '\n') {
            ++p;
            continue;
        }
        long long value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || next == p) {
            *ok = false;
            return out;
        }
        out.push_back(value);
        p = next;
    }
    return out;
}

Graph parse_edge_lines(Lines& lines, long long n, long long m)
{
    if (n < 0 || m < 0 || n > (1ll << 30))
        throw parse_error(parse_errc::malformed_header, lines.number, "unusable graph header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (static_cast<long long>(edges.size()) < m) {
        if (!lines.next())
            throw parse_error(parse_errc::edge_count_mismatch, lines.number,
                              "expected " + std::to_string(m) + " edges, got "
                                  + std::to_string(edges.size()));
        bool ok = false;
        auto nums = split_numbers(lines.buf, &ok);
        if (!ok || nums.size() != 2)
            throw parse_error(parse_errc::malformed_line, lines.number, "expected \"u v\"");
        if (nums[0] < 1 || nums[0] > n || nums[1] < 1 || nums[1] > n)
            throw parse_error(parse_errc::vertex_out_of_range, lines.number,
                              "vertex id outside [1, " + std::to_string(n) + "]");
        edges.emplace_back(static_cast<int>(nums[0] - 1), static_cast<int>(nums[1] - 1));
    }
    if (lines.next())
        throw parse_error(parse_errc::edge_count_mismatch, lines.number, "trailing edge lines");
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

} // namespace

Graph parse_edge_list(std::istream& in)
{
    Lines lines(in);
    if (!lines.next())
        throw parse_error(parse_errc::malformed_header, 0, "empty input");
    bool ok = false;
    auto header = split_numbers(lines.buf, &ok);
    if (!ok || header.size() != 2)
        throw parse_error(parse_errc::malformed_header, lines.number, "expected \"n m\" header");
    return parse_edge_lines(lines, header[0], header[1]);
}

Graph parse_dimacs(std::istream& in)
{
    Lines raw(in);
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (raw.next()) {
        std::istringstream row(raw.buf);
        std::string tag;
        row >> tag;
        if (tag == "c")
            continue;
        if (tag == "p") {
            std::string kind;
            row >> kind >> n >> m;
            if (!row || kind != "edge" || n < 0 || m < 0)
                throw parse_error(parse_errc::malformed_header, raw.number,
                                  "expected \"p edge n m\"");
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                throw parse_error(parse_errc::malformed_header, raw.number,
                                  "edge before \"p edge\" header");
            long long u = 0, v = 0;
            row >> u >> v;
            if (!row)
                throw parse_error(parse_errc::malformed_line, raw.number, "expected \"e u v\"");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(parse_errc::vertex_out_of_range, raw.number,
                                  "vertex id outside [1, " + std::to_string(n) + "]");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw parse_error(parse_errc::malformed_line, raw.number,
                          "unknown line type \"" + tag + "\"");
    }
    if (n < 0)
        throw parse_error(parse_errc::malformed_header, 0, "missing \"p edge\" header");
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error(parse_errc::edge_count_mismatch, raw.number,
                          "expected " + std::to_string(m) + " edges, got "
                              + std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph parse_graph_auto(std::istream& in)
{
    std::ostringstream whole;
    whole << in.rdbuf();
    return parse_graph_auto(std::string_view(whole.str()));
}

Graph parse_graph_auto(std::string_view text)
{
    // DIMACS lines start with a letter tag; the plain format starts with
    // a digit.
    for (std::size_t i = 0; i < text.size();) {
        auto eol = text.find('\n', i);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(i, eol - i);
        i = eol + 1;
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string_view::npos || line[start] == '#')
            continue;
        char c = line[start];
        std::istringstream in{std::string(text)};
        if (c == 'p' || c == 'c' || c == 'e')
            return parse_dimacs(in);
        return parse_edge_list(in);
    }
    throw parse_error(parse_errc::malformed_header, 0, "empty input");
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

Graph parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

Graph load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error(parse_errc::malformed_header, 0, "cannot open " + path);
    std::ostringstream whole;
    whole << in.rdbuf();
    return parse_graph_auto(std::string_view(whole.str()));
}

void write_edge_list(const Graph& g, std::ostream& out)
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v)
                out << u + 1 << ' ' << v + 1 << '\n';
}

std::string format_edge_list(const Graph& g)
{
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

VertexSet parse_vertex_set_line(std::string_view line, int n)
{
    bool ok = false;
    auto nums = split_numbers(std::string(line), &ok);
    if (!ok)
        throw parse_error(parse_errc::malformed_line, 0, "expected space-separated ids");
    std::vector<int> ids;
    ids.reserve(nums.size());
    for (long long x : nums) {
        if (x < 1 || x > n)
            throw parse_error(parse_errc::vertex_out_of_range, 0,
                              "vertex id outside [1, " + std::to_string(n) + "]");
        ids.push_back(static_cast<int>(x - 1));
    }
    return VertexSet::from_unsorted(std::move(ids));
}

std::string format_vertex_set(const VertexSet& s)
{
    std::ostringstream out;
    bool first = true;
    for (int v : s) {
        if (!first)
            out << ' ';
        out << v + 1;
        first = false;
    }
    return out.str();
}

std::vector<int> parse_ordering_line(std::string_view line, int n)
{
    bool ok = false;
    auto nums = split_numbers(std::string(line), &ok);
    if (!ok)
        throw parse_error(parse_errc::malformed_line, 0, "expected space-separated ids");
    std::vector<int> order;
    order.reserve(nums.size());
    for (long long x : nums) {
        if (x < 1 || x > n)
            throw parse_error(parse_errc::vertex_out_of_range, 0,
                              "vertex id outside [1, " + std::to_string(n) + "]");
        order.push_back(static_cast<int>(x - 1));
    }
    return order;
}

std::string format_ordering(const std::vector<int>& order)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i)
            out << ' ';
        out << order[i] + 1;
    }
    return out.str();
}

} // namespace semitd
