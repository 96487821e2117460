#include "turan/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace turan {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view token)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        return std::nullopt;
    return value;
}

Graph parse_dimacs(std::istream &in, GraphOptions options)
{
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line[0] == 'c')
            continue;
        const auto tokens = split_ws(line);
        if (tokens[0] == "p") {
            if (n)
                throw ParseError(ParseErrorKind::malformed_header, line_no, "duplicate problem line");
            if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
                throw ParseError(ParseErrorKind::malformed_header, line_no, "expected 'p edge <n> <m>'");
            const auto nv = parse_uint(tokens[2]);
            const auto mv = parse_uint(tokens[3]);
            if (!nv || !mv || *nv > max_vertex_count)
                throw ParseError(ParseErrorKind::malformed_header, line_no, "bad vertex or edge count");
            n = static_cast<std::size_t>(*nv);
            edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(*mv, 1u << 24)));
        } else if (tokens[0] == "e") {
            if (!n)
                throw ParseError(ParseErrorKind::malformed_header, line_no, "edge before problem line");
            if (tokens.size() != 3)
                throw ParseError(ParseErrorKind::malformed_line, line_no, "expected 'e <u> <v>'");
            const auto a = parse_uint(tokens[1]);
            const auto b = parse_uint(tokens[2]);
            if (!a || !b)
                throw ParseError(ParseErrorKind::malformed_line, line_no, "non-numeric vertex id");
            if (*a < 1 || *a > *n || *b < 1 || *b > *n)
                throw ParseError(ParseErrorKind::vertex_out_of_range, line_no,
                                 "vertex id outside 1.." + std::to_string(*n));
            if (*a == *b)
                throw ParseError(ParseErrorKind::self_loop, line_no, "self-loop at vertex " + std::to_string(*a));
            edges.push_back(make_edge(static_cast<Vertex>(*a - 1), static_cast<Vertex>(*b - 1)));
        } else {
            throw ParseError(ParseErrorKind::malformed_line, line_no, "unknown line type");
        }
    }
    if (!n)
        throw ParseError(ParseErrorKind::malformed_header, line_no, "missing problem line");
    return Graph::from_edges(*n, edges, options);
}

Graph parse_edge_list(std::istream &in, GraphOptions options)
{
    std::optional<std::size_t> declared;
    std::vector<Edge> edges;
    std::uint64_t max_id = 0;
    bool any = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty())
            continue;
        if (line[0] == '#') {
            const auto body = trim(line.substr(1));
            constexpr std::string_view directive = "vertices:";
            if (body.starts_with(directive)) {
                if (declared || any)
                    throw ParseError(ParseErrorKind::malformed_header, line_no,
                                     "vertex count must be declared once, before any edge");
                const auto v = parse_uint(trim(body.substr(directive.size())));
                if (!v || *v > max_vertex_count)
                    throw ParseError(ParseErrorKind::malformed_header, line_no, "bad vertex count");
                declared = static_cast<std::size_t>(*v);
            }
            continue;
        }
        const auto tokens = split_ws(line);
        if (tokens.size() != 2)
            throw ParseError(ParseErrorKind::malformed_line, line_no, "expected '<u> <v>'");
        const auto a = parse_uint(tokens[0]);
        const auto b = parse_uint(tokens[1]);
        if (!a || !b)
            throw ParseError(ParseErrorKind::malformed_line, line_no, "non-numeric vertex id");
        const std::uint64_t bound = declared ? *declared : max_vertex_count;
        if (*a >= bound || *b >= bound)
            throw ParseError(ParseErrorKind::vertex_out_of_range, line_no,
                             "vertex id outside 0.." + std::to_string(bound - 1));
        if (*a == *b)
            throw ParseError(ParseErrorKind::self_loop, line_no, "self-loop at vertex " + std::to_string(*a));
        edges.push_back(make_edge(static_cast<Vertex>(*a), static_cast<Vertex>(*b)));
        max_id = std::max({max_id, *a, *b});
        any = true;
    }
    const std::size_t n = declared ? *declared : (any ? static_cast<std::size_t>(max_id) + 1 : 0);
    return Graph::from_edges(n, edges, options);
}

} // namespace

GraphFormat parse_format(std::string_view name)
{
    if (name == "dimacs")
        return GraphFormat::dimacs;
    if (name == "edge-list" || name == "edge_list")
        return GraphFormat::edge_list;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat format)
{
    return format == GraphFormat::dimacs ? "dimacs" : "edge-list";
}

std::string_view to_string(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::malformed_header:
        return "malformed header";
    case ParseErrorKind::malformed_line:
        return "malformed line";
    case ParseErrorKind::vertex_out_of_range:
        return "vertex out of range";
    case ParseErrorKind::self_loop:
        return "self-loop";
    }
    return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string &detail) :
    std::runtime_error("line " + std::to_string(line) + ": " + std::string(to_string(kind)) + ": " + detail),
    kind_(kind),
    line_(line)
{
}

Graph parse_graph(std::istream &in, GraphFormat format, GraphOptions options)
{
    return format == GraphFormat::dimacs ? parse_dimacs(in, options) : parse_edge_list(in, options);
}

Graph read_graph_file(const std::string &path, GraphFormat format, GraphOptions options)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file '" + path + "'");
    return parse_graph(in, format, options);
}

void write_graph(std::ostream &out, const Graph &g, GraphFormat format)
{
    const auto edges = g.edges();
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const Edge &e : edges)
            out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    } else {
        out << "# vertices: " << g.vertex_count() << '\n';
        for (const Edge &e : edges)
            out << e.u << ' ' << e.v << '\n';
    }
}

std::string serialize_graph(const Graph &g, GraphFormat format)
{
    std::ostringstream out;
    write_graph(out, g, format);
    return out.str();
}

} // namespace turan
