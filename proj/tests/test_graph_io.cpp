#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "turan/generators.hpp"
#include "turan/graph_io.hpp"

using namespace turan;

namespace {

Graph parse(const std::string &text, GraphFormat format)
{
    std::istringstream in(text);
    return parse_graph(in, format);
}

ParseError parse_error(const std::string &text, GraphFormat format)
{
    try {
        parse(text, format);
    } catch (const ParseError &e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(ParseErrorKind::malformed_line, 0, "");
}

} // namespace

TEST_SUITE("graph_io")
{
    TEST_CASE("dimacs")
    {
        const auto g = parse("c path\np edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::dimacs);
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 2));

        const auto loop = parse_error("p edge 3 1\ne 1 1\n", GraphFormat::dimacs);
        CHECK(loop.kind() == ParseErrorKind::self_loop);
        CHECK(loop.line() == 2);

        CHECK(parse_error("p edge 3 1\ne 1 4\n", GraphFormat::dimacs).kind() == ParseErrorKind::vertex_out_of_range);
        CHECK(parse_error("e 1 2\n", GraphFormat::dimacs).kind() == ParseErrorKind::malformed_header);
        CHECK(parse_error("p edge 3 1\np edge 3 1\n", GraphFormat::dimacs).kind() ==
              ParseErrorKind::malformed_header);
        CHECK(parse_error("p edge 3 1\ne 1 x\n", GraphFormat::dimacs).kind() == ParseErrorKind::malformed_line);
    }

    TEST_CASE("edge list")
    {
        const auto g = parse("0 1\n1 2\n1 2\n", GraphFormat::edge_list);
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 2);

        const auto padded = parse("# vertices: 6\n0 1\n", GraphFormat::edge_list);
        CHECK(padded.vertex_count() == 6);
        CHECK(padded.edge_count() == 1);

        CHECK(parse_error("# vertices: 2\n0 2\n", GraphFormat::edge_list).kind() ==
              ParseErrorKind::vertex_out_of_range);
        CHECK(parse_error("3 3\n", GraphFormat::edge_list).kind() == ParseErrorKind::self_loop);
        CHECK(parse_error("0 1\n# vertices: 4\n", GraphFormat::edge_list).kind() ==
              ParseErrorKind::malformed_header);
    }

    TEST_CASE("round trip")
    {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const auto g = random_graph(seed % 30, 0.3, seed);
            for (auto format : {GraphFormat::dimacs, GraphFormat::edge_list}) {
                const auto text = serialize_graph(g, format);
                CHECK(parse(text, format) == g);
                CHECK(serialize_graph(parse(text, format), format) == text);
            }
        }
    }

    TEST_CASE("format names")
    {
        CHECK(parse_format("dimacs") == GraphFormat::dimacs);
        CHECK(parse_format("edge-list") == GraphFormat::edge_list);
        CHECK(format_name(GraphFormat::edge_list) == "edge-list");
        CHECK_THROWS(parse_format("graphml"));
    }
}
