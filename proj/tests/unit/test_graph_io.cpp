#include <doctest.h>

#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "hubrank/error.hpp"
#include "hubrank/graph_io.hpp"

using namespace hubrank;

namespace {

DirectedGraph parse(const std::string& text, IndexBase base = IndexBase::one)
{
    std::istringstream in(text);
    return load_edge_list(in, base);
}

DirectedGraph parse_mtx(const std::string& text)
{
    std::istringstream in(text);
    return load_matrix_market(in);
}

std::string error_of(const std::string& text)
{
    try {
        parse(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("edge list with comments, blank lines and weights")
{
    const auto g = parse("# header\n\n1 2\n  2 3 2.5\r\n3 1\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.weighted());
    CHECK(g.successor_weights(1)[0] == doctest::Approx(2.5));
    CHECK(g.has_edge(2, 0));
}

TEST_CASE("zero-based ids and declared node counts")
{
    const auto g = parse("0 1\n", IndexBase::zero);
    CHECK(g.node_count() == 2);

    const auto declared = parse("# nodes 5\n1 2\n");
    CHECK(declared.node_count() == 5);

    std::istringstream in("1 2\n");
    CHECK(load_edge_list(in, IndexBase::one, 7).node_count() == 7);
}

TEST_CASE("malformed edge lists name the offending line")
{
    CHECK(error_of("1 2\n2 x\n").find("line 2") != std::string::npos);
    CHECK(error_of("1 2 3 4\n").find("line 1") != std::string::npos);
    CHECK(error_of("1 2 -1\n").find("negative") != std::string::npos);
    CHECK(error_of("0 1\n").find("below index base") != std::string::npos);
    CHECK(error_of("# nodes 2\n1 3\n").find("declared range") != std::string::npos);
    CHECK(error_of("").find("no nodes") != std::string::npos);
    CHECK(error_of("# only a comment\n").find("no nodes") != std::string::npos);
}

TEST_CASE("matrix market coordinate files")
{
    const auto g = parse_mtx("%%MatrixMarket matrix coordinate real general\n% c\n3 3 2\n1 2 0.5\n3 1 2\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.successor_weights(0)[0] == doctest::Approx(0.5));

    const auto sym = parse_mtx("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n2 1\n3 3\n");
    CHECK(sym.edge_count() == 2);
    CHECK(sym.has_edge(0, 1));
    CHECK(sym.has_edge(1, 0));
    CHECK(sym.ingest_stats().self_loops_dropped == 1);

    CHECK_THROWS_AS(parse_mtx("%%MatrixMarket matrix coordinate pattern general\n3 4 1\n1 2\n"), InputError);
    CHECK_THROWS_AS(parse_mtx("%%MatrixMarket matrix coordinate pattern general\n3 3 2\n1 2\n"), InputError);
    CHECK_THROWS_AS(parse_mtx("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n"), InputError);
    CHECK_THROWS_AS(parse_mtx("%%MatrixMarket matrix coordinate pattern general\n3 3 1\n4 1\n"), InputError);
    CHECK_THROWS_AS(parse_mtx(""), InputError);
}

TEST_CASE("write_edge_list round-trips through the loader")
{
    const auto g = DirectedGraph::from_edges(6, {{0, 3, 1.25}, {3, 0, 2.0}, {5, 1, 0.1}});
    std::stringstream buf;
    write_edge_list(buf, g);
    const auto back = load_edge_list(buf, IndexBase::zero);
    CHECK(back.node_count() == 6);
    CHECK(back.edges() == g.edges());
}

TEST_CASE("data files load in both formats")
{
    const auto dir = hubrank::testing::data_dir();
    const auto a = load_graph(dir / "example1.txt", GraphFormat::edge_list, IndexBase::one);
    const auto b = load_graph(dir / "example1.mtx", GraphFormat::matrix_market, IndexBase::one);
    CHECK(a.edges() == hubrank::testing::example1().edges());
    CHECK(b.edges() == a.edges());
    CHECK_THROWS_AS(load_graph(dir / "missing.txt", GraphFormat::edge_list, IndexBase::one), InputError);
    CHECK_THROWS_AS(load_graph(dir / "empty.txt", GraphFormat::edge_list, IndexBase::one), InputError);
}
