#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chordal/decomposition.hpp"
#include "chordal/errors.hpp"
#include "chordal/generators.hpp"
#include "chordal/graph_io.hpp"
#include "chordal/prng.hpp"
#include "chordal/spectrum.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace chordal;

namespace {

Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

Graph fixture(const char* name) {
    return read_edge_list_file(std::string(FIXTURES_DIR) + "/" + name);
}

// reference eigenvalues of the 16-vertex fixture, descending
const double kChordal16Spectrum[16] = {10.29857, 9.35720, 8.71138, 7.84776, 7.41877, 6.00000,
                                  5.00000,  4.00000, 4.00000, 4.00000, 3.06443, 1.79600,
                                  1.10090,  0.86586, 0.53913, 0.00000};

} // namespace

TEST_CASE("K2 spectrum") {
    auto s = eigenvalues(laplacian(complete(2)));
    REQUIRE(s.order() == 2);
    CHECK(s.values[0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(s.values[1] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(algebraic_connectivity(s) == doctest::Approx(2.0));
}

TEST_CASE("star K_{1,3} matches its characteristic polynomial") {
    Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
    // independent oracle: exact characteristic polynomial of L
    std::vector<std::vector<std::int64_t>> L(4, std::vector<std::int64_t>(4, 0));
    LaplacianMatrix Lm = laplacian(star);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) L[i][j] = Lm.at(i, j);
    auto c = oracles::char_poly(L);
    CHECK(c == std::vector<std::int64_t>{1, -6, 9, -4, 0});  // x(x-1)^2(x-4)

    auto s = eigenvalues(Lm);
    std::vector<double> want{4.0, 1.0, 1.0, 0.0};
    for (int i = 0; i < 4; ++i) CHECK(std::fabs(s.values[i] - want[i]) < 1e-8);
}

TEST_CASE("16-vertex fixture reproduces its reference spectrum") {
    auto s = eigenvalues(laplacian(fixture("chordal-16.el")));
    REQUIRE(s.order() == 16);
    for (int i = 0; i < 16; ++i) CHECK(std::fabs(s.values[i] - kChordal16Spectrum[i]) < 5e-6);
    CHECK(std::fabs(algebraic_connectivity(s) - 0.53913) < 5e-6);
}

TEST_CASE("algebraic connectivity of P4") {
    auto s = eigenvalues(laplacian(path(4)));
    CHECK(std::fabs(algebraic_connectivity(s) - (2.0 - std::sqrt(2.0))) < 1e-9);
    CHECK_THROWS_AS(algebraic_connectivity(eigenvalues(laplacian(complete(1)))), PreconditionError);
}

TEST_CASE("integer eigenvalue grouping") {
    auto groups = integer_eigenvalues(eigenvalues(laplacian(fixture("chordal-16.el"))), 1e-6);
    CHECK(groups == std::vector<IntegerGroup>{{0, 1}, {4, 3}, {5, 1}, {6, 1}});

    auto k4 = integer_eigenvalues(eigenvalues(laplacian(complete(4))), 1e-6);
    CHECK(k4 == std::vector<IntegerGroup>{{0, 1}, {4, 3}});

    auto wd = integer_eigenvalues(eigenvalues(laplacian(windmill(4, 3))), 1e-6);
    CHECK(wd == std::vector<IntegerGroup>{{0, 1}, {1, 2}, {4, 6}, {10, 1}});

    CHECK_THROWS_AS(integer_eigenvalues(eigenvalues(laplacian(complete(2))), 0.0),
                    PreconditionError);
}

TEST_CASE("fiedler bound") {
    Graph p4 = path(4);
    auto sp4 = eigenvalues(laplacian(p4));
    CHECK(fiedler_check(p4, sp4, 1));

    Graph f3 = fixture("kt-split-2-3-3.el");
    auto s3 = eigenvalues(laplacian(f3));
    int kappa = vertex_connectivity_chordal(f3, decompose(f3));
    CHECK(kappa == 2);
    CHECK(fiedler_check(f3, s3, kappa));
    CHECK(algebraic_connectivity(s3) < 2.0 - 1e-6);  // strict here

    Graph sc = split_complete(2, 3);
    auto ssc = eigenvalues(laplacian(sc));
    CHECK(fiedler_check(sc, ssc, 2));
    CHECK(std::fabs(algebraic_connectivity(ssc) - 2.0) < 1e-8);  // equality case
}

TEST_CASE("path eigenvalues match the closed form") {
    for (int n = 2; n <= 50; n += 7) {
        auto s = eigenvalues(laplacian(path(n)));
        auto want = oracles::path_eigenvalues(n);
        for (int i = 0; i < n; ++i) CHECK(std::fabs(s.values[i] - want[i]) < 1e-8);
    }
}

TEST_CASE("trace conservation and sortedness on random graphs") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 15; ++iter) {
        int n = 2 + static_cast<int>(rng.next_below(60));
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next_unit() < 0.3) e.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, e);
        auto s = eigenvalues(laplacian(g));
        double sum = 0.0;
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            sum += s.values[i];
            if (i > 0) CHECK(s.values[i] <= s.values[i - 1] + 1e-12);
        }
        CHECK(std::fabs(sum - 2.0 * g.size()) < 1e-7 * n);
        CHECK(std::fabs(s.values.back()) < 1e-8);
        // connectivity corresponds to a positive second-smallest eigenvalue
        CHECK(g.is_connected() == (algebraic_connectivity(s) > 1e-7));
    }
}

TEST_CASE("fiedler bound over random connected chordal graphs") {
    SplitMix64 rng(17);
    for (int iter = 0; iter < 20; ++iter) {
        Graph g = random_chordal(2 + static_cast<int>(rng.next_below(40)), rng.next_unit(), rng.next());
        auto d = decompose(g);
        if (d.clique_count() == 1) continue;  // complete: bound does not apply
        auto s = eigenvalues(laplacian(g));
        CHECK(fiedler_check(g, s, vertex_connectivity_chordal(g, d)));
    }
}

TEST_CASE("single vertex") {
    auto s = eigenvalues(laplacian(complete(1)));
    REQUIRE(s.order() == 1);
    CHECK(s.values[0] == doctest::Approx(0.0));
}
