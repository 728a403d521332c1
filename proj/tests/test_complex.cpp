#include <algorithm>
#include <cstdint>
#include <vector>

#include "catch_amalgamated.hpp"

#include "cdkit/complex.hpp"
#include "cdkit/generators.hpp"
#include "suite.hpp"

using namespace cdkit;
using cdkit::testing::full_suite;
using cdkit::testing::sphere_suite;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

// Exhaustive: every (k-1)-subset of every stored k-face is stored, buckets are canonical,
// and every vertex occurs.
bool canonical_and_closed(const SimplicialComplex& L)
{
    std::vector<char> seen(L.vertex_count(), 0);
    for (int k = 0; k <= L.dimension(); ++k) {
        const auto bucket = L.faces(k);
        if (bucket.empty()) {
            return false;
        }
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            const Face& f = bucket[i];
            if (f.size() != static_cast<std::size_t>(k + 1) || !std::is_sorted(f.begin(), f.end()) ||
                std::adjacent_find(f.begin(), f.end()) != f.end()) {
                return false;
            }
            if (i > 0 && !(bucket[i - 1] < f)) {
                return false;
            }
            for (Vertex v : f) {
                if (v >= L.vertex_count()) {
                    return false;
                }
                seen[v] = 1;
            }
            for (std::size_t skip = 0; k > 0 && skip < f.size(); ++skip) {
                Face sub;
                for (std::size_t j = 0; j < f.size(); ++j) {
                    if (j != skip) {
                        sub.push_back(f[j]);
                    }
                }
                if (!L.contains(sub)) {
                    return false;
                }
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

TEST_CASE("from_facets builds the downward closure", "[complex]")
{
    const auto hollow = from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(f_vector(hollow).counts == ints({3, 3}));
    const auto tetra = from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(f_vector(tetra).counts == ints({4, 6, 4}));
    const auto s0 = from_facets(2, {{0}, {1}});
    CHECK(f_vector(s0).counts == ints({2}));
    CHECK(s0 == two_points());
    // facet order and vertex order inside a facet do not matter
    CHECK(from_facets(3, {{2, 0}, {1, 2}, {1, 0}}) == hollow);
}

TEST_CASE("from_facets errors", "[complex]")
{
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        FAIL("no error raised");
        return ErrorCode::parse_error;
    };
    CHECK(code_of([] { from_facets(2, {{0, 2}}); }) == ErrorCode::invalid_vertex);
    CHECK(code_of([] { from_facets(3, {}); }) == ErrorCode::empty_input);
    CHECK(code_of([] { from_facets(3, {{0, 1}}); }) == ErrorCode::invalid_vertex);
    CHECK(code_of([] { from_facets(2, {{0, 0, 1}}); }) == ErrorCode::invalid_facet);
    CHECK(code_of([] { from_facets(2, {{}, {0, 1}}); }) == ErrorCode::invalid_facet);
    CHECK(from_facets(0, {}).empty());
}

TEST_CASE("f_vector and f_polynomial", "[complex]")
{
    CHECK(f_vector(icosahedron()).counts == ints({12, 30, 20}));
    CHECK(f_vector(cross_polytope_boundary(3)).counts == ints({6, 12, 8}));
    CHECK(f_vector(suspension(cycle(10))).counts == ints({12, 30, 20}));
    CHECK(f_polynomial(icosahedron()) == IntPolynomial{1, 12, 30, 20});
    CHECK(f_polynomial(cycle(5)) == IntPolynomial{1, 5, 5});
    CHECK(f_polynomial(from_facets(1, {{0}})) == IntPolynomial{1, 1});
    CHECK_THROWS_AS(f_vector(SimplicialComplex{}), Error);
    CHECK_THROWS_AS(f_polynomial(SimplicialComplex{}), Error);
}

TEST_CASE("vertex links", "[complex]")
{
    const auto ico = icosahedron();
    for (Vertex v = 0; v < 12; ++v) {
        const auto lk = link(ico, v);
        CHECK(lk.complex.vertex_count() == 5);
        CHECK(f_vector(lk.complex).counts == ints({5, 5}));
        CHECK(degree_sequence(lk.complex) == std::vector<std::size_t>(5, 2));
        CHECK(is_flag(lk.complex));
    }
    const auto apex_link = link(suspension(cycle(10)), 0);
    CHECK(apex_link.complex == cycle(10));
    CHECK(apex_link.original == std::vector<Vertex>{2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    const auto tetra = simplex_boundary(3);
    for (Vertex v = 0; v < 4; ++v) {
        CHECK(link(tetra, v).complex == cycle(3));
    }
    CHECK_THROWS_AS(link(tetra, 4), Error);
}

TEST_CASE("face links", "[complex]")
{
    const auto ico = icosahedron();
    for (const Face& e : ico.faces(1)) {
        CHECK(link(ico, e).complex == two_points());
    }
    for (const Face& t : ico.faces(2)) {
        const auto lk = link(ico, t);
        CHECK(lk.complex.empty());
        CHECK(lk.complex.dimension() == -1);
    }
    const Face missing{0, 11};
    CHECK_THROWS_AS(link(ico, missing), Error);
}

TEST_CASE("join and suspension", "[complex]")
{
    CHECK(join(two_points(), two_points()) == cross_polytope_boundary(2));
    CHECK(cdkit::testing::isomorphic(join(two_points(), two_points()), cycle(4)));
    CHECK(join(two_points(), cycle(10)) == suspension(cycle(10)));
    CHECK(f_polynomial(join(cycle(5), two_points())) == f_polynomial(cycle(5)) * f_polynomial(two_points()));
    CHECK(cdkit::testing::isomorphic(suspension(cycle(4)), cross_polytope_boundary(3)));
    CHECK(f_vector(suspension(cycle(10))).counts == ints({12, 30, 20}));
    CHECK(cdkit::testing::isomorphic(suspension(two_points()), cycle(4)));
    CHECK_THROWS_AS(join(SimplicialComplex{}, cycle(4)), Error);
}

TEST_CASE("one_skeleton", "[complex]")
{
    const auto g = one_skeleton(icosahedron());
    CHECK(g.vertex_count() == 12);
    CHECK(g.edges().size() == 30);
    CHECK(g.degrees() == std::vector<std::size_t>(12, 5));
    const auto tri = one_skeleton(cycle(3));
    CHECK(tri.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}});
    const auto s0 = one_skeleton(two_points());
    CHECK(s0.vertex_count() == 2);
    CHECK(s0.edges().empty());
}

TEST_CASE("graph validation", "[complex]")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
}

TEST_CASE("clique_complex", "[complex]")
{
    const auto solid = clique_complex(one_skeleton(cycle(3)));
    CHECK(solid == cdkit::testing::solid_triangle());
    CHECK(clique_complex(one_skeleton(cycle(5))) == cycle(5));
    CHECK(clique_complex(one_skeleton(cross_polytope_boundary(3))) == cross_polytope_boundary(3));
    CHECK(clique_complex(Graph(3, {})) == from_facets(3, {{0}, {1}, {2}}));
}

TEST_CASE("is_flag", "[complex]")
{
    CHECK(is_flag(icosahedron()));
    CHECK_FALSE(is_flag(simplex_boundary(3)));
    for (std::size_t m = 4; m <= 12; ++m) {
        CHECK(is_flag(cycle(m)));
    }
    CHECK_FALSE(is_flag(cycle(3)));
}

TEST_CASE("barycentric_subdivision", "[complex]")
{
    const auto sd3 = barycentric_subdivision(simplex_boundary(3));
    CHECK(f_vector(sd3).counts == ints({14, 36, 24}));
    CHECK(euler_characteristic(sd3) == 2);
    const auto hex = barycentric_subdivision(cycle(3));
    CHECK(f_vector(hex).counts == ints({6, 6}));
    CHECK(degree_sequence(hex) == std::vector<std::size_t>(6, 2));
    for (const auto& [name, L] : full_suite()) {
        if (L.total_faces() > 400) {
            continue;
        }
        INFO(name);
        const auto sd = barycentric_subdivision(L);
        CHECK(is_flag(sd));
        CHECK(euler_characteristic(sd) == euler_characteristic(L));
    }
}

TEST_CASE("euler_characteristic", "[complex]")
{
    CHECK(euler_characteristic(icosahedron()) == 2);
    CHECK(euler_characteristic(cycle(5)) == 0);
    CHECK(euler_characteristic(simplex_boundary(3)) == 2);
}

TEST_CASE("constructors keep storage canonical and downward closed", "[complex][property]")
{
    for (const auto& [name, L] : full_suite()) {
        INFO(name);
        CHECK(canonical_and_closed(L));
        for (Vertex v = 0; v < L.vertex_count(); ++v) {
            const auto lk = link(L, v);
            if (!lk.complex.empty()) {
                CHECK(canonical_and_closed(lk.complex));
            }
        }
    }
    CHECK(canonical_and_closed(clique_complex(random_graph(9, Rational(1, 2), 3))));
}

TEST_CASE("f-polynomial is multiplicative for joins across the suite", "[complex][property]")
{
    std::vector<SimplicialComplex> small;
    for (const auto& [name, L] : full_suite()) {
        if (L.total_faces() <= 120) {
            small.push_back(L);
        }
    }
    for (const auto& K : small) {
        for (const auto& L : small) {
            CHECK(f_polynomial(join(K, L)) == f_polynomial(K) * f_polynomial(L));
        }
    }
}

TEST_CASE("links in a join are joins of links", "[complex][property]")
{
    const std::vector<SimplicialComplex> parts{two_points(), cycle(4), cycle(5), icosahedron(),
                                               cdkit::testing::solid_triangle(),
                                               cdkit::testing::hexagon_with_pendant()};
    for (const auto& K : parts) {
        for (const auto& L : parts) {
            const auto J = join(K, L);
            for (Vertex v = 0; v < K.vertex_count(); ++v) {
                const auto in_join = link(J, v).complex;
                const auto lk = link(K, v).complex;
                const auto expected = lk.empty() ? L : join(lk, L);
                CHECK(f_vector(in_join) == f_vector(expected));
                CHECK(is_flag(in_join) == is_flag(expected));
                CHECK(degree_sequence(in_join) == degree_sequence(expected));
            }
        }
    }
}

TEST_CASE("flag closure is idempotent", "[complex][property]")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto G = random_graph(7, Rational(1, 2), seed);
        const auto once = clique_complex(G);
        CHECK(one_skeleton(once) == G);
        CHECK(clique_complex(one_skeleton(once)) == once);
        CHECK(is_flag(once));
    }
}

TEST_CASE("facets round-trip through from_facets", "[complex][property]")
{
    for (const auto& [name, L] : full_suite()) {
        INFO(name);
        CHECK(from_facets(L.vertex_count(), L.facets()) == L);
    }
}
