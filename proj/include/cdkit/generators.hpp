/**
 * Deterministic constructors for the complexes used in tests, reports and
 * the census, plus a small expression language naming them
 * (e.g. "suspension(cycle(10))", "sd(simplex-boundary(3))").
 */
#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cdkit/complex.hpp"
#include "cdkit/error.hpp"
#include "cdkit/polynomial.hpp"

namespace cdkit {

/// The m-gon.
inline SimplicialComplex cycle(std::size_t m)
{
    if (m < 3) {
        throw Error(ErrorCode::too_small, "cycle needs m >= 3, got " + std::to_string(m));
    }
    std::vector<Face> facets;
    for (std::size_t i = 0; i < m; ++i) {
        facets.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % m)});
    }
    return from_facets(m, std::move(facets));
}

/// Boundary of the n-dimensional cross-polytope; vertices 2i and 2i+1 are antipodal.
inline SimplicialComplex cross_polytope_boundary(std::size_t n)
{
    if (n < 1) {
        throw Error(ErrorCode::too_small, "cross_polytope_boundary needs n >= 1");
    }
    if (n > 20) {
        throw Error(ErrorCode::too_small, "cross_polytope_boundary is limited to n <= 20");
    }
    std::vector<Face> facets;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
        Face f;
        for (std::size_t i = 0; i < n; ++i) {
            f.push_back(static_cast<Vertex>(2 * i + ((choice >> i) & 1)));
        }
        facets.push_back(std::move(f));
    }
    return from_facets(2 * n, std::move(facets));
}

/// Boundary of the n-simplex on n+1 vertices.
inline SimplicialComplex simplex_boundary(std::size_t n)
{
    if (n < 1) {
        throw Error(ErrorCode::too_small, "simplex_boundary needs n >= 1");
    }
    std::vector<Face> facets;
    for (std::size_t skip = 0; skip <= n; ++skip) {
        Face f;
        for (std::size_t v = 0; v <= n; ++v) {
            if (v != skip) {
                f.push_back(static_cast<Vertex>(v));
            }
        }
        facets.push_back(std::move(f));
    }
    return from_facets(n + 1, std::move(facets));
}

/**
 * Icosahedron: apex 0, upper ring 1..5, lower ring 6..10 (vertex 5+i sits
 * between upper vertices i and i+1), bottom 11.
 */
inline SimplicialComplex icosahedron()
{
    return from_facets(12, {
                               {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                               {1, 2, 6}, {2, 3, 7}, {3, 4, 8}, {4, 5, 9}, {1, 5, 10},
                               {2, 6, 7}, {3, 7, 8}, {4, 8, 9}, {5, 9, 10}, {1, 6, 10},
                               {6, 7, 11}, {7, 8, 11}, {8, 9, 11}, {9, 10, 11}, {6, 10, 11},
                           });
}

/// SplitMix64 (Steele, Lea, Flood 2014); the only randomness source in the library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/**
 * Erdos-Renyi G(n, p). Pairs (i, j), i < j, are visited in lexicographic
 * order; each draws one SplitMix64 output x and is kept iff
 * x * den < num * 2^64, with p = num/den in lowest terms.
 */
inline Graph random_graph(std::size_t n, const Rational& p, std::uint64_t seed)
{
    if (p < 0 || p > 1) {
        throw Error(ErrorCode::bad_probability, "probability " + to_fraction_string(p) + " outside [0, 1]");
    }
    const Integer limit = std::numeric_limits<std::uint64_t>::max();
    if (numerator(p) > limit || denominator(p) > limit) {
        throw Error(ErrorCode::bad_probability, "probability " + to_fraction_string(p) + " needs a 64-bit denominator");
    }
    const auto num = numerator(p).convert_to<std::uint64_t>();
    const auto den = denominator(p).convert_to<std::uint64_t>();
    SplitMix64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const unsigned __int128 x = rng.next();
            if (x * den < (static_cast<unsigned __int128>(num) << 64)) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return Graph(n, std::move(edges));
}

namespace detail {

class GeneratorParser {
public:
    explicit GeneratorParser(std::string_view text) : text_(text) {}

    SimplicialComplex parse()
    {
        SimplicialComplex out = complex_expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("trailing input");
        }
        return out;
    }

private:
    using Arg = std::variant<std::uint64_t, SimplicialComplex>;

    [[noreturn]] void fail(const std::string& why) const
    {
        throw Error(ErrorCode::unknown_generator,
                    why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Arg arg()
    {
        skip_space();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::uint64_t value = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
                if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                    fail("integer overflow");
                }
                value = value * 10 + digit;
                ++pos_;
            }
            return value;
        }
        return complex_expr();
    }

    SimplicialComplex complex_expr()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' || text_[pos_] == '_')) {
            ++pos_;
        }
        const std::string name(text_.substr(start, pos_ - start));
        if (name.empty()) {
            fail("expected a generator name");
        }
        std::vector<Arg> args;
        if (accept('(')) {
            if (!accept(')')) {
                do {
                    args.push_back(arg());
                } while (accept(','));
                if (!accept(')')) {
                    fail("expected ')'");
                }
            }
        }
        return build(name, args);
    }

    std::uint64_t integer_arg(const std::vector<Arg>& args, std::size_t i, const std::string& name) const
    {
        if (i >= args.size() || !std::holds_alternative<std::uint64_t>(args[i])) {
            fail(name + " expects an integer argument " + std::to_string(i + 1));
        }
        return std::get<std::uint64_t>(args[i]);
    }

    const SimplicialComplex& complex_arg(const std::vector<Arg>& args, std::size_t i, const std::string& name) const
    {
        if (i >= args.size() || !std::holds_alternative<SimplicialComplex>(args[i])) {
            fail(name + " expects a complex argument " + std::to_string(i + 1));
        }
        return std::get<SimplicialComplex>(args[i]);
    }

    void arity(const std::vector<Arg>& args, std::size_t n, const std::string& name) const
    {
        if (args.size() != n) {
            fail(name + " takes " + std::to_string(n) + " argument(s)");
        }
    }

    SimplicialComplex build(const std::string& name, const std::vector<Arg>& args) const
    {
        if (name == "icosahedron") {
            arity(args, 0, name);
            return icosahedron();
        }
        if (name == "two-points" || name == "s0") {
            arity(args, 0, name);
            return two_points();
        }
        if (name == "cycle") {
            arity(args, 1, name);
            return cycle(integer_arg(args, 0, name));
        }
        if (name == "cross-polytope") {
            arity(args, 1, name);
            return cross_polytope_boundary(integer_arg(args, 0, name));
        }
        if (name == "simplex-boundary") {
            arity(args, 1, name);
            return simplex_boundary(integer_arg(args, 0, name));
        }
        if (name == "suspension") {
            arity(args, 1, name);
            return suspension(complex_arg(args, 0, name));
        }
        if (name == "sd") {
            arity(args, 1, name);
            return barycentric_subdivision(complex_arg(args, 0, name));
        }
        if (name == "join") {
            arity(args, 2, name);
            return join(complex_arg(args, 0, name), complex_arg(args, 1, name));
        }
        if (name == "random-clique") {
            arity(args, 4, name);
            const auto den = integer_arg(args, 2, name);
            if (den == 0) {
                throw Error(ErrorCode::bad_probability, "zero denominator");
            }
            return clique_complex(random_graph(integer_arg(args, 0, name),
                                               Rational(Integer(integer_arg(args, 1, name)), Integer(den)),
                                               integer_arg(args, 3, name)));
        }
        throw Error(ErrorCode::unknown_generator, "unknown generator '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/**
 * Builds a complex from a generator expression:
 *
 *     icosahedron | two-points | cycle(M) | cross-polytope(N)
 *     | simplex-boundary(N) | suspension(X) | sd(X) | join(X, Y)
 *     | random-clique(N, P_NUM, P_DEN, SEED)
 */
inline SimplicialComplex generate(std::string_view expression)
{
    return detail::GeneratorParser(expression).parse();
}

}  // namespace cdkit
