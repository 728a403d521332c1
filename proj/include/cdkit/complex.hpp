/**
 * Finite abstract simplicial complexes with canonical face storage.
 *
 * A complex on vertices 0..n-1 stores every nonempty face, bucketed by
 * dimension, each face a strictly increasing vertex list, each bucket
 * sorted lexicographically. The empty face is implicit. Two complexes are
 * equal exactly when their canonical storage is equal.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdkit/error.hpp"
#include "cdkit/polynomial.hpp"

namespace cdkit {

using Vertex = std::uint32_t;
using Face = std::vector<Vertex>;

namespace detail {
/// Only code that already produces canonical storage may use this tag.
struct CanonicalTag {
    explicit CanonicalTag() = default;
};

inline std::string face_to_string(std::span<const Vertex> face)
{
    std::string out = "[";
    for (std::size_t i = 0; i < face.size(); ++i) {
        out += (i ? "," : "") + std::to_string(face[i]);
    }
    return out + "]";
}

inline void sort_unique(std::vector<Face>& faces)
{
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}
}  // namespace detail

class SimplicialComplex {
public:
    /// The complex whose only face is the empty face.
    SimplicialComplex() = default;

    /// `faces[k]` holds the k-faces, already sorted, deduplicated and downward closed.
    SimplicialComplex(detail::CanonicalTag, std::size_t vertex_count, std::vector<std::vector<Face>> faces)
        : vertex_count_(vertex_count), faces_(std::move(faces))
    {
        while (!faces_.empty() && faces_.back().empty()) {
            faces_.pop_back();
        }
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }

    /// No vertices at all; only the empty face.
    bool empty() const noexcept { return vertex_count_ == 0; }

    /// -1 for the complex {empty face}.
    int dimension() const noexcept { return static_cast<int>(faces_.size()) - 1; }

    std::span<const Face> faces(int k) const
    {
        if (k < 0 || k > dimension()) {
            return {};
        }
        return faces_[static_cast<std::size_t>(k)];
    }

    std::size_t face_count(int k) const { return faces(k).size(); }

    std::size_t total_faces() const
    {
        std::size_t n = 0;
        for (const auto& bucket : faces_) {
            n += bucket.size();
        }
        return n;
    }

    /// Position of `face` within its dimension bucket.
    std::optional<std::size_t> index_of(std::span<const Vertex> face) const
    {
        if (face.empty()) {
            return std::nullopt;
        }
        const auto bucket = faces(static_cast<int>(face.size()) - 1);
        const auto it = std::lower_bound(bucket.begin(), bucket.end(), face,
                                         [](const Face& a, std::span<const Vertex> b) {
                                             return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                                                 b.end());
                                         });
        if (it == bucket.end() || !std::equal(it->begin(), it->end(), face.begin(), face.end())) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - bucket.begin());
    }

    bool contains(std::span<const Vertex> face) const { return face.empty() || index_of(face).has_value(); }

    /// Maximal faces, sorted lexicographically.
    std::vector<Face> facets() const
    {
        std::vector<Face> out;
        for (int k = 0; k <= dimension(); ++k) {
            const auto bucket = faces(k);
            std::vector<char> covered(bucket.size(), 0);
            Face sub;
            for (const Face& up : faces(k + 1)) {
                for (std::size_t skip = 0; skip < up.size(); ++skip) {
                    sub.clear();
                    for (std::size_t j = 0; j < up.size(); ++j) {
                        if (j != skip) {
                            sub.push_back(up[j]);
                        }
                    }
                    covered[*index_of(sub)] = 1;
                }
            }
            for (std::size_t i = 0; i < bucket.size(); ++i) {
                if (!covered[i]) {
                    out.push_back(bucket[i]);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    const std::vector<std::vector<Face>>& storage() const noexcept { return faces_; }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
    friend auto operator<=>(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::vector<Face>> faces_;
};

/// Simple undirected graph; edges stored as sorted pairs (u < v).
class Graph {
public:
    Graph() = default;

    Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges) : vertex_count_(vertex_count)
    {
        for (auto [u, v] : edges) {
            if (u == v) {
                throw Error(ErrorCode::invalid_edge, "loop at vertex " + std::to_string(u));
            }
            if (u >= vertex_count || v >= vertex_count) {
                throw Error(ErrorCode::invalid_vertex, "edge endpoint out of range");
            }
            edges_.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
            throw Error(ErrorCode::invalid_edge, "duplicate edge");
        }
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }

    std::vector<std::size_t> degrees() const
    {
        std::vector<std::size_t> deg(vertex_count_, 0);
        for (auto [u, v] : edges_) {
            ++deg[u];
            ++deg[v];
        }
        return deg;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// (f_0, ..., f_dim)
struct FVector {
    std::vector<Integer> counts;
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// A complex on a vertex subset, relabeled densely; `original[new] = old`.
struct Relabeled {
    SimplicialComplex complex;
    std::vector<Vertex> original;
};

namespace detail {
/// All nonempty subsets of `facet`, appended to the per-dimension buckets.
inline void add_closure(const Face& facet, std::vector<std::vector<Face>>& buckets)
{
    const std::size_t k = facet.size();
    if (buckets.size() < k) {
        buckets.resize(k);
    }
    // Facets in scope have at most a few dozen vertices.
    const std::uint64_t limit = std::uint64_t{1} << k;
    Face sub;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        sub.clear();
        for (std::size_t j = 0; j < k; ++j) {
            if (mask & (std::uint64_t{1} << j)) {
                sub.push_back(facet[j]);
            }
        }
        buckets[sub.size() - 1].push_back(sub);
    }
}

/// Closure of already validated, sorted facets.
inline SimplicialComplex close_facets(std::size_t vertex_count, const std::vector<Face>& facets)
{
    std::vector<std::vector<Face>> buckets;
    for (const Face& f : facets) {
        add_closure(f, buckets);
    }
    for (auto& b : buckets) {
        sort_unique(b);
    }
    return SimplicialComplex(CanonicalTag{}, vertex_count, std::move(buckets));
}

inline void require_nonempty(const SimplicialComplex& L, const char* op)
{
    if (L.empty()) {
        throw Error(ErrorCode::empty_complex, std::string(op) + " requires a nonempty complex");
    }
}
}  // namespace detail

/// Downward closure of `facets`. Every vertex 0..vertex_count-1 must occur in some facet.
inline SimplicialComplex from_facets(std::size_t vertex_count, std::vector<Face> facets)
{
    if (facets.empty()) {
        if (vertex_count > 0) {
            throw Error(ErrorCode::empty_input,
                        "no facets given for " + std::to_string(vertex_count) + " vertices");
        }
        return {};
    }
    std::vector<char> seen(vertex_count, 0);
    for (Face& f : facets) {
        if (f.empty()) {
            throw Error(ErrorCode::invalid_facet, "empty facet");
        }
        if (f.size() > 48) {
            throw Error(ErrorCode::invalid_facet, "facet with more than 48 vertices");
        }
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
            throw Error(ErrorCode::invalid_facet, "repeated vertex in facet " + detail::face_to_string(f));
        }
        for (Vertex v : f) {
            if (v >= vertex_count) {
                throw Error(ErrorCode::invalid_vertex, "vertex " + std::to_string(v) + " out of range [0, " +
                                                           std::to_string(vertex_count) + ")");
            }
            seen[v] = 1;
        }
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        if (!seen[v]) {
            throw Error(ErrorCode::invalid_vertex, "vertex " + std::to_string(v) + " lies in no facet");
        }
    }
    return detail::close_facets(vertex_count, facets);
}

inline FVector f_vector(const SimplicialComplex& L)
{
    detail::require_nonempty(L, "f_vector");
    FVector out;
    for (int k = 0; k <= L.dimension(); ++k) {
        out.counts.emplace_back(L.face_count(k));
    }
    return out;
}

namespace detail {
/// 1 + sum_i f_i t^(i+1); equals 1 for the complex {empty face}.
inline IntPolynomial face_polynomial(const SimplicialComplex& L)
{
    std::vector<Integer> coeffs{1};
    for (int k = 0; k <= L.dimension(); ++k) {
        coeffs.emplace_back(L.face_count(k));
    }
    return IntPolynomial(std::move(coeffs));
}
}  // namespace detail

/// f(t) = 1 + sum_i f_i t^(i+1); the constant term counts the empty face.
inline IntPolynomial f_polynomial(const SimplicialComplex& L)
{
    detail::require_nonempty(L, "f_polynomial");
    return detail::face_polynomial(L);
}

inline std::int64_t euler_characteristic(const SimplicialComplex& L)
{
    std::int64_t chi = 0;
    for (int k = 0; k <= L.dimension(); ++k) {
        const auto n = static_cast<std::int64_t>(L.face_count(k));
        chi += (k % 2 == 0) ? n : -n;
    }
    return chi;
}

/// Link of an arbitrary face; the link of a facet is the complex {empty face}.
inline Relabeled link(const SimplicialComplex& L, std::span<const Vertex> sigma)
{
    if (!L.contains(sigma)) {
        throw Error(ErrorCode::not_a_vertex, "face " + detail::face_to_string(sigma) + " is not in the complex");
    }
    const int top = L.dimension();
    const int start = static_cast<int>(sigma.size());
    std::vector<std::vector<Face>> rest;
    std::vector<char> used(L.vertex_count(), 0);
    for (int k = start; k <= top; ++k) {
        for (const Face& tau : L.faces(k)) {
            if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) {
                continue;
            }
            Face diff;
            diff.reserve(tau.size() - sigma.size());
            std::set_difference(tau.begin(), tau.end(), sigma.begin(), sigma.end(), std::back_inserter(diff));
            for (Vertex v : diff) {
                used[v] = 1;
            }
            const std::size_t bucket = diff.size() - 1;
            if (rest.size() <= bucket) {
                rest.resize(bucket + 1);
            }
            rest[bucket].push_back(std::move(diff));
        }
    }
    Relabeled out;
    std::vector<Vertex> relabel(L.vertex_count(), 0);
    for (std::size_t v = 0; v < used.size(); ++v) {
        if (used[v]) {
            relabel[v] = static_cast<Vertex>(out.original.size());
            out.original.push_back(static_cast<Vertex>(v));
        }
    }
    // Order-preserving relabeling keeps each bucket sorted.
    for (auto& bucket : rest) {
        for (Face& f : bucket) {
            for (Vertex& v : f) {
                v = relabel[v];
            }
        }
    }
    out.complex = SimplicialComplex(detail::CanonicalTag{}, out.original.size(), std::move(rest));
    return out;
}

inline Relabeled link(const SimplicialComplex& L, Vertex v)
{
    if (v >= L.vertex_count()) {
        throw Error(ErrorCode::not_a_vertex, std::to_string(v) + " is not a vertex");
    }
    const Vertex face[1] = {v};
    return link(L, std::span<const Vertex>(face));
}

/// K's vertices keep their labels; L's are shifted by K.vertex_count().
inline SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L)
{
    detail::require_nonempty(K, "join");
    detail::require_nonempty(L, "join");
    const auto shift = static_cast<Vertex>(K.vertex_count());
    const auto k_facets = K.facets();
    const auto l_facets = L.facets();
    std::vector<Face> facets;
    facets.reserve(k_facets.size() * l_facets.size());
    for (const Face& a : k_facets) {
        for (const Face& b : l_facets) {
            Face f = a;
            for (Vertex v : b) {
                f.push_back(v + shift);
            }
            facets.push_back(std::move(f));
        }
    }
    return detail::close_facets(K.vertex_count() + L.vertex_count(), facets);
}

inline SimplicialComplex two_points() { return from_facets(2, {{0}, {1}}); }

/// join(S^0, L): the apexes are vertices 0 and 1.
inline SimplicialComplex suspension(const SimplicialComplex& L) { return join(two_points(), L); }

inline Graph one_skeleton(const SimplicialComplex& L)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Face& e : L.faces(1)) {
        edges.emplace_back(e[0], e[1]);
    }
    return Graph(L.vertex_count(), std::move(edges));
}

/// Every clique of G, found by extending cliques with higher-numbered common neighbours.
inline SimplicialComplex clique_complex(const Graph& G)
{
    const std::size_t n = G.vertex_count();
    std::vector<std::vector<Vertex>> higher(n);
    std::vector<char> adjacent(n * n, 0);
    for (auto [u, v] : G.edges()) {
        higher[u].push_back(v);
        adjacent[u * n + v] = adjacent[v * n + u] = 1;
    }
    for (auto& h : higher) {
        std::sort(h.begin(), h.end());
    }

    std::vector<std::vector<Face>> buckets;
    Face clique;
    auto extend = [&](auto&& self, const std::vector<Vertex>& candidates) -> void {
        const std::size_t k = clique.size();
        if (buckets.size() < k) {
            buckets.resize(k);
        }
        buckets[k - 1].push_back(clique);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const Vertex w = candidates[i];
            std::vector<Vertex> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                if (adjacent[w * n + candidates[j]]) {
                    next.push_back(candidates[j]);
                }
            }
            clique.push_back(w);
            self(self, next);
            clique.pop_back();
        }
    };
    for (Vertex v = 0; v < n; ++v) {
        clique.assign(1, v);
        extend(extend, higher[v]);
    }
    for (auto& b : buckets) {
        std::sort(b.begin(), b.end());
    }
    return SimplicialComplex(detail::CanonicalTag{}, n, std::move(buckets));
}

inline bool is_flag(const SimplicialComplex& L) { return L == clique_complex(one_skeleton(L)); }

/// Vertices are the nonempty faces of L in canonical order (by dimension, then lexicographic);
/// faces are chains under inclusion.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& L)
{
    detail::require_nonempty(L, "barycentric_subdivision");
    std::vector<std::size_t> offset(static_cast<std::size_t>(L.dimension()) + 2, 0);
    for (int k = 0; k <= L.dimension(); ++k) {
        offset[k + 1] = offset[k] + L.face_count(k);
    }
    auto global_index = [&](const Face& f) {
        return static_cast<Vertex>(offset[f.size() - 1] + *L.index_of(f));
    };

    // Maximal chains: one per facet and ordering of its vertices.
    std::vector<Face> chains;
    for (Face facet : L.facets()) {
        do {
            Face chain;
            Face prefix;
            for (Vertex v : facet) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(global_index(prefix));
            }
            std::sort(chain.begin(), chain.end());
            chains.push_back(std::move(chain));
        } while (std::next_permutation(facet.begin(), facet.end()));
    }
    return detail::close_facets(offset.back(), chains);
}

/// Sorted vertex degrees of the 1-skeleton; a cheap isomorphism invariant.
inline std::vector<std::size_t> degree_sequence(const SimplicialComplex& L)
{
    auto deg = one_skeleton(L).degrees();
    std::sort(deg.begin(), deg.end());
    return deg;
}

}  // namespace cdkit
