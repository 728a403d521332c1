/**
 * Reduced integer simplicial homology via Smith normal form, and the
 * (generalized) homology sphere certificates built on top of it.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cdkit/complex.hpp"
#include "cdkit/error.hpp"
#include "cdkit/polynomial.hpp"

namespace cdkit {

/// Column-sparse integer matrix; each column holds (row, value) pairs sorted by row, no zeros.
class SparseIntMatrix {
public:
    using Entry = std::pair<std::size_t, Integer>;
    using Column = std::vector<Entry>;

    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    const Column& column(std::size_t c) const { return columns_.at(c); }

    /// Appends to column c; rows must be pushed in increasing order.
    void push(std::size_t row, std::size_t c, Integer value)
    {
        if (value != 0) {
            columns_.at(c).emplace_back(row, std::move(value));
        }
    }

    Integer at(std::size_t row, std::size_t c) const
    {
        const Column& col = columns_.at(c);
        auto it = std::lower_bound(col.begin(), col.end(), row,
                                   [](const Entry& e, std::size_t r) { return e.first < r; });
        return (it != col.end() && it->first == row) ? it->second : Integer(0);
    }

    /// this * other
    SparseIntMatrix multiply(const SparseIntMatrix& other) const
    {
        SparseIntMatrix out(rows_, other.cols());
        std::vector<Integer> acc(rows_);
        for (std::size_t c = 0; c < other.cols(); ++c) {
            std::fill(acc.begin(), acc.end(), Integer(0));
            for (const auto& [k, b] : other.column(c)) {
                for (const auto& [r, a] : columns_[k]) {
                    acc[r] += a * b;
                }
            }
            for (std::size_t r = 0; r < rows_; ++r) {
                out.push(r, c, acc[r]);
            }
        }
        return out;
    }

    bool is_zero() const
    {
        return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
    }

private:
    std::size_t rows_;
    std::vector<Column> columns_;
};

/// Nonzero diagonal of the Smith normal form, each entry positive and dividing the next.
struct SmithForm {
    std::vector<Integer> invariant_factors;

    std::size_t rank() const noexcept { return invariant_factors.size(); }

    std::vector<Integer> torsion() const
    {
        std::vector<Integer> out;
        for (const auto& d : invariant_factors) {
            if (d > 1) {
                out.push_back(d);
            }
        }
        return out;
    }
};

namespace detail {

/// Textbook Smith normal form on a dense block, pivoting on the smallest nonzero entry.
inline std::vector<Integer> dense_smith_diagonal(std::vector<std::vector<Integer>> a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t r = t; r < rows; ++r) {
                for (std::size_t c = t; c < cols; ++c) {
                    if (a[r][c] != 0 && (!best || abs(a[r][c]) < abs(a[best->first][best->second]))) {
                        best = {r, c};
                    }
                }
            }
            if (!best) {
                return diag;
            }
            std::swap(a[t], a[best->first]);
            for (auto& row : a) {
                std::swap(row[t], row[best->second]);
            }
            bool clean = true;
            const Integer pivot = a[t][t];
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0) {
                    continue;
                }
                const Integer q = a[r][t] / pivot;
                for (std::size_t c = t; c < cols; ++c) {
                    a[r][c] -= q * a[t][c];
                }
                clean = clean && a[r][t] == 0;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0) {
                    continue;
                }
                const Integer q = a[t][c] / pivot;
                for (std::size_t r = t; r < rows; ++r) {
                    a[r][c] -= q * a[r][t];
                }
                clean = clean && a[t][c] == 0;
            }
            if (!clean) {
                continue;
            }
            // Pivot must divide the remaining block; otherwise fold an offending row in.
            std::optional<std::size_t> bad_row;
            for (std::size_t r = t + 1; r < rows && !bad_row; ++r) {
                for (std::size_t c = t + 1; c < cols; ++c) {
                    if (a[r][c] % pivot != 0) {
                        bad_row = r;
                        break;
                    }
                }
            }
            if (bad_row) {
                for (std::size_t c = t; c < cols; ++c) {
                    a[t][c] += a[*bad_row][c];
                }
                continue;
            }
            diag.push_back(abs(pivot));
            break;
        }
    }
    return diag;
}

/// Replaces a diagonal by the equivalent one in divisibility order.
inline std::vector<Integer> normalize_diagonal(std::vector<Integer> d)
{
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] != 0) {
                const Integer g = gcd(d[i], d[j]);
                const Integer l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
            }
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace detail

/**
 * Smith normal form of a sparse integer matrix.
 *
 * Unit pivots are eliminated first (boundary matrices are mostly +-1 and
 * reduce almost entirely this way), choosing the pivot with the fewest
 * row and column neighbours to limit fill. The small remainder, which has
 * no unit entries, goes through the dense routine.
 */
inline SmithForm smith_normal_form(const SparseIntMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::map<std::size_t, Integer>> col(cols);
    std::vector<std::set<std::size_t>> row_cols(rows);
    for (std::size_t c = 0; c < cols; ++c) {
        for (const auto& [r, v] : m.column(c)) {
            col[c].emplace(r, v);
            row_cols[r].insert(c);
        }
    }
    std::vector<char> col_alive(cols, 1);
    std::size_t unit_pivots = 0;

    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        std::size_t best_cost = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (pivot && best_cost == 0) {
                break;
            }
            if (!col_alive[c] || col[c].empty()) {
                continue;
            }
            const std::size_t csize = col[c].size() - 1;
            for (const auto& [r, v] : col[c]) {
                if (v != 1 && v != -1) {
                    continue;
                }
                const std::size_t cost = csize * (row_cols[r].size() - 1);
                if (!pivot || cost < best_cost) {
                    pivot = {r, c};
                    best_cost = cost;
                    if (cost == 0) {
                        break;
                    }
                }
            }
        }
        if (!pivot) {
            break;
        }
        const auto [pr, pc] = *pivot;
        const Integer pv = col[pc].at(pr);
        // Clear row pr with column operations; column pc then only touches row pr via row ops.
        std::vector<std::size_t> others;
        for (std::size_t c : row_cols[pr]) {
            if (c != pc) {
                others.push_back(c);
            }
        }
        for (std::size_t c : others) {
            const Integer q = col[c].at(pr) * pv;  // pv = +-1, so a/pv = a*pv
            for (const auto& [r, v] : col[pc]) {
                auto it = col[c].find(r);
                if (it == col[c].end()) {
                    col[c].emplace(r, -q * v);
                    row_cols[r].insert(c);
                } else {
                    it->second -= q * v;
                    if (it->second == 0) {
                        col[c].erase(it);
                        row_cols[r].erase(c);
                    }
                }
            }
        }
        for (const auto& [r, v] : col[pc]) {
            row_cols[r].erase(pc);
        }
        col[pc].clear();
        col_alive[pc] = 0;
        ++unit_pivots;
    }

    // Dense remainder.
    std::vector<std::size_t> live_cols;
    std::vector<std::size_t> live_rows;
    for (std::size_t c = 0; c < cols; ++c) {
        if (col_alive[c] && !col[c].empty()) {
            live_cols.push_back(c);
        }
    }
    for (std::size_t r = 0; r < rows; ++r) {
        if (!row_cols[r].empty()) {
            live_rows.push_back(r);
        }
    }
    std::vector<Integer> diag;
    if (!live_cols.empty()) {
        std::vector<std::vector<Integer>> dense(live_rows.size(), std::vector<Integer>(live_cols.size()));
        for (std::size_t j = 0; j < live_cols.size(); ++j) {
            for (const auto& [r, v] : col[live_cols[j]]) {
                const auto i = std::lower_bound(live_rows.begin(), live_rows.end(), r) - live_rows.begin();
                dense[static_cast<std::size_t>(i)][j] = v;
            }
        }
        diag = detail::normalize_diagonal(detail::dense_smith_diagonal(std::move(dense)));
    }
    SmithForm out;
    out.invariant_factors.assign(unit_pivots, Integer(1));
    out.invariant_factors.insert(out.invariant_factors.end(), diag.begin(), diag.end());
    return out;
}

/// Boundary map from i-faces (columns) to (i-1)-faces (rows) in canonical face order.
inline SparseIntMatrix boundary_matrix(const SimplicialComplex& L, int i)
{
    if (i < 1 || i > L.dimension()) {
        throw Error(ErrorCode::dimension_out_of_range,
                    "boundary_matrix needs 1 <= i <= " + std::to_string(L.dimension()) + ", got " +
                        std::to_string(i));
    }
    const auto cells = L.faces(i);
    SparseIntMatrix out(L.face_count(i - 1), cells.size());
    Face sub;
    std::vector<std::pair<std::size_t, int>> entries;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const Face& f = cells[c];
        entries.clear();
        for (std::size_t j = 0; j < f.size(); ++j) {
            sub.clear();
            for (std::size_t k = 0; k < f.size(); ++k) {
                if (k != j) {
                    sub.push_back(f[k]);
                }
            }
            entries.emplace_back(*L.index_of(sub), j % 2 == 0 ? 1 : -1);
        }
        std::sort(entries.begin(), entries.end());
        for (const auto& [r, s] : entries) {
            out.push(r, c, Integer(s));
        }
    }
    return out;
}

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<Integer> torsion;
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced homology in dimensions 0..dim(L).
struct HomologyProfile {
    std::vector<HomologyGroup> groups;

    bool is_sphere_pattern() const
    {
        for (std::size_t i = 0; i < groups.size(); ++i) {
            const bool top = i + 1 == groups.size();
            if (!groups[i].torsion.empty() || groups[i].betti != (top ? 1u : 0u)) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Reduced homology, using the augmentation to the empty face in degree 0.
inline HomologyProfile reduced_homology(const SimplicialComplex& L)
{
    detail::require_nonempty(L, "reduced_homology");
    const int dim = L.dimension();
    // forms[i] is the Smith form of d_i : C_i -> C_{i-1}, i = 0..dim; d_0 is the augmentation.
    std::vector<SmithForm> forms(static_cast<std::size_t>(dim) + 2);
    forms[0].invariant_factors = {Integer(1)};
    for (int i = 1; i <= dim; ++i) {
        forms[i] = smith_normal_form(boundary_matrix(L, i));
    }
    HomologyProfile out;
    for (int i = 0; i <= dim; ++i) {
        HomologyGroup g;
        g.betti = L.face_count(i) - forms[i].rank() - forms[i + 1].rank();
        g.torsion = forms[i + 1].torsion();
        out.groups.push_back(std::move(g));
    }
    return out;
}

/// Reduced homology of the dim(L)-sphere; the complex {empty face} counts as the (-1)-sphere.
inline bool is_homology_sphere(const SimplicialComplex& L)
{
    if (L.empty()) {
        return true;
    }
    const int dim = L.dimension();
    // Reduced Euler characteristic of a d-sphere is (-1)^d.
    const std::int64_t reduced_chi = euler_characteristic(L) - 1;
    if (reduced_chi != (dim % 2 == 0 ? 1 : -1)) {
        return false;
    }
    return reduced_homology(L).is_sphere_pattern();
}

/**
 * Memo table for generalized homology sphere certificates, keyed by
 * canonical storage. Lookups and inserts are serialized by one mutex;
 * computation happens outside the lock and the results are deterministic,
 * so a lost race only repeats work.
 */
class SphereCache {
public:
    std::optional<bool> find(const SimplicialComplex& L) const
    {
        std::lock_guard lock(mutex_);
        auto it = table_.find(L);
        if (it == table_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    bool insert(const SimplicialComplex& L, bool value)
    {
        std::lock_guard lock(mutex_);
        return table_.emplace(L, value).first->second;
    }

    std::size_t size() const
    {
        std::lock_guard lock(mutex_);
        return table_.size();
    }

private:
    mutable std::mutex mutex_;
    std::map<SimplicialComplex, bool> table_;
};

namespace detail {
inline bool certify_ghs(const SimplicialComplex& L, SphereCache& cache)
{
    if (L.empty()) {
        return true;
    }
    if (auto hit = cache.find(L)) {
        return *hit;
    }
    // The link of a face sigma is the link of sigma \ {v} inside the link of v,
    // so recursing on vertex links reaches every nonempty face.
    bool ok = is_homology_sphere(L);
    for (Vertex v = 0; ok && v < L.vertex_count(); ++v) {
        const Relabeled lk = link(L, v);
        ok = lk.complex.dimension() == L.dimension() - 1 && certify_ghs(lk.complex, cache);
    }
    return cache.insert(L, ok);
}
}  // namespace detail

/// Homology sphere whose every nonempty face link is a homology sphere of complementary dimension.
inline bool is_generalized_homology_sphere(const SimplicialComplex& L, SphereCache& cache)
{
    detail::require_nonempty(L, "is_generalized_homology_sphere");
    return detail::certify_ghs(L, cache);
}

inline bool is_generalized_homology_sphere(const SimplicialComplex& L)
{
    SphereCache cache;
    return is_generalized_homology_sphere(L, cache);
}

}  // namespace cdkit
