/**
 * Exhaustive census over labeled graphs on few vertices: every clique
 * complex that is a generalized homology sphere is evaluated against the identities
 * and the conjectured signs.
 *
 * Graph identifiers are edge bitmasks: bit k stands for the k-th pair
 * (i, j), i < j, in lexicographic order. Records are ordered by
 * (vertex count, mask) regardless of how the range was sharded.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "cdkit/complex.hpp"
#include "cdkit/error.hpp"
#include "cdkit/homology.hpp"
#include "cdkit/invariants.hpp"
#include "cdkit/polynomial.hpp"
#include "cdkit/report.hpp"

namespace cdkit {

inline constexpr std::size_t census_default_cap = 7;
inline constexpr std::size_t census_hard_limit = 11;  // C(11,2) = 55 edge bits

struct CensusOptions {
    std::size_t max_vertices = 0;
    std::optional<int> dim;
    bool force = false;
    bool dedup = false;
    unsigned workers = 1;
};

struct CensusRecord {
    std::size_t vertex_count = 0;
    std::uint64_t mask = 0;
    int dim = -1;
    bool homology_sphere = false;
    bool ghs = false;
    std::size_t copies = 1;
    std::vector<std::size_t> degrees;  ///< sorted
    std::vector<Integer> f;
    std::vector<Integer> h;
    std::optional<std::vector<Integer>> h_tilde;
    std::optional<std::vector<Integer>> gamma;
    std::optional<Rational> cd_value;
    std::optional<Rational> theorem_lhs;
    std::optional<Rational> theorem_rhs;
    bool dehn_sommerville = false;
    bool link_derivative = false;
    std::optional<bool> theorem_equal;
    bool finding = false;

    friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusResult {
    std::size_t max_vertices = 0;
    std::optional<int> dim;
    std::uint64_t graphs_examined = 0;
    std::vector<CensusRecord> records;

    std::size_t findings() const
    {
        return static_cast<std::size_t>(
            std::count_if(records.begin(), records.end(), [](const CensusRecord& r) { return r.finding; }));
    }

    friend bool operator==(const CensusResult&, const CensusResult&) = default;
};

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++bit) {
            if (mask >> bit & 1) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return Graph(n, std::move(edges));
}

/// Evaluates one graph; nullopt unless its clique complex is a generalized homology sphere passing the dimension filter.
inline std::optional<CensusRecord> census_entry(std::size_t n, std::uint64_t mask, std::optional<int> dim,
                                                SphereCache& cache)
{
    const SimplicialComplex L = clique_complex(graph_from_mask(n, mask));
    if (L.empty() || (dim && L.dimension() != *dim) || !is_homology_sphere(L)) {
        return std::nullopt;
    }
    const bool ghs = is_generalized_homology_sphere(L, cache);
    if (!ghs) {
        return std::nullopt;
    }
    CensusRecord r;
    r.vertex_count = n;
    r.mask = mask;
    r.dim = L.dimension();
    r.homology_sphere = true;
    r.ghs = ghs;
    r.degrees = degree_sequence(L);
    r.f = f_vector(L).counts;
    const IntPolynomial h = h_polynomial(L);
    r.h = h.coefficients();
    const auto m = static_cast<std::size_t>(r.dim + 1);
    if (is_palindromic(h, m)) {
        r.gamma = gamma_expand(h, m).gammas;
    }
    r.dehn_sommerville = dehn_sommerville_check(L);
    r.link_derivative = link_derivative_identity(L);
    if (r.dim % 2 == 0) {
        r.h_tilde = divide_exact_by_one_plus_t(h).coefficients();
        if (r.ghs) {
            const TheoremIdentity t = theorem_identity(L, cache);
            r.theorem_lhs = t.lhs;
            r.theorem_rhs = t.rhs;
            r.theorem_equal = t.equal;
            r.finding = t.lhs < 0;
        }
    } else {
        r.cd_value = charney_davis_value(L);
        r.finding = *r.cd_value < 0;
    }
    return r;
}

namespace detail {

/// True iff some vertex permutation maps graph a onto graph b.
inline bool isomorphic_graphs(std::size_t n, std::uint64_t a, std::uint64_t b)
{
    std::vector<std::vector<char>> adj_a(n, std::vector<char>(n, 0));
    std::vector<std::vector<char>> adj_b(n, std::vector<char>(n, 0));
    const Graph ga = graph_from_mask(n, a);
    const Graph gb = graph_from_mask(n, b);
    for (auto [u, v] : ga.edges()) {
        adj_a[u][v] = adj_a[v][u] = 1;
    }
    for (auto [u, v] : gb.edges()) {
        adj_b[u][v] = adj_b[v][u] = 1;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = true;
        for (std::size_t i = 0; i < n && same; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (adj_a[i][j] != adj_b[perm[i]][perm[j]]) {
                    same = false;
                    break;
                }
            }
        }
        if (same) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Keeps the first record of each isomorphism class and counts the copies it absorbed.
inline std::vector<CensusRecord> dedup_records(const std::vector<CensusRecord>& records)
{
    using Key = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<Integer>, std::vector<Integer>>;
    std::map<Key, std::vector<std::size_t>> buckets;  // key -> indices into `out`
    std::vector<CensusRecord> out;
    for (const CensusRecord& r : records) {
        Key key{r.vertex_count, r.degrees, r.f, r.h};
        auto& reps = buckets[key];
        bool merged = false;
        for (std::size_t idx : reps) {
            if (isomorphic_graphs(r.vertex_count, out[idx].mask, r.mask)) {
                out[idx].copies += r.copies;
                merged = true;
                break;
            }
        }
        if (!merged) {
            reps.push_back(out.size());
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace detail

inline CensusResult run_census(const CensusOptions& options)
{
    if (options.max_vertices > census_hard_limit) {
        throw Error(ErrorCode::cap_exceeded, "census supports at most " + std::to_string(census_hard_limit) +
                                                 " vertices (edge masks are 64-bit)");
    }
    if (options.max_vertices > census_default_cap && !options.force) {
        throw Error(ErrorCode::cap_exceeded, "max_vertices " + std::to_string(options.max_vertices) +
                                                 " exceeds the cap of " + std::to_string(census_default_cap) +
                                                 "; pass --force to override");
    }
    CensusResult result;
    result.max_vertices = options.max_vertices;
    result.dim = options.dim;

    struct Chunk {
        std::size_t n;
        std::uint64_t begin;
        std::uint64_t end;
    };
    constexpr std::uint64_t chunk_size = 4096;
    std::vector<Chunk> chunks;
    for (std::size_t n = 1; n <= options.max_vertices; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        result.graphs_examined += total;
        for (std::uint64_t b = 0; b < total; b += chunk_size) {
            chunks.push_back({n, b, std::min(total, b + chunk_size)});
        }
    }

    std::vector<std::vector<CensusRecord>> per_chunk(chunks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        SphereCache cache;
        for (std::size_t c = next++; c < chunks.size(); c = next++) {
            const Chunk& ch = chunks[c];
            for (std::uint64_t mask = ch.begin; mask < ch.end; ++mask) {
                if (auto rec = census_entry(ch.n, mask, options.dim, cache)) {
                    per_chunk[c].push_back(std::move(*rec));
                }
            }
        }
    };
    const unsigned workers = std::max(1u, options.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (auto& recs : per_chunk) {
        for (auto& r : recs) {
            result.records.push_back(std::move(r));
        }
    }
    if (options.dedup) {
        result.records = detail::dedup_records(result.records);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline std::string join_list(const std::vector<Integer>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ";" : "") + xs[i].str();
    }
    return out;
}

inline std::string join_list(const std::vector<std::size_t>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ";" : "") + std::to_string(xs[i]);
    }
    return out;
}

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = s.find(sep, start);
        out.push_back(s.substr(start, at == std::string::npos ? std::string::npos : at - start));
        if (at == std::string::npos) {
            return out;
        }
        start = at + 1;
    }
}

inline std::vector<Integer> integer_list(const std::string& s)
{
    std::vector<Integer> out;
    if (s.empty()) {
        return out;
    }
    for (const auto& part : split(s, ';')) {
        try {
            out.emplace_back(part);
        } catch (const std::runtime_error&) {
            throw Error(ErrorCode::parse_error, "bad integer '" + part + "'");
        }
    }
    return out;
}

inline std::uint64_t parse_u64(const std::string& s)
{
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) {
            throw Error(ErrorCode::parse_error, "bad integer '" + s + "'");
        }
        return v;
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::parse_error, "bad integer '" + s + "'");
    }
}

inline bool parse_flag(const std::string& s)
{
    if (s == "1") {
        return true;
    }
    if (s == "0") {
        return false;
    }
    throw Error(ErrorCode::parse_error, "bad boolean '" + s + "'");
}

inline nlohmann::json record_json(const CensusRecord& r)
{
    nlohmann::json j;
    j["n"] = r.vertex_count;
    j["mask"] = r.mask;
    j["dim"] = r.dim;
    j["homology_sphere"] = r.homology_sphere;
    j["ghs"] = r.ghs;
    j["copies"] = r.copies;
    j["degrees"] = r.degrees;
    j["f"] = integers_json(r.f);
    j["h"] = integers_json(r.h);
    j["h_tilde"] = r.h_tilde ? integers_json(*r.h_tilde) : nlohmann::json(nullptr);
    j["gamma"] = r.gamma ? integers_json(*r.gamma) : nlohmann::json(nullptr);
    j["cd_value"] = r.cd_value ? nlohmann::json(to_fraction_string(*r.cd_value)) : nlohmann::json(nullptr);
    j["theorem_lhs"] = r.theorem_lhs ? nlohmann::json(to_fraction_string(*r.theorem_lhs)) : nlohmann::json(nullptr);
    j["theorem_rhs"] = r.theorem_rhs ? nlohmann::json(to_fraction_string(*r.theorem_rhs)) : nlohmann::json(nullptr);
    j["theorem_equal"] = r.theorem_equal ? nlohmann::json(*r.theorem_equal) : nlohmann::json(nullptr);
    j["dehn_sommerville"] = r.dehn_sommerville;
    j["link_derivative"] = r.link_derivative;
    j["status"] = r.finding ? "FINDING" : "ok";
    return j;
}

inline std::vector<Integer> integers_from_json(const nlohmann::json& j)
{
    std::vector<Integer> out;
    for (const auto& x : j) {
        out.push_back(integer_from_json(x));
    }
    return out;
}

inline CensusRecord record_from_json(const nlohmann::json& j)
{
    CensusRecord r;
    r.vertex_count = j.at("n").get<std::size_t>();
    r.mask = j.at("mask").get<std::uint64_t>();
    r.dim = j.at("dim").get<int>();
    r.homology_sphere = j.at("homology_sphere").get<bool>();
    r.ghs = j.at("ghs").get<bool>();
    r.copies = j.at("copies").get<std::size_t>();
    r.degrees = j.at("degrees").get<std::vector<std::size_t>>();
    r.f = integers_from_json(j.at("f"));
    r.h = integers_from_json(j.at("h"));
    if (!j.at("h_tilde").is_null()) {
        r.h_tilde = integers_from_json(j.at("h_tilde"));
    }
    if (!j.at("gamma").is_null()) {
        r.gamma = integers_from_json(j.at("gamma"));
    }
    if (!j.at("cd_value").is_null()) {
        r.cd_value = parse_rational(j.at("cd_value").get<std::string>());
    }
    if (!j.at("theorem_lhs").is_null()) {
        r.theorem_lhs = parse_rational(j.at("theorem_lhs").get<std::string>());
    }
    if (!j.at("theorem_rhs").is_null()) {
        r.theorem_rhs = parse_rational(j.at("theorem_rhs").get<std::string>());
    }
    if (!j.at("theorem_equal").is_null()) {
        r.theorem_equal = j.at("theorem_equal").get<bool>();
    }
    r.dehn_sommerville = j.at("dehn_sommerville").get<bool>();
    r.link_derivative = j.at("link_derivative").get<bool>();
    r.finding = j.at("status").get<std::string>() == "FINDING";
    return r;
}

}  // namespace detail

inline std::string census_to_json(const CensusResult& result)
{
    nlohmann::json j;
    j["max_vertices"] = result.max_vertices;
    j["dim"] = result.dim ? nlohmann::json(*result.dim) : nlohmann::json(nullptr);
    j["graphs_examined"] = result.graphs_examined;
    auto records = nlohmann::json::array();
    for (const auto& r : result.records) {
        records.push_back(detail::record_json(r));
    }
    j["records"] = records;
    j["survivors"] = result.records.size();
    j["findings"] = result.findings();
    return j.dump(2) + "\n";
}

inline CensusResult census_from_json(const std::string& text)
{
    try {
        const auto j = nlohmann::json::parse(text);
        CensusResult result;
        result.max_vertices = j.at("max_vertices").get<std::size_t>();
        if (!j.at("dim").is_null()) {
            result.dim = j.at("dim").get<int>();
        }
        result.graphs_examined = j.at("graphs_examined").get<std::uint64_t>();
        for (const auto& r : j.at("records")) {
            result.records.push_back(detail::record_from_json(r));
        }
        return result;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse_error, e.what());
    }
}

inline constexpr const char* census_csv_header =
    "n,mask,dim,homology_sphere,ghs,copies,degrees,f,h,h_tilde,gamma,cd_value,theorem_lhs,theorem_rhs,"
    "theorem_equal,dehn_sommerville,link_derivative,status";

/// One header line, then one line per record. Lists are ';'-separated; absent values are empty.
inline std::string census_to_csv(const CensusResult& result)
{
    std::ostringstream os;
    os << "# max_vertices=" << result.max_vertices << " dim=" << (result.dim ? std::to_string(*result.dim) : "any")
       << " graphs_examined=" << result.graphs_examined << "\n";
    os << census_csv_header << "\n";
    auto opt_rat = [](const std::optional<Rational>& x) { return x ? to_fraction_string(*x) : std::string(); };
    for (const auto& r : result.records) {
        os << r.vertex_count << ',' << r.mask << ',' << r.dim << ',' << int(r.homology_sphere) << ','
           << int(r.ghs) << ',' << r.copies << ',' << detail::join_list(r.degrees) << ','
           << detail::join_list(r.f) << ',' << detail::join_list(r.h) << ','
           << (r.h_tilde ? detail::join_list(*r.h_tilde) : "") << ','
           << (r.gamma ? detail::join_list(*r.gamma) : "") << ',' << opt_rat(r.cd_value) << ','
           << opt_rat(r.theorem_lhs) << ',' << opt_rat(r.theorem_rhs) << ','
           << (r.theorem_equal ? std::to_string(int(*r.theorem_equal)) : "") << ',' << int(r.dehn_sommerville)
           << ',' << int(r.link_derivative) << ',' << (r.finding ? "FINDING" : "ok") << "\n";
    }
    return os.str();
}

inline CensusResult census_from_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    CensusResult result;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
        throw Error(ErrorCode::parse_error, "line 1: missing census preamble");
    }
    for (const auto& field : detail::split(line.substr(2), ' ')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::parse_error, "line 1: bad preamble field '" + field + "'");
        }
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "max_vertices") {
            result.max_vertices = detail::parse_u64(value);
        } else if (key == "dim") {
            if (value != "any") {
                result.dim = static_cast<int>(detail::parse_u64(value));
            }
        } else if (key == "graphs_examined") {
            result.graphs_examined = detail::parse_u64(value);
        }
    }
    if (!std::getline(in, line) || line != census_csv_header) {
        throw Error(ErrorCode::parse_error, "line 2: unexpected CSV header");
    }
    std::size_t line_no = 2;
    while (std::getline(in, line)) {
        ++line_no;
        const auto cells = detail::split(line, ',');
        if (cells.size() != 18) {
            throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": expected 18 fields");
        }
        auto opt_rat = [](const std::string& s) -> std::optional<Rational> {
            if (s.empty()) {
                return std::nullopt;
            }
            return parse_rational(s);
        };
        CensusRecord r;
        r.vertex_count = detail::parse_u64(cells[0]);
        r.mask = detail::parse_u64(cells[1]);
        r.dim = std::stoi(cells[2]);
        r.homology_sphere = detail::parse_flag(cells[3]);
        r.ghs = detail::parse_flag(cells[4]);
        r.copies = detail::parse_u64(cells[5]);
        for (const auto& d : detail::integer_list(cells[6])) {
            r.degrees.push_back(d.convert_to<std::size_t>());
        }
        r.f = detail::integer_list(cells[7]);
        r.h = detail::integer_list(cells[8]);
        if (!cells[9].empty()) {
            r.h_tilde = detail::integer_list(cells[9]);
        }
        if (!cells[10].empty()) {
            r.gamma = detail::integer_list(cells[10]);
        }
        r.cd_value = opt_rat(cells[11]);
        r.theorem_lhs = opt_rat(cells[12]);
        r.theorem_rhs = opt_rat(cells[13]);
        if (!cells[14].empty()) {
            r.theorem_equal = detail::parse_flag(cells[14]);
        }
        r.dehn_sommerville = detail::parse_flag(cells[15]);
        r.link_derivative = detail::parse_flag(cells[16]);
        r.finding = cells[17] == "FINDING";
        result.records.push_back(std::move(r));
    }
    return result;
}

inline std::string census_to_text(const CensusResult& result)
{
    std::ostringstream os;
    for (const auto& r : result.records) {
        os << (r.finding ? "FINDING " : "") << "n=" << r.vertex_count << " mask=" << r.mask << " dim=" << r.dim
           << " f=" << tuple_string(r.f) << " h=" << tuple_string(r.h);
        if (r.h_tilde) {
            os << " h~=" << tuple_string(*r.h_tilde);
        }
        if (r.gamma) {
            os << " gamma=" << tuple_string(*r.gamma);
        }
        if (r.cd_value) {
            os << " cd=" << to_display_string(*r.cd_value);
        }
        if (r.theorem_lhs) {
            os << " lhs=" << to_display_string(*r.theorem_lhs) << " rhs=" << to_display_string(*r.theorem_rhs)
               << (*r.theorem_equal ? "" : " MISMATCH");
        }
        os << " ds=" << (r.dehn_sommerville ? "ok" : "FAIL") << " links=" << (r.link_derivative ? "ok" : "FAIL")
           << (r.ghs ? "" : " not-ghs");
        if (r.copies != 1) {
            os << " copies=" << r.copies;
        }
        os << "\n";
    }
    os << "# graphs examined: " << result.graphs_examined << ", survivors: " << result.records.size()
       << ", findings: " << result.findings() << "\n";
    return os.str();
}

}  // namespace cdkit
