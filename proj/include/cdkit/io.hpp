/**
 * Complex file format:
 *
 *     {
 *       "vertex_count": 4,
 *       "facets": [
 *         [0, 1, 2],
 *         [0, 1, 3]
 *       ]
 *     }
 *
 * Whitespace-insensitive JSON, 0-based vertices. The canonical form written
 * by write_complex lists the maximal faces in lexicographic order, one per
 * line.
 */
#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "cdkit/complex.hpp"
#include "cdkit/error.hpp"

namespace cdkit {

namespace detail {
inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}
}  // namespace detail

inline SimplicialComplex parse_complex(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports the 1-based byte just past the offending token.
        const auto [line, column] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw Error(ErrorCode::parse_error,
                    "line " + std::to_string(line) + ", column " + std::to_string(column) + ": malformed document");
    }
    if (!doc.is_object() || !doc.contains("vertex_count") || !doc.contains("facets")) {
        throw Error(ErrorCode::parse_error, "line 1, column 1: expected an object with 'vertex_count' and 'facets'");
    }
    const auto& count = doc["vertex_count"];
    if (!count.is_number_unsigned()) {
        throw Error(ErrorCode::parse_error, "'vertex_count' must be a nonnegative integer");
    }
    const auto& facets_json = doc["facets"];
    if (!facets_json.is_array()) {
        throw Error(ErrorCode::parse_error, "'facets' must be a list of integer lists");
    }
    std::vector<Face> facets;
    for (std::size_t i = 0; i < facets_json.size(); ++i) {
        const auto& f = facets_json[i];
        if (!f.is_array()) {
            throw Error(ErrorCode::parse_error, "facet " + std::to_string(i) + " is not a list");
        }
        Face face;
        for (const auto& v : f) {
            if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xFFFFFFFFu) {
                throw Error(ErrorCode::parse_error, "facet " + std::to_string(i) + " has a non-vertex entry");
            }
            face.push_back(v.get<Vertex>());
        }
        facets.push_back(std::move(face));
    }
    return from_facets(count.get<std::size_t>(), std::move(facets));
}

inline SimplicialComplex read_complex(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::parse_error, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_complex(buffer.str());
}

inline std::string serialize_complex(const SimplicialComplex& L)
{
    std::string out = "{\n  \"vertex_count\": " + std::to_string(L.vertex_count()) + ",\n  \"facets\": [";
    const auto facets = L.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
        out += i ? ",\n    [" : "\n    [";
        for (std::size_t j = 0; j < facets[i].size(); ++j) {
            out += (j ? ", " : "") + std::to_string(facets[i][j]);
        }
        out += "]";
    }
    out += facets.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

inline void write_complex(const SimplicialComplex& L, const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::parse_error, "cannot write '" + path + "'");
    }
    out << serialize_complex(L);
}

}  // namespace cdkit
