/**
 * Human-readable and JSON renderings of analysis and verification results.
 * Rationals are always written as "p/q" strings in JSON; integers are JSON
 * numbers when they fit in 64 bits and decimal strings otherwise.
 */
#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdkit/invariants.hpp"
#include "cdkit/polynomial.hpp"
#include "cdkit/verify.hpp"

namespace cdkit {

inline nlohmann::json integer_json(const Integer& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return x.convert_to<std::int64_t>();
    }
    return x.str();
}

inline Integer integer_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer()) {
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return Integer(j.get<std::string>());
    }
    throw Error(ErrorCode::parse_error, "expected an integer, got " + j.dump());
}

inline nlohmann::json integers_json(const std::vector<Integer>& xs)
{
    auto out = nlohmann::json::array();
    for (const auto& x : xs) {
        out.push_back(integer_json(x));
    }
    return out;
}

inline std::string tuple_string(const std::vector<Integer>& xs)
{
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ", " : "") + xs[i].str();
    }
    return out + ")";
}

inline nlohmann::json to_json(const SphereInvariants& s)
{
    nlohmann::json j;
    j["dim"] = s.dim;
    j["m"] = s.m;
    j["vertex_count"] = s.vertex_count;
    j["f_vector"] = integers_json(s.f_vector.counts);
    j["f_polynomial"] = integers_json(s.f_poly.coefficients());
    j["h_polynomial"] = integers_json(s.h_poly.coefficients());
    j["flag"] = s.flag;
    auto homology = nlohmann::json::array();
    for (const auto& g : s.homology.groups) {
        homology.push_back({{"betti", g.betti}, {"torsion", integers_json(g.torsion)}});
    }
    j["reduced_homology"] = homology;
    j["homology_sphere"] = s.homology_sphere;
    j["generalized_homology_sphere"] = s.generalized_homology_sphere;
    j["orbifold_euler"] = to_fraction_string(s.orbifold_euler);
    j["h_at_minus_one"] = to_fraction_string(s.h_at_minus_one);
    j["normalization"] = "f(-1/2) = h(-1)/2^m";
    if (s.h_tilde) {
        j["h_tilde"] = integers_json(s.h_tilde->coefficients());
    }
    if (s.gamma) {
        j["gamma"] = integers_json(s.gamma->gammas);
    }
    if (s.cd_value) {
        j["cd_value"] = to_fraction_string(*s.cd_value);
    }
    if (s.theorem) {
        j["theorem"] = {{"lhs", to_fraction_string(s.theorem->lhs)},
                        {"rhs", to_fraction_string(s.theorem->rhs)},
                        {"equal", s.theorem->equal}};
    }
    return j;
}

inline std::string render_text(const SphereInvariants& s, const std::string& id)
{
    std::ostringstream os;
    os << "complex: " << id << "\n";
    os << "  vertices: " << s.vertex_count << "  dim: " << s.dim << "  m: " << s.m << "\n";
    os << "  f = " << tuple_string(s.f_vector.counts) << "\n";
    os << "  f(t) = " << s.f_poly << "\n";
    os << "  h = " << tuple_string(s.h_poly.coefficients()) << "\n";
    os << "  flag: " << (s.flag ? "yes" : "no") << "\n";
    os << "  reduced homology:";
    for (std::size_t i = 0; i < s.homology.groups.size(); ++i) {
        const auto& g = s.homology.groups[i];
        os << " H" << i << "=Z^" << g.betti;
        for (const auto& t : g.torsion) {
            os << "+Z/" << t;
        }
    }
    os << "\n";
    os << "  homology sphere: " << (s.homology_sphere ? "yes" : "no")
       << "  generalized homology sphere: " << (s.generalized_homology_sphere ? "yes" : "no") << "\n";
    os << "  orbifold euler f(-1/2) = " << to_display_string(s.orbifold_euler)
       << "  (h(-1) = " << to_display_string(s.h_at_minus_one) << ", f(-1/2) = h(-1)/2^m)\n";
    if (s.h_tilde) {
        os << "  h~ = " << tuple_string(s.h_tilde->coefficients()) << "\n";
    }
    if (s.gamma) {
        os << "  gamma = " << tuple_string(s.gamma->gammas) << "\n";
    }
    if (s.cd_value) {
        os << "  cd_value (-1)^d h(-1) = " << to_display_string(*s.cd_value) << "\n";
    }
    if (s.theorem) {
        os << "  theorem: lhs = " << to_display_string(s.theorem->lhs)
           << ", rhs = " << to_display_string(s.theorem->rhs) << " -> "
           << (s.theorem->equal ? "pass" : "FAIL") << "\n";
    }
    return os.str();
}

inline nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json j;
    j["complex"] = r.complex_id;
    auto results = nlohmann::json::array();
    for (const auto& res : r.results) {
        nlohmann::json w = nlohmann::json::object();
        for (const auto& wit : res.witnesses) {
            w[wit.name] = to_fraction_string(wit.value);
        }
        results.push_back({{"identity", res.identity},
                           {"outcome", std::string(to_string(res.outcome))},
                           {"witnesses", w},
                           {"note", res.note}});
    }
    j["results"] = results;
    j["skipped"] = r.skipped;
    j["pass"] = r.all_pass();
    return j;
}

inline std::string render_text(const VerificationReport& r)
{
    std::ostringstream os;
    os << "verify: " << r.complex_id << "\n";
    for (const auto& res : r.results) {
        os << "  [" << to_string(res.outcome) << "] " << res.identity;
        for (const auto& w : res.witnesses) {
            os << "  " << w.name << "=" << to_display_string(w.value);
        }
        os << "\n";
        if (!res.note.empty()) {
            os << "      " << res.note << "\n";
        }
    }
    for (const auto& s : r.skipped) {
        os << "  [skipped] " << s << "\n";
    }
    os << (r.all_pass() ? "result: pass\n" : "result: FAIL\n");
    return os.str();
}

}  // namespace cdkit
