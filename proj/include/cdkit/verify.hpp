/**
 * Identity suites run against a single complex, producing a report with
 * exact witness values.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cdkit/complex.hpp"
#include "cdkit/error.hpp"
#include "cdkit/generators.hpp"
#include "cdkit/homology.hpp"
#include "cdkit/invariants.hpp"
#include "cdkit/polynomial.hpp"

namespace cdkit {

enum class Suite { dehn_sommerville, theorem, links, gamma, joins };

inline std::string_view to_string(Suite s)
{
    switch (s) {
    case Suite::dehn_sommerville: return "ds";
    case Suite::theorem: return "theorem";
    case Suite::links: return "links";
    case Suite::gamma: return "gamma";
    case Suite::joins: return "joins";
    }
    return "?";
}

/// Parses "all" or a comma-separated list of suite names.
inline std::vector<Suite> parse_suites(std::string_view text, bool& is_all)
{
    is_all = false;
    std::vector<Suite> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view name = text.substr(start, comma - start);
        if (name == "all") {
            is_all = true;
            out = {Suite::dehn_sommerville, Suite::gamma, Suite::theorem, Suite::links, Suite::joins};
        } else if (name == "ds") {
            out.push_back(Suite::dehn_sommerville);
        } else if (name == "theorem") {
            out.push_back(Suite::theorem);
        } else if (name == "links") {
            out.push_back(Suite::links);
        } else if (name == "gamma") {
            out.push_back(Suite::gamma);
        } else if (name == "joins") {
            out.push_back(Suite::joins);
        } else {
            throw Error(ErrorCode::parse_error, "unknown suite '" + std::string(name) + "'");
        }
        start = comma + 1;
    }
    return out;
}

enum class Outcome { pass, fail, finding };

inline std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "FAIL";
    case Outcome::finding: return "FINDING";
    }
    return "?";
}

struct Witness {
    std::string name;
    Rational value;
};

struct IdentityResult {
    std::string identity;
    Outcome outcome = Outcome::pass;
    std::vector<Witness> witnesses;
    std::string note;
};

struct VerificationReport {
    std::string complex_id;
    std::vector<IdentityResult> results;
    std::vector<std::string> skipped;

    bool all_pass() const
    {
        return std::none_of(results.begin(), results.end(),
                            [](const IdentityResult& r) { return r.outcome == Outcome::fail; });
    }

    bool has_finding() const
    {
        return std::any_of(results.begin(), results.end(),
                           [](const IdentityResult& r) { return r.outcome == Outcome::finding; });
    }
};

namespace detail {

inline Outcome outcome_of(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

inline IdentityResult check_links(const SimplicialComplex& L)
{
    IntPolynomial sum;
    for (Vertex v = 0; v < L.vertex_count(); ++v) {
        sum = sum + face_polynomial(link(L, v).complex);
    }
    const IntPolynomial fprime = derivative(face_polynomial(L));
    IdentityResult r{"link-derivative", outcome_of(sum == fprime), {}, {}};
    r.witnesses = {{"sum_links_f(1)", eval_rational(sum, Rational(1))},
                   {"f'(1)", eval_rational(fprime, Rational(1))},
                   {"sum_links_f(-1/2)", eval_rational(sum, Rational(-1, 2))},
                   {"f'(-1/2)", eval_rational(fprime, Rational(-1, 2))}};
    r.note = "sum_v f_Lk(v) = " + sum.to_string() + "; f' = " + fprime.to_string();
    return r;
}

inline IdentityResult check_dehn_sommerville(const SimplicialComplex& L)
{
    const DehnSommervilleWitness w = dehn_sommerville_witness(L);
    IdentityResult r{"dehn-sommerville", outcome_of(w.holds() && w.normalization_consistent()), {}, {}};
    r.witnesses = {{"f(-1/2)", w.f_at_minus_half}, {"h(-1)", w.h_at_minus_one}, {"2^m", Rational(w.two_to_m)}};
    r.note = std::string(w.palindromic ? "h palindromic" : "h NOT palindromic") +
             (w.vanishing_expected ? "; f(-1/2) = 0 expected (m odd)" : "; m even, no vanishing expected") +
             "; f(-1/2) = h(-1)/2^m " + (w.normalization_consistent() ? "holds" : "FAILS");
    return r;
}

inline IdentityResult check_gamma(const SimplicialComplex& L)
{
    const IntPolynomial h = h_polynomial(L);
    const auto m = static_cast<std::size_t>(L.dimension() + 1);
    IdentityResult r{"gamma", Outcome::pass, {}, {}};
    if (!is_palindromic(h, m)) {
        r.outcome = Outcome::fail;
        r.note = "h = " + h.to_string() + " is not palindromic";
        return r;
    }
    const GammaVector g = gamma_expand(h, m);
    bool ok = g.reconstruct() == h;
    for (std::size_t i = 0; i < g.gammas.size(); ++i) {
        r.witnesses.push_back({"gamma_" + std::to_string(i), Rational(g.gammas[i])});
    }
    if (L.dimension() % 2 == 0) {
        const int d = L.dimension() / 2;
        const Rational top_from_h_tilde =
            Rational(detail::sign(d)) * eval_rational(divide_exact_by_one_plus_t(h), Rational(-1));
        r.witnesses.push_back({"(-1)^d h~(-1)", top_from_h_tilde});
        ok = ok && Rational(g.top()) == top_from_h_tilde;
        r.note = "gamma_d equals (-1)^d h~(-1)";
    } else {
        r.note = "expansion reconstructs h";
    }
    r.outcome = outcome_of(ok);
    return r;
}

inline IdentityResult check_theorem(const SimplicialComplex& L, SphereCache& cache)
{
    const TheoremIdentity t = theorem_identity(L, cache);
    IdentityResult r{"theorem", outcome_of(t.equal), {}, {}};
    r.witnesses = {{"lhs", t.lhs}, {"rhs", t.rhs}, {"link_scale", theorem_link_scale()}};
    r.note = "(-1)^d h~(-1) = (1/2) sum_v (-1)^d h_Lk(v)(-1)";
    return r;
}

inline IdentityResult check_joins(const SimplicialComplex& L)
{
    const SimplicialComplex partners[] = {two_points(), cycle(5)};
    const char* names[] = {"S0", "pentagon"};
    IdentityResult r{"join-multiplicativity", Outcome::pass, {}, {}};
    bool ok = true;
    for (std::size_t i = 0; i < 2; ++i) {
        const SimplicialComplex J = join(L, partners[i]);
        const IntPolynomial hj = h_polynomial(J);
        const IntPolynomial hp = h_polynomial(L) * h_polynomial(partners[i]);
        ok = ok && hj == hp && f_polynomial(J) == f_polynomial(L) * f_polynomial(partners[i]);
        r.witnesses.push_back({std::string("h_join_") + names[i] + "(-1)", eval_rational(hj, Rational(-1))});
        r.witnesses.push_back({std::string("h_L*h_") + names[i] + "(-1)", eval_rational(hp, Rational(-1))});
    }
    r.outcome = outcome_of(ok);
    r.note = "h and f multiplicative for joins with S0 and the pentagon";
    return r;
}

}  // namespace detail

/**
 * Runs the requested suites. When `is_all` is false, a suite that does not
 * apply to L (sphere-only suite on a non-sphere, theorem on an
 * odd-dimensional sphere) raises NotASphere / WrongParity; with `is_all`
 * it is recorded under `skipped` instead.
 *
 * Under "all" and "theorem" the report also carries the conjectured signs
 * for flag spheres; a negative value is reported as a FINDING.
 */
inline VerificationReport verify(const SimplicialComplex& L, std::string complex_id, const std::vector<Suite>& suites,
                                 bool is_all, SphereCache& cache)
{
    detail::require_nonempty(L, "verify");
    VerificationReport report;
    report.complex_id = std::move(complex_id);

    std::optional<bool> sphere;
    std::optional<bool> ghs;
    auto is_sphere = [&] {
        if (!sphere) {
            sphere = is_homology_sphere(L);
        }
        return *sphere;
    };
    auto is_ghs = [&] {
        if (!ghs) {
            ghs = is_sphere() && is_generalized_homology_sphere(L, cache);
        }
        return *ghs;
    };
    auto inapplicable = [&](Suite s, ErrorCode code, const std::string& why) {
        if (!is_all) {
            throw Error(code, std::string(to_string(s)) + ": " + why);
        }
        report.skipped.push_back(std::string(to_string(s)) + ": " + why);
    };

    const bool even = L.dimension() % 2 == 0;
    std::set<Suite> done;
    for (Suite s : suites) {
        if (!done.insert(s).second) {
            continue;
        }
        switch (s) {
        case Suite::links:
            report.results.push_back(detail::check_links(L));
            break;
        case Suite::joins:
            report.results.push_back(detail::check_joins(L));
            break;
        case Suite::dehn_sommerville:
            if (!is_ghs()) {
                inapplicable(s, ErrorCode::not_a_sphere, "complex is not a generalized homology sphere");
                break;
            }
            report.results.push_back(detail::check_dehn_sommerville(L));
            break;
        case Suite::gamma:
            if (!is_ghs()) {
                inapplicable(s, ErrorCode::not_a_sphere, "complex is not a generalized homology sphere");
                break;
            }
            report.results.push_back(detail::check_gamma(L));
            break;
        case Suite::theorem:
            if (!even) {
                inapplicable(s, ErrorCode::wrong_parity, "theorem identity needs an even-dimensional sphere");
                break;
            }
            if (!is_ghs()) {
                inapplicable(s, ErrorCode::not_a_sphere, "complex is not a generalized homology sphere");
                break;
            }
            report.results.push_back(detail::check_theorem(L, cache));
            break;
        }
    }

    const bool wants_signs = is_all || done.count(Suite::theorem) > 0;
    if (wants_signs && is_flag(L)) {
        if (!even && is_ghs()) {
            const Rational cd = charney_davis_value(L);
            report.results.push_back({"charney-davis-sign",
                                      cd >= 0 ? Outcome::pass : Outcome::finding,
                                      {{"(-1)^d h(-1)", cd}},
                                      "conjectured nonnegative for flag odd-dimensional spheres"});
        } else if (even && is_ghs()) {
            const TheoremIdentity t = theorem_identity(L, cache);
            report.results.push_back({"theorem-sign",
                                      t.lhs >= 0 ? Outcome::pass : Outcome::finding,
                                      {{"(-1)^d h~(-1)", t.lhs}},
                                      "conjectured nonnegative for flag even-dimensional spheres"});
        }
    }
    return report;
}

}  // namespace cdkit
