/**
 * h-, h-tilde- and gamma-polynomials of simplicial complexes, and the
 * identities relating them to face numbers, links and joins.
 *
 * Conventions. With m = dim(L) + 1 and f_{-1} = 1,
 *
 *     f(t) = sum_{i=0}^{m} f_{i-1} t^i
 *     h(t) = sum_{i=0}^{m} f_{i-1} t^i (1-t)^{m-i},
 *
 * equivalently t^m f(1/t) = (1+t)^m h(1/(1+t)), and h(-1) = 2^m f(-1/2).
 * For an even-dimensional sphere (m = 2d+1) with f(-1/2) = 0 one gets
 * h~(-1) = h'(-1) = 2^(m-2) f'(-1/2), and summing over vertex links
 * (each of rank m-1) gives
 *
 *     (-1)^d h~(-1) = 1/2 * sum_v (-1)^d h_{Lk v}(-1).
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cdkit/complex.hpp"
#include "cdkit/error.hpp"
#include "cdkit/homology.hpp"
#include "cdkit/polynomial.hpp"

namespace cdkit {

/// Scale on the vertex-link sum in theorem_identity under the h-convention above.
inline const Rational& theorem_link_scale()
{
    static const Rational scale(1, 2);
    return scale;
}

namespace detail {
inline IntPolynomial h_from_faces(const SimplicialComplex& L)
{
    const auto m = static_cast<std::size_t>(L.dimension() + 1);
    const IntPolynomial f = face_polynomial(L);
    const IntPolynomial one_minus_t{1, -1};
    std::vector<IntPolynomial> powers{IntPolynomial{1}};
    for (std::size_t k = 1; k <= m; ++k) {
        powers.push_back(powers.back() * one_minus_t);
    }
    IntPolynomial h;
    for (std::size_t i = 0; i <= m; ++i) {
        h = h + IntPolynomial::monomial(f.coeff(i), i) * powers[m - i];
    }
    return h;
}

inline Integer sign(int exponent) { return exponent % 2 == 0 ? Integer(1) : Integer(-1); }
}  // namespace detail

inline IntPolynomial h_polynomial(const SimplicialComplex& L)
{
    detail::require_nonempty(L, "h_polynomial");
    return detail::h_from_faces(L);
}

/// h / (1+t) for an even-dimensional sphere.
inline IntPolynomial h_tilde(const SimplicialComplex& L)
{
    detail::require_nonempty(L, "h_tilde");
    if (L.dimension() % 2 != 0) {
        throw Error(ErrorCode::wrong_parity,
                    "h_tilde needs an even-dimensional complex, got dimension " + std::to_string(L.dimension()));
    }
    return divide_exact_by_one_plus_t(h_polynomial(L));
}

/// (-1)^d h(-1) for a (2d-1)-dimensional sphere.
inline Rational charney_davis_value(const SimplicialComplex& L)
{
    detail::require_nonempty(L, "charney_davis_value");
    if (L.dimension() % 2 == 0) {
        throw Error(ErrorCode::wrong_parity, "charney_davis_value needs an odd-dimensional complex, got dimension " +
                                                 std::to_string(L.dimension()));
    }
    const int d = (L.dimension() + 1) / 2;
    return Rational(detail::sign(d)) * eval_rational(h_polynomial(L), Rational(-1));
}

struct TheoremIdentity {
    Rational lhs;  ///< (-1)^d h~_L(-1)
    Rational rhs;  ///< theorem_link_scale() * sum_v (-1)^d h_{Lk v}(-1)
    bool equal = false;
};

/// Both sides of the even-dimensional identity; L must be a generalized homology 2d-sphere.
inline TheoremIdentity theorem_identity(const SimplicialComplex& L, SphereCache& cache)
{
    detail::require_nonempty(L, "theorem_identity");
    if (L.dimension() % 2 != 0) {
        throw Error(ErrorCode::wrong_parity,
                    "theorem_identity needs an even-dimensional sphere, got dimension " + std::to_string(L.dimension()));
    }
    if (!is_generalized_homology_sphere(L, cache)) {
        throw Error(ErrorCode::not_a_sphere, "complex is not a generalized homology sphere");
    }
    const int d = L.dimension() / 2;
    const Rational sgn(detail::sign(d));
    TheoremIdentity out;
    out.lhs = sgn * eval_rational(h_tilde(L), Rational(-1));
    Rational sum = 0;
    for (Vertex v = 0; v < L.vertex_count(); ++v) {
        sum += sgn * eval_rational(detail::h_from_faces(link(L, v).complex), Rational(-1));
    }
    out.rhs = theorem_link_scale() * sum;
    out.equal = out.lhs == out.rhs;
    return out;
}

inline TheoremIdentity theorem_identity(const SimplicialComplex& L)
{
    SphereCache cache;
    return theorem_identity(L, cache);
}

/// sum_v f_{Lk v}(t) == f'(t); holds for every complex.
inline bool link_derivative_identity(const SimplicialComplex& L)
{
    IntPolynomial sum;
    for (Vertex v = 0; v < L.vertex_count(); ++v) {
        sum = sum + detail::face_polynomial(link(L, v).complex);
    }
    return sum == derivative(detail::face_polynomial(L));
}

struct DehnSommervilleWitness {
    bool palindromic = false;
    bool vanishing_expected = false;  ///< m odd
    Rational f_at_minus_half;
    Rational h_at_minus_one;
    Integer two_to_m;

    /// f(-1/2) = h(-1) / 2^m, which holds for every complex under this convention.
    bool normalization_consistent() const { return f_at_minus_half * Rational(two_to_m) == h_at_minus_one; }

    bool holds() const { return palindromic && (!vanishing_expected || f_at_minus_half == 0); }
};

inline DehnSommervilleWitness dehn_sommerville_witness(const SimplicialComplex& L)
{
    detail::require_nonempty(L, "dehn_sommerville_check");
    const auto m = static_cast<std::size_t>(L.dimension() + 1);
    const IntPolynomial h = h_polynomial(L);
    DehnSommervilleWitness w;
    w.palindromic = is_palindromic(h, m);
    w.vanishing_expected = m % 2 == 1;
    w.f_at_minus_half = eval_rational(f_polynomial(L), Rational(-1, 2));
    w.h_at_minus_one = eval_rational(h, Rational(-1));
    w.two_to_m = Integer(1) << m;
    return w;
}

/// h_i = h_{m-i} for all i, plus f(-1/2) = 0 when m is odd.
inline bool dehn_sommerville_check(const SimplicialComplex& L) { return dehn_sommerville_witness(L).holds(); }

/// f(-1/2); see dehn_sommerville_witness for the relation to h(-1).
inline Rational orbifold_euler(const SimplicialComplex& L)
{
    detail::require_nonempty(L, "orbifold_euler");
    return eval_rational(f_polynomial(L), Rational(-1, 2));
}

inline bool join_multiplicativity_check(const SimplicialComplex& K, const SimplicialComplex& L)
{
    const SimplicialComplex J = join(K, L);
    return h_polynomial(J) == h_polynomial(K) * h_polynomial(L) &&
           f_polynomial(J) == f_polynomial(K) * f_polynomial(L);
}

inline GammaVector gamma_vector(const SimplicialComplex& L)
{
    return gamma_expand(h_polynomial(L), static_cast<std::size_t>(L.dimension() + 1));
}

/// Everything computable about one complex; parity-dependent fields are absent rather than defaulted.
struct SphereInvariants {
    int dim = -1;
    std::size_t m = 0;
    std::size_t vertex_count = 0;
    FVector f_vector;
    IntPolynomial f_poly;
    IntPolynomial h_poly;
    bool flag = false;
    HomologyProfile homology;
    bool homology_sphere = false;
    bool generalized_homology_sphere = false;
    Rational orbifold_euler;
    Rational h_at_minus_one;
    std::optional<IntPolynomial> h_tilde;  ///< even dimension and h(-1) = 0
    std::optional<GammaVector> gamma;      ///< whenever h is palindromic
    std::optional<Rational> cd_value;      ///< odd-dimensional homology spheres
    std::optional<TheoremIdentity> theorem;  ///< even-dimensional generalized homology spheres
};

inline SphereInvariants analyze(const SimplicialComplex& L, SphereCache& cache)
{
    detail::require_nonempty(L, "analyze");
    SphereInvariants out;
    out.dim = L.dimension();
    out.m = static_cast<std::size_t>(out.dim + 1);
    out.vertex_count = L.vertex_count();
    out.f_vector = f_vector(L);
    out.f_poly = f_polynomial(L);
    out.h_poly = h_polynomial(L);
    out.flag = is_flag(L);
    out.homology = reduced_homology(L);
    out.homology_sphere = is_homology_sphere(L);
    out.generalized_homology_sphere = out.homology_sphere && is_generalized_homology_sphere(L, cache);
    out.orbifold_euler = orbifold_euler(L);
    out.h_at_minus_one = eval_rational(out.h_poly, Rational(-1));
    if (is_palindromic(out.h_poly, out.m)) {
        out.gamma = gamma_expand(out.h_poly, out.m);
    }
    // A homology sphere that is not a manifold (octahedron plus a pendant edge) can have h(-1) != 0.
    if (out.dim % 2 == 0 && out.h_at_minus_one == 0) {
        out.h_tilde = divide_exact_by_one_plus_t(out.h_poly);
    }
    if (out.dim % 2 == 1 && out.homology_sphere) {
        out.cd_value = charney_davis_value(L);
    }
    if (out.generalized_homology_sphere && out.dim % 2 == 0) {
        out.theorem = theorem_identity(L, cache);
    }
    return out;
}

inline SphereInvariants analyze(const SimplicialComplex& L)
{
    SphereCache cache;
    return analyze(L, cache);
}

}  // namespace cdkit
