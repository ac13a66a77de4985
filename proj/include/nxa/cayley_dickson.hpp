/**
 * @file cayley_dickson.hpp
 * @brief Composition algebras: Cayley-Dickson doubling, the 2x2 matrix model
 *        of split quaternions, norms, traces and standard conjugation.
 *
 * A CompositionAlgebra couples a unital algebra with the polarization B of
 * its multiplicative norm (N(x) = B(x,x)/2, N(x y) = N(x) N(y)); the
 * composition law is verified exhaustively through its full linearization on
 * basis 4-tuples at construction time.  The doubling step is
 * (a,b)(c,d) = (a c + gamma conj(d) b, d a + b conj(c)) with
 * N((a,b)) = N(a) - gamma N(b).
 */
#pragma once

#include "nxa/algebra.hpp"
#include "nxa/check.hpp"
#include "nxa/quadratic.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nxa {

/// Unital algebra with a multiplicative norm, given by its polarization gram.
struct CompositionAlgebra {
    Algebra algebra;                     ///< unital
    Mat norm;                            ///< polarized norm B: N(x) = B(x,x)/2
    std::vector<Scalar> doubling_params; ///< doubling parameters (empty for named models)
    Mat conj;                            ///< standard conjugation x -> t(x)1 - x
    Vec trace_functional;                ///< t(x) = B(x, 1)
};

/// Full linearization of the composition law N(x y) = N(x) N(y):
/// B(x1 y1, x2 y2) + B(x1 y2, x2 y1) = B(x1, x2) B(y1, y2)
/// on all basis 4-tuples (x1, x2, y1, y2).
inline CheckResult check_composition(const Algebra& a, const Mat& polarized_norm) {
    int n = a.dim();
    if (polarized_norm.rows() != n || polarized_norm.cols() != n)
        throw std::invalid_argument("check_composition: norm gram has wrong shape");
    if (!is_symmetric(polarized_norm))
        throw std::invalid_argument("check_composition: polarized norm must be symmetric");
    // Precompute B applied to every basis product.
    std::vector<Vec> bprod(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            bprod[static_cast<std::size_t>(i * n + j)] = polarized_norm.apply(a.basis_product(i, j));
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = x1; x2 < n; ++x2)  // the identity is symmetric under swapping (x1,y1)<->(x2,y2)
            for (int y1 = 0; y1 < n; ++y1)
                for (int y2 = 0; y2 < n; ++y2) {
                    Scalar lhs = dot(a.basis_product(x1, y1), bprod[static_cast<std::size_t>(x2 * n + y2)]) +
                                 dot(a.basis_product(x1, y2), bprod[static_cast<std::size_t>(x2 * n + y1)]);
                    Scalar rhs = polarized_norm(x1, x2) * polarized_norm(y1, y2);
                    if (lhs != rhs) return CheckResult::fail("composition law (linearized)", {x1, x2, y1, y2});
                }
    return CheckResult::pass("composition law (linearized)");
}

namespace detail {
/// Finalize a composition algebra: derive trace and conjugation from the
/// polarized norm, then assert the composition law.
inline CompositionAlgebra make_composition(Algebra alg, Mat polarized_norm, std::vector<Scalar> params) {
    if (!alg.unit()) throw std::invalid_argument("CompositionAlgebra: algebra has no unit");
    CompositionAlgebra ca;
    ca.trace_functional = polarized_norm.apply(*alg.unit());
    int n = alg.dim();
    Mat conj(n, n);
    const Vec& u = *alg.unit();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            conj(r, c) = u[static_cast<std::size_t>(r)] * ca.trace_functional[static_cast<std::size_t>(c)];
    ca.conj = conj - Mat::identity(n);
    CheckResult comp = check_composition(alg, polarized_norm);
    if (!comp) throw std::runtime_error("CompositionAlgebra: " + comp.describe());
    ca.algebra = std::move(alg);
    ca.norm = std::move(polarized_norm);
    ca.doubling_params = std::move(params);
    return ca;
}
}  // namespace detail

/// Composition algebra of dimension 2^len from the doubling process,
/// len = params.size() in 1..3, all parameters nonzero.
inline CompositionAlgebra cayley_dickson(const std::vector<Scalar>& params) {
    if (params.empty() || params.size() > 3)
        throw std::invalid_argument("cayley_dickson: need between 1 and 3 parameters");
    for (const auto& g : params)
        if (g == 0) throw std::invalid_argument("cayley_dickson: zero doubling parameter");

    // Base: the ground field, N(x) = x^2.
    int d = 1;
    Tensor3 sc(1);
    sc(0, 0, 0) = 1;
    Mat b(1, 1);
    b(0, 0) = 2;
    Mat conj = Mat::identity(1);

    for (const Scalar& gamma : params) {
        int d2 = 2 * d;
        Tensor3 sc2(d2);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Vec cj = conj.col(j);
                for (int k = 0; k < d; ++k) {
                    // (e_i, 0)(e_j, 0) = (e_i e_j, 0)
                    sc2(i, j, k) = sc(i, j, k);
                    // (e_i, 0)(0, e_j) = (0, e_j e_i)
                    sc2(i, d + j, d + k) = sc(j, i, k);
                }
                for (int m = 0; m < d; ++m) {
                    if (cj[static_cast<std::size_t>(m)] == 0) continue;
                    for (int k = 0; k < d; ++k) {
                        // (0, e_i)(e_j, 0) = (0, e_i conj(e_j))
                        if (sc(i, m, k) != 0)
                            sc2(d + i, j, d + k) += cj[static_cast<std::size_t>(m)] * sc(i, m, k);
                        // (0, e_i)(0, e_j) = (gamma conj(e_j) e_i, 0)
                        if (sc(m, i, k) != 0)
                            sc2(d + i, d + j, k) += gamma * cj[static_cast<std::size_t>(m)] * sc(m, i, k);
                    }
                }
            }

        Mat b2(d2, d2);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                b2(i, j) = b(i, j);
                b2(d + i, d + j) = -gamma * b(i, j);
            }
        Mat conj2(d2, d2);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) conj2(i, j) = conj(i, j);
        for (int i = 0; i < d; ++i) conj2(d + i, d + i) = -1;

        sc = std::move(sc2);
        b = std::move(b2);
        conj = std::move(conj2);
        d = d2;
    }

    Algebra alg(std::move(sc), unit_vec(d, 0));
    return detail::make_composition(std::move(alg), std::move(b), params);
}

/// Split quaternions in the 2x2 matrix model: basis (E11, E12, E21, E22),
/// norm = determinant, conjugation A -> tr(A) I - A.
inline CompositionAlgebra split_quaternion_matrix() {
    // Matrix units: E_{pq} E_{rs} = delta_{qr} E_{ps}; basis index a = 2p + q.
    Tensor3 sc(4);
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            for (int s = 0; s < 2; ++s) sc(2 * p + q, 2 * q + s, 2 * p + s) = 1;
    Vec unit(4);
    unit[0] = 1;  // E11
    unit[3] = 1;  // E22
    // det(a E11 + b E12 + c E21 + d E22) = a d - b c, polarized.
    Mat b(4, 4);
    b(0, 3) = 1;
    b(3, 0) = 1;
    b(1, 2) = -1;
    b(2, 1) = -1;
    Algebra alg(std::move(sc), std::move(unit));
    return detail::make_composition(std::move(alg), std::move(b), {});
}

/// N(x) = B(x,x)/2.
inline Scalar ca_norm(const CompositionAlgebra& c, const Vec& x) { return eval_form(c.norm, x, x) / 2; }

/// Polarized norm N(x,y) = B(x,y).
inline Scalar ca_norm_pol(const CompositionAlgebra& c, const Vec& x, const Vec& y) {
    return eval_form(c.norm, x, y);
}

/// t(x) = N(x, 1).
inline Scalar ca_trace(const CompositionAlgebra& c, const Vec& x) { return dot(c.trace_functional, x); }

/// conj(x) = t(x) 1 - x.
inline Vec ca_conj(const CompositionAlgebra& c, const Vec& x) { return c.conj.apply(x); }

}  // namespace nxa
