/**
 * @file quadratic.hpp
 * @brief Quadratic algebras F1 + V with product u v = -(u|v)1 + u x v,
 *        their extraction from arbitrary unital algebras, norm / trace /
 *        standard involution, form scaling and scalar mutations.
 *
 * A quadratic structure on a unital algebra A is a decomposition
 * A = F1 + V where every element satisfies x^2 in F1 + Fx; equivalently
 * (basis squares condition plus linearization) the product of vector-part
 * elements is u v = -(u|v)1 + u x v with a bilinear form (.|.) and an
 * anticommutative bilinear cross map x on V.  The extraction is a
 * deterministic linear-algebra procedure: the unit is completed greedily to
 * an adapted basis, the trace and norm coefficients of each adapted basis
 * element are solved from its square, and V is the trace-kernel complement.
 */
#pragma once

#include "nxa/algebra.hpp"

#include <optional>
#include <stdexcept>

namespace nxa {

/// Evaluation x^T gram y of a bilinear form given by its Gram matrix.
inline Scalar eval_form(const Mat& gram, const Vec& x, const Vec& y) {
    return dot(x, gram.apply(y));
}

inline bool is_symmetric(const Mat& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

/// A unital algebra together with its decomposition F1 + V, the bilinear
/// form and the anticommutative cross map on V (coordinates of V given in
/// the ambient basis).
struct QuadraticStructure {
    Algebra algebra;          ///< ambient algebra, unit present
    std::vector<Vec> vbasis;  ///< basis of V in ambient coordinates
    Mat form;                 ///< (v_i | v_j), m x m, not necessarily symmetric
    Tensor3 cross;            ///< v_i x v_j in V coordinates, anticommutative
    Mat from_adapted;         ///< P: adapted coords (1, v_1, ..) -> ambient
    Mat to_adapted;           ///< P^{-1}

    int vdim() const { return static_cast<int>(vbasis.size()); }
};

/// Builds the algebra F1 + V directly from (form, cross) in the adapted
/// basis e_0 = 1, e_{i+1} = v_i.
inline Algebra make_quadratic_algebra(const Mat& form, const Tensor3& cross) {
    int m = form.rows();
    if (form.cols() != m || cross.dim() != m)
        throw std::invalid_argument("make_quadratic_algebra: form/cross dimension mismatch");
    int n = m + 1;
    Tensor3 sc(n);
    for (int j = 0; j < n; ++j) {
        sc(0, j, j) = 1;  // 1 * e_j
        sc(j, 0, j) = 1;  // e_j * 1
    }
    sc(0, 0, 0) = 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            sc(i + 1, j + 1, 0) = -form(i, j);
            for (int k = 0; k < m; ++k) sc(i + 1, j + 1, k + 1) += cross(i, j, k);
        }
    return Algebra(std::move(sc), unit_vec(n, 0));
}

/// Extracts the quadratic decomposition of a unital algebra, or nullopt when
/// the algebra is not of quadratic form (some square leaves span{1, x}, or
/// the symmetrized vector product leaves F1).  Throws std::invalid_argument
/// when the algebra has no declared unit.
inline std::optional<QuadraticStructure> quadratic_structure(const Algebra& a) {
    if (!a.unit()) throw std::invalid_argument("quadratic_structure: algebra has no unit");
    int n = a.dim();
    const Vec u = *a.unit();

    // Greedy adapted basis: the unit first, then standard basis vectors that
    // enlarge the span (replacing anything inside F1 by later complements).
    SpanBuilder sb(n);
    sb.add(u);
    std::vector<Vec> cbasis;  // adapted complement candidates, ambient coords
    for (int i = 0; i < n && sb.rank() < n; ++i) {
        Vec ei = unit_vec(n, i);
        if (sb.add(ei)) cbasis.push_back(ei);
    }

    // Solve c^2 = t c - n 1 for each adapted complement element; the trace
    // zero part v = c - (t/2) 1 then squares into F1.
    int m = static_cast<int>(cbasis.size());
    std::vector<Vec> vbasis;
    for (const auto& c : cbasis) {
        Vec c2 = a.multiply(c, c);
        Mat sys(n, 2);
        for (int r = 0; r < n; ++r) {
            sys(r, 0) = c[static_cast<std::size_t>(r)];
            sys(r, 1) = u[static_cast<std::size_t>(r)];
        }
        auto tn = solve(sys, c2);
        if (!tn) return std::nullopt;  // square escapes span{1, c}
        const Scalar& t = (*tn)[0];
        vbasis.push_back(c - (t / 2) * u);
    }

    // Change of basis between ambient and adapted (1, v_1, ..., v_m).
    Mat p(n, n);
    for (int r = 0; r < n; ++r) p(r, 0) = u[static_cast<std::size_t>(r)];
    for (int j = 0; j < m; ++j)
        for (int r = 0; r < n; ++r) p(r, j + 1) = vbasis[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
    auto pinv = inverse(p);
    if (!pinv) throw std::runtime_error("quadratic_structure: adapted basis is singular");

    // Read the form and the cross map off the products v_i v_j.
    Mat form(m, m);
    Tensor3 cross(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Vec prod = pinv->apply(a.multiply(vbasis[static_cast<std::size_t>(i)], vbasis[static_cast<std::size_t>(j)]));
            form(i, j) = -prod[0];
            for (int k = 0; k < m; ++k) cross(i, j, k) = prod[static_cast<std::size_t>(k) + 1];
        }

    // The cross map must be anticommutative (this is exactly the linearized
    // condition that (x+y)^2 stays in span{1, x+y}).
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            for (int k = 0; k < m; ++k)
                if (cross(i, j, k) != -cross(j, i, k)) return std::nullopt;

    QuadraticStructure q;
    q.algebra = a;
    q.vbasis = std::move(vbasis);
    q.form = std::move(form);
    q.cross = std::move(cross);
    q.from_adapted = std::move(p);
    q.to_adapted = std::move(*pinv);
    return q;
}

/// Rebuilds the ambient structure constants from (V, form, cross); equals the
/// original algebra exactly (tested invariant).
inline Algebra rebuild_quadratic(const QuadraticStructure& q, const Mat& form, const Tensor3& cross) {
    Algebra adapted = make_quadratic_algebra(form, cross);
    int n = q.algebra.dim();
    Tensor3 sc(n);
    for (int i = 0; i < n; ++i) {
        Vec ai = q.to_adapted.apply(unit_vec(n, i));
        for (int j = 0; j < n; ++j) {
            Vec aj = q.to_adapted.apply(unit_vec(n, j));
            Vec prod = q.from_adapted.apply(adapted.multiply(ai, aj));
            for (int k = 0; k < n; ++k) sc(i, j, k) = prod[static_cast<std::size_t>(k)];
        }
    }
    return Algebra(std::move(sc), *q.algebra.unit());
}

inline Algebra rebuild_quadratic(const QuadraticStructure& q) { return rebuild_quadratic(q, q.form, q.cross); }

/// Norm, trace and standard involution of a quadratic algebra with symmetric
/// form.  The norm is returned through its polarization gram matrix B
/// (B(x,y) = N(x+y) - N(x) - N(y)), so N(x) = x^T B x / 2 and the trace
/// functional is tau = B * unit.
struct NormTraceInvolution {
    Mat norm_polarization;  ///< ambient n x n symmetric gram of N(x,y)
    Vec trace;              ///< ambient functional, T(x) = dot(trace, x)
    Mat bar;                ///< ambient matrix of the standard involution
};

inline NormTraceInvolution norm_trace_involution(const QuadraticStructure& q) {
    if (!is_symmetric(q.form))
        throw std::invalid_argument("norm_trace_involution: no standard involution (form is not symmetric)");
    int n = q.algebra.dim();
    int m = q.vdim();
    Mat b_ad(n, n);
    b_ad(0, 0) = 2;  // N(alpha 1 + u) = alpha^2 + (u|u), polarized
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b_ad(i + 1, j + 1) = q.form(i, j) + q.form(j, i);
    NormTraceInvolution nti;
    nti.norm_polarization = q.to_adapted.transpose() * b_ad * q.to_adapted;
    nti.trace = nti.norm_polarization.apply(*q.algebra.unit());
    // bar(x) = T(x) 1 - x
    Mat bar(n, n);
    const Vec& u = *q.algebra.unit();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) bar(r, c) = u[static_cast<std::size_t>(r)] * nti.trace[static_cast<std::size_t>(c)];
    nti.bar = bar - Mat::identity(n);
    return nti;
}

/// N(x) evaluated from the polarization (exact: division by 2 is exact here).
inline Scalar norm_value(const NormTraceInvolution& nti, const Vec& x) {
    return eval_form(nti.norm_polarization, x, x) / 2;
}

/// The algebra Q(V, mu (.|.), x): same cross map, form scaled by mu != 0,
/// expressed on the same ambient basis.
inline Algebra scale_form(const QuadraticStructure& q, const Scalar& mu) {
    if (mu == 0) throw std::invalid_argument("scale_form: mu must be nonzero");
    return rebuild_quadratic(q, mu * q.form, q.cross);
}

/// Scalar mutation A^(alpha): x * y = alpha x y + (1 - alpha) y x.
inline Algebra scalar_mutation(const Algebra& a, const Scalar& alpha) {
    int n = a.dim();
    Tensor3 sc(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) sc(i, j, k) = alpha * a.sc()(i, j, k) + (1 - alpha) * a.sc()(j, i, k);
    return Algebra(std::move(sc), a.unit());
}

}  // namespace nxa
