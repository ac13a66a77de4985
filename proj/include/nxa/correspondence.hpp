/**
 * @file correspondence.hpp
 * @brief The two correspondences at the heart of the library, as executable,
 *        mutually inverse constructions:
 *
 *  1. triple system with a distinguished tripotent  <->  unital algebra in
 *     the variety with involution: the homotope x . y = x e y with involution
 *     x -> e x e, and its converse x y z = x.(ybar.z) - ybar.(x.z) + (ybar.x).z;
 *
 *  2. balanced triple system with anisotropic base point  <->  quadratic
 *     algebra in the variety: x . y = (1/<e|e>) e x y with norm
 *     N(x) = <x|x>/<e|e>, and its converse
 *     x y z = (xbar.y).z - xbar.(y.z) + y.(xbar.z) with declared form
 *     <x|x> = N(x).
 *
 * Both directions verify their hypotheses before constructing and the
 * guaranteed conclusions after, so every call doubles as a regression check
 * of the construction itself.
 */
#pragma once

#include "nxa/algebra.hpp"
#include "nxa/quadratic.hpp"
#include "nxa/triple.hpp"

#include <stdexcept>

namespace nxa {

/// A unital algebra together with an involution (anti-automorphism of order
/// two fixing the unit).  The constructor verifies all three laws.
struct InvolutiveAlgebra {
    Algebra algebra;
    Mat bar;

    InvolutiveAlgebra() = default;
    InvolutiveAlgebra(Algebra a, Mat b) : algebra(std::move(a)), bar(std::move(b)) {
        if (!algebra.unit()) throw std::invalid_argument("InvolutiveAlgebra: algebra has no unit");
        int n = algebra.dim();
        if (bar.rows() != n || bar.cols() != n) throw std::invalid_argument("InvolutiveAlgebra: bar has wrong shape");
        if (bar * bar != Mat::identity(n))
            throw std::invalid_argument("InvolutiveAlgebra: bar is not an involution (bar^2 != id)");
        if (bar.apply(*algebra.unit()) != *algebra.unit())
            throw std::invalid_argument("InvolutiveAlgebra: bar does not fix the unit");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec lhs = bar.apply(algebra.basis_product(i, j));
                Vec rhs = algebra.multiply(bar.col(j), bar.col(i));
                if (lhs != rhs)
                    throw std::invalid_argument("InvolutiveAlgebra: bar is not an anti-automorphism");
            }
    }
};

/// Homotope algebra of a triple system at a base point e: product
/// x . y = x e y, involution x -> e x e.  The three hypotheses are verified
/// before construction:
///   (i)   e e e = e,
///   (ii)  e e x = x e e for all basis x,
///   (iii) U_e : x -> e x e is surjective.
/// After construction, the guaranteed conclusions are asserted: e is a
/// two-sided unit, U_e is an involution of the product, and the algebra lies
/// in the variety.  A hypothesis failure raises std::invalid_argument naming
/// (i)/(ii)/(iii); a conclusion failure (possible only when the input was not
/// a generalized Jordan triple system) raises std::runtime_error.
inline InvolutiveAlgebra homotope(const TripleSystem& t, const Vec& e) {
    int n = t.dim();
    if (static_cast<int>(e.size()) != n) throw std::invalid_argument("homotope: base point has wrong dimension");

    if (t.triple_product(e, e, e) != e)
        throw std::invalid_argument("homotope: hypothesis (i) fails: e e e != e");
    for (int i = 0; i < n; ++i) {
        Vec ei = unit_vec(n, i);
        if (t.triple_product(e, e, ei) != t.triple_product(ei, e, e))
            throw std::invalid_argument("homotope: hypothesis (ii) fails: e e x != x e e at basis index " +
                                        std::to_string(i));
    }
    Mat u_e(n, n);
    for (int j = 0; j < n; ++j) {
        Vec col = t.triple_product(e, unit_vec(n, j), e);
        for (int r = 0; r < n; ++r) u_e(r, j) = col[static_cast<std::size_t>(r)];
    }
    if (rank_of(u_e) < n)
        throw std::invalid_argument("homotope: hypothesis (iii) fails: U_e is not surjective (rank " +
                                    std::to_string(rank_of(u_e)) + " of " + std::to_string(n) + ")");

    // Conclusion: e is a two-sided unit of x . y = x e y.
    for (int i = 0; i < n; ++i) {
        Vec ei = unit_vec(n, i);
        if (t.triple_product(e, e, ei) != ei || t.triple_product(ei, e, e) != ei)
            throw std::runtime_error(
                "homotope: conclusion fails: e is not a unit of the homotope "
                "(the input is not a generalized Jordan triple system)");
    }

    Tensor3 sc(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec prod = t.triple_product(unit_vec(n, i), e, unit_vec(n, j));
            for (int k = 0; k < n; ++k) sc(i, j, k) = prod[static_cast<std::size_t>(k)];
        }
    InvolutiveAlgebra out(Algebra(std::move(sc), e), std::move(u_e));

    CheckResult v = is_in_variety_v(out.algebra);
    if (!v)
        throw std::runtime_error("homotope: conclusion fails: homotope algebra is not in the variety (" +
                                 v.describe() + ")");
    return out;
}

/// Converse construction: the triple system
/// x y z = x.(ybar.z) - ybar.(x.z) + (ybar.x).z of a unital variety algebra
/// with involution.  Refuses inputs outside the variety; asserts afterwards
/// that the result satisfies the five-term identity and the homotope
/// hypotheses (i)-(iii) at e = unit with U_e = bar.
inline TripleSystem triple_from_involutive(const InvolutiveAlgebra& a) {
    CheckResult v = is_in_variety_v(a.algebra);
    if (!v) throw std::invalid_argument("triple_from_involutive: algebra is not in the variety (" + v.describe() + ")");
    int n = a.algebra.dim();
    Tensor4 tc(n);
    for (int j = 0; j < n; ++j) {
        Vec ybar = a.bar.col(j);
        for (int i = 0; i < n; ++i) {
            Vec x = unit_vec(n, i);
            Vec ybar_x = a.algebra.multiply(ybar, x);
            for (int k = 0; k < n; ++k) {
                Vec z = unit_vec(n, k);
                Vec prod = a.algebra.multiply(x, a.algebra.multiply(ybar, z)) -
                           a.algebra.multiply(ybar, a.algebra.multiply(x, z)) + a.algebra.multiply(ybar_x, z);
                for (int l = 0; l < n; ++l) tc(i, j, k, l) = prod[static_cast<std::size_t>(l)];
            }
        }
    }
    TripleSystem t(std::move(tc));

    CheckResult g = check_gjts(t);
    if (!g)
        throw std::runtime_error("triple_from_involutive: conclusion fails: " + g.describe());
    const Vec& e = *a.algebra.unit();
    if (t.triple_product(e, e, e) != e)
        throw std::runtime_error("triple_from_involutive: conclusion fails: hypothesis (i) at e = unit");
    for (int i = 0; i < n; ++i) {
        Vec ei = unit_vec(n, i);
        if (t.triple_product(e, e, ei) != t.triple_product(ei, e, e))
            throw std::runtime_error("triple_from_involutive: conclusion fails: hypothesis (ii) at e = unit");
        if (t.triple_product(e, ei, e) != a.bar.col(i))
            throw std::runtime_error("triple_from_involutive: conclusion fails: U_e != bar at basis index " +
                                     std::to_string(i));
    }
    return t;
}

/// Quadratic algebra of a balanced triple system at an anisotropic base
/// point: product x . y = (1/<e|e>) e x y on the same ambient space, unit e,
/// norm N(x) = <x|x>/<e|e>.  The balanced laws are verified first (with the
/// form recovered from the tensor); the square law
/// x.x = N(e,x) x - N(x) e (linearized) and variety membership are asserted
/// afterwards, and the quadratic decomposition is returned.
inline QuadraticStructure bfkts_to_quadratic(const TripleSystem& t, const Vec& e) {
    int n = t.dim();
    if (static_cast<int>(e.size()) != n)
        throw std::invalid_argument("bfkts_to_quadratic: base point has wrong dimension");
    BalancedCheck bal = check_balanced(t);
    if (!bal) throw std::invalid_argument("bfkts_to_quadratic: input is not balanced (" + bal.result.describe() + ")");
    const Mat& form = *bal.form;
    Scalar c = eval_form(form, e, e);
    if (c == 0) throw std::invalid_argument("bfkts_to_quadratic: isotropic base point (<e|e> = 0)");

    Tensor3 sc(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec prod = t.triple_product(e, unit_vec(n, i), unit_vec(n, j));
            for (int k = 0; k < n; ++k) sc(i, j, k) = prod[static_cast<std::size_t>(k)] / c;
        }
    Algebra alg(std::move(sc), e);

    // Square law x.x = N(e,x) x - N(x) e, linearized over basis pairs, with
    // N(x) = <x|x>/<e|e> and N(x,y) its polarization 2<x|y>/<e|e>.
    for (int i = 0; i < n; ++i) {
        Vec ei = unit_vec(n, i);
        for (int j = i; j < n; ++j) {
            Vec ej = unit_vec(n, j);
            Vec lhs = alg.basis_product(i, j) + alg.basis_product(j, i);
            Vec rhs = (2 * eval_form(form, e, ei) / c) * ej + (2 * eval_form(form, e, ej) / c) * ei -
                      (2 * eval_form(form, ei, ej) / c) * e;
            if (lhs != rhs)
                throw std::runtime_error("bfkts_to_quadratic: conclusion fails: square law at basis pair (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    CheckResult v = is_in_variety_v(alg);
    if (!v) throw std::runtime_error("bfkts_to_quadratic: conclusion fails: " + v.describe());

    auto q = quadratic_structure(alg);
    if (!q) throw std::runtime_error("bfkts_to_quadratic: conclusion fails: no quadratic decomposition");
    return *q;
}

/// Converse construction: the balanced triple system
/// x y z = (xbar.y).z - xbar.(y.z) + y.(xbar.z) of a quadratic variety
/// algebra with symmetric form, with declared form <x|x> = N(x).  Asserts the
/// five-term identity and the balanced laws on the result.
inline TripleSystem quadratic_to_bfkts(const QuadraticStructure& q) {
    CheckResult v = is_in_variety_v(q.algebra);
    if (!v) throw std::invalid_argument("quadratic_to_bfkts: algebra is not in the variety (" + v.describe() + ")");
    NormTraceInvolution nti = norm_trace_involution(q);  // requires symmetric form
    int n = q.algebra.dim();
    Tensor4 tc(n);
    for (int i = 0; i < n; ++i) {
        Vec xbar = nti.bar.col(i);
        for (int j = 0; j < n; ++j) {
            Vec y = unit_vec(n, j);
            Vec xbar_y = q.algebra.multiply(xbar, y);
            for (int k = 0; k < n; ++k) {
                Vec z = unit_vec(n, k);
                Vec prod = q.algebra.multiply(xbar_y, z) - q.algebra.multiply(xbar, q.algebra.multiply(y, z)) +
                           q.algebra.multiply(y, q.algebra.multiply(xbar, z));
                for (int l = 0; l < n; ++l) tc(i, j, k, l) = prod[static_cast<std::size_t>(l)];
            }
        }
    }
    // Declared form <x|y> = N(x,y)/2 so that <x|x> = N(x).
    Mat gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram(i, j) = nti.norm_polarization(i, j) / 2;
    TripleSystem t(std::move(tc), std::move(gram));

    BalancedCheck bal = check_balanced(t);
    if (!bal) throw std::runtime_error("quadratic_to_bfkts: conclusion fails: " + bal.result.describe());
    return t;
}

}  // namespace nxa
