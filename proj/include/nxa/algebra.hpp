/**
 * @file algebra.hpp
 * @brief Finite-dimensional algebras given by structure constants, their
 *        multiplication operators, and the defining identity checks for
 *        flexible and noncommutative Jordan algebras.
 *
 * An Algebra is a bilinear product on F^n stored as a rank-3 tensor
 * (e_i e_j = sum_k c_{ijk} e_k) over the exact rational field, optionally
 * with a distinguished two-sided unit.  Identities of degree > 1 in any
 * variable are checked through their full linearizations on basis tuples,
 * which is equivalent over a field of characteristic zero and keeps every
 * check exhaustive, exact and witness-producing.
 */
#pragma once

#include "nxa/check.hpp"
#include "nxa/linalg.hpp"
#include "nxa/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace nxa {

/// Finite-dimensional algebra over the rationals, by structure constants.
class Algebra {
  public:
    Algebra() = default;

    /// Builds an algebra; when a unit is supplied it is verified to be a
    /// two-sided unit (throws std::invalid_argument otherwise).
    explicit Algebra(Tensor3 sc, std::optional<Vec> unit = std::nullopt)
        : sc_(std::move(sc)), unit_(std::move(unit)) {
        if (unit_) {
            if (static_cast<int>(unit_->size()) != dim())
                throw std::invalid_argument("Algebra: unit has wrong dimension");
            for (int i = 0; i < dim(); ++i) {
                Vec ei = unit_vec(dim(), i);
                if (multiply(*unit_, ei) != ei || multiply(ei, *unit_) != ei)
                    throw std::invalid_argument("Algebra: declared unit is not a two-sided unit");
            }
        }
    }

    int dim() const { return sc_.dim(); }
    const Tensor3& sc() const { return sc_; }
    const std::optional<Vec>& unit() const { return unit_; }

    /// Product of basis elements e_i e_j as a coordinate vector.
    Vec basis_product(int i, int j) const {
        Vec v(static_cast<std::size_t>(dim()));
        for (int k = 0; k < dim(); ++k) v[static_cast<std::size_t>(k)] = sc_(i, j, k);
        return v;
    }

    /// Bilinear product of coordinate vectors.
    Vec multiply(const Vec& x, const Vec& y) const {
        check_vec(x);
        check_vec(y);
        Vec r(static_cast<std::size_t>(dim()));
        for (int i = 0; i < dim(); ++i) {
            if (x[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < dim(); ++j) {
                if (y[static_cast<std::size_t>(j)] == 0) continue;
                Scalar c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                for (int k = 0; k < dim(); ++k) {
                    if (sc_(i, j, k) == 0) continue;
                    r[static_cast<std::size_t>(k)] += c * sc_(i, j, k);
                }
            }
        }
        return r;
    }

    /// Left multiplication operator L_x : y -> x y.
    Mat left_mult(const Vec& x) const {
        check_vec(x);
        Mat m(dim(), dim());
        for (int i = 0; i < dim(); ++i) {
            if (x[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < dim(); ++j)
                for (int k = 0; k < dim(); ++k)
                    if (sc_(i, j, k) != 0) m(k, j) += x[static_cast<std::size_t>(i)] * sc_(i, j, k);
        }
        return m;
    }

    /// Right multiplication operator R_x : y -> y x.
    Mat right_mult(const Vec& x) const {
        check_vec(x);
        Mat m(dim(), dim());
        for (int i = 0; i < dim(); ++i) {
            if (x[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < dim(); ++j)
                for (int k = 0; k < dim(); ++k)
                    if (sc_(j, i, k) != 0) m(k, j) += x[static_cast<std::size_t>(i)] * sc_(j, i, k);
        }
        return m;
    }

    /// Associator (x, y, z) = (xy)z - x(yz).
    Vec associator(const Vec& x, const Vec& y, const Vec& z) const {
        return multiply(multiply(x, y), z) - multiply(x, multiply(y, z));
    }

    /// Commutator [x, y] = xy - yx.
    Vec bracket(const Vec& x, const Vec& y) const { return multiply(x, y) - multiply(y, x); }

    /// Jordan product x o y = xy + yx.
    Vec circ(const Vec& x, const Vec& y) const { return multiply(x, y) + multiply(y, x); }

  private:
    void check_vec(const Vec& v) const {
        if (static_cast<int>(v.size()) != dim()) throw std::invalid_argument("Algebra: vector has wrong dimension");
    }
    Tensor3 sc_;
    std::optional<Vec> unit_;
};

// ---------------------------------------------------------------------------
// Inner derivation-candidate operator
// ---------------------------------------------------------------------------

/// The operator D_{x,y} = L_{[x,y]} - [L_x, L_y].  For flexible algebras this
/// coincides with z -> (x,y,z) - (y,x,z), with z -> (z,x,y) - (z,y,x), and
/// with -R_{[x,y]} - [R_x, R_y].
inline Mat d_operator(const Algebra& a, const Vec& x, const Vec& y) {
    return a.left_mult(a.bracket(x, y)) - commutator(a.left_mult(x), a.left_mult(y));
}

// ---------------------------------------------------------------------------
// Identity checks (exhaustive on basis tuples, exact)
// ---------------------------------------------------------------------------

/// Flexible law (x, y, x) = 0, checked through its linearization
/// (x, y, z) + (z, y, x) = 0 on all basis triples.
inline CheckResult is_flexible(const Algebra& a) {
    int n = a.dim();
    for (int i = 0; i < n; ++i) {
        Vec ei = unit_vec(n, i);
        for (int j = 0; j < n; ++j) {
            Vec ej = unit_vec(n, j);
            for (int k = i; k < n; ++k) {  // expression is symmetric in (x, z)
                Vec ek = unit_vec(n, k);
                if (!is_zero(a.associator(ei, ej, ek) + a.associator(ek, ej, ei)))
                    return CheckResult::fail("flexible law (x,y,z)+(z,y,x) = 0", {i, j, k});
            }
        }
    }
    return CheckResult::pass("flexible law");
}

/// Noncommutative Jordan: flexible and [L_x, L_{x^2}] = 0, the latter checked
/// through its full linearization
/// [L_x, L_{y o z}] + [L_y, L_{z o x}] + [L_z, L_{x o y}] = 0 on basis triples.
inline CheckResult is_noncommutative_jordan(const Algebra& a) {
    CheckResult flex = is_flexible(a);
    if (!flex) return flex;
    int n = a.dim();
    std::vector<Mat> lops;
    lops.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) lops.push_back(a.left_mult(unit_vec(n, i)));
    for (int i = 0; i < n; ++i) {
        Vec ei = unit_vec(n, i);
        for (int j = i; j < n; ++j) {  // expression is fully symmetric in (x, y, z)
            Vec ej = unit_vec(n, j);
            for (int k = j; k < n; ++k) {
                Vec ek = unit_vec(n, k);
                Mat s = commutator(lops[static_cast<std::size_t>(i)], a.left_mult(a.circ(ej, ek))) +
                        commutator(lops[static_cast<std::size_t>(j)], a.left_mult(a.circ(ek, ei))) +
                        commutator(lops[static_cast<std::size_t>(k)], a.left_mult(a.circ(ei, ej)));
                if (!s.is_zero())
                    return CheckResult::fail("Jordan operator law [L_x,L_{y o z}] + cyclic = 0", {i, j, k});
            }
        }
    }
    return CheckResult::pass("noncommutative Jordan laws");
}

/// Leibniz test: is the matrix D a derivation of the algebra?
inline CheckResult is_derivation(const Algebra& a, const Mat& d, std::vector<int> tag = {}) {
    int n = a.dim();
    for (int u = 0; u < n; ++u) {
        Vec du = d.col(u);
        Vec eu = unit_vec(n, u);
        for (int v = 0; v < n; ++v) {
            Vec dv = d.col(v);
            Vec ev = unit_vec(n, v);
            Vec lhs = d.apply(a.basis_product(u, v));
            Vec rhs = a.multiply(du, ev) + a.multiply(eu, dv);
            if (lhs != rhs) {
                std::vector<int> w = tag;
                w.push_back(u);
                w.push_back(v);
                return CheckResult::fail("derivation Leibniz law", std::move(w));
            }
        }
    }
    return CheckResult::pass("derivation Leibniz law");
}

/// Membership in the variety of flexible noncommutative Jordan algebras whose
/// operators D_{x,y} are all derivations.  Witness layout for the derivation
/// part: (i, j, u, v) with D = D_{e_i, e_j} failing Leibniz on (e_u, e_v).
inline CheckResult is_in_variety_v(const Algebra& a) {
    CheckResult ncj = is_noncommutative_jordan(a);
    if (!ncj) return ncj;
    int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {  // D is alternating: D_{x,x} = 0
            Mat d = d_operator(a, unit_vec(n, i), unit_vec(n, j));
            CheckResult der = is_derivation(a, d, {i, j});
            if (!der) {
                der.check = "variety law: D_{x,y} is a derivation";
                return der;
            }
        }
    return CheckResult::pass("variety membership (flexible, Jordan, derivation laws)");
}

/// Cyclic derivation law D_{x y, z} + D_{y z, x} + D_{z x, y} = 0 on basis
/// triples (a consequence of the variety laws; exposed for cross-validation).
inline CheckResult check_cyclic_identity(const Algebra& a) {
    int n = a.dim();
    std::vector<Vec> basis;
    for (int i = 0; i < n; ++i) basis.push_back(unit_vec(n, i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Mat s = d_operator(a, a.basis_product(i, j), basis[static_cast<std::size_t>(k)]) +
                        d_operator(a, a.basis_product(j, k), basis[static_cast<std::size_t>(i)]) +
                        d_operator(a, a.basis_product(k, i), basis[static_cast<std::size_t>(j)]);
                if (!s.is_zero()) return CheckResult::fail("cyclic law D_{xy,z} + D_{yz,x} + D_{zx,y} = 0", {i, j, k});
            }
    return CheckResult::pass("cyclic law D_{xy,z} + D_{yz,x} + D_{zx,y} = 0");
}

/// Commutativity on basis pairs.
inline CheckResult is_commutative(const Algebra& a) {
    int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.basis_product(i, j) != a.basis_product(j, i))
                return CheckResult::fail("commutative law", {i, j});
    return CheckResult::pass("commutative law");
}

/// Associativity on basis triples.
inline CheckResult is_associative(const Algebra& a) {
    int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!is_zero(a.associator(unit_vec(n, i), unit_vec(n, j), unit_vec(n, k))))
                    return CheckResult::fail("associative law", {i, j, k});
    return CheckResult::pass("associative law");
}

/// Verifies that an explicit invertible linear map phi : a -> b is an algebra
/// isomorphism, i.e. phi(x y) = phi(x) phi(y) on all basis pairs.  The map
/// must be square and invertible (a singular phi is rejected up front); a
/// failed product law is reported with the offending basis pair.
inline CheckResult verify_isomorphism(const Algebra& a, const Algebra& b, const Mat& phi) {
    int n = a.dim();
    if (b.dim() != n) throw std::invalid_argument("verify_isomorphism: algebras have different dimensions");
    if (phi.rows() != n || phi.cols() != n) throw std::invalid_argument("verify_isomorphism: phi has wrong shape");
    if (rank_of(phi) != n) throw std::invalid_argument("verify_isomorphism: phi is singular");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (phi.apply(a.basis_product(i, j)) != b.multiply(phi.col(i), phi.col(j)))
                return CheckResult::fail("isomorphism law phi(x y) = phi(x) phi(y)", {i, j});
    return CheckResult::pass("isomorphism law phi(x y) = phi(x) phi(y)");
}

}  // namespace nxa
