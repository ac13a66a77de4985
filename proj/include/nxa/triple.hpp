/**
 * @file triple.hpp
 * @brief Triple systems via rank-4 structure constants, the slot operators
 *        l and k, and the generalized-Jordan / Freudenthal-Kantor / balanced
 *        axiom checks.
 *
 * A TripleSystem stores a trilinear product e_i e_j e_k = sum_l t_{ijkl} e_l
 * and, optionally, the symmetric bilinear form of a balanced system.  The
 * defining five-term identity is checked by default through its equivalent
 * operator form [l_{u,v}, l_{x,y}] = l_{l_{u,v}x, y} - l_{x, l_{v,u}y} on
 * basis 4-tuples; a direct 5-tuple evaluator exists for cross-validation.
 * The balanced check recovers the form from the tensor itself (the trace of
 * y -> x y x equals n <x|x> in a balanced system, which forces the
 * normalization) and cross-checks any declared form against it.
 */
#pragma once

#include "nxa/check.hpp"
#include "nxa/linalg.hpp"
#include "nxa/tensor.hpp"

#include <optional>
#include <stdexcept>

namespace nxa {

/// Finite-dimensional triple system over the rationals, by structure constants.
class TripleSystem {
  public:
    TripleSystem() = default;

    /// Builds a triple system; a declared balanced form must be symmetric and
    /// nonzero (throws std::invalid_argument otherwise).
    explicit TripleSystem(Tensor4 tc, std::optional<Mat> form = std::nullopt)
        : tc_(std::move(tc)), form_(std::move(form)) {
        if (form_) {
            if (form_->rows() != dim() || form_->cols() != dim())
                throw std::invalid_argument("TripleSystem: form has wrong shape");
            if (form_->is_zero()) throw std::invalid_argument("TripleSystem: declared form is zero");
            for (int i = 0; i < dim(); ++i)
                for (int j = i + 1; j < dim(); ++j)
                    if ((*form_)(i, j) != (*form_)(j, i))
                        throw std::invalid_argument("TripleSystem: declared form is not symmetric");
        }
    }

    int dim() const { return tc_.dim(); }
    const Tensor4& tc() const { return tc_; }
    const std::optional<Mat>& form() const { return form_; }

    /// Product of basis elements e_i e_j e_k as a coordinate vector.
    Vec basis_triple(int i, int j, int k) const {
        Vec v(static_cast<std::size_t>(dim()));
        for (int l = 0; l < dim(); ++l) v[static_cast<std::size_t>(l)] = tc_(i, j, k, l);
        return v;
    }

    /// Trilinear product of coordinate vectors.
    Vec triple_product(const Vec& x, const Vec& y, const Vec& z) const {
        check_vec(x);
        check_vec(y);
        check_vec(z);
        int n = dim();
        Vec r(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (x[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (y[static_cast<std::size_t>(j)] == 0) continue;
                Scalar cij = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                for (int k = 0; k < n; ++k) {
                    if (z[static_cast<std::size_t>(k)] == 0) continue;
                    Scalar c = cij * z[static_cast<std::size_t>(k)];
                    for (int l = 0; l < n; ++l) {
                        if (tc_(i, j, k, l) == 0) continue;
                        r[static_cast<std::size_t>(l)] += c * tc_(i, j, k, l);
                    }
                }
            }
        }
        return r;
    }

    /// Left operator on basis pair: l(i,j) z = e_i e_j z.
    Mat l_op(int i, int j) const {
        int n = dim();
        Mat m(n, n);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) m(l, k) = tc_(i, j, k, l);
        return m;
    }

    /// Middle operator on basis pair: m(i,j) y = e_i y e_j.
    Mat middle_op(int i, int j) const {
        int n = dim();
        Mat m(n, n);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) m(l, k) = tc_(i, k, j, l);
        return m;
    }

    /// Right operator on basis pair: r(i,j) x = x e_i e_j.
    Mat right_op(int i, int j) const {
        int n = dim();
        Mat m(n, n);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) m(l, k) = tc_(k, i, j, l);
        return m;
    }

    /// l_{x,y} z = x y z for arbitrary vectors.
    Mat l_op(const Vec& x, const Vec& y) const {
        check_vec(x);
        check_vec(y);
        int n = dim();
        Mat m(n, n);
        for (int i = 0; i < n; ++i) {
            if (x[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (y[static_cast<std::size_t>(j)] == 0) continue;
                Scalar c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        if (tc_(i, j, k, l) != 0) m(l, k) += c * tc_(i, j, k, l);
            }
        }
        return m;
    }

    /// k_{x,y} z = x z y + y z x for arbitrary vectors.
    Mat k_op(const Vec& x, const Vec& y) const {
        check_vec(x);
        check_vec(y);
        int n = dim();
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Scalar c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                if (c == 0) continue;
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        // x z y contribution and y z x contribution
                        if (tc_(i, k, j, l) != 0) m(l, k) += c * tc_(i, k, j, l);
                        if (tc_(j, k, i, l) != 0) m(l, k) += c * tc_(j, k, i, l);
                    }
            }
        return m;
    }

  private:
    void check_vec(const Vec& v) const {
        if (static_cast<int>(v.size()) != dim())
            throw std::invalid_argument("TripleSystem: vector has wrong dimension");
    }
    Tensor4 tc_;
    std::optional<Mat> form_;
};

namespace detail {
/// All basis left operators l(i,j), indexed i*n+j.
inline std::vector<Mat> all_l_ops(const TripleSystem& t) {
    int n = t.dim();
    std::vector<Mat> ops;
    ops.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ops.push_back(t.l_op(i, j));
    return ops;
}
}  // namespace detail

/// Defining five-term identity, checked through the operator form
/// [l_{u,v}, l_{x,y}] = l_{l_{u,v}x, y} - l_{x, l_{v,u}y} on basis 4-tuples.
inline CheckResult check_gjts(const TripleSystem& t) {
    int n = t.dim();
    std::vector<Mat> l = detail::all_l_ops(t);
    auto lm = [&](int i, int j) -> const Mat& { return l[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; };
    auto l_vec_first = [&](const Vec& w, int y) {  // l_{w, e_y}
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            if (w[static_cast<std::size_t>(i)] != 0) m = m + w[static_cast<std::size_t>(i)] * lm(i, y);
        return m;
    };
    auto l_vec_second = [&](int x, const Vec& w) {  // l_{e_x, w}
        Mat m(n, n);
        for (int j = 0; j < n; ++j)
            if (w[static_cast<std::size_t>(j)] != 0) m = m + w[static_cast<std::size_t>(j)] * lm(x, j);
        return m;
    };
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    Mat lhs = commutator(lm(u, v), lm(x, y));
                    Mat rhs = l_vec_first(lm(u, v).col(x), y) - l_vec_second(x, lm(v, u).col(y));
                    if (lhs != rhs)
                        return CheckResult::fail("left-operator commutation law of the five-term identity",
                                                 {u, v, x, y});
                }
    return CheckResult::pass("five-term identity (operator form)");
}

/// The same five-term identity checked by direct evaluation on basis
/// 5-tuples: u v (x y z) = (u v x) y z - x (v u y) z + x y (u v z).
inline CheckResult check_gjts_direct(const TripleSystem& t) {
    int n = t.dim();
    for (int u = 0; u < n; ++u) {
        Vec eu = unit_vec(n, u);
        for (int v = 0; v < n; ++v) {
            Vec ev = unit_vec(n, v);
            for (int x = 0; x < n; ++x) {
                Vec ex = unit_vec(n, x);
                for (int y = 0; y < n; ++y) {
                    Vec ey = unit_vec(n, y);
                    Vec vuy = t.basis_triple(v, u, y);
                    Vec uvx = t.basis_triple(u, v, x);
                    for (int z = 0; z < n; ++z) {
                        Vec ez = unit_vec(n, z);
                        Vec lhs = t.triple_product(eu, ev, t.basis_triple(x, y, z));
                        Vec rhs = t.triple_product(uvx, ey, ez) - t.triple_product(ex, vuy, ez) +
                                  t.triple_product(ex, ey, t.basis_triple(u, v, z));
                        if (lhs != rhs) return CheckResult::fail("five-term identity (direct form)", {u, v, x, y, z});
                    }
                }
            }
        }
    }
    return CheckResult::pass("five-term identity (direct form)");
}

/// Jordan triple system: the five-term identity plus the outer symmetry
/// x y z = z y x (tensor symmetry in the outer slots).
inline CheckResult check_jts(const TripleSystem& t) {
    CheckResult g = check_gjts(t);
    if (!g) return g;
    int n = t.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = i; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (t.tc()(i, j, k, l) != t.tc()(k, j, i, l))
                        return CheckResult::fail("outer symmetry x y z = z y x", {i, j, k, l});
    return CheckResult::pass("Jordan triple system laws");
}

/// Freudenthal-Kantor operator law
/// l_{d,c} k_{a,b} + k_{a,b} l_{c,d} = k_{k_{a,b}c, d} on basis 4-tuples.
inline CheckResult check_fkts(const TripleSystem& t) {
    int n = t.dim();
    std::vector<Mat> l = detail::all_l_ops(t);
    std::vector<Mat> k;
    k.reserve(l.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) k.push_back(t.k_op(unit_vec(n, i), unit_vec(n, j)));
    auto lm = [&](int i, int j) -> const Mat& { return l[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; };
    auto km = [&](int i, int j) -> const Mat& { return k[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; };
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)  // k is symmetric in (a, b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Mat lhs = lm(d, c) * km(a, b) + km(a, b) * lm(c, d);
                    Vec w = km(a, b).col(c);  // k_{a,b} e_c
                    Mat rhs(n, n);
                    for (int i = 0; i < n; ++i)
                        if (w[static_cast<std::size_t>(i)] != 0) rhs = rhs + w[static_cast<std::size_t>(i)] * km(i, d);
                    if (lhs != rhs)
                        return CheckResult::fail("second Freudenthal-Kantor operator law", {a, b, c, d});
                }
    return CheckResult::pass("second Freudenthal-Kantor operator law");
}

/// Result of the balanced check: the recovered form on success.
struct BalancedCheck {
    CheckResult result;
    std::optional<Mat> form;  ///< recovered symmetric form (present iff ok)

    explicit operator bool() const { return result.ok; }
};

/// Balanced law x x y = x y x = <x|x> y, checked through the linearizations
///   x z y + z x y = 2 <x|z> y   and   x y z + z y x = 2 <x|z> y
/// on all basis triples, against the form recovered from the tensor:
/// <e_i|e_j> = (1/2n) tr(y -> e_i y e_j + e_j y e_i).  A declared form must
/// match the recovered one.  The five-term identity is asserted first.
inline BalancedCheck check_balanced(const TripleSystem& t) {
    BalancedCheck out;
    CheckResult g = check_gjts(t);
    if (!g) {
        out.result = std::move(g);
        out.result.check = "balanced precondition: " + out.result.check;
        return out;
    }
    int n = t.dim();
    Mat rec(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Scalar tr = (t.middle_op(i, j).trace() + t.middle_op(j, i).trace()) / (2 * n);
            rec(i, j) = tr;
            rec(j, i) = tr;
        }
    if (rec.is_zero()) {
        out.result = CheckResult::fail("balanced form recovery", {}, "recovered form is identically zero");
        return out;
    }
    if (t.form() && *t.form() != rec) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((*t.form())(i, j) != rec(i, j)) {
                    out.result = CheckResult::fail("balanced form recovery", {i, j},
                                                   "declared form disagrees with the recovered form");
                    return out;
                }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec two_scaled_k = (2 * rec(i, j)) * unit_vec(n, k);
                if (t.basis_triple(i, k, j) + t.basis_triple(j, k, i) != two_scaled_k) {
                    out.result = CheckResult::fail("balanced law x y x = <x|x> y (linearized, outer slots)", {i, k, j});
                    return out;
                }
                if (t.basis_triple(i, j, k) + t.basis_triple(j, i, k) != two_scaled_k) {
                    out.result = CheckResult::fail("balanced law x x y = <x|x> y (linearized, first slots)", {i, j, k});
                    return out;
                }
            }
    out.result = CheckResult::pass("balanced laws with recovered form");
    out.form = std::move(rec);
    return out;
}

}  // namespace nxa
