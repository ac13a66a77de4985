/**
 * @file hermitian.hpp
 * @brief Free modules over an associative coefficient algebra with involution,
 *        carrying a hermitian form.  The module is stored flattened as a
 *        rational vector space with an explicit coefficient action, so every
 *        later identity check is a plain tensor evaluation.
 */
#pragma once

#include "nxa/algebra.hpp"
#include "nxa/cayley_dickson.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace nxa {

/// A free module of finite rank over an associative unital coefficient
/// algebra with involution, endowed with a hermitian form h.  Conventions:
/// the module is a left module, h is linear in its first argument
/// (h(alpha x, y) = alpha h(x, y)) and satisfies h(x, y) = bar(h(y, x)), so it
/// is conjugate-linear in the second argument with scalars emerging on the
/// right: h(x, alpha y) = h(x, y) bar(alpha).
///
/// The constructor validates everything: bar is an involutive
/// anti-automorphism fixing the unit, the action matrices form a unital
/// representation, the gram data is hermitian-symmetric, and the module basis
/// generates freely (the coefficient-coordinate map is invertible).
struct HermitianModule {
    Algebra coeff;                       ///< associative coefficient algebra
    Mat bar;                             ///< involution of coeff
    int rank = 0;                        ///< free rank over coeff
    int total_dim = 0;                   ///< rank * dim(coeff)
    std::vector<Vec> mbasis;             ///< module basis, ambient coordinates
    std::vector<Mat> action;             ///< action[a] = left action of coeff basis element a
    std::vector<std::vector<Vec>> herm;  ///< herm[i][j] = h(mbasis[i], mbasis[j]) in coeff coordinates
    Mat coords;                          ///< inverse of (xi_i)_i -> sum_i xi_i . mbasis[i]

    HermitianModule(Algebra c, Mat b, std::vector<Vec> mb, std::vector<Mat> act,
                    std::vector<std::vector<Vec>> h)
        : coeff(std::move(c)),
          bar(std::move(b)),
          rank(static_cast<int>(mb.size())),
          mbasis(std::move(mb)),
          action(std::move(act)),
          herm(std::move(h)) {
        int dk = coeff.dim();
        if (!coeff.unit()) throw std::invalid_argument("HermitianModule: coefficient algebra has no unit");
        if (!is_associative(coeff))
            throw std::invalid_argument("HermitianModule: coefficient algebra is not associative");
        if (bar.rows() != dk || bar.cols() != dk)
            throw std::invalid_argument("HermitianModule: bar has wrong shape");
        if (bar * bar != Mat::identity(dk))
            throw std::invalid_argument("HermitianModule: bar is not an involution");
        if (bar.apply(*coeff.unit()) != *coeff.unit())
            throw std::invalid_argument("HermitianModule: bar does not fix the unit");
        for (int i = 0; i < dk; ++i)
            for (int j = 0; j < dk; ++j)
                if (bar.apply(coeff.basis_product(i, j)) != coeff.multiply(bar.col(j), bar.col(i)))
                    throw std::invalid_argument("HermitianModule: bar is not an anti-automorphism");

        if (rank < 1) throw std::invalid_argument("HermitianModule: rank must be positive");
        total_dim = rank * dk;
        for (const Vec& m : mbasis)
            if (static_cast<int>(m.size()) != total_dim)
                throw std::invalid_argument("HermitianModule: module basis vector has wrong dimension");
        if (static_cast<int>(action.size()) != dk)
            throw std::invalid_argument("HermitianModule: need one action matrix per coefficient basis element");
        for (const Mat& m : action)
            if (m.rows() != total_dim || m.cols() != total_dim)
                throw std::invalid_argument("HermitianModule: action matrix has wrong shape");

        // Unital representation: the unit acts as the identity and the action
        // respects products, action(e_a e_b) = action(e_a) action(e_b).
        Mat unit_act(total_dim, total_dim);
        for (int a = 0; a < dk; ++a) {
            const Scalar& ua = (*coeff.unit())[static_cast<std::size_t>(a)];
            if (ua != 0) unit_act = unit_act + ua * action[static_cast<std::size_t>(a)];
        }
        if (unit_act != Mat::identity(total_dim))
            throw std::invalid_argument("HermitianModule: action does not represent the unit as the identity");
        for (int a = 0; a < dk; ++a)
            for (int b = 0; b < dk; ++b) {
                Mat lhs = action[static_cast<std::size_t>(a)] * action[static_cast<std::size_t>(b)];
                Mat rhs(total_dim, total_dim);
                for (int c = 0; c < dk; ++c) {
                    const Scalar& s = coeff.sc()(a, b, c);
                    if (s != 0) rhs = rhs + s * action[static_cast<std::size_t>(c)];
                }
                if (lhs != rhs)
                    throw std::invalid_argument("HermitianModule: action is not an algebra representation");
            }

        if (static_cast<int>(herm.size()) != rank)
            throw std::invalid_argument("HermitianModule: gram data has wrong shape");
        for (const auto& row : herm) {
            if (static_cast<int>(row.size()) != rank)
                throw std::invalid_argument("HermitianModule: gram data has wrong shape");
            for (const Vec& v : row)
                if (static_cast<int>(v.size()) != dk)
                    throw std::invalid_argument("HermitianModule: gram entry has wrong dimension");
        }
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (herm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                    bar.apply(herm[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]))
                    throw std::invalid_argument("HermitianModule: gram data is not hermitian-symmetric");

        // Coefficient coordinates: the map (xi_0, ..., xi_{r-1}) -> sum xi_i . m_i
        // stacked as column index i*dk + a must be invertible (free module).
        Mat phi(total_dim, total_dim);
        for (int i = 0; i < rank; ++i)
            for (int a = 0; a < dk; ++a) {
                Vec col = action[static_cast<std::size_t>(a)].apply(mbasis[static_cast<std::size_t>(i)]);
                for (int r = 0; r < total_dim; ++r) phi(r, i * dk + a) = col[static_cast<std::size_t>(r)];
            }
        auto inv = inverse(phi);
        if (!inv) throw std::invalid_argument("HermitianModule: module basis does not generate freely");
        coords = std::move(*inv);
    }
};

/// Action of a coefficient element (given in coeff coordinates) on a module
/// element.
inline Vec module_act(const HermitianModule& m, const Vec& alpha, const Vec& x) {
    if (static_cast<int>(alpha.size()) != m.coeff.dim() || static_cast<int>(x.size()) != m.total_dim)
        throw std::invalid_argument("module_act: wrong dimensions");
    Vec out(static_cast<std::size_t>(m.total_dim));
    for (int a = 0; a < m.coeff.dim(); ++a)
        if (alpha[static_cast<std::size_t>(a)] != 0)
            out = out + alpha[static_cast<std::size_t>(a)] * m.action[static_cast<std::size_t>(a)].apply(x);
    return out;
}

/// The hermitian form on arbitrary module elements, extended from the gram
/// data by h(xi x, eta y) = xi h(x, y) bar(eta).
inline Vec herm_value(const HermitianModule& m, const Vec& x, const Vec& y) {
    if (static_cast<int>(x.size()) != m.total_dim || static_cast<int>(y.size()) != m.total_dim)
        throw std::invalid_argument("herm_value: wrong dimensions");
    int dk = m.coeff.dim();
    Vec xi = m.coords.apply(x);
    Vec eta = m.coords.apply(y);
    Vec acc(static_cast<std::size_t>(dk));
    for (int i = 0; i < m.rank; ++i) {
        Vec xi_i(static_cast<std::size_t>(dk));
        for (int a = 0; a < dk; ++a) xi_i[static_cast<std::size_t>(a)] = xi[static_cast<std::size_t>(i * dk + a)];
        if (is_zero(xi_i)) continue;
        for (int j = 0; j < m.rank; ++j) {
            Vec eta_j(static_cast<std::size_t>(dk));
            for (int a = 0; a < dk; ++a)
                eta_j[static_cast<std::size_t>(a)] = eta[static_cast<std::size_t>(j * dk + a)];
            if (is_zero(eta_j)) continue;
            acc = acc + m.coeff.multiply(
                            m.coeff.multiply(xi_i, m.herm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]),
                            m.bar.apply(eta_j));
        }
    }
    return acc;
}

/// The standard free module K^rank with the given gram data: basis vector i
/// is the coefficient unit placed in slot i, and the action is blockwise left
/// multiplication.
inline HermitianModule free_hermitian_module(const Algebra& coeff, const Mat& bar,
                                             const std::vector<std::vector<Vec>>& herm) {
    if (!coeff.unit()) throw std::invalid_argument("free_hermitian_module: coefficient algebra has no unit");
    int dk = coeff.dim();
    int rank = static_cast<int>(herm.size());
    if (rank < 1) throw std::invalid_argument("free_hermitian_module: rank must be positive");
    int total = rank * dk;
    std::vector<Vec> mbasis;
    for (int i = 0; i < rank; ++i) {
        Vec m(static_cast<std::size_t>(total));
        for (int a = 0; a < dk; ++a)
            m[static_cast<std::size_t>(i * dk + a)] = (*coeff.unit())[static_cast<std::size_t>(a)];
        mbasis.push_back(std::move(m));
    }
    std::vector<Mat> action;
    for (int a = 0; a < dk; ++a) {
        Mat act(total, total);
        for (int i = 0; i < rank; ++i)
            for (int b = 0; b < dk; ++b)
                for (int c = 0; c < dk; ++c) act(i * dk + c, i * dk + b) = coeff.sc()(a, b, c);
        action.push_back(std::move(act));
    }
    return HermitianModule(coeff, bar, std::move(mbasis), std::move(action), herm);
}

namespace detail {
inline std::vector<std::vector<Vec>> identity_gram(const Algebra& coeff, int rank) {
    std::vector<std::vector<Vec>> herm(static_cast<std::size_t>(rank),
                                       std::vector<Vec>(static_cast<std::size_t>(rank),
                                                        Vec(static_cast<std::size_t>(coeff.dim()))));
    for (int i = 0; i < rank; ++i) herm[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = *coeff.unit();
    return herm;
}
}  // namespace detail

/// Free module with identity gram over the split quadratic etale algebra
/// (one Cayley-Dickson doubling with parameter +1, isomorphic to F x F).
inline HermitianModule hermitian_split_etale(int rank) {
    CompositionAlgebra k = cayley_dickson({1});
    return free_hermitian_module(k.algebra, k.conj, detail::identity_gram(k.algebra, rank));
}

/// Free module with identity gram over the split quaternion algebra in its
/// 2x2 matrix realization.
inline HermitianModule hermitian_split_quaternion(int rank) {
    CompositionAlgebra h = split_quaternion_matrix();
    return free_hermitian_module(h.algebra, h.conj, detail::identity_gram(h.algebra, rank));
}

}  // namespace nxa
