/**
 * @file fixtures.hpp
 * @brief Small shared fixtures for the test suites.
 */
#pragma once

#include "nxa/algebra.hpp"
#include "nxa/linalg.hpp"
#include "nxa/tensor.hpp"

namespace nxa::testfix {

/// x y z = <z|x> y - <z|y> x + <x|y> z for a symmetric gram matrix.
inline Tensor4 orthogonal_tensor(const Mat& g) {
    int n = g.rows();
    Tensor4 tc(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Scalar v = 0;
                    if (j == l) v += g(k, i);
                    if (i == l) v -= g(k, j);
                    if (k == l) v += g(i, j);
                    if (v != 0) tc(i, j, k, l) = v;
                }
    return tc;
}

/// F x F with componentwise product; unit (1,1).
inline Algebra f_cross_f() {
    Tensor3 sc(2);
    sc(0, 0, 0) = 1;
    sc(1, 1, 1) = 1;
    return Algebra(std::move(sc), Vec{1, 1});
}

/// The coordinate swap on F x F.
inline Mat swap2() { return Mat::from_rows({{0, 1}, {1, 0}}); }

}  // namespace nxa::testfix
