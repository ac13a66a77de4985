/**
 * @file tensor.hpp
 * @brief Dense rank-3 and rank-4 cubic tensors of exact rationals.
 *
 * A Tensor3 of dimension n holds structure constants c[i][j][k]
 * (e_i e_j = sum_k c[i][j][k] e_k); a Tensor4 holds t[i][j][k][l]
 * (e_i e_j e_k = sum_l t[i][j][k][l] e_l).  Storage is flat and row-major;
 * equality is exact entrywise comparison.
 */
#pragma once

#include "nxa/rational.hpp"

#include <stdexcept>
#include <vector>

namespace nxa {

/// Structure constants of a bilinear product on an n-dimensional space.
class Tensor3 {
  public:
    Tensor3() : n_(0) {}
    explicit Tensor3(int n) : n_(n), a_(cube(n)) {
        if (n < 0) throw std::invalid_argument("Tensor3: negative dimension");
    }

    int dim() const { return n_; }

    Scalar& operator()(int i, int j, int k) { return a_[idx(i, j, k)]; }
    const Scalar& operator()(int i, int j, int k) const { return a_[idx(i, j, k)]; }

    bool operator==(const Tensor3& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

  private:
    static std::size_t cube(int n) {
        std::size_t m = static_cast<std::size_t>(n);
        return m * m * m;
    }
    std::size_t idx(int i, int j, int k) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_ || k < 0 || k >= n_)
            throw std::out_of_range("Tensor3: index out of range");
        std::size_t m = static_cast<std::size_t>(n_);
        return (static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)) * m + static_cast<std::size_t>(k);
    }
    int n_;
    std::vector<Scalar> a_;
};

/// Structure constants of a trilinear product on an n-dimensional space.
class Tensor4 {
  public:
    Tensor4() : n_(0) {}
    explicit Tensor4(int n) : n_(n), a_(fourth(n)) {
        if (n < 0) throw std::invalid_argument("Tensor4: negative dimension");
    }

    int dim() const { return n_; }

    Scalar& operator()(int i, int j, int k, int l) { return a_[idx(i, j, k, l)]; }
    const Scalar& operator()(int i, int j, int k, int l) const { return a_[idx(i, j, k, l)]; }

    bool operator==(const Tensor4& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Tensor4& o) const { return !(*this == o); }

  private:
    static std::size_t fourth(int n) {
        std::size_t m = static_cast<std::size_t>(n);
        return m * m * m * m;
    }
    std::size_t idx(int i, int j, int k, int l) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_ || k < 0 || k >= n_ || l < 0 || l >= n_)
            throw std::out_of_range("Tensor4: index out of range");
        std::size_t m = static_cast<std::size_t>(n_);
        return ((static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)) * m + static_cast<std::size_t>(k)) * m +
               static_cast<std::size_t>(l);
    }
    int n_;
    std::vector<Scalar> a_;
};

}  // namespace nxa
