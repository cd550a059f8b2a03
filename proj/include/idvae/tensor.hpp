#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "idvae/error.hpp"

namespace idvae {

// Dense double-precision array. Rank 1 = vector {n}, rank 2 = matrix {r,c}
// (row major). Scalars are length-1 vectors, which is what matvec and
// sum-reduce naturally produce.
class Tensor {
  public:
    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
        v_.assign(count(shape_), 0.0);
    }

    Tensor(std::vector<std::size_t> shape, std::vector<double> values)
        : shape_(std::move(shape)), v_(std::move(values)) {
        check(v_.size() == count(shape_), "tensor: ", v_.size(), " values for shape of size ", count(shape_));
    }

    static Tensor scalar(double v) { return Tensor({1}, {v}); }
    static Tensor vec(std::vector<double> v) {
        std::size_t n = v.size();
        return Tensor({n}, std::move(v));
    }
    static Tensor zeros(std::size_t n) { return Tensor({n}); }
    static Tensor matrix(std::size_t r, std::size_t c) { return Tensor({r, c}); }
    static Tensor matrix(std::size_t r, std::size_t c, std::vector<double> v) {
        return Tensor({r, c}, std::move(v));
    }
    static Tensor identity(std::size_t n) {
        Tensor t({n, n});
        for (std::size_t i = 0; i < n; ++i) t.at(i, i) = 1.0;
        return t;
    }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return v_.size(); }
    bool is_scalar() const { return v_.size() == 1; }

    std::size_t rows() const {
        check(rank() == 2, "tensor: rows() on rank-", rank(), " tensor");
        return shape_[0];
    }
    std::size_t cols() const {
        check(rank() == 2, "tensor: cols() on rank-", rank(), " tensor");
        return shape_[1];
    }

    double operator[](std::size_t i) const { return v_[i]; }
    double& operator[](std::size_t i) { return v_[i]; }
    double at(std::size_t r, std::size_t c) const { return v_[r * shape_[1] + c]; }
    double& at(std::size_t r, std::size_t c) { return v_[r * shape_[1] + c]; }

    double scalar_value() const {
        check(is_scalar(), "tensor: scalar_value() on size-", size(), " tensor");
        return v_[0];
    }

    const std::vector<double>& values() const { return v_; }
    std::vector<double>& values() { return v_; }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

    bool all_finite() const {
        for (double x : v_) {
            if (!std::isfinite(x)) return false;
        }
        return true;
    }

    void fill(double v) {
        for (auto& x : v_) x = v;
    }

  private:
    static std::size_t count(const std::vector<std::size_t>& shape) {
        check(!shape.empty(), "tensor: empty shape");
        std::size_t n = 1;
        for (std::size_t e : shape) n *= e;
        return n;
    }

    std::vector<std::size_t> shape_;
    std::vector<double> v_;
};

}  // namespace idvae
