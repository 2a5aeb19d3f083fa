#pragma once

#include "cvat/errors.hpp"
#include "cvat/rng.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace cvat {

template <typename T>
using MatMap = Eigen::Map<Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
template <typename T>
using ConstMatMap =
    Eigen::Map<const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
template <typename T> using VecMap = Eigen::Map<Eigen::Array<T, Eigen::Dynamic, 1>>;
template <typename T> using ConstVecMap = Eigen::Map<const Eigen::Array<T, Eigen::Dynamic, 1>>;

// Dense row-major tensor. Rank is small (<= 4); ops interpret shapes as the
// networks need them, there is no general broadcasting.
template <typename T> class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
        data_.assign(numel_of(shape_), T(0));
    }
    Tensor(std::vector<int> shape, std::vector<T> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        if (static_cast<std::int64_t>(data_.size()) != numel_of(shape_))
            throw ShapeError("tensor: data size does not match shape " + shape_string(shape_));
    }

    static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

    static Tensor full(std::vector<int> shape, T value) {
        Tensor t(std::move(shape));
        std::fill(t.data_.begin(), t.data_.end(), value);
        return t;
    }

    static Tensor scalar(T value) { return Tensor({1}, {value}); }

    // Uniform on [-bound, bound].
    static Tensor uniform(std::vector<int> shape, T bound, Rng& rng) {
        Tensor t(std::move(shape));
        for (T& v : t.data_) v = static_cast<T>(rng.uniform(-double(bound), double(bound)));
        return t;
    }

    const std::vector<int>& shape() const { return shape_; }
    int dim(int i) const { return shape_.at(static_cast<size_t>(i)); }
    int rank() const { return static_cast<int>(shape_.size()); }
    std::int64_t numel() const { return static_cast<std::int64_t>(data_.size()); }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    T& operator[](std::int64_t i) { return data_[static_cast<size_t>(i)]; }
    const T& operator[](std::int64_t i) const { return data_[static_cast<size_t>(i)]; }

    // Same storage, new shape; element count must match.
    Tensor reshaped(std::vector<int> shape) const {
        if (numel_of(shape) != numel())
            throw ShapeError("tensor: reshape " + shape_string(shape_) + " -> " +
                             shape_string(shape) + " changes element count");
        Tensor t;
        t.shape_ = std::move(shape);
        t.data_ = data_;
        return t;
    }

    // 2D views. rows()/cols() treat the last dim as columns and the rest as rows.
    std::int64_t rows() const {
        if (shape_.empty()) return 0;
        std::int64_t r = 1;
        for (size_t i = 0; i + 1 < shape_.size(); ++i) r *= shape_[i];
        return r;
    }
    std::int64_t cols() const { return shape_.empty() ? 0 : shape_.back(); }

    MatMap<T> mat() { return MatMap<T>(data(), rows(), cols()); }
    ConstMatMap<T> mat() const { return ConstMatMap<T>(data(), rows(), cols()); }
    VecMap<T> vec() { return VecMap<T>(data(), numel()); }
    ConstVecMap<T> vec() const { return ConstVecMap<T>(data(), numel()); }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    bool all_finite() const {
        for (const T v : data_)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }

    template <typename U> Tensor<U> cast() const {
        Tensor<U> out;
        out = Tensor<U>(shape_);
        for (std::int64_t i = 0; i < numel(); ++i) out[i] = static_cast<U>(data_[i]);
        return out;
    }

    static std::int64_t numel_of(const std::vector<int>& shape) {
        std::int64_t n = 1;
        for (const int d : shape) {
            if (d <= 0) throw ShapeError("tensor: nonpositive dim in shape " + shape_string(shape));
            n *= d;
        }
        return n;
    }

    static std::string shape_string(const std::vector<int>& shape) {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < shape.size(); ++i) os << (i ? "," : "") << shape[i];
        os << "]";
        return os.str();
    }

private:
    std::vector<int> shape_;
    std::vector<T> data_;
};

using TensorF = Tensor<float>;
using TensorD = Tensor<double>;

} // namespace cvat
