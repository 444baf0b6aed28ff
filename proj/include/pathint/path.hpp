#pragma once

#include <span>
#include <vector>

#include "pathint/grid.hpp"

namespace pathint {

/// d-dimensional sampled path: one value row per grid point, row-major storage.
/// Immutable after construction; all entries are validated finite.
class SamplePath {
public:
    SamplePath(GridPtr grid, int dim, std::vector<double> values);

    const GridPtr& grid_ptr() const { return grid_; }
    const TimeGrid& grid() const { return *grid_; }
    int dim() const { return dim_; }
    std::size_t length() const { return grid_->size(); }

    std::span<const double> value(std::size_t i) const {
        return {values_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
    }
    double at(std::size_t i, int c) const { return values_[i * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(c)]; }
    const std::vector<double>& raw() const { return values_; }

    bool operator==(const SamplePath& other) const;

private:
    GridPtr grid_;
    int dim_;
    std::vector<double> values_;
};

/// X_{i,j} = X_j - X_i componentwise. Requires i <= j; throws std::out_of_range.
std::vector<double> increment(const SamplePath& path, std::size_t i, std::size_t j);

/// Euclidean norm of X_{i,j}; avoids the temporary of increment().
double increment_norm(const SamplePath& path, std::size_t i, std::size_t j);

/// Dense d x d tensor, row-major.
struct Tensor {
    int dim = 0;
    std::vector<double> e;

    Tensor() = default;
    explicit Tensor(int d) : dim(d), e(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0.0) {}

    double& operator()(int i, int j) { return e[static_cast<std::size_t>(i) * dim + j]; }
    double operator()(int i, int j) const { return e[static_cast<std::size_t>(i) * dim + j]; }

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(double a);

    Tensor transposed() const;
    Tensor sym_part() const;      // (A + A^T)/2
    Tensor antisym_part() const;  // (A - A^T)/2
    double frobenius() const;
    double max_abs() const;
};

Tensor operator+(Tensor a, const Tensor& b);
Tensor operator-(Tensor a, const Tensor& b);
Tensor operator*(double a, Tensor t);

/// u (x) v, entry (i,j) = u_i v_j. Dims must match; std::invalid_argument otherwise.
Tensor tensor(std::span<const double> u, std::span<const double> v);

}  // namespace pathint
