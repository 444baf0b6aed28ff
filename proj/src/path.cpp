#include "pathint/path.hpp"

#include <cmath>
#include <stdexcept>

namespace pathint {

SamplePath::SamplePath(GridPtr grid, int dim, std::vector<double> values)
    : grid_(std::move(grid)), dim_(dim), values_(std::move(values)) {
    if (!grid_) throw std::invalid_argument("SamplePath: null grid");
    if (dim_ <= 0) throw std::invalid_argument("SamplePath: dim must be positive");
    if (values_.size() != grid_->size() * static_cast<std::size_t>(dim_))
        throw std::invalid_argument("SamplePath: value count does not match grid x dim");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("SamplePath: non-finite entry");
}

bool SamplePath::operator==(const SamplePath& other) const {
    return dim_ == other.dim_ && same_grid(grid_, other.grid_) && values_ == other.values_;
}

std::vector<double> increment(const SamplePath& path, std::size_t i, std::size_t j) {
    if (i > j || j >= path.length()) throw std::out_of_range("increment: bad index pair");
    std::vector<double> out(static_cast<std::size_t>(path.dim()));
    auto a = path.value(i);
    auto b = path.value(j);
    for (int c = 0; c < path.dim(); ++c) out[static_cast<std::size_t>(c)] = b[c] - a[c];
    return out;
}

double increment_norm(const SamplePath& path, std::size_t i, std::size_t j) {
    auto a = path.value(i);
    auto b = path.value(j);
    double s = 0.0;
    for (int c = 0; c < path.dim(); ++c) {
        const double d = b[c] - a[c];
        s += d * d;
    }
    return std::sqrt(s);
}

Tensor& Tensor::operator+=(const Tensor& o) {
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += o.e[k];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    for (std::size_t k = 0; k < e.size(); ++k) e[k] -= o.e[k];
    return *this;
}

Tensor& Tensor::operator*=(double a) {
    for (double& v : e) v *= a;
    return *this;
}

Tensor Tensor::transposed() const {
    Tensor t(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Tensor Tensor::sym_part() const {
    Tensor t(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) t(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
    return t;
}

Tensor Tensor::antisym_part() const {
    Tensor t(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) t(i, j) = 0.5 * ((*this)(i, j) - (*this)(j, i));
    return t;
}

double Tensor::frobenius() const {
    double s = 0.0;
    for (double v : e) s += v * v;
    return std::sqrt(s);
}

double Tensor::max_abs() const {
    double m = 0.0;
    for (double v : e) m = std::max(m, std::abs(v));
    return m;
}

Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
Tensor operator*(double a, Tensor t) { return t *= a; }

Tensor tensor(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw std::invalid_argument("tensor: dimension mismatch");
    Tensor t(static_cast<int>(u.size()));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) t.e[i * u.size() + j] = u[i] * v[j];
    return t;
}

}  // namespace pathint
