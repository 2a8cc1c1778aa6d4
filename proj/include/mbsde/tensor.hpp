#pragma once
#include <cstddef>
#include <vector>
#include <Eigen/Dense>

namespace mbsde {

/// Dense row-major (i,j) array of doubles.
class Array2 {
public:
    Array2() = default;
    Array2(int n0, int n1) : n0_(n0), n1_(n1), v_(std::size_t(n0) * n1, 0.0) {}

    double& operator()(int i, int j) { return v_[idx(i, j)]; }
    double operator()(int i, int j) const { return v_[idx(i, j)]; }

    int rows() const { return n0_; }
    int cols() const { return n1_; }
    const std::vector<double>& data() const { return v_; }
    std::vector<double>& data() { return v_; }

private:
    std::size_t idx(int i, int j) const { return std::size_t(i) * n1_ + j; }
    int n0_ = 0, n1_ = 0;
    std::vector<double> v_;
};

/// Dense (i,j,k) array; the trailing k-block of each (i,j) cell is contiguous,
/// so it can be viewed as an Eigen vector or column-major matrix without copy.
class Array3 {
public:
    Array3() = default;
    Array3(int n0, int n1, int n2)
        : n0_(n0), n1_(n1), n2_(n2), v_(std::size_t(n0) * n1 * n2, 0.0) {}

    double& operator()(int i, int j, int k) { return v_[idx(i, j, k)]; }
    double operator()(int i, int j, int k) const { return v_[idx(i, j, k)]; }

    double* cell(int i, int j) { return v_.data() + idx(i, j, 0); }
    const double* cell(int i, int j) const { return v_.data() + idx(i, j, 0); }

    Eigen::Map<Eigen::VectorXd> vec(int i, int j) {
        return Eigen::Map<Eigen::VectorXd>(cell(i, j), n2_);
    }
    Eigen::Map<const Eigen::VectorXd> vec(int i, int j) const {
        return Eigen::Map<const Eigen::VectorXd>(cell(i, j), n2_);
    }
    /// Column-major (rows x cols) view of a cell; requires rows*cols == n2.
    Eigen::Map<Eigen::MatrixXd> mat(int i, int j, int rows, int cols) {
        return Eigen::Map<Eigen::MatrixXd>(cell(i, j), rows, cols);
    }
    Eigen::Map<const Eigen::MatrixXd> mat(int i, int j, int rows, int cols) const {
        return Eigen::Map<const Eigen::MatrixXd>(cell(i, j), rows, cols);
    }

    int n0() const { return n0_; }
    int n1() const { return n1_; }
    int n2() const { return n2_; }
    const std::vector<double>& data() const { return v_; }
    std::vector<double>& data() { return v_; }

private:
    std::size_t idx(int i, int j, int k) const {
        return (std::size_t(i) * n1_ + j) * n2_ + k;
    }
    int n0_ = 0, n1_ = 0, n2_ = 0;
    std::vector<double> v_;
};

} // namespace mbsde
