#pragma once

#include <vector>

namespace resmax {

/// Small dense square matrix of doubles, row-major storage.
class DenseMatrix {
public:
    DenseMatrix() = default;

    /// Zero matrix of the given dimension.
    explicit DenseMatrix(int dim);

    /// From row-major entries; entries.size() must equal dim * dim.
    DenseMatrix(int dim, std::vector<double> entries);

    static DenseMatrix identity(int dim);

    int dim() const { return dim_; }

    double at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                        static_cast<std::size_t>(j)];
    }
    double& at(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                        static_cast<std::size_t>(j)];
    }

    /// Adds other into this matrix; dimensions must match.
    void add_in_place(const DenseMatrix& other);

    /// Adds the identity matrix in place.
    void add_identity();

    /// Largest absolute difference |a_ij - a_ji| over all pairs.
    double max_asymmetry() const;

    const std::vector<double>& entries() const { return entries_; }

private:
    int dim_ = 0;
    std::vector<double> entries_;
};

/// Tolerance for treating a matrix as symmetric.
inline constexpr double kSymmetryTolerance = 1e-9;

/// Log-determinant of a symmetric positive definite matrix via an
/// in-place Cholesky factorization: 2 * sum_k ln(L_kk).
///
/// Throws InvalidInputError if the matrix is asymmetric beyond
/// kSymmetryTolerance and NotPositiveDefiniteError when a pivot is not
/// strictly positive.
double cholesky_logdet(const DenseMatrix& m);

}  // namespace resmax
