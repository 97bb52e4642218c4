#include "resmax/dense_matrix.hpp"

#include <cmath>
#include <string>

#include "resmax/errors.hpp"
#include "resmax/text.hpp"

namespace resmax {

DenseMatrix::DenseMatrix(int dim) {
    if (dim < 0) {
        throw InvalidInputError("matrix dimension must be non-negative");
    }
    dim_ = dim;
    entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                    0.0);
}

DenseMatrix::DenseMatrix(int dim, std::vector<double> entries)
    : DenseMatrix(dim) {
    if (entries.size() != entries_.size()) {
        throw InvalidInputError("matrix of dimension " + std::to_string(dim) +
                                " needs " + std::to_string(entries_.size()) +
                                " entries, got " + std::to_string(entries.size()));
    }
    entries_ = std::move(entries);
}

DenseMatrix DenseMatrix::identity(int dim) {
    DenseMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

void DenseMatrix::add_in_place(const DenseMatrix& other) {
    if (other.dim_ != dim_) {
        throw InvalidInputError("cannot add a " + std::to_string(other.dim_) +
                                "x" + std::to_string(other.dim_) +
                                " matrix to a " + std::to_string(dim_) + "x" +
                                std::to_string(dim_) + " matrix");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
}

void DenseMatrix::add_identity() {
    for (int i = 0; i < dim_; ++i) at(i, i) += 1.0;
}

double DenseMatrix::max_asymmetry() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = i + 1; j < dim_; ++j) {
            double d = std::fabs(at(i, j) - at(j, i));
            if (d > worst) worst = d;
        }
    }
    return worst;
}

double cholesky_logdet(const DenseMatrix& m) {
    double asym = m.max_asymmetry();
    if (asym > kSymmetryTolerance) {
        throw InvalidInputError("matrix is asymmetric by " + format_double(asym) +
                                ", beyond tolerance " +
                                format_double(kSymmetryTolerance));
    }
    const int n = m.dim();
    std::vector<double> l(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                          0.0);
    auto lower = [&](int i, int j) -> double& {
        return l[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    };
    double logdet = 0.0;
    for (int j = 0; j < n; ++j) {
        double diag = m.at(j, j);
        for (int k = 0; k < j; ++k) diag -= lower(j, k) * lower(j, k);
        if (!(diag > 0.0)) {
            throw NotPositiveDefiniteError(
                "matrix is not positive definite: pivot " + std::to_string(j) +
                " is " + format_double(diag));
        }
        double root = std::sqrt(diag);
        lower(j, j) = root;
        logdet += std::log(root);
        for (int i = j + 1; i < n; ++i) {
            double sum = m.at(i, j);
            for (int k = 0; k < j; ++k) sum -= lower(i, k) * lower(j, k);
            lower(i, j) = sum / root;
        }
    }
    return 2.0 * logdet;
}

}  // namespace resmax
