#include "resmax/functions.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "resmax/errors.hpp"
#include "resmax/rng.hpp"
#include "resmax/text.hpp"

namespace resmax {

ModularFunction::ModularFunction(std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw InvalidInputError("modular function needs at least one weight");
    }
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (!(weights_[i] >= 0.0)) {
            throw InvalidInputError("weight " + std::to_string(i) +
                                    " is negative or NaN: " +
                                    format_double(weights_[i]));
        }
    }
}

int ModularFunction::ground_size() const {
    return static_cast<int>(weights_.size());
}

double ModularFunction::value_of(const Subset& a) const {
    require_compatible(a);
    double total = 0.0;
    for (int v : a) total += weights_[static_cast<std::size_t>(v)];
    return total;
}

TabularFunction::TabularFunction(int ground_size, std::vector<double> table,
                                 bool validate)
    : m_(ground_size), table_(std::move(table)) {
    if (m_ < 1 || m_ > kMaxGroundSize) {
        throw InvalidInputError("tabular ground set size must be in [1, " +
                                std::to_string(kMaxGroundSize) + "], got " +
                                std::to_string(m_));
    }
    const std::size_t expected = std::size_t{1} << m_;
    if (table_.size() != expected) {
        throw InvalidInputError("tabular function over " + std::to_string(m_) +
                                " elements needs " + std::to_string(expected) +
                                " values, got " + std::to_string(table_.size()));
    }
    if (table_[0] != 0.0) {
        throw InvalidInputError("tabular value of the empty set must be 0, got " +
                                format_double(table_[0]));
    }
    if (!validate) return;

    const double tol = kPropertyTolerance;
    const uint32_t full = static_cast<uint32_t>(expected - 1);
    for (uint32_t mask = 0; mask <= full; ++mask) {
        double base = table_[mask];
        for (int x = 0; x < m_; ++x) {
            uint32_t bx = uint32_t{1} << x;
            if (mask & bx) continue;
            double with_x = table_[mask | bx];
            if (with_x < base - tol) {
                throw InvalidInputError(
                    "tabular function is not monotone: f(" +
                    std::to_string(mask | bx) + ") < f(" + std::to_string(mask) +
                    ") by " + format_double(base - with_x));
            }
            for (int y = x + 1; y < m_; ++y) {
                uint32_t by = uint32_t{1} << y;
                if (mask & by) continue;
                double with_y = table_[mask | by];
                double with_both = table_[mask | bx | by];
                if (with_x + with_y < with_both + base - tol) {
                    throw InvalidInputError(
                        "tabular function is not submodular at mask " +
                        std::to_string(mask) + " with elements " +
                        std::to_string(x) + "," + std::to_string(y));
                }
            }
        }
    }
}

int TabularFunction::ground_size() const { return m_; }

double TabularFunction::value_at_mask(uint32_t mask) const {
    if (mask >= table_.size()) {
        throw InvalidInputError("mask " + std::to_string(mask) +
                                " is out of range for a table of size " +
                                std::to_string(table_.size()));
    }
    return table_[mask];
}

double TabularFunction::value_of(const Subset& a) const {
    require_compatible(a);
    return table_[a.to_mask()];
}

WeightedCoverageFunction::WeightedCoverageFunction(
    std::vector<double> universe_weights, std::vector<std::vector<int>> covers)
    : weights_(std::move(universe_weights)), covers_(std::move(covers)) {
    if (covers_.empty()) {
        throw InvalidInputError("coverage function needs at least one element");
    }
    const int items = static_cast<int>(weights_.size());
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (!(weights_[i] >= 0.0)) {
            throw InvalidInputError("universe weight " + std::to_string(i) +
                                    " is negative or NaN: " +
                                    format_double(weights_[i]));
        }
    }
    for (std::size_t v = 0; v < covers_.size(); ++v) {
        for (int item : covers_[v]) {
            if (item < 0 || item >= items) {
                throw InvalidInputError(
                    "element " + std::to_string(v) + " covers item " +
                    std::to_string(item) + ", outside the universe of size " +
                    std::to_string(items));
            }
        }
    }
}

int WeightedCoverageFunction::ground_size() const {
    return static_cast<int>(covers_.size());
}

double WeightedCoverageFunction::value_of(const Subset& a) const {
    require_compatible(a);
    std::vector<char> covered(weights_.size(), 0);
    for (int v : a) {
        for (int item : covers_[static_cast<std::size_t>(v)]) {
            covered[static_cast<std::size_t>(item)] = 1;
        }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < covered.size(); ++i) {
        if (covered[i]) total += weights_[i];
    }
    return total;
}

LogDetFunction::LogDetFunction(std::vector<DenseMatrix> matrices)
    : matrices_(std::move(matrices)), dim_(0) {
    if (matrices_.empty()) {
        throw InvalidInputError("log-det function needs at least one matrix");
    }
    dim_ = matrices_[0].dim();
    if (dim_ < 1) {
        throw InvalidInputError("log-det matrices must have dimension >= 1");
    }
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
        const DenseMatrix& d = matrices_[i];
        if (d.dim() != dim_) {
            throw InvalidInputError("matrix " + std::to_string(i) +
                                    " has dimension " + std::to_string(d.dim()) +
                                    ", expected " + std::to_string(dim_));
        }
        double asym = d.max_asymmetry();
        if (asym > kSymmetryTolerance) {
            throw InvalidInputError("matrix " + std::to_string(i) +
                                    " is asymmetric by " + format_double(asym));
        }
        // Positive semidefiniteness check: Cholesky must succeed after a
        // tiny diagonal shift.
        DenseMatrix shifted = d;
        for (int k = 0; k < dim_; ++k) shifted.at(k, k) += 1e-9;
        try {
            cholesky_logdet(shifted);
        } catch (const NotPositiveDefiniteError&) {
            throw InvalidInputError("matrix " + std::to_string(i) +
                                    " is not positive semidefinite");
        }
    }
}

int LogDetFunction::ground_size() const {
    return static_cast<int>(matrices_.size());
}

double LogDetFunction::value_of(const Subset& a) const {
    require_compatible(a);
    DenseMatrix sum = DenseMatrix::identity(dim_);
    for (int v : a) sum.add_in_place(matrices_[static_cast<std::size_t>(v)]);
    return cholesky_logdet(sum);
}

TabularFunction make_example1_function(double base) {
    if (!(base > 0.0)) {
        throw InvalidInputError("base value must be positive, got " +
                                format_double(base));
    }
    // Elements: 0 and 1 overlap almost completely, 2 is independent.
    std::vector<double> table(8, 0.0);
    table[0b000] = 0.0;
    table[0b001] = base + 1.0;
    table[0b010] = base + 0.5;
    table[0b100] = base;
    table[0b011] = base + 1.0;
    table[0b101] = 2.0 * base + 1.0;
    table[0b110] = 2.0 * base + 0.5;
    table[0b111] = 2.0 * base + 1.0;
    return TabularFunction(3, std::move(table), true);
}

LogDetFunction random_psd_instance(int m, int d, uint64_t seed) {
    if (m < 1) {
        throw InvalidInputError("need at least one matrix, got m = " +
                                std::to_string(m));
    }
    if (d < 1) {
        throw InvalidInputError("matrix dimension must be >= 1, got d = " +
                                std::to_string(d));
    }
    Rng rng(seed);
    std::vector<DenseMatrix> matrices;
    matrices.reserve(static_cast<std::size_t>(m));
    std::vector<double> factor(static_cast<std::size_t>(d) *
                               static_cast<std::size_t>(d));
    for (int i = 0; i < m; ++i) {
        for (double& g : factor) g = rng.next_normal();
        // Gram matrix of the factor's rows: D = G G^T, symmetric PSD.
        DenseMatrix gram(d);
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c <= r; ++c) {
                double dot = 0.0;
                for (int k = 0; k < d; ++k) {
                    dot += factor[static_cast<std::size_t>(r) *
                                      static_cast<std::size_t>(d) +
                                  static_cast<std::size_t>(k)] *
                           factor[static_cast<std::size_t>(c) *
                                      static_cast<std::size_t>(d) +
                                  static_cast<std::size_t>(k)];
                }
                gram.at(r, c) = dot;
                gram.at(c, r) = dot;
            }
        }
        matrices.push_back(std::move(gram));
    }
    return LogDetFunction(std::move(matrices));
}

}  // namespace resmax
