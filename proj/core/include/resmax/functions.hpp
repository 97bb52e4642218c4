#pragma once

#include <cstdint>
#include <vector>

#include "resmax/dense_matrix.hpp"
#include "resmax/oracle.hpp"

namespace resmax {

/// f(A) = sum of per-element weights. Weights must be non-negative.
class ModularFunction : public ObjectiveOracle {
public:
    explicit ModularFunction(std::vector<double> weights);

    int ground_size() const override;
    const std::vector<double>& weights() const { return weights_; }

protected:
    double value_of(const Subset& a) const override;

private:
    std::vector<double> weights_;
};

/// Explicit table of all 2^m values, indexed by subset bit mask.
///
/// On construction the table is checked for normalization (empty set
/// maps to 0), monotonicity, and submodularity within tolerance 1e-9;
/// pass validate = false to skip the property sweep.
class TabularFunction : public ObjectiveOracle {
public:
    static constexpr int kMaxGroundSize = 20;
    static constexpr double kPropertyTolerance = 1e-9;

    TabularFunction(int ground_size, std::vector<double> table,
                    bool validate = true);

    int ground_size() const override;
    double value_at_mask(uint32_t mask) const;
    const std::vector<double>& table() const { return table_; }

protected:
    double value_of(const Subset& a) const override;

private:
    int m_;
    std::vector<double> table_;
};

/// Weighted coverage: f(A) = total weight of universe items covered by
/// at least one element of A. covers[v] lists the items element v covers.
class WeightedCoverageFunction : public ObjectiveOracle {
public:
    WeightedCoverageFunction(std::vector<double> universe_weights,
                             std::vector<std::vector<int>> covers);

    int ground_size() const override;
    int universe_size() const { return static_cast<int>(weights_.size()); }
    const std::vector<double>& universe_weights() const { return weights_; }
    const std::vector<std::vector<int>>& covers() const { return covers_; }

protected:
    double value_of(const Subset& a) const override;

private:
    std::vector<double> weights_;
    std::vector<std::vector<int>> covers_;
};

/// f(A) = logdet(I + sum of the chosen positive semidefinite matrices).
/// Each matrix must be symmetric within 1e-9 and pass a Cholesky check
/// after a 1e-9 diagonal shift.
class LogDetFunction : public ObjectiveOracle {
public:
    explicit LogDetFunction(std::vector<DenseMatrix> matrices);

    int ground_size() const override;
    int dim() const { return dim_; }
    const std::vector<DenseMatrix>& matrices() const { return matrices_; }

protected:
    double value_of(const Subset& a) const override;

private:
    std::vector<DenseMatrix> matrices_;
    int dim_;
};

/// Three-element table with singleton values base+1, base+0.5, base and
/// strong overlap between the first two elements; base must be positive.
/// Useful as a tiny worked instance with curvature exactly 1.
TabularFunction make_example1_function(double base = 1.0);

/// Random log-det instance: matrices are Gram matrices G G^T of d x d
/// standard normal factors drawn from the pinned generator, so identical
/// (m, d, seed) inputs reproduce bit-identical matrices.
LogDetFunction random_psd_instance(int m, int d, uint64_t seed);

}  // namespace resmax
