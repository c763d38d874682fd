#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace mvsbm {

/// Community assignment z in [k]^n, labels stored 1-based.
class LabelVector {
public:
    LabelVector() = default;
    LabelVector(std::vector<int> labels, int k);

    int size() const { return static_cast<int>(labels_.size()); }
    int k() const { return k_; }
    int operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }
    std::span<const int> labels() const { return labels_; }

    /// Indicator vector c_p(z) of community p (1-based).
    template <typename Scalar = double>
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> indicator(int p) const
    {
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> c(size());
        for (int i = 0; i < size(); ++i)
            c[i] = labels_[static_cast<std::size_t>(i)] == p ? Scalar(1) : Scalar(0);
        return c;
    }

    /// sizes[p-1] = |{i : z_i = p}|
    std::vector<int> community_sizes() const;

    bool operator==(const LabelVector&) const = default;

private:
    std::vector<int> labels_;
    int k_ = 0;
};

/// Vector of +1/-1 community signs.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::vector<int> signs);

    int size() const { return static_cast<int>(signs_.size()); }
    int operator[](int i) const { return signs_[static_cast<std::size_t>(i)]; }
    std::span<const int> signs() const { return signs_; }

    template <typename Scalar = double>
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> as_vector() const
    {
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(size());
        for (int i = 0; i < size(); ++i)
            x[i] = static_cast<Scalar>(signs_[static_cast<std::size_t>(i)]);
        return x;
    }

    /// Fraction of +1 entries.
    double positive_fraction() const;

    bool operator==(const SignVector&) const = default;

private:
    std::vector<int> signs_;
};

/// Map f : [k] -> {+1,-1}.
class SignMapping {
public:
    SignMapping() = default;
    explicit SignMapping(std::vector<int> table);

    int k() const { return static_cast<int>(table_.size()); }
    int operator()(int label) const { return table_[static_cast<std::size_t>(label - 1)]; }
    std::span<const int> table() const { return table_; }

    /// f(z), entrywise.
    SignVector apply(const LabelVector& z) const;

    bool operator==(const SignMapping&) const = default;

private:
    std::vector<int> table_;
};

/// Per-view SBM parameters: expected average degree d and bias eps.
struct ViewParams {
    double d = 1.0;
    double eps = 0.0;

    ViewParams() = default;
    ViewParams(double d, double eps);

    /// d*eps^2/4 - 1; estimators need this to be positive.
    double delta() const { return d * eps * eps / 4.0 - 1.0; }

    bool operator==(const ViewParams&) const = default;
};

}  // namespace mvsbm
