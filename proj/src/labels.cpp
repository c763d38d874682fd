#include "mvsbm/labels.hpp"

#include "mvsbm/error.hpp"

#include <cmath>
#include <string>

namespace mvsbm {

LabelVector::LabelVector(std::vector<int> labels, int k) : labels_(std::move(labels)), k_(k)
{
    if (k_ < 1)
        throw InvalidParameter("LabelVector: k must be at least 1");
    if (labels_.empty())
        throw InvalidParameter("LabelVector: n must be at least 1");
    for (const int l : labels_) {
        if (l < 1 || l > k_)
            throw InvalidInput("LabelVector: label " + std::to_string(l) + " outside [1.." +
                               std::to_string(k_) + "]");
    }
}

std::vector<int> LabelVector::community_sizes() const
{
    std::vector<int> sizes(static_cast<std::size_t>(k_), 0);
    for (const int l : labels_)
        ++sizes[static_cast<std::size_t>(l - 1)];
    return sizes;
}

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs))
{
    for (const int s : signs_) {
        if (s != 1 && s != -1)
            throw InvalidInput("SignVector: entries must be +1 or -1, got " + std::to_string(s));
    }
}

double SignVector::positive_fraction() const
{
    if (signs_.empty())
        return 0.0;
    std::size_t pos = 0;
    for (const int s : signs_)
        pos += s > 0 ? 1 : 0;
    return static_cast<double>(pos) / static_cast<double>(signs_.size());
}

SignMapping::SignMapping(std::vector<int> table) : table_(std::move(table))
{
    if (table_.empty())
        throw InvalidParameter("SignMapping: k must be at least 1");
    for (const int s : table_) {
        if (s != 1 && s != -1)
            throw InvalidInput("SignMapping: entries must be +1 or -1");
    }
}

SignVector SignMapping::apply(const LabelVector& z) const
{
    if (z.k() > k())
        throw InvalidInput("SignMapping::apply: labels use more communities than the table");
    std::vector<int> x(static_cast<std::size_t>(z.size()));
    for (int i = 0; i < z.size(); ++i)
        x[static_cast<std::size_t>(i)] = (*this)(z[i]);
    return SignVector(std::move(x));
}

ViewParams::ViewParams(double d_, double eps_) : d(d_), eps(eps_)
{
    if (!(d > 0.0) || !std::isfinite(d))
        throw InvalidParameter("ViewParams: d must be positive");
    // The 2-community rates (1 +- eps/2) d/n stay non-negative up to eps = 2.
    if (!(eps >= 0.0 && eps <= 2.0))
        throw InvalidParameter("ViewParams: eps must lie in [0, 2]");
}

}  // namespace mvsbm
