#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bebop/behavior.hpp"
#include "bebop/rng.hpp"

namespace bebop {

// One dimension of the search domain. Ordinal and categorical dimensions are
// carried as level indices; reals and integers as plain values.
struct Dimension {
    std::string name;
    ParamKind kind = ParamKind::Real;
    double lower = 0.0;
    double upper = 1.0;
    std::vector<std::string> values;
    std::optional<double> prior_mode; // value for real/integer, level index otherwise
    double prior_strength = 0.0;      // in (0,1]; 0 disables the prior

    std::size_t level_count() const { return values.size(); }
    double range() const { return upper - lower; }
};

using ParamVector = std::vector<double>;

class ParamSpace {
public:
    ParamSpace() = default;
    explicit ParamSpace(std::vector<Dimension> dims);

    std::size_t size() const { return dims_.size(); }
    bool empty() const { return dims_.empty(); }
    const Dimension& dim(std::size_t i) const { return dims_[i]; }
    const std::vector<Dimension>& dims() const { return dims_; }

    int index_of(const std::string& name) const; // -1 when absent

    // Width of the normalized embedding (categoricals expand to one-hot).
    std::size_t normalized_size() const { return normalized_size_; }

    // Maps a point into the unit hypercube. Categorical dimensions become
    // one-hot blocks scaled by 1/sqrt(2) so a category flip costs distance 1.
    std::vector<double> normalize(const ParamVector& x) const;

    void validate(const ParamVector& x) const;

    // Snaps a relaxed (all-real) vector onto the space: clamp to bounds and
    // round integer/ordinal/categorical entries to the nearest valid value.
    ParamVector snap(const ParamVector& x) const;

    ParamVector sample_uniform(Rng& rng) const;
    // Draws from the per-dimension optimum priors where present (truncated
    // normal around the mode, weighted choice for categoricals) and uniformly
    // elsewhere.
    ParamVector sample_prior(Rng& rng) const;

    // Replaces priors on matching dimension names; used when seeding one
    // optimization stage from the best solution of the previous one.
    void set_prior(const std::string& name, double mode, double strength);

private:
    std::vector<Dimension> dims_;
    std::size_t normalized_size_ = 0;

    double sample_dim(const Dimension& d, Rng& rng, bool use_prior) const;
};

double truncated_normal(Rng& rng, double mode, double sigma, double lo, double hi);

} // namespace bebop
