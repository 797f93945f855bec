#include "bebop/space.hpp"

#include <algorithm>
#include <stdexcept>

namespace bebop {

namespace {

constexpr double kOneHotScale = 0.7071067811865476; // 1/sqrt(2)

} // namespace

ParamSpace::ParamSpace(std::vector<Dimension> dims) : dims_(std::move(dims)) {
    for (const auto& d : dims_) {
        switch (d.kind) {
        case ParamKind::Real:
        case ParamKind::Integer:
            if (!(d.lower < d.upper)) {
                throw std::invalid_argument("dimension " + d.name + ": lower must be < upper");
            }
            if (d.prior_mode && (*d.prior_mode < d.lower || *d.prior_mode > d.upper)) {
                throw std::invalid_argument("dimension " + d.name + ": prior mode outside bounds");
            }
            normalized_size_ += 1;
            break;
        case ParamKind::Ordinal:
            if (d.values.empty()) {
                throw std::invalid_argument("dimension " + d.name + ": empty ordinal levels");
            }
            normalized_size_ += 1;
            break;
        case ParamKind::Categorical:
            if (d.values.empty()) {
                throw std::invalid_argument("dimension " + d.name + ": empty categorical levels");
            }
            normalized_size_ += d.values.size();
            break;
        }
    }
}

int ParamSpace::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i].name == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

std::vector<double> ParamSpace::normalize(const ParamVector& x) const {
    validate(x);
    std::vector<double> out;
    out.reserve(normalized_size_);
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        const Dimension& d = dims_[i];
        switch (d.kind) {
        case ParamKind::Real:
        case ParamKind::Integer:
            out.push_back((x[i] - d.lower) / d.range());
            break;
        case ParamKind::Ordinal: {
            const double denom = d.values.size() > 1 ? double(d.values.size() - 1) : 1.0;
            out.push_back(x[i] / denom);
            break;
        }
        case ParamKind::Categorical: {
            const auto level = static_cast<std::size_t>(x[i]);
            for (std::size_t k = 0; k < d.values.size(); ++k) {
                out.push_back(k == level ? kOneHotScale : 0.0);
            }
            break;
        }
        }
    }
    return out;
}

void ParamSpace::validate(const ParamVector& x) const {
    if (x.size() != dims_.size()) {
        throw std::invalid_argument("parameter vector has wrong dimension");
    }
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        const Dimension& d = dims_[i];
        switch (d.kind) {
        case ParamKind::Real:
            if (x[i] < d.lower || x[i] > d.upper) {
                throw std::invalid_argument("value out of bounds for " + d.name);
            }
            break;
        case ParamKind::Integer:
            if (x[i] < d.lower || x[i] > d.upper || x[i] != std::round(x[i])) {
                throw std::invalid_argument("invalid integer value for " + d.name);
            }
            break;
        case ParamKind::Ordinal:
        case ParamKind::Categorical: {
            if (x[i] != std::round(x[i]) || x[i] < 0.0 ||
                x[i] >= static_cast<double>(d.values.size())) {
                throw std::invalid_argument("invalid level index for " + d.name);
            }
            break;
        }
        }
    }
}

ParamVector ParamSpace::snap(const ParamVector& x) const {
    if (x.size() != dims_.size()) {
        throw std::invalid_argument("parameter vector has wrong dimension");
    }
    ParamVector out(x.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        const Dimension& d = dims_[i];
        double v = x[i];
        switch (d.kind) {
        case ParamKind::Real:
            out[i] = std::clamp(v, d.lower, d.upper);
            break;
        case ParamKind::Integer:
            out[i] = std::clamp(std::round(v), d.lower, d.upper);
            break;
        case ParamKind::Ordinal:
        case ParamKind::Categorical: {
            const double hi = static_cast<double>(d.values.size() - 1);
            out[i] = std::clamp(std::round(v), 0.0, hi);
            break;
        }
        }
    }
    return out;
}

double truncated_normal(Rng& rng, double mode, double sigma, double lo, double hi) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const double v = mode + sigma * rng.normal();
        if (v >= lo && v <= hi) {
            return v;
        }
    }
    return std::clamp(mode, lo, hi);
}

double ParamSpace::sample_dim(const Dimension& d, Rng& rng, bool use_prior) const {
    const bool has_prior = use_prior && d.prior_mode.has_value() && d.prior_strength > 0.0;
    switch (d.kind) {
    case ParamKind::Real: {
        if (!has_prior) {
            return rng.uniform(d.lower, d.upper);
        }
        const double sigma =
            std::max(0.5 * d.range() * (1.0 - d.prior_strength), 0.01 * d.range());
        return truncated_normal(rng, *d.prior_mode, sigma, d.lower, d.upper);
    }
    case ParamKind::Integer: {
        if (!has_prior) {
            return std::floor(rng.uniform(d.lower, d.upper + 1.0));
        }
        const double sigma =
            std::max(0.5 * d.range() * (1.0 - d.prior_strength), 0.5);
        return std::clamp(std::round(truncated_normal(rng, *d.prior_mode, sigma, d.lower, d.upper)),
                          d.lower, d.upper);
    }
    case ParamKind::Ordinal:
    case ParamKind::Categorical: {
        const auto n = d.values.size();
        if (!has_prior) {
            return static_cast<double>(rng.below(n));
        }
        // Mode level gets the prior mass, the remainder spreads uniformly.
        const auto mode_level = static_cast<std::size_t>(*d.prior_mode);
        const double rest = (1.0 - d.prior_strength) / static_cast<double>(n);
        const double mode_w = d.prior_strength + rest;
        double u = rng.uniform();
        for (std::size_t k = 0; k < n; ++k) {
            const double w = (k == mode_level) ? mode_w : rest;
            if (u < w || k + 1 == n) {
                return static_cast<double>(k);
            }
            u -= w;
        }
        return static_cast<double>(mode_level);
    }
    }
    return d.lower;
}

ParamVector ParamSpace::sample_uniform(Rng& rng) const {
    ParamVector out(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        out[i] = sample_dim(dims_[i], rng, false);
    }
    return out;
}

ParamVector ParamSpace::sample_prior(Rng& rng) const {
    ParamVector out(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        out[i] = sample_dim(dims_[i], rng, true);
    }
    return out;
}

void ParamSpace::set_prior(const std::string& name, double mode, double strength) {
    const int i = index_of(name);
    if (i < 0) {
        return;
    }
    Dimension& d = dims_[static_cast<std::size_t>(i)];
    if (d.kind == ParamKind::Real || d.kind == ParamKind::Integer) {
        mode = std::clamp(mode, d.lower, d.upper);
    }
    d.prior_mode = mode;
    d.prior_strength = strength;
}

} // namespace bebop
