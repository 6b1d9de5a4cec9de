#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sbs {

/// Fixed discretization of the time axis into bins (tau_{t-1}, tau_t],
/// t = 1..horizon, with tau_0 = 0. A raw time equal to an edge belongs
/// to the bin it closes.
class TimeGrid {
public:
    /// Regular grid with tau_t = t * bin_width (bin_width defaults to 1).
    explicit TimeGrid(int horizon, double bin_width = 1.0) {
        if (horizon < 1) throw std::invalid_argument("TimeGrid: horizon must be >= 1");
        if (!(bin_width > 0.0)) throw std::invalid_argument("TimeGrid: bin width must be > 0");
        edges_.resize(static_cast<std::size_t>(horizon) + 1);
        for (int t = 0; t <= horizon; ++t) edges_[t] = bin_width * t;
    }

    /// Grid from explicit edges tau_0 = 0 < tau_1 < ... < tau_T.
    explicit TimeGrid(std::vector<double> edges) : edges_(std::move(edges)) {
        if (edges_.size() < 2) throw std::invalid_argument("TimeGrid: need at least one bin");
        if (edges_.front() != 0.0) throw std::invalid_argument("TimeGrid: edges must start at 0");
        for (std::size_t i = 1; i < edges_.size(); ++i)
            if (!(edges_[i] > edges_[i - 1]) || !std::isfinite(edges_[i]))
                throw std::invalid_argument("TimeGrid: edges must be strictly increasing");
    }

    int horizon() const { return static_cast<int>(edges_.size()) - 1; }
    double edge(int t) const { return edges_.at(static_cast<std::size_t>(t)); }
    double width(int t) const { return edge(t) - edge(t - 1); }

    /// Bin index of a raw event time: smallest t with time <= tau_t.
    int bin_of(double time) const {
        if (!(time > 0.0)) throw std::out_of_range("TimeGrid: time must be > 0");
        if (time > edges_.back()) throw std::out_of_range("TimeGrid: time beyond horizon");
        auto it = std::lower_bound(edges_.begin(), edges_.end(), time);
        return static_cast<int>(it - edges_.begin());
    }

    /// Prefix of this grid covering the first `new_horizon` bins.
    TimeGrid truncated(int new_horizon) const {
        if (new_horizon < 1 || new_horizon > horizon())
            throw std::invalid_argument("TimeGrid: bad truncation horizon");
        return TimeGrid(std::vector<double>(edges_.begin(), edges_.begin() + new_horizon + 1));
    }

    bool operator==(const TimeGrid& other) const { return edges_ == other.edges_; }

private:
    std::vector<double> edges_;
};

} // namespace sbs
