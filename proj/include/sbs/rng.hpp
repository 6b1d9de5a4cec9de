#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

// Deterministic sampling primitives. Everything is built on top of raw
// 64-bit engine output so that a given seed produces the same stream on
// every platform; std::*_distribution is avoided on purpose because its
// algorithms are implementation-defined.

namespace sbs {

using RngEngine = std::mt19937_64;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

/// Engine seeded through a SplitMix64 expansion of `seed`.
inline RngEngine seeded_engine(std::uint64_t seed) {
    std::uint64_t s = seed;
    // mt19937_64 takes a single 64-bit seed; pre-mixing avoids the
    // correlated states produced by small consecutive seeds.
    return RngEngine(detail::splitmix64(s));
}

/// Independent substream `index` of the master seed. Used to hand each
/// replicate / thread its own engine.
inline RngEngine substream(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t s = master_seed;
    std::uint64_t a = detail::splitmix64(s);
    s = a ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return RngEngine(detail::splitmix64(s));
}

/// Uniform draw on the open interval (0,1); never returns 0 or 1.
template <typename Engine>
double uniform01(Engine& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal via Box-Muller (two uniforms per call, second value
/// discarded to keep the stream position independent of call history).
template <typename Engine>
double normal01(Engine& rng) {
    const double u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

/// Gamma(shape, 1) by Marsaglia-Tsang squeeze; requires shape >= 1.
template <typename Engine>
double gamma_mt(Engine& rng, double shape) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal01(rng);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        const double u = uniform01(rng);
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

/// Gamma(shape, 1). Shapes below 1 use the boost G_a = G_{a+1} U^{1/a};
/// the result underflows to 0 for very small shapes, use log_gamma_draw
/// when the logarithm is what is actually needed.
template <typename Engine>
double gamma_draw(Engine& rng, double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("gamma_draw: shape must be > 0");
    if (shape >= 1.0) return gamma_mt(rng, shape);
    const double g = gamma_mt(rng, shape + 1.0);
    const double u = uniform01(rng);
    return g * std::pow(u, 1.0 / shape);
}

/// log of a Gamma(shape, 1) draw, stable for arbitrarily small shapes.
template <typename Engine>
double log_gamma_draw(Engine& rng, double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("log_gamma_draw: shape must be > 0");
    if (shape >= 1.0) return std::log(gamma_mt(rng, shape));
    const double g = gamma_mt(rng, shape + 1.0);
    const double u = uniform01(rng);
    return std::log(g) + std::log(u) / shape;
}

/// Dirichlet draw proportional to independent Gamma(alpha_i) variables.
/// Entries with alpha_i == 0 are structural zeros (the corresponding
/// coordinate is degenerate at 0). When any positive alpha is small the
/// normalization runs in log space so that tiny shapes do not underflow
/// to an all-zero vector.
template <typename Engine>
std::vector<double> dirichlet(Engine& rng, std::span<const double> alpha) {
    const std::size_t n = alpha.size();
    std::vector<double> out(n, 0.0);
    double min_pos = std::numeric_limits<double>::infinity();
    std::size_t n_pos = 0;
    for (double a : alpha) {
        if (a < 0.0 || !std::isfinite(a))
            throw std::invalid_argument("dirichlet: alpha entries must be finite and >= 0");
        if (a > 0.0) { min_pos = std::min(min_pos, a); ++n_pos; }
    }
    if (n_pos == 0) throw std::invalid_argument("dirichlet: needs at least one positive alpha");
    if (n_pos == 1) {
        for (std::size_t i = 0; i < n; ++i)
            if (alpha[i] > 0.0) out[i] = 1.0;
        return out;
    }
    if (min_pos >= 0.1) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (alpha[i] > 0.0) total += out[i] = gamma_draw(rng, alpha[i]);
        for (std::size_t i = 0; i < n; ++i) out[i] /= total;
        return out;
    }
    // Small shapes: draw log-gammas, normalize with log-sum-exp, so a
    // Dirichlet(1e-9, ...) still produces a valid (near-vertex) point.
    std::vector<double> lg(n, -std::numeric_limits<double>::infinity());
    double lmax = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] > 0.0) {
            lg[i] = log_gamma_draw(rng, alpha[i]);
            lmax = std::max(lmax, lg[i]);
        }
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (alpha[i] > 0.0) sum += std::exp(lg[i] - lmax);
    const double lse = lmax + std::log(sum);
    for (std::size_t i = 0; i < n; ++i)
        if (alpha[i] > 0.0) out[i] = std::exp(lg[i] - lse);
    return out;
}

/// Beta(a, b) draw; a == 0 gives 0, b == 0 gives 1 (degenerate limits).
template <typename Engine>
double beta_draw(Engine& rng, double a, double b) {
    if (a < 0.0 || b < 0.0 || (a == 0.0 && b == 0.0))
        throw std::invalid_argument("beta_draw: invalid parameters");
    if (a == 0.0) return 0.0;
    if (b == 0.0) return 1.0;
    const double la = log_gamma_draw(rng, a);
    const double lb = log_gamma_draw(rng, b);
    const double m = std::max(la, lb);
    return std::exp(la - m) / (std::exp(la - m) + std::exp(lb - m));
}

/// Index drawn with probability weights[i] / sum(weights).
template <typename Engine>
int categorical(Engine& rng, std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0 || !std::isfinite(w))
            throw std::invalid_argument("categorical: weights must be finite and >= 0");
        total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("categorical: all weights are zero");
    double r = uniform01(rng) * total;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        r -= weights[i];
        if (r < 0.0) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
}

} // namespace sbs
