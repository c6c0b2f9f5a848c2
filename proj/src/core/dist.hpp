#pragma once

#include "core/error.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace nonloc {

/// Finite probability distribution over outcomes of type T with exact
/// rational weights. Support is kept sorted and free of zero-weight
/// outcomes, so equal distributions are structurally equal. T needs
/// operator< and operator==.
template <typename T>
class Dist {
public:
    Dist() = default;

    /// Point mass.
    static Dist point(T outcome) {
        Dist d;
        d.entries_.emplace_back(std::move(outcome), Rational(1));
        return d;
    }

    /// Normalizes raw nonnegative weights: divides by their sum and drops
    /// zero-weight outcomes. Throws AllZero / NegativeWeight.
    static Dist normalize(const std::map<T, Rational>& raw) {
        Rational total;
        for (const auto& [outcome, w] : raw) {
            if (w.is_negative()) {
                throw Error(ErrorCode::NegativeWeight,
                            "negative weight in distribution");
            }
            total += w;
        }
        if (total.is_zero()) {
            throw Error(ErrorCode::AllZero, "all weights are zero");
        }
        Dist d;
        for (const auto& [outcome, w] : raw) {
            if (!w.is_zero()) d.entries_.emplace_back(outcome, w / total);
        }
        return d;
    }

    /// Builds from weights that already sum to exactly 1 (zero entries are
    /// dropped). Throws BadWeights otherwise.
    static Dist from_exact(const std::map<T, Rational>& weights) {
        Rational total;
        Dist d;
        for (const auto& [outcome, w] : weights) {
            if (w.is_negative()) {
                throw Error(ErrorCode::NegativeWeight,
                            "negative weight in distribution");
            }
            total += w;
            if (!w.is_zero()) d.entries_.emplace_back(outcome, w);
        }
        if (total != Rational(1)) {
            throw Error(ErrorCode::BadWeights, "weights do not sum to 1");
        }
        return d;
    }

    // Lvalue-only: iterating entries() of a temporary would dangle.
    const std::vector<std::pair<T, Rational>>& entries() const& {
        return entries_;
    }
    const std::vector<std::pair<T, Rational>>& entries() const&& = delete;

    std::size_t size() const { return entries_.size(); }

    /// Weight of an outcome; 0/1 when outside the support.
    Rational probability(const T& outcome) const {
        auto it = std::lower_bound(
            entries_.begin(), entries_.end(), outcome,
            [](const auto& e, const T& x) { return e.first < x; });
        if (it != entries_.end() && it->first == outcome) return it->second;
        return Rational(0);
    }

    Rational total() const {
        Rational t;
        for (const auto& e : entries_) t += e.second;
        return t;
    }

    friend bool operator==(const Dist& a, const Dist& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const Dist& a, const Dist& b) { return !(a == b); }

    /// Pushforward along f, merging collided outcomes.
    template <typename F>
    auto map(F&& f) const {
        using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
        std::map<U, Rational> acc;
        for (const auto& [outcome, w] : entries_) acc[f(outcome)] += w;
        return Dist<U>::from_exact(acc);
    }

    /// Draws one outcome with its exact probability: picks a uniform
    /// integer below the common denominator and inverts the cumulative
    /// integer weights. Deterministic given the stream state.
    T sample(SeedStream& stream) const {
        BigInt common = 1;
        for (const auto& e : entries_) {
            common = boost::multiprecision::lcm(common, e.second.den());
        }
        BigInt draw = stream.uniform_below(common);
        BigInt cumulative = 0;
        for (const auto& e : entries_) {
            cumulative += e.second.num() * (common / e.second.den());
            if (draw < cumulative) return e.first;
        }
        return entries_.back().first;  // unreachable for valid weights
    }

private:
    // sorted by outcome, weights > 0, total exactly 1
    std::vector<std::pair<T, Rational>> entries_;
};

/// Convex combination of distributions; weights must sum to exactly 1.
template <typename T>
Dist<T> mix(const std::vector<std::pair<Rational, Dist<T>>>& components) {
    Rational total;
    std::map<T, Rational> acc;
    for (const auto& [weight, dist] : components) {
        if (weight.is_negative()) {
            throw Error(ErrorCode::BadWeights, "negative mixture weight");
        }
        total += weight;
        if (weight.is_zero()) continue;
        for (const auto& [outcome, w] : dist.entries()) acc[outcome] += weight * w;
    }
    if (total != Rational(1)) {
        throw Error(ErrorCode::BadWeights, "mixture weights do not sum to 1");
    }
    return Dist<T>::from_exact(acc);
}

}  // namespace nonloc
