#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordinal/poset.hpp"
#include "ordinal/rational.hpp"

namespace ordinal {

// A point of the 1+1 causal order. The coordinates only place fixtures; every
// operation below reads them through causally_precedes().
struct Event {
    std::string id;
    Rational t;
    Rational x;
};

// e1 <= e2 iff (t2 - t1) >= |x2 - x1|.
bool causally_precedes(const Event& e1, const Event& e2);

struct IndexRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

// An arithmetic sequence of events used as a measuring chain.
//
// With light-cone components p = t + x and q = t - x, element i sits at
// origin + (i*k*tick, i*tick/k). `tick` is the proper time between elements
// and k > 0 the boost factor: the chain moves with velocity
// beta = (k^2 - 1)/(k^2 + 1). Element i carries the numeric label i*tick.
class ObserverChain {
public:
    ObserverChain(std::string id, Event origin, Rational k, Rational tick, IndexRange range);

    const std::string& id() const noexcept { return id_; }
    const Event& origin() const noexcept { return origin_; }
    const Rational& k() const noexcept { return k_; }
    const Rational& tick() const noexcept { return tick_; }
    IndexRange range() const noexcept { return range_; }

    Rational beta() const;
    Rational gamma() const;

    Event element(std::int64_t i) const;
    Rational label(std::int64_t i) const { return Rational(i) * tick_; }

private:
    std::string id_;
    Event origin_;
    Rational k_;
    Rational tick_;
    IndexRange range_;
};

// Least index i in the chain's range with e <= chain[i]. Throws
// NotQuantifiable when no element in range includes e.
std::int64_t project(const Event& e, const ObserverChain& chain);

std::vector<std::int64_t> coordinatize(const Event& e, std::span<const ObserverChain> chains);

// Successive elements of each chain (indices in `p_range` / `q_range`)
// project onto successive elements of the other.
bool check_synchronized(const ObserverChain& p, const ObserverChain& q, IndexRange p_range, IndexRange q_range);
bool check_synchronized(const ObserverChain& p, const ObserverChain& q, IndexRange range);

struct IntervalPair {
    Rational dp;
    Rational dq;

    Rational dt() const { return (dp + dq) / 2; }
    Rational dx() const { return (dp - dq) / 2; }
    Rational ds2() const { return dp * dq; }

    friend bool operator==(const IntervalPair&, const IntervalPair&) = default;
};

// Label differences of the two events' projections, without any
// synchronization check.
IntervalPair measure_interval(const Event& e1, const Event& e2, const ObserverChain& p, const ObserverChain& q);

// As measure_interval, but first requires the pair to be synchronized over
// the indices the projections touch. Throws NotSynchronized.
IntervalPair interval_pair(const Event& e1, const Event& e2, const ObserverChain& p, const ObserverChain& q);

// (dt, dx) with (dp, dq) = (dt, dt) + (dx, -dx).
std::pair<Rational, Rational> decompose(const IntervalPair& ip);
IntervalPair recompose(const Rational& dt, const Rational& dx);

// dp * dq = dt^2 - dx^2.
Rational interval_scalar(const IntervalPair& ip);

// Active boost of light-cone components: (dp, dq) -> (k dp, dq / k), which
// in (dt, dx) reads dt' = gamma (dt + beta dx), dx' = gamma (dx + beta dt)
// with beta = (k^2 - 1)/(k^2 + 1), gamma = (k^2 + 1)/(2k). A chain pair with
// boost factor k therefore measures boost_frame(1/k) of the rest-frame pair.
class LorentzBoost {
public:
    explicit LorentzBoost(Rational k);

    const Rational& k() const noexcept { return k_; }
    Rational beta() const;
    Rational gamma() const;

    IntervalPair apply(const IntervalPair& ip) const;
    LorentzBoost then(const LorentzBoost& next) const { return LorentzBoost(k_ * next.k_); }
    LorentzBoost inverse() const { return LorentzBoost(1 / k_); }

private:
    Rational k_;
};

LorentzBoost boost_frame(const Rational& k);

inline constexpr std::size_t kMaxGridSide = 64;

// Events at integer (t, x), 0 <= t, x < n, with ids "e_<t>_<x>".
std::vector<Event> causal_grid(std::size_t n);
// The same events as a poset under the causal order.
Poset causal_grid_poset(std::size_t n);

}  // namespace ordinal
