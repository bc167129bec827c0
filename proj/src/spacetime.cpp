#include "ordinal/spacetime.hpp"

#include <algorithm>

#include "ordinal/error.hpp"

namespace ordinal {

bool causally_precedes(const Event& e1, const Event& e2) {
    const Rational dt = e2.t - e1.t;
    const Rational dx = e2.x - e1.x;
    return dt >= dx && dt >= -dx;
}

ObserverChain::ObserverChain(std::string id, Event origin, Rational k, Rational tick, IndexRange range)
    : id_(std::move(id)), origin_(std::move(origin)), k_(std::move(k)), tick_(std::move(tick)), range_(range) {
    if (k_ <= 0) throw Error(ErrorCode::NonPositiveBoost, "chain '" + id_ + "' has k = " + to_string(k_));
    if (tick_ <= 0) throw Error(ErrorCode::InvalidInput, "chain '" + id_ + "' has a non-positive tick");
    if (range_.lo > range_.hi) throw Error(ErrorCode::InvalidInput, "chain '" + id_ + "' has an empty index range");
}

Rational ObserverChain::beta() const { return (k_ * k_ - 1) / (k_ * k_ + 1); }
Rational ObserverChain::gamma() const { return (k_ * k_ + 1) / (2 * k_); }

Event ObserverChain::element(std::int64_t i) const {
    const Rational step = Rational(i) * tick_;
    const Rational dp = step * k_;
    const Rational dq = step / k_;
    return Event{id_ + "[" + std::to_string(i) + "]", origin_.t + (dp + dq) / 2, origin_.x + (dp - dq) / 2};
}

std::int64_t project(const Event& e, const ObserverChain& chain) {
    auto [lo, hi] = chain.range();
    if (!causally_precedes(e, chain.element(hi)))
        throw Error(ErrorCode::NotQuantifiable,
                    "event '" + e.id + "' is not below any element of chain '" + chain.id() + "' in range");
    // The chain is totally ordered, so inclusion is monotone in the index.
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (causally_precedes(e, chain.element(mid))) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

std::vector<std::int64_t> coordinatize(const Event& e, std::span<const ObserverChain> chains) {
    std::vector<std::int64_t> out;
    out.reserve(chains.size());
    for (const auto& c : chains) out.push_back(project(e, c));
    return out;
}

namespace {

bool successive_to_successive(const ObserverChain& from, const ObserverChain& onto, IndexRange range) {
    std::int64_t prev = project(from.element(range.lo), onto);
    for (std::int64_t i = range.lo + 1; i <= range.hi; ++i) {
        const std::int64_t next = project(from.element(i), onto);
        if (next != prev + 1) return false;
        prev = next;
    }
    return true;
}

IndexRange span_of(std::int64_t a, std::int64_t b) { return {std::min(a, b), std::max(a, b) + 1}; }

}  // namespace

bool check_synchronized(const ObserverChain& p, const ObserverChain& q, IndexRange p_range, IndexRange q_range) {
    return successive_to_successive(p, q, p_range) && successive_to_successive(q, p, q_range);
}

bool check_synchronized(const ObserverChain& p, const ObserverChain& q, IndexRange range) {
    return check_synchronized(p, q, range, range);
}

IntervalPair measure_interval(const Event& e1, const Event& e2, const ObserverChain& p, const ObserverChain& q) {
    const auto p1 = project(e1, p);
    const auto p2 = project(e2, p);
    const auto q1 = project(e1, q);
    const auto q2 = project(e2, q);
    return {p.label(p2) - p.label(p1), q.label(q2) - q.label(q1)};
}

IntervalPair interval_pair(const Event& e1, const Event& e2, const ObserverChain& p, const ObserverChain& q) {
    const auto p1 = project(e1, p);
    const auto p2 = project(e2, p);
    const auto q1 = project(e1, q);
    const auto q2 = project(e2, q);
    if (!check_synchronized(p, q, span_of(p1, p2), span_of(q1, q2)))
        throw Error(ErrorCode::NotSynchronized, "chains '" + p.id() + "' and '" + q.id() + "'");
    return {p.label(p2) - p.label(p1), q.label(q2) - q.label(q1)};
}

std::pair<Rational, Rational> decompose(const IntervalPair& ip) { return {ip.dt(), ip.dx()}; }

IntervalPair recompose(const Rational& dt, const Rational& dx) { return {dt + dx, dt - dx}; }

Rational interval_scalar(const IntervalPair& ip) { return ip.ds2(); }

LorentzBoost::LorentzBoost(Rational k) : k_(std::move(k)) {
    if (k_ <= 0) throw Error(ErrorCode::NonPositiveBoost, "k = " + to_string(k_));
}

Rational LorentzBoost::beta() const { return (k_ * k_ - 1) / (k_ * k_ + 1); }
Rational LorentzBoost::gamma() const { return (k_ * k_ + 1) / (2 * k_); }

IntervalPair LorentzBoost::apply(const IntervalPair& ip) const { return {ip.dp * k_, ip.dq / k_}; }

LorentzBoost boost_frame(const Rational& k) { return LorentzBoost(k); }

namespace {

void check_grid_side(std::size_t n) {
    if (n < 1 || n > kMaxGridSide)
        throw Error(ErrorCode::BoundExceeded, "grid side " + std::to_string(n) + " outside [1, 64]");
}

}  // namespace

std::vector<Event> causal_grid(std::size_t n) {
    check_grid_side(n);
    std::vector<Event> out;
    out.reserve(n * n);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t x = 0; x < n; ++x)
            out.push_back({"e_" + std::to_string(t) + "_" + std::to_string(x), Rational(t), Rational(x)});
    return out;
}

Poset causal_grid_poset(std::size_t n) {
    const auto events = causal_grid(n);
    std::vector<ElementId> ids;
    ids.reserve(events.size());
    for (const auto& e : events) ids.push_back(e.id);
    // On the integer grid every relation e1 < e2 with t2 - t1 >= 2 passes
    // through an event one step later and one step toward x2, so the covers
    // are exactly the relations one time step apart.
    std::vector<Cover> covers;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        for (std::size_t x = 0; x < n; ++x) {
            const Event& a = events[t * n + x];
            for (std::size_t y = (x == 0 ? 0 : x - 1); y <= x + 1 && y < n; ++y) {
                const Event& b = events[(t + 1) * n + y];
                if (causally_precedes(a, b)) covers.emplace_back(a.id, b.id);
            }
        }
    }
    return Poset::build(std::move(ids), covers);
}

}  // namespace ordinal
