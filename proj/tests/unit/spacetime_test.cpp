#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ordinal/error.hpp"
#include "ordinal/spacetime.hpp"

using namespace ordinal;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an ordinal::Error");
    return ErrorCode::InvalidInput;
}

Event ev(Rational t, Rational x, std::string id = "e") { return {std::move(id), std::move(t), std::move(x)}; }

ObserverChain rest_chain(std::string id, Rational x, Rational tick = 1, IndexRange range = {-100, 100}) {
    return ObserverChain(std::move(id), ev(0, std::move(x)), 1, std::move(tick), range);
}

struct FramePair {
    ObserverChain p;
    ObserverChain q;
};

// Left chain measures t + x, right chain t - x. Ticks keep every projection of
// integer events exact.
FramePair frame(const Rational& k, const Rational& tick) {
    const IndexRange range{-5000, 5000};
    return {ObserverChain("P", ev(0, -20), k, tick, range), ObserverChain("Q", ev(0, 20), k, tick, range)};
}

std::vector<FramePair> three_frames() {
    return {frame(1, 1), frame(Rational(3, 2), Rational(1, 6)), frame(2, Rational(1, 4))};
}

std::int64_t brute_project(const Event& e, const ObserverChain& c) {
    return oracle::first_including<Rational>(c.range().lo, c.range().hi, e.t, e.x, [&](std::int64_t i) {
        const Event el = c.element(i);
        return std::pair<Rational, Rational>{el.t, el.x};
    });
}

}  // namespace

TEST_SUITE("spacetime") {

TEST_CASE("causal order") {
    CHECK(causally_precedes(ev(0, 0), ev(2, 1)));
    CHECK_FALSE(causally_precedes(ev(0, 0), ev(1, 2)));
    CHECK(causally_precedes(ev(0, 0), ev(1, 1)));
    CHECK_FALSE(causally_precedes(ev(1, 0), ev(1, 2)));
    CHECK_FALSE(causally_precedes(ev(1, 2), ev(1, 0)));
}

TEST_CASE("property: causal order is a partial order on random rational events") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
    auto random_event = [&] { return ev(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))); };
    for (int round = 0; round < 3000; ++round) {
        const auto a = random_event(), b = random_event(), c = random_event();
        REQUIRE(causally_precedes(a, a));
        if (causally_precedes(a, b) && causally_precedes(b, a)) REQUIRE((a.t == b.t && a.x == b.x));
        if (causally_precedes(a, b) && causally_precedes(b, c)) REQUIRE(causally_precedes(a, c));
    }
}

TEST_CASE("chain construction") {
    CHECK(code_of([] { ObserverChain("P", ev(0, 0), 0, 1, {0, 1}); }) == ErrorCode::NonPositiveBoost);
    CHECK(code_of([] { ObserverChain("P", ev(0, 0), -2, 1, {0, 1}); }) == ErrorCode::NonPositiveBoost);
    CHECK(code_of([] { ObserverChain("P", ev(0, 0), 1, 0, {0, 1}); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { ObserverChain("P", ev(0, 0), 1, 1, {3, 1}); }) == ErrorCode::InvalidInput);
    const ObserverChain c("P", ev(0, 0), 2, Rational(1, 4), {0, 10});
    CHECK(c.beta() == Rational(3, 5));
    CHECK(c.gamma() == Rational(5, 4));
    // Element 4 moves (p, q) by (2, 1/2).
    const Event e4 = c.element(4);
    CHECK(e4.t + e4.x == 2);
    CHECK(e4.t - e4.x == Rational(1, 2));
    CHECK(c.label(4) == 1);
    for (std::int64_t i = 0; i < 10; ++i) CHECK(causally_precedes(c.element(i), c.element(i + 1)));
}

TEST_CASE("projection examples") {
    const auto p = rest_chain("P", 0, 1, {0, 100});
    CHECK(project(ev(2, 1), p) == 3);
    CHECK(project(p.element(7), p) == 7);
    CHECK(code_of([] { project(ev(0, 100), rest_chain("P", 0, 1, {0, 10})); }) == ErrorCode::NotQuantifiable);
}

TEST_CASE("coordinatize") {
    const std::vector<ObserverChain> chains{rest_chain("P", 0), rest_chain("Q", 5)};
    CHECK(coordinatize(ev(2, 1), chains) == std::vector<std::int64_t>{3, 6});
    CHECK(coordinatize(ev(2, 1), std::span<const ObserverChain>{}).empty());
    // An event on the first chain at index k, second chain at distance d.
    for (std::int64_t k = 0; k < 6; ++k)
        for (int d = 1; d < 5; ++d) {
            const std::vector<ObserverChain> pair{rest_chain("P", 0), rest_chain("Q", d)};
            CHECK(coordinatize(ev(k, 0), pair) == std::vector<std::int64_t>{k, k + d});
        }
}

TEST_CASE("property: projection matches a linear scan and is monotone") {
    std::vector<ObserverChain> chains{rest_chain("R0", -3), rest_chain("R1", 12, Rational(1, 2)),
                                      ObserverChain("B1", ev(-2, -30), 2, Rational(1, 3), {-400, 400}),
                                      ObserverChain("B2", ev(0, 30), Rational(2, 3), Rational(1, 2), {-400, 400}),
                                      ObserverChain("B3", ev(1, 4), Rational(5, 4), 1, {-400, 400})};
    const auto events = causal_grid(8);
    for (const auto& c : chains) {
        for (const auto& e : events) REQUIRE(project(e, c) == brute_project(e, c));
        for (const auto& a : events)
            for (const auto& b : events)
                if (causally_precedes(a, b)) REQUIRE(project(a, c) <= project(b, c));
    }
}

TEST_CASE("synchronization") {
    CHECK(check_synchronized(rest_chain("P", 0), rest_chain("Q", 4), {0, 20}));
    CHECK_FALSE(check_synchronized(rest_chain("P", 0), rest_chain("Q", 4, 2), {0, 20}));
    CHECK(check_synchronized(rest_chain("P", 0), rest_chain("P", 0), {0, 20}));
    for (const auto& f : three_frames()) CHECK(check_synchronized(f.p, f.q, {-50, 50}));
    // A boosted chain against a rest chain is not synchronized.
    CHECK_FALSE(check_synchronized(frame(1, 1).p, frame(2, Rational(1, 4)).q, {0, 20}));
    CHECK(code_of([] { check_synchronized(rest_chain("P", 0, 1, {0, 5}), rest_chain("Q", 4, 1, {0, 5}), {0, 5}); }) ==
          ErrorCode::NotQuantifiable);
}

TEST_CASE("interval pair examples") {
    const auto p = rest_chain("P", 0);
    const auto q = rest_chain("Q", 5);
    const auto ip = interval_pair(ev(0, 0), ev(2, 1), p, q);
    CHECK(ip == IntervalPair{3, 1});
    CHECK(decompose(ip) == std::pair<Rational, Rational>{2, 1});
    CHECK(interval_scalar(ip) == 3);
    CHECK(ip.ds2() == ip.dt() * ip.dt() - ip.dx() * ip.dx());

    CHECK(interval_pair(ev(2, 1), ev(2, 1), p, q) == IntervalPair{0, 0});
    const auto light = interval_pair(ev(0, 0), ev(1, 1), p, q);
    CHECK(light.dq == 0);
    CHECK(light.ds2() == 0);

    CHECK(code_of([&] { interval_pair(ev(0, 0), ev(2, 1), p, rest_chain("Q", 5, 2)); }) ==
          ErrorCode::NotSynchronized);
}

TEST_CASE("decomposition") {
    CHECK(decompose({3, 1}) == std::pair<Rational, Rational>{2, 1});
    CHECK(decompose({7, 7}) == std::pair<Rational, Rational>{7, 0});
    CHECK(decompose({1, -1}) == std::pair<Rational, Rational>{0, 1});
    CHECK(interval_scalar({7, 7}) == 49);
    CHECK(interval_scalar({1, -1}) == -1);
    CHECK(recompose(2, 1) == IntervalPair{3, 1});
}

TEST_CASE("boost frames") {
    const IntervalPair rest{3, 1};
    CHECK(boost_frame(1).apply(rest) == rest);
    const auto boosted = boost_frame(2).apply(rest);
    CHECK(boosted == IntervalPair{6, Rational(1, 2)});
    CHECK(boosted.ds2() == 3);
    CHECK(boosted.dt() == Rational(13, 4));
    CHECK(boosted.dx() == Rational(11, 4));
    const LorentzBoost b(2);
    CHECK(b.beta() == Rational(3, 5));
    CHECK(b.gamma() == Rational(5, 4));
    // Brute-force rational check of the sign convention.
    CHECK(boosted.dt() == b.gamma() * (rest.dt() + b.beta() * rest.dx()));
    CHECK(boosted.dx() == b.gamma() * (rest.dx() + b.beta() * rest.dt()));

    const Rational k1(3, 2), k2(5, 7);
    CHECK(boost_frame(k1).then(boost_frame(k2)).apply(rest) == boost_frame(k2).apply(boost_frame(k1).apply(rest)));
    CHECK(boost_frame(k1 * k2).apply(rest) == boost_frame(k2).apply(boost_frame(k1).apply(rest)));
    CHECK(boost_frame(k1).inverse().apply(boost_frame(k1).apply(rest)) == rest);
    CHECK(code_of([] { boost_frame(0); }) == ErrorCode::NonPositiveBoost);
}

TEST_CASE("boosted chain pairs measure the boosted interval") {
    const Event e1 = ev(0, 0), e2 = ev(2, 1);
    const auto frames = three_frames();
    const auto rest = interval_pair(e1, e2, frames[0].p, frames[0].q);
    CHECK(rest == IntervalPair{3, 1});
    for (const auto& f : frames) {
        const auto measured = interval_pair(e1, e2, f.p, f.q);
        CHECK(measured == boost_frame(1 / f.p.k()).apply(rest));
        CHECK(measured.ds2() == 3);
        const Rational beta = f.p.beta(), gamma = f.p.gamma();
        CHECK(measured.dt() == gamma * (rest.dt() - beta * rest.dx()));
        CHECK(measured.dx() == gamma * (rest.dx() - beta * rest.dt()));
    }
    CHECK(interval_pair(e1, e2, frames[2].p, frames[2].q) == IntervalPair{Rational(3, 2), 2});
    CHECK(interval_pair(e1, e2, frames[1].p, frames[1].q) == IntervalPair{2, Rational(3, 2)});
}

TEST_CASE("property: frame invariance over a grid of events") {
    const auto events = causal_grid(6);
    const auto frames = three_frames();
    // Synchronize each frame once over every index the grid projects onto.
    for (const auto& f : frames) {
        std::int64_t plo = INT64_MAX, phi = INT64_MIN, qlo = INT64_MAX, qhi = INT64_MIN;
        for (const auto& e : events) {
            plo = std::min(plo, project(e, f.p));
            phi = std::max(phi, project(e, f.p));
            qlo = std::min(qlo, project(e, f.q));
            qhi = std::max(qhi, project(e, f.q));
        }
        REQUIRE(check_synchronized(f.p, f.q, {plo, phi}, {qlo, qhi}));
    }
    std::size_t pairs = 0;
    for (const auto& a : events) {
        for (const auto& b : events) {
            std::vector<IntervalPair> measured;
            for (const auto& f : frames) measured.push_back(measure_interval(a, b, f.p, f.q));
            REQUIRE(measured[0] == IntervalPair{(b.t + b.x) - (a.t + a.x), (b.t - b.x) - (a.t - a.x)});
            for (const auto& m : measured) {
                REQUIRE(m.ds2() == measured[0].ds2());
                const auto [dt, dx] = decompose(m);
                REQUIRE(recompose(dt, dx) == m);
            }
            ++pairs;
        }
    }
    CHECK(pairs == 36 * 36);
}

TEST_CASE("property: desynchronized pairs give frame-dependent intervals") {
    const auto events = causal_grid(6);
    const auto rest = frame(1, 1);
    const ObserverChain slow("Qs", ev(0, 20), 1, 2, {-5000, 5000});
    const ObserverChain boosted_q("Q2", ev(0, 20), 2, Rational(1, 4), {-5000, 5000});
    CHECK_FALSE(check_synchronized(rest.p, slow, {0, 30}));
    std::size_t disagreements = 0, mixed_disagreements = 0;
    for (const auto& a : events) {
        for (const auto& b : events) {
            const auto good = interval_pair(a, b, rest.p, rest.q);
            if (measure_interval(a, b, rest.p, slow).ds2() != good.ds2()) ++disagreements;
            if (measure_interval(a, b, rest.p, boosted_q).ds2() != good.ds2()) ++mixed_disagreements;
        }
    }
    CHECK(disagreements > 0);
    CHECK(mixed_disagreements > 0);
    CHECK(measure_interval(ev(0, 0), ev(2, 1), rest_chain("P", 0), rest_chain("Qs", 5, 2)).ds2() == 0);
}

TEST_CASE("three chains admit no single consistent decomposition") {
    const std::vector<ObserverChain> chains{rest_chain("P", 0), rest_chain("Q", 5), rest_chain("R", 10)};
    const Event e1 = ev(0, 6), e2 = ev(2, 7);
    std::vector<IntervalPair> measured;
    for (std::size_t i = 0; i < chains.size(); ++i)
        for (std::size_t j = i + 1; j < chains.size(); ++j)
            measured.push_back(measure_interval(e1, e2, chains[i], chains[j]));
    CHECK(measured[0] == IntervalPair{3, 3});
    CHECK(measured[1] == IntervalPair{3, 1});
    CHECK(measured[2] == IntervalPair{3, 1});
    // Every (dt, dx) on a half-integer grid fails to reproduce all three pairs.
    std::size_t consistent = 0;
    for (int a = -40; a <= 40; ++a)
        for (int b = -40; b <= 40; ++b) {
            const auto candidate = recompose(Rational(a, 2), Rational(b, 2));
            bool all = true;
            for (const auto& m : measured) all = all && candidate == m;
            if (all) ++consistent;
        }
    CHECK(consistent == 0);
}

TEST_CASE("causal grid") {
    CHECK(causal_grid(2).size() == 4);
    const auto g = causal_grid_poset(3);
    CHECK(g.size() == 9);
    CHECK(g.leq("e_0_0", "e_2_1"));
    CHECK_FALSE(g.leq("e_0_0", "e_1_2"));
    CHECK_FALSE(g.comparable(g.index_of("e_1_0"), g.index_of("e_1_2")));
    CHECK(code_of([] { causal_grid(0); }) == ErrorCode::BoundExceeded);
    CHECK(code_of([] { causal_grid(kMaxGridSide + 1); }) == ErrorCode::BoundExceeded);

    // The poset's order is exactly the causal predicate.
    const auto events = causal_grid(5);
    const auto p = causal_grid_poset(5);
    for (const auto& a : events)
        for (const auto& b : events) CHECK(p.leq(a.id, b.id) == causally_precedes(a, b));
}

}  // TEST_SUITE
