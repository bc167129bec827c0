#include <random>

#include "doctest.h"
#include "ordinal/error.hpp"
#include "ordinal/generators.hpp"
#include "ordinal/lattice.hpp"

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

Poset diamond() {
    return Poset::build({"bot", "a", "b", "top"}, {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

Poset bowtie() {
    return Poset::build({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

// Brute-force join: the unique minimal element among common upper bounds.
std::optional<Index> brute_join(const Poset& p, Index x, Index y) {
    std::vector<Index> ub;
    for (Index z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(y, z)) ub.push_back(z);
    std::vector<Index> minimal;
    for (Index u : ub) {
        bool is_min = true;
        for (Index w : ub)
            if (w != u && p.leq(w, u)) is_min = false;
        if (is_min) minimal.push_back(u);
    }
    if (minimal.size() != 1) return std::nullopt;
    return minimal[0];
}

void check_lattice_laws(const Lattice& l) {
    const auto n = l.size();
    for (Index x = 0; x < n; ++x) {
        REQUIRE(l.join(x, x) == x);
        REQUIRE(l.meet(x, x) == x);
        for (Index y = 0; y < n; ++y) {
            REQUIRE(l.join(x, y) == l.join(y, x));
            REQUIRE(l.meet(x, y) == l.meet(y, x));
            REQUIRE(l.join(x, l.meet(x, y)) == x);
            REQUIRE(l.meet(x, l.join(x, y)) == x);
            REQUIRE(brute_join(l.poset(), x, y) == l.join(x, y));
            for (Index z = 0; z < n; ++z) {
                REQUIRE(l.join(l.join(x, y), z) == l.join(x, l.join(y, z)));
                REQUIRE(l.meet(l.meet(x, y), z) == l.meet(x, l.meet(y, z)));
            }
        }
    }
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("diamond is a lattice") {
    const auto cert = is_lattice(diamond());
    CHECK(cert.is_lattice);
    CHECK_FALSE(cert.witness.has_value());
    CHECK_FALSE(cert.failure.has_value());
}

TEST_CASE("bowtie is rejected with the bottom pair as witness") {
    const auto cert = is_lattice(bowtie());
    CHECK_FALSE(cert.is_lattice);
    REQUIRE(cert.witness.has_value());
    CHECK(*cert.witness == std::pair<ElementId, ElementId>{"a", "b"});
    CHECK(*cert.failure == BoundFailure::Join);
    CHECK(code_of([] { Lattice{bowtie()}; }) == ErrorCode::NotALattice);
    CHECK(code_of([] { verify_consistency_relations(bowtie()); }) == ErrorCode::NotALattice);
    CHECK(code_of([] { join_irreducibles(bowtie()); }) == ErrorCode::NotALattice);
}

TEST_CASE("chains and antichains") {
    CHECK(is_lattice(integer_chain(7)).is_lattice);
    CHECK(is_lattice(integer_chain(1)).is_lattice);
    const auto anti = is_lattice(Poset::build({"x", "y"}, {}));
    CHECK_FALSE(anti.is_lattice);
    CHECK(*anti.witness == std::pair<ElementId, ElementId>{"x", "y"});
}

TEST_CASE("missing meet is reported as a meet failure") {
    // Two minimal elements under a common top: joins exist, meets do not.
    const auto p = Poset::build({"x", "y", "top"}, {{"x", "top"}, {"y", "top"}});
    const auto cert = is_lattice(p);
    CHECK_FALSE(cert.is_lattice);
    CHECK(*cert.failure == BoundFailure::Meet);
}

TEST_CASE("consistency relations on the three classic orders") {
    const auto d12 = divisor_lattice(12);
    auto ops = divisor_ops();
    auto report = verify_consistency_relations(d12, &ops);
    CHECK(report.passed());
    CHECK(report.checked == d12.size() * d12.size());

    const auto b3 = boolean_lattice({"1", "2", "3"});
    ops = subset_ops();
    CHECK(verify_consistency_relations(b3, &ops).passed());

    const auto c6 = integer_chain(6);
    ops = integer_chain_ops();
    CHECK(verify_consistency_relations(c6, &ops).passed());
}

TEST_CASE("consistency audit catches wrong algebra") {
    const auto d12 = divisor_lattice(12);
    // gcd and lcm swapped: contradicts "divides".
    AlgebraOps swapped{divisor_ops().meet, divisor_ops().join};
    const auto report = verify_consistency_relations(d12, &swapped);
    CHECK_FALSE(report.passed());
    CHECK(report.violations.size() > 0);
}

TEST_CASE("join irreducibles") {
    const auto partitions3 = partition_lattice({"a", "b", "c"});
    CHECK(join_irreducibles(partitions3) == std::vector<ElementId>{"a|bc", "b|ac", "c|ab"});
    CHECK(meet_irreducibles(partitions3) == std::vector<ElementId>{"a|bc", "b|ac", "c|ab"});

    CHECK(join_irreducibles(boolean_lattice({"a", "b", "c"})) == std::vector<ElementId>{"{a}", "{b}", "{c}"});
    CHECK(meet_irreducibles(boolean_lattice({"a", "b", "c"})) ==
          std::vector<ElementId>{"{a,b}", "{a,c}", "{b,c}"});

    const auto chain = integer_chain(5);
    CHECK(join_irreducibles(chain) == std::vector<ElementId>{"1", "2", "3", "4"});
}

TEST_CASE("property: join irreducibles match the brute-force definition") {
    for (const auto& p : {divisor_lattice(60), divisor_lattice(36), partition_lattice({"a", "b", "c", "d"}),
                          boolean_lattice({"a", "b", "c", "d"}), integer_chain(6)}) {
        const Lattice l(p);
        std::vector<ElementId> oracle;
        for (Index x = 0; x < l.size(); ++x) {
            if (x == l.bottom()) continue;
            bool reducible = false;
            for (Index y = 0; y < l.size(); ++y)
                for (Index z = 0; z < l.size(); ++z)
                    if (p.less(y, x) && p.less(z, x) && l.join(y, z) == x) reducible = true;
            if (!reducible) oracle.push_back(p.id(x));
        }
        CHECK(join_irreducibles(p) == oracle);
    }
}

TEST_CASE("property: lattice laws on every generated lattice up to 64 elements") {
    std::vector<Poset> corpus{diamond(),
                              integer_chain(10),
                              divisor_lattice(60),
                              divisor_lattice(64),
                              boolean_lattice({"a", "b", "c", "d"}),
                              boolean_lattice({"a", "b", "c", "d", "e", "f"}),
                              partition_lattice({"a", "b", "c", "d"}),
                              partition_lattice({"a", "b", "c", "d", "e"}),
                              lattice_product(integer_chain(3), divisor_lattice(12))};
    for (const auto& p : corpus) {
        REQUIRE(p.size() <= 64);
        const Lattice l(p);
        check_lattice_laws(l);
        CHECK(verify_consistency_relations(p).passed());
    }
}

TEST_CASE("lattice product") {
    const auto b1 = boolean_lattice({"a"});
    const auto b1b1 = lattice_product(b1, b1);
    CHECK(b1b1.size() == 4);
    CHECK(b1b1.covers().size() == 4);
    CHECK(is_lattice(b1b1).is_lattice);
    CHECK(join_irreducibles(b1b1).size() == 2);

    const auto grid = lattice_product(integer_chain(3), integer_chain(2));
    CHECK(grid.size() == 6);
    CHECK(grid.covers().size() == 7);
    CHECK(grid.leq(product_id("0", "1"), product_id("2", "1")));
    CHECK_FALSE(grid.comparable(grid.index_of(product_id("2", "0")), grid.index_of(product_id("0", "1"))));
    CHECK(code_of([] { lattice_product(bowtie(), integer_chain(2)); }) == ErrorCode::NotALattice);
}

TEST_CASE("lattice product is associative up to regrouping") {
    const auto c2 = integer_chain(2);
    const auto left = lattice_product(lattice_product(c2, c2), c2);
    const auto right = lattice_product(c2, lattice_product(c2, c2));
    REQUIRE(left.size() == right.size());
    auto regroup = [](const ElementId& id) {
        // "((a,b),c)" -> "(a,(b,c))"
        const std::string a(1, id[2]), b(1, id[4]), c(1, id[7]);
        return product_id(a, product_id(b, c));
    };
    for (const auto& x : left.ids())
        for (const auto& y : left.ids()) CHECK(left.leq(x, y) == right.leq(regroup(x), regroup(y)));
}

TEST_CASE("property: product join and meet are componentwise") {
    const auto p = divisor_lattice(12);
    const auto q = partition_lattice({"a", "b", "c"});
    const auto pq = lattice_product(p, q);
    const Lattice lp(p), lq(q), lpq(pq);
    for (Index x1 = 0; x1 < p.size(); ++x1)
        for (Index x2 = 0; x2 < p.size(); ++x2)
            for (Index y1 = 0; y1 < q.size(); ++y1)
                for (Index y2 = 0; y2 < q.size(); ++y2) {
                    const Index a = pq.index_of(product_id(p.id(x1), q.id(y1)));
                    const Index b = pq.index_of(product_id(p.id(x2), q.id(y2)));
                    REQUIRE(pq.id(lpq.join(a, b)) == product_id(p.id(lp.join(x1, x2)), q.id(lq.join(y1, y2))));
                    REQUIRE(pq.id(lpq.meet(a, b)) == product_id(p.id(lp.meet(x1, x2)), q.id(lq.meet(y1, y2))));
                }
}

}  // TEST_SUITE
