#include "ordinal/lattice.hpp"

#include "ordinal/error.hpp"

namespace ordinal {

LatticeCertificate is_lattice(const Poset& p) {
    for (Index x = 0; x < p.size(); ++x) {
        for (Index y = x + 1; y < p.size(); ++y) {
            if (!p.least_upper_bound(x, y))
                return {false, std::pair{p.id(x), p.id(y)}, BoundFailure::Join};
            if (!p.greatest_lower_bound(x, y))
                return {false, std::pair{p.id(x), p.id(y)}, BoundFailure::Meet};
        }
    }
    return {};
}

namespace {

void require_lattice(const Poset& p) {
    auto cert = is_lattice(p);
    if (!cert.is_lattice) {
        const char* what = *cert.failure == BoundFailure::Join ? "join" : "meet";
        throw Error(ErrorCode::NotALattice, "'" + cert.witness->first + "' and '" + cert.witness->second +
                                                "' have no unique " + what);
    }
}

}  // namespace

Lattice::Lattice(Poset p) : poset_(std::move(p)) {
    require_lattice(poset_);
    bottom_ = poset_.minimal_elements().front();
    top_ = poset_.maximal_elements().front();
}

ConsistencyReport verify_consistency_relations(const Poset& p, const AlgebraOps* ops) {
    const Lattice lat(p);
    ConsistencyReport report;
    for (Index x = 0; x < p.size(); ++x) {
        for (Index y = 0; y < p.size(); ++y) {
            ++report.checked;
            const Index j = lat.join(x, y);
            const Index m = lat.meet(x, y);
            const bool ordered = p.leq(x, y);
            const bool algebraic = j == y && m == x;
            if (ordered != algebraic)
                report.violations.push_back({p.id(x), p.id(y), "order and join/meet disagree"});
            if (ops) {
                if (ops->join(p.id(x), p.id(y)) != p.id(j))
                    report.violations.push_back({p.id(x), p.id(y), "supplied join differs from least upper bound"});
                if (ops->meet(p.id(x), p.id(y)) != p.id(m))
                    report.violations.push_back({p.id(x), p.id(y), "supplied meet differs from greatest lower bound"});
            }
        }
    }
    return report;
}

// In a finite lattice x is join-irreducible iff it has exactly one lower cover.
std::vector<ElementId> join_irreducibles(const Poset& p) {
    require_lattice(p);
    std::vector<ElementId> out;
    for (Index i = 0; i < p.size(); ++i)
        if (p.lower_covers(i).size() == 1) out.push_back(p.id(i));
    return out;
}

std::vector<ElementId> meet_irreducibles(const Poset& p) {
    require_lattice(p);
    std::vector<ElementId> out;
    for (Index i = 0; i < p.size(); ++i)
        if (p.upper_covers(i).size() == 1) out.push_back(p.id(i));
    return out;
}

std::string product_id(const ElementId& x, const ElementId& y) { return "(" + x + "," + y + ")"; }

Poset lattice_product(const Poset& left, const Poset& right) {
    require_lattice(left);
    require_lattice(right);
    if (left.size() * right.size() > Poset::kMaxElements)
        throw Error(ErrorCode::TooManyElements, "lattice product too large");
    std::vector<ElementId> ids;
    ids.reserve(left.size() * right.size());
    for (const auto& x : left.ids())
        for (const auto& y : right.ids()) ids.push_back(product_id(x, y));

    // (x,y) is covered by (x',y) and (x,y') for covers x<x', y<y'.
    std::vector<Cover> covers;
    for (const auto& [lo, hi] : left.cover_ids())
        for (const auto& y : right.ids()) covers.emplace_back(product_id(lo, y), product_id(hi, y));
    for (const auto& x : left.ids())
        for (const auto& [lo, hi] : right.cover_ids()) covers.emplace_back(product_id(x, lo), product_id(x, hi));
    return Poset::build(std::move(ids), covers);
}

}  // namespace ordinal
