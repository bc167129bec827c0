#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordinal/poset.hpp"

namespace ordinal {

enum class BoundFailure { Join, Meet };

struct LatticeCertificate {
    bool is_lattice = true;
    // First pair (canonical order) lacking a unique join or meet.
    std::optional<std::pair<ElementId, ElementId>> witness;
    std::optional<BoundFailure> failure;
};

LatticeCertificate is_lattice(const Poset& p);

// A poset certified to be a lattice, with index-level join and meet.
class Lattice {
public:
    // Throws NotALattice with the certificate's witness in the message.
    explicit Lattice(Poset p);

    const Poset& poset() const noexcept { return poset_; }
    std::size_t size() const noexcept { return poset_.size(); }
    Index bottom() const noexcept { return bottom_; }
    Index top() const noexcept { return top_; }

    Index join(Index x, Index y) const { return *poset_.least_upper_bound(x, y); }
    Index meet(Index x, Index y) const { return *poset_.greatest_lower_bound(x, y); }
    bool leq(Index x, Index y) const { return poset_.leq(x, y); }

private:
    Poset poset_;
    Index bottom_ = 0;
    Index top_ = 0;
};

// Externally supplied join/meet (lcm/gcd, union/intersection, max/min, ...)
// to be reconciled with the order.
struct AlgebraOps {
    std::function<ElementId(const ElementId&, const ElementId&)> join;
    std::function<ElementId(const ElementId&, const ElementId&)> meet;
};

struct ConsistencyViolation {
    ElementId x;
    ElementId y;
    std::string reason;
};

struct ConsistencyReport {
    std::size_t checked = 0;
    std::vector<ConsistencyViolation> violations;
    bool passed() const noexcept { return violations.empty(); }
};

// For every ordered pair checks x <= y <=> (x v y = y and x ^ y = x). With
// `ops`, the algebraic operations are also required to agree with the
// order-derived join and meet. Throws NotALattice.
ConsistencyReport verify_consistency_relations(const Poset& p, const AlgebraOps* ops = nullptr);

std::vector<ElementId> join_irreducibles(const Poset& p);
std::vector<ElementId> meet_irreducibles(const Poset& p);

// Componentwise order on pairs; element ids are "(x,y)".
Poset lattice_product(const Poset& left, const Poset& right);
std::string product_id(const ElementId& x, const ElementId& y);

}  // namespace ordinal
