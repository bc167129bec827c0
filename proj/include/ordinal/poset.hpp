#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ordinal {

using ElementId = std::string;
using Index = std::size_t;
using Cover = std::pair<ElementId, ElementId>;
using ElementSet = boost::dynamic_bitset<>;

// A finite partially ordered set given by its Hasse diagram.
//
// Elements are stored in canonical (lexicographic id) order, so an Index is
// the position of an id in that order. Reachability is materialized eagerly
// as one up-set and one down-set bitset per element.
class Poset {
public:
    static constexpr std::size_t kMaxElements = 8192;

    // Validates and closes the cover relation. Rejects duplicate or empty ids,
    // unknown endpoints, cycles and covers implied by other covers.
    static Poset build(std::vector<ElementId> elements, const std::vector<Cover>& covers);

    // Builds the poset whose order is `leq` (assumed reflexive, antisymmetric
    // and transitive over `elements`); covers are recovered by transitive
    // reduction.
    static Poset from_order(std::vector<ElementId> elements,
                            const std::function<bool(Index, Index)>& leq);

    std::size_t size() const noexcept { return ids_.size(); }
    const std::vector<ElementId>& ids() const noexcept { return ids_; }
    const ElementId& id(Index i) const { return ids_.at(i); }
    bool contains(const ElementId& id) const { return lookup_.contains(id); }
    Index index_of(const ElementId& id) const;

    // Sorted (lower, upper) index pairs.
    const std::vector<std::pair<Index, Index>>& covers() const noexcept { return covers_; }
    std::vector<Cover> cover_ids() const;
    const std::vector<Index>& upper_covers(Index i) const { return upper_.at(i); }
    const std::vector<Index>& lower_covers(Index i) const { return lower_.at(i); }

    bool leq(Index x, Index y) const { return up_[x].test(y); }
    bool leq(const ElementId& x, const ElementId& y) const { return leq(index_of(x), index_of(y)); }
    bool less(Index x, Index y) const { return x != y && leq(x, y); }
    bool comparable(Index x, Index y) const { return leq(x, y) || leq(y, x); }

    // {z : x <= z} and {z : z <= x}, both reflexive.
    const ElementSet& up_set(Index x) const { return up_[x]; }
    const ElementSet& down_set(Index x) const { return down_[x]; }

    // Position of the element in a fixed linear extension; x < y implies
    // rank(x) < rank(y).
    std::size_t rank(Index x) const { return rank_[x]; }

    std::vector<Index> minimal_elements() const;
    std::vector<Index> maximal_elements() const;

    // Least element of `s` if it exists.
    std::optional<Index> least_of(const ElementSet& s) const;
    std::optional<Index> greatest_of(const ElementSet& s) const;

    std::optional<Index> least_upper_bound(Index x, Index y) const {
        return least_of(up_[x] & up_[y]);
    }
    std::optional<Index> greatest_lower_bound(Index x, Index y) const {
        return greatest_of(down_[x] & down_[y]);
    }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.ids_ == b.ids_ && a.covers_ == b.covers_;
    }

private:
    Poset() = default;
    static Poset from_parts(std::vector<ElementId> sorted_ids,
                            std::vector<std::pair<Index, Index>> covers);
    void close();

    std::vector<ElementId> ids_;
    std::unordered_map<ElementId, Index> lookup_;
    std::vector<std::pair<Index, Index>> covers_;
    std::vector<std::vector<Index>> upper_;
    std::vector<std::vector<Index>> lower_;
    std::vector<ElementSet> up_;
    std::vector<ElementSet> down_;
    std::vector<std::size_t> rank_;
};

std::vector<Index> to_indices(const ElementSet& s);

// Reflexive bounds: every z with x <= z for all x in `s` (dually z <= x).
std::vector<ElementId> upper_bound(const Poset& p, std::span<const ElementId> s);
std::vector<ElementId> lower_bound(const Poset& p, std::span<const ElementId> s);

// Least upper bound / greatest lower bound; throws NoUniqueBound when the pair
// has no bound or several minimal (maximal) ones.
ElementId join(const Poset& p, const ElementId& x, const ElementId& y);
ElementId meet(const Poset& p, const ElementId& x, const ElementId& y);

}  // namespace ordinal
