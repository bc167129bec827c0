#include "ordinal/poset.hpp"

#include <algorithm>
#include <queue>

#include "ordinal/error.hpp"

namespace ordinal {

namespace {

std::vector<ElementId> canonicalize(std::vector<ElementId> elements) {
    if (elements.empty()) throw Error(ErrorCode::InvalidInput, "poset has no elements");
    if (elements.size() > Poset::kMaxElements)
        throw Error(ErrorCode::TooManyElements,
                    std::to_string(elements.size()) + " elements exceeds the limit of " +
                        std::to_string(Poset::kMaxElements));
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].empty()) throw Error(ErrorCode::InvalidInput, "empty element id");
        if (i > 0 && elements[i] == elements[i - 1])
            throw Error(ErrorCode::DuplicateElement, "'" + elements[i] + "'");
    }
    return elements;
}

Index lookup_or_throw(const std::unordered_map<ElementId, Index>& lookup, const ElementId& id) {
    auto it = lookup.find(id);
    if (it == lookup.end()) throw Error(ErrorCode::UnknownElement, "'" + id + "'");
    return it->second;
}

}  // namespace

Poset Poset::from_parts(std::vector<ElementId> sorted_ids,
                        std::vector<std::pair<Index, Index>> covers) {
    Poset p;
    p.ids_ = std::move(sorted_ids);
    p.lookup_.reserve(p.ids_.size());
    for (Index i = 0; i < p.ids_.size(); ++i) p.lookup_.emplace(p.ids_[i], i);
    std::sort(covers.begin(), covers.end());
    p.covers_ = std::move(covers);
    p.close();
    return p;
}

void Poset::close() {
    const std::size_t n = ids_.size();
    upper_.assign(n, {});
    lower_.assign(n, {});
    for (auto [lo, hi] : covers_) {
        if (lo == hi) throw Error(ErrorCode::CycleDetected, "self cover on '" + ids_[lo] + "'");
        upper_[lo].push_back(hi);
        lower_[hi].push_back(lo);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto dup = std::adjacent_find(upper_[i].begin(), upper_[i].end());
        if (dup != upper_[i].end())
            throw Error(ErrorCode::RedundantCover,
                        "cover ('" + ids_[i] + "', '" + ids_[*dup] + "') listed twice");
    }

    // Kahn's algorithm, smallest index first so the linear extension is canonical.
    std::vector<std::size_t> indegree(n);
    for (std::size_t i = 0; i < n; ++i) indegree[i] = lower_[i].size();
    std::priority_queue<Index, std::vector<Index>, std::greater<>> ready;
    for (Index i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.push(i);
    std::vector<Index> order;
    order.reserve(n);
    while (!ready.empty()) {
        Index u = ready.top();
        ready.pop();
        order.push_back(u);
        for (Index v : upper_[u])
            if (--indegree[v] == 0) ready.push(v);
    }
    if (order.size() != n) {
        for (Index i = 0; i < n; ++i)
            if (indegree[i] != 0)
                throw Error(ErrorCode::CycleDetected, "cover relation has a cycle through '" + ids_[i] + "'");
    }
    rank_.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) rank_[order[r]] = r;

    up_.assign(n, ElementSet(n));
    down_.assign(n, ElementSet(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        up_[*it].set(*it);
        for (Index v : upper_[*it]) up_[*it] |= up_[v];
    }
    for (Index u : order) {
        down_[u].set(u);
        for (Index v : lower_[u]) down_[u] |= down_[v];
    }

    for (auto [lo, hi] : covers_) {
        for (Index mid : upper_[lo]) {
            if (mid != hi && up_[mid].test(hi))
                throw Error(ErrorCode::RedundantCover, "('" + ids_[lo] + "', '" + ids_[hi] +
                                                           "') is implied through '" + ids_[mid] + "'");
        }
    }
}

Poset Poset::build(std::vector<ElementId> elements, const std::vector<Cover>& covers) {
    auto ids = canonicalize(std::move(elements));
    std::unordered_map<ElementId, Index> lookup;
    for (Index i = 0; i < ids.size(); ++i) lookup.emplace(ids[i], i);
    std::vector<std::pair<Index, Index>> idx;
    idx.reserve(covers.size());
    for (const auto& [lo, hi] : covers) idx.emplace_back(lookup_or_throw(lookup, lo), lookup_or_throw(lookup, hi));
    return from_parts(std::move(ids), std::move(idx));
}

Poset Poset::from_order(std::vector<ElementId> elements, const std::function<bool(Index, Index)>& leq) {
    // `leq` is indexed by the caller's original positions; remap after sorting.
    const std::size_t n = elements.size();
    std::vector<Index> perm(n);
    for (Index i = 0; i < n; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](Index a, Index b) { return elements[a] < elements[b]; });
    std::vector<ElementId> sorted(n);
    for (Index i = 0; i < n; ++i) sorted[i] = elements[perm[i]];
    sorted = canonicalize(std::move(sorted));

    std::vector<ElementSet> strictly_above(n, ElementSet(n));
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (a != b && leq(perm[a], perm[b])) strictly_above[a].set(b);

    std::vector<std::pair<Index, Index>> covers;
    for (Index a = 0; a < n; ++a) {
        // b covers a iff nothing strictly between them.
        for (auto b = strictly_above[a].find_first(); b != ElementSet::npos; b = strictly_above[a].find_next(b)) {
            bool direct = true;
            for (auto m = strictly_above[a].find_first(); m != ElementSet::npos; m = strictly_above[a].find_next(m)) {
                if (m != b && strictly_above[m].test(b)) {
                    direct = false;
                    break;
                }
            }
            if (direct) covers.emplace_back(a, b);
        }
    }
    return from_parts(std::move(sorted), std::move(covers));
}

Index Poset::index_of(const ElementId& id) const { return lookup_or_throw(lookup_, id); }

std::vector<Cover> Poset::cover_ids() const {
    std::vector<Cover> out;
    out.reserve(covers_.size());
    for (auto [lo, hi] : covers_) out.emplace_back(ids_[lo], ids_[hi]);
    return out;
}

std::vector<Index> Poset::minimal_elements() const {
    std::vector<Index> out;
    for (Index i = 0; i < size(); ++i)
        if (lower_[i].empty()) out.push_back(i);
    return out;
}

std::vector<Index> Poset::maximal_elements() const {
    std::vector<Index> out;
    for (Index i = 0; i < size(); ++i)
        if (upper_[i].empty()) out.push_back(i);
    return out;
}

std::optional<Index> Poset::least_of(const ElementSet& s) const {
    // The lowest-ranked member is minimal; it is least iff it is below every member.
    std::optional<Index> best;
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
        if (!best || rank_[i] < rank_[*best]) best = i;
    if (best && s.is_subset_of(up_[*best])) return best;
    return std::nullopt;
}

std::optional<Index> Poset::greatest_of(const ElementSet& s) const {
    std::optional<Index> best;
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
        if (!best || rank_[i] > rank_[*best]) best = i;
    if (best && s.is_subset_of(down_[*best])) return best;
    return std::nullopt;
}

std::vector<Index> to_indices(const ElementSet& s) {
    std::vector<Index> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back(i);
    return out;
}

namespace {

std::vector<ElementId> bound(const Poset& p, std::span<const ElementId> s, bool upper) {
    if (s.empty()) throw Error(ErrorCode::InvalidInput, "bound of an empty set");
    ElementSet acc(p.size());
    acc.set();
    for (const auto& id : s) {
        Index i = p.index_of(id);
        acc &= upper ? p.up_set(i) : p.down_set(i);
    }
    std::vector<ElementId> out;
    for (Index i : to_indices(acc)) out.push_back(p.id(i));
    return out;
}

}  // namespace

std::vector<ElementId> upper_bound(const Poset& p, std::span<const ElementId> s) { return bound(p, s, true); }
std::vector<ElementId> lower_bound(const Poset& p, std::span<const ElementId> s) { return bound(p, s, false); }

ElementId join(const Poset& p, const ElementId& x, const ElementId& y) {
    auto j = p.least_upper_bound(p.index_of(x), p.index_of(y));
    if (!j) throw Error(ErrorCode::NoUniqueBound, "'" + x + "' and '" + y + "' have no unique least upper bound");
    return p.id(*j);
}

ElementId meet(const Poset& p, const ElementId& x, const ElementId& y) {
    auto m = p.greatest_lower_bound(p.index_of(x), p.index_of(y));
    if (!m) throw Error(ErrorCode::NoUniqueBound, "'" + x + "' and '" + y + "' have no unique greatest lower bound");
    return p.id(*m);
}

}  // namespace ordinal
