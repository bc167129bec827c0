#include "ordinal/valuation.hpp"

#include <bit>
#include <cstdint>

#include "ordinal/error.hpp"

namespace ordinal {

namespace {

template <class T>
T magnitude(const T& v) {
    return v < T(0) ? T(-v) : v;
}

template <class T>
class Audit {
public:
    Audit(std::string rule, const Poset& poset, const T& tol) : poset_(poset) {
        report_.rule = std::move(rule);
        report_.tolerance = tol;
    }

    void skip() { ++report_.skipped; }

    void compare(std::initializer_list<std::pair<const char*, Index>> roles, const T& lhs, const T& rhs) {
        ++report_.checked;
        T residual = magnitude<T>(lhs - rhs);
        if (residual > report_.max_residual) report_.max_residual = residual;
        if (residual > report_.tolerance) {
            BasicRuleViolation<T> v;
            for (const auto& [role, idx] : roles) v.instance.emplace_back(role, poset_.id(idx));
            v.lhs = lhs;
            v.rhs = rhs;
            v.residual = std::move(residual);
            report_.violations.push_back(std::move(v));
        }
    }

    BasicRuleReport<T> finish() { return std::move(report_); }

private:
    const Poset& poset_;
    BasicRuleReport<T> report_;
};

}  // namespace

template <class T>
BasicValuation<T>::BasicValuation(std::shared_ptr<const Lattice> lattice, std::vector<T> values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
    if (!lattice_) throw Error(ErrorCode::InvalidInput, "valuation without a lattice");
    if (values_.size() != lattice_->size())
        throw Error(ErrorCode::InvalidInput, "valuation has " + std::to_string(values_.size()) + " values for " +
                                                 std::to_string(lattice_->size()) + " elements");
}

template <class T>
BasicValuation<T> BasicValuation<T>::from_map(std::shared_ptr<const Lattice> lattice,
                                              const std::map<ElementId, T>& values) {
    const Poset& p = lattice->poset();
    std::vector<T> out(p.size());
    std::vector<bool> seen(p.size(), false);
    for (const auto& [id, value] : values) {
        const Index i = p.index_of(id);
        out[i] = value;
        seen[i] = true;
    }
    for (Index i = 0; i < p.size(); ++i)
        if (!seen[i]) throw Error(ErrorCode::InvalidInput, "no value for element '" + p.id(i) + "'");
    return BasicValuation(std::move(lattice), std::move(out));
}

template <class T>
BasicValuation<T> BasicValuation<T>::with_value(Index x, T value) const {
    auto copy = *this;
    copy.values_.at(x) = std::move(value);
    return copy;
}

template <class T>
BasicBiValuation<T>::BasicBiValuation(std::shared_ptr<const Lattice> lattice, std::vector<std::optional<T>> table)
    : lattice_(std::move(lattice)), table_(std::move(table)) {
    if (!lattice_) throw Error(ErrorCode::InvalidInput, "bi-valuation without a lattice");
    if (table_.size() != lattice_->size() * lattice_->size())
        throw Error(ErrorCode::InvalidInput, "bi-valuation table has the wrong size");
}

template <class T>
const T& BasicBiValuation<T>::at(Index x, Index context) const {
    const auto& entry = get(x, context);
    if (!entry)
        throw Error(ErrorCode::ZeroMeasureContext,
                    "w('" + lattice_->poset().id(x) + "' | '" + lattice_->poset().id(context) + "') is undefined");
    return *entry;
}

template <class T>
const T& BasicBiValuation<T>::at(const ElementId& x, const ElementId& context) const {
    return at(lattice_->poset().index_of(x), lattice_->poset().index_of(context));
}

template <class T>
BasicBiValuation<T> BasicBiValuation<T>::with_value(Index x, Index context, T value) const {
    auto copy = *this;
    copy.table_.at(x * size() + context) = std::move(value);
    return copy;
}

template <class T>
BasicRuleReport<T> check_sum_rule(const BasicValuation<T>& v, const T& tol) {
    const Lattice& lat = v.lattice();
    Audit<T> audit("sum", lat.poset(), tol);
    for (Index x = 0; x < lat.size(); ++x)
        for (Index y = x + 1; y < lat.size(); ++y)
            audit.compare({{"x", x}, {"y", y}}, v(lat.join(x, y)) + v(lat.meet(x, y)), v(x) + v(y));
    return audit.finish();
}

template <class T>
BasicRuleReport<T> check_monotone(const BasicValuation<T>& v, const T& tol) {
    const Lattice& lat = v.lattice();
    Audit<T> audit("monotone", lat.poset(), tol);
    for (auto [lo, hi] : lat.poset().covers()) {
        // Only a decrease counts; compare against the clamped value.
        const T rhs = v(lo) > v(hi) ? v(hi) : v(lo);
        audit.compare({{"x", lo}, {"y", hi}}, v(lo), rhs);
    }
    return audit.finish();
}

template <class T>
BasicValuation<T> derive_valuation_from_atoms(std::shared_ptr<const Lattice> lattice,
                                              const std::map<std::string, T>& atom_values) {
    const Lattice& lat = *lattice;
    const Poset& p = lat.poset();
    const auto& atoms = p.upper_covers(lat.bottom());
    if (atoms.size() > 30) throw Error(ErrorCode::TooManyAtoms, "too many atoms for a Boolean lattice");

    // x is identified with the set of atoms below it; Boolean iff that map is
    // an order isomorphism onto the powerset.
    std::vector<std::uint32_t> mask(p.size(), 0);
    for (Index x = 0; x < p.size(); ++x)
        for (std::size_t a = 0; a < atoms.size(); ++a)
            if (p.leq(atoms[a], x)) mask[x] |= 1u << a;
    bool boolean = p.size() == (std::size_t{1} << atoms.size());
    std::vector<bool> hit(p.size(), false);
    for (Index x = 0; boolean && x < p.size(); ++x) {
        if (hit[mask[x]]) boolean = false;
        else hit[mask[x]] = true;
    }
    for (Index x = 0; boolean && x < p.size(); ++x)
        for (Index y = 0; boolean && y < p.size(); ++y)
            if (p.leq(x, y) != ((mask[x] & ~mask[y]) == 0)) boolean = false;
    if (!boolean) throw Error(ErrorCode::InvalidInput, "lattice is not Boolean");

    std::vector<T> weight(atoms.size());
    std::vector<bool> assigned(atoms.size(), false);
    for (const auto& [key, value] : atom_values) {
        if (value < T(0)) throw Error(ErrorCode::NegativeAtomValue, "atom '" + key + "'");
        std::optional<std::size_t> slot;
        for (std::size_t a = 0; a < atoms.size(); ++a)
            if (p.id(atoms[a]) == key || p.id(atoms[a]) == "{" + key + "}") slot = a;
        if (!slot) throw Error(ErrorCode::UnknownElement, "'" + key + "' is not an atom");
        weight[*slot] = value;
        assigned[*slot] = true;
    }
    for (std::size_t a = 0; a < atoms.size(); ++a)
        if (!assigned[a]) throw Error(ErrorCode::InvalidInput, "no value for atom '" + p.id(atoms[a]) + "'");

    std::vector<T> values(p.size(), T(0));
    for (Index x = 0; x < p.size(); ++x)
        for (std::size_t a = 0; a < atoms.size(); ++a)
            if (mask[x] & (1u << a)) values[x] += weight[a];
    return BasicValuation<T>(std::move(lattice), std::move(values));
}

template <class T>
BasicRuleReport<T> check_product_rule_for_lattice_product(const BasicValuation<T>& left,
                                                          const BasicValuation<T>& right,
                                                          const BasicValuation<T>& product, const T& tol) {
    const Poset& lp = left.lattice().poset();
    const Poset& rp = right.lattice().poset();
    const Poset& pp = product.lattice().poset();
    if (!(lattice_product(lp, rp) == pp))
        throw Error(ErrorCode::LatticeMismatch, "valuation is not defined on the product of the factor lattices");
    Audit<T> audit("product", pp, tol);
    for (Index x = 0; x < lp.size(); ++x) {
        for (Index y = 0; y < rp.size(); ++y) {
            const Index xy = pp.index_of(product_id(lp.id(x), rp.id(y)));
            audit.compare({{"xy", xy}}, product(xy), left(x) * right(y));
        }
    }
    return audit.finish();
}

template <class T>
BasicBiValuation<T> bivaluation_from_valuation(const BasicValuation<T>& v) {
    const Lattice& lat = v.lattice();
    const std::size_t n = lat.size();
    std::vector<std::optional<T>> table(n * n);
    for (Index y = 0; y < n; ++y) {
        if (!(v(y) > T(0))) continue;
        for (Index x = 0; x < n; ++x) table[x * n + y] = T(v(lat.meet(x, y)) / v(y));
    }
    return BasicBiValuation<T>(v.lattice_ptr(), std::move(table));
}

template <class T>
BasicRuleReport<T> check_chain_rule(const BasicBiValuation<T>& w, const T& tol) {
    const Lattice& lat = w.lattice();
    const Poset& p = lat.poset();
    Audit<T> audit("chain", p, tol);
    for (Index x = 0; x < lat.size(); ++x) {
        for (Index y : to_indices(p.up_set(x))) {
            for (Index z : to_indices(p.up_set(y))) {
                const auto& xz = w.get(x, z);
                const auto& xy = w.get(x, y);
                const auto& yz = w.get(y, z);
                if (!xz || !xy || !yz) {
                    audit.skip();
                    continue;
                }
                audit.compare({{"x", x}, {"y", y}, {"z", z}}, *xz, T(*xy * *yz));
            }
        }
    }
    return audit.finish();
}

template <class T>
BasicRuleReport<T> check_diamond_lemma(const BasicBiValuation<T>& w, const T& tol) {
    const Lattice& lat = w.lattice();
    Audit<T> audit("diamond", lat.poset(), tol);
    for (Index x = 0; x < lat.size(); ++x) {
        for (Index y = 0; y < lat.size(); ++y) {
            const auto& yx = w.get(y, x);
            const auto& mx = w.get(lat.meet(x, y), x);
            if (!yx || !mx) {
                audit.skip();
                continue;
            }
            audit.compare({{"x", x}, {"y", y}}, *yx, *mx);
        }
    }
    return audit.finish();
}

template <class T>
BasicRuleReport<T> check_context_product_rule(const BasicBiValuation<T>& w, const T& tol) {
    const Lattice& lat = w.lattice();
    Audit<T> audit("context", lat.poset(), tol);
    for (Index x = 0; x < lat.size(); ++x) {
        for (Index y = 0; y < lat.size(); ++y) {
            const Index xy = lat.meet(x, y);
            for (Index z = 0; z < lat.size(); ++z) {
                const auto& lhs = w.get(lat.meet(y, z), x);
                const auto& z_given_xy = w.get(z, xy);
                const auto& y_given_x = w.get(y, x);
                if (!lhs || !z_given_xy || !y_given_x) {
                    audit.skip();
                    continue;
                }
                audit.compare({{"x", x}, {"y", y}, {"z", z}}, *lhs, T(*z_given_xy * *y_given_x));
            }
        }
    }
    return audit.finish();
}

template <class T>
BasicRuleReport<T> check_bivaluation_sum_rule(const BasicBiValuation<T>& w, const T& tol) {
    const Lattice& lat = w.lattice();
    Audit<T> audit("bisum", lat.poset(), tol);
    for (Index x = 0; x < lat.size(); ++x) {
        for (Index y = x + 1; y < lat.size(); ++y) {
            const Index j = lat.join(x, y);
            const Index m = lat.meet(x, y);
            for (Index t = 0; t < lat.size(); ++t) {
                const auto& wj = w.get(j, t);
                const auto& wm = w.get(m, t);
                const auto& wx = w.get(x, t);
                const auto& wy = w.get(y, t);
                if (!wj || !wm || !wx || !wy) {
                    audit.skip();
                    continue;
                }
                audit.compare({{"x", x}, {"y", y}, {"t", t}}, T(*wj + *wm), T(*wx + *wy));
            }
        }
    }
    return audit.finish();
}

#define ORDINAL_INSTANTIATE_VALUATION(T)                                                                        \
    template class BasicValuation<T>;                                                                           \
    template class BasicBiValuation<T>;                                                                         \
    template BasicRuleReport<T> check_sum_rule(const BasicValuation<T>&, const T&);                             \
    template BasicRuleReport<T> check_monotone(const BasicValuation<T>&, const T&);                             \
    template BasicValuation<T> derive_valuation_from_atoms(std::shared_ptr<const Lattice>,                      \
                                                           const std::map<std::string, T>&);                    \
    template BasicRuleReport<T> check_product_rule_for_lattice_product(                                         \
        const BasicValuation<T>&, const BasicValuation<T>&, const BasicValuation<T>&, const T&);                \
    template BasicBiValuation<T> bivaluation_from_valuation(const BasicValuation<T>&);                          \
    template BasicRuleReport<T> check_chain_rule(const BasicBiValuation<T>&, const T&);                         \
    template BasicRuleReport<T> check_diamond_lemma(const BasicBiValuation<T>&, const T&);                      \
    template BasicRuleReport<T> check_context_product_rule(const BasicBiValuation<T>&, const T&);               \
    template BasicRuleReport<T> check_bivaluation_sum_rule(const BasicBiValuation<T>&, const T&);

ORDINAL_INSTANTIATE_VALUATION(double)
ORDINAL_INSTANTIATE_VALUATION(Rational)

#undef ORDINAL_INSTANTIATE_VALUATION

}  // namespace ordinal
