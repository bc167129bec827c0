#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordinal/lattice.hpp"
#include "ordinal/rational.hpp"

namespace ordinal {

// Real-valued assignment to every element of a lattice. T is double for
// tolerance-based audits or Rational for exact ones.
template <class T>
class BasicValuation {
public:
    BasicValuation(std::shared_ptr<const Lattice> lattice, std::vector<T> values);

    // Every element id must be present in `values`.
    static BasicValuation from_map(std::shared_ptr<const Lattice> lattice, const std::map<ElementId, T>& values);

    const Lattice& lattice() const noexcept { return *lattice_; }
    const std::shared_ptr<const Lattice>& lattice_ptr() const noexcept { return lattice_; }
    const std::vector<T>& values() const noexcept { return values_; }
    const T& operator()(Index x) const { return values_.at(x); }
    const T& at(const ElementId& id) const { return values_.at(lattice_->poset().index_of(id)); }

    BasicValuation with_value(Index x, T value) const;

private:
    std::shared_ptr<const Lattice> lattice_;
    std::vector<T> values_;
};

// w(x | context): the degree to which `context` includes x. Entries may be
// undefined (zero-measure contexts, partial external tables).
template <class T>
class BasicBiValuation {
public:
    // Row-major table indexed [x * n + context].
    BasicBiValuation(std::shared_ptr<const Lattice> lattice, std::vector<std::optional<T>> table);

    const Lattice& lattice() const noexcept { return *lattice_; }
    std::size_t size() const noexcept { return lattice_->size(); }

    const std::optional<T>& get(Index x, Index context) const { return table_.at(x * size() + context); }
    // Throws ZeroMeasureContext if the entry is undefined.
    const T& at(Index x, Index context) const;
    const T& at(const ElementId& x, const ElementId& context) const;

    BasicBiValuation with_value(Index x, Index context, T value) const;

private:
    std::shared_ptr<const Lattice> lattice_;
    std::vector<std::optional<T>> table_;
};

template <class T>
struct BasicRuleViolation {
    // Role name -> element, e.g. {"x","{a}"}, {"t","{a,b}"}.
    std::vector<std::pair<std::string, ElementId>> instance;
    T lhs{};
    T rhs{};
    T residual{};
};

template <class T>
struct BasicRuleReport {
    std::string rule;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::vector<BasicRuleViolation<T>> violations;
    T tolerance{};
    T max_residual{};

    bool passed() const noexcept { return violations.empty(); }
};

using Valuation = BasicValuation<double>;
using ExactValuation = BasicValuation<Rational>;
using BiValuation = BasicBiValuation<double>;
using ExactBiValuation = BasicBiValuation<Rational>;
using RuleViolation = BasicRuleViolation<double>;
using RuleReport = BasicRuleReport<double>;
using ExactRuleReport = BasicRuleReport<Rational>;

inline constexpr double kDefaultTolerance = 1e-9;

// v(x v y) + v(x ^ y) = v(x) + v(y) over all unordered pairs.
template <class T>
BasicRuleReport<T> check_sum_rule(const BasicValuation<T>& v, const T& tol);

// x <= y implies v(x) <= v(y), checked on covers.
template <class T>
BasicRuleReport<T> check_monotone(const BasicValuation<T>& v, const T& tol);

// `lattice` must be Boolean. Keys of `atom_values` name atoms either by their
// element id ("{a}") or by the bare token ("a").
template <class T>
BasicValuation<T> derive_valuation_from_atoms(std::shared_ptr<const Lattice> lattice,
                                              const std::map<std::string, T>& atom_values);

// v((x,y)) = v(x) v(y); `product`'s lattice must be lattice_product of the factors.
template <class T>
BasicRuleReport<T> check_product_rule_for_lattice_product(const BasicValuation<T>& left,
                                                          const BasicValuation<T>& right,
                                                          const BasicValuation<T>& product, const T& tol);

// w(x | y) = v(x ^ y) / v(y), defined where v(y) > 0.
template <class T>
BasicBiValuation<T> bivaluation_from_valuation(const BasicValuation<T>& v);

// w(x | z) = w(x | y) w(y | z) for every chain x <= y <= z.
template <class T>
BasicRuleReport<T> check_chain_rule(const BasicBiValuation<T>& w, const T& tol);

// w(y | x) = w(x ^ y | x).
template <class T>
BasicRuleReport<T> check_diamond_lemma(const BasicBiValuation<T>& w, const T& tol);

// w(y ^ z | x) = w(z | x ^ y) w(y | x).
template <class T>
BasicRuleReport<T> check_context_product_rule(const BasicBiValuation<T>& w, const T& tol);

// w(x v y | t) + w(x ^ y | t) = w(x | t) + w(y | t) for every context t.
template <class T>
BasicRuleReport<T> check_bivaluation_sum_rule(const BasicBiValuation<T>& w, const T& tol);

}  // namespace ordinal
