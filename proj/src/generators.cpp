#include "ordinal/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ordinal/error.hpp"

namespace ordinal {

namespace {

std::vector<Atom> checked_atoms(std::vector<Atom> atoms, std::size_t limit) {
    if (atoms.empty()) throw Error(ErrorCode::InvalidInput, "at least one atom is required");
    if (atoms.size() > limit)
        throw Error(ErrorCode::TooManyAtoms, std::to_string(atoms.size()) + " atoms exceeds the limit of " +
                                                 std::to_string(limit));
    for (const auto& a : atoms) validate_atom(a);
    std::sort(atoms.begin(), atoms.end());
    if (std::adjacent_find(atoms.begin(), atoms.end()) != atoms.end())
        throw Error(ErrorCode::DuplicateElement, "duplicate atom");
    return atoms;
}

// Restricted growth strings: label[i] <= 1 + max(label[0..i-1]).
void enumerate_partitions(const std::vector<Atom>& atoms, std::vector<Partition>& out) {
    const std::size_t n = atoms.size();
    std::vector<std::size_t> label(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    while (true) {
        std::size_t blocks = prefix_max[n - 1] + 1;
        std::vector<std::vector<Atom>> parts(blocks);
        for (std::size_t i = 0; i < n; ++i) parts[label[i]].push_back(atoms[i]);
        out.push_back(Partition::from_blocks(std::move(parts)));

        std::size_t i = n;
        while (i-- > 1) {
            if (label[i] <= prefix_max[i - 1]) break;
        }
        if (i == 0) return;
        ++label[i];
        prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            label[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

std::uint64_t parse_uint(const ElementId& id) {
    std::size_t used = 0;
    const auto v = std::stoull(id, &used);
    if (used != id.size()) throw Error(ErrorCode::InvalidInput, "'" + id + "' is not an integer id");
    return v;
}

}  // namespace

Poset partition_lattice(std::vector<Atom> atoms) {
    atoms = checked_atoms(std::move(atoms), kMaxPartitionAtoms);
    std::vector<Partition> parts;
    enumerate_partitions(atoms, parts);

    std::vector<ElementId> ids;
    ids.reserve(parts.size());
    for (const auto& p : parts) ids.push_back(p.to_string());

    // Merging two blocks is exactly one step up in the refinement order.
    std::vector<Cover> covers;
    for (const auto& p : parts) {
        const auto& blocks = p.blocks();
        for (std::size_t a = 0; a < blocks.size(); ++a) {
            for (std::size_t b = a + 1; b < blocks.size(); ++b) {
                std::vector<std::vector<Atom>> merged;
                for (std::size_t k = 0; k < blocks.size(); ++k)
                    if (k != a && k != b) merged.push_back(blocks[k]);
                auto joined = blocks[a];
                joined.insert(joined.end(), blocks[b].begin(), blocks[b].end());
                merged.push_back(std::move(joined));
                covers.emplace_back(p.to_string(), Partition::from_blocks(std::move(merged)).to_string());
            }
        }
    }
    return Poset::build(std::move(ids), covers);
}

std::string subset_id(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end());
    std::string out = "{";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += ',';
        out += atoms[i];
    }
    return out + "}";
}

std::vector<Atom> parse_subset_id(const ElementId& id) {
    if (id.size() < 2 || id.front() != '{' || id.back() != '}')
        throw Error(ErrorCode::InvalidInput, "'" + id + "' is not a subset id");
    std::vector<Atom> out;
    const std::string body = id.substr(1, id.size() - 2);
    if (body.empty()) return out;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string::npos) comma = body.size();
        out.push_back(body.substr(start, comma - start));
        validate_atom(out.back());
        start = comma + 1;
    }
    return out;
}

Poset boolean_lattice(std::vector<Atom> atoms) {
    atoms = checked_atoms(std::move(atoms), kMaxBooleanAtoms);
    const std::size_t n = atoms.size();
    auto id_of = [&](std::uint32_t mask) {
        std::vector<Atom> members;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) members.push_back(atoms[i]);
        return subset_id(std::move(members));
    };
    std::vector<ElementId> ids;
    std::vector<Cover> covers;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        ids.push_back(id_of(mask));
        for (std::size_t i = 0; i < n; ++i)
            if (!(mask & (1u << i))) covers.emplace_back(id_of(mask), id_of(mask | (1u << i)));
    }
    return Poset::build(std::move(ids), covers);
}

Poset divisor_lattice(std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "divisor lattice needs n >= 1");
    if (n > 1'000'000'000'000ULL) throw Error(ErrorCode::BoundExceeded, "n above 10^12");
    std::set<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divisors.insert(d);
            divisors.insert(n / d);
        }
    }
    std::vector<ElementId> ids;
    for (auto d : divisors) ids.push_back(std::to_string(d));
    // d is covered by d*p for each prime p with d*p | n.
    std::vector<Cover> covers;
    for (auto d : divisors) {
        for (auto e : divisors) {
            if (e <= d || e % d != 0) continue;
            const auto q = e / d;
            bool prime = q > 1;
            for (std::uint64_t f = 2; f * f <= q && prime; ++f)
                if (q % f == 0) prime = false;
            if (prime) covers.emplace_back(std::to_string(d), std::to_string(e));
        }
    }
    return Poset::build(std::move(ids), covers);
}

Poset integer_chain(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "chain needs at least one element");
    std::vector<ElementId> ids;
    std::vector<Cover> covers;
    for (std::size_t i = 0; i < n; ++i) {
        ids.push_back(std::to_string(i));
        if (i > 0) covers.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return Poset::build(std::move(ids), covers);
}

AlgebraOps divisor_ops() {
    return {
        [](const ElementId& a, const ElementId& b) { return std::to_string(std::lcm(parse_uint(a), parse_uint(b))); },
        [](const ElementId& a, const ElementId& b) { return std::to_string(std::gcd(parse_uint(a), parse_uint(b))); },
    };
}

AlgebraOps subset_ops() {
    return {
        [](const ElementId& a, const ElementId& b) {
            auto x = parse_subset_id(a);
            auto y = parse_subset_id(b);
            std::vector<Atom> out;
            std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
            return subset_id(std::move(out));
        },
        [](const ElementId& a, const ElementId& b) {
            auto x = parse_subset_id(a);
            auto y = parse_subset_id(b);
            std::vector<Atom> out;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
            return subset_id(std::move(out));
        },
    };
}

AlgebraOps integer_chain_ops() {
    return {
        [](const ElementId& a, const ElementId& b) { return std::to_string(std::max(parse_uint(a), parse_uint(b))); },
        [](const ElementId& a, const ElementId& b) { return std::to_string(std::min(parse_uint(a), parse_uint(b))); },
    };
}

}  // namespace ordinal
