#include "ordinal/information.hpp"

#include <algorithm>
#include <cmath>

#include "ordinal/error.hpp"

namespace ordinal {

AtomDistribution::AtomDistribution(std::map<Atom, double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw Error(ErrorCode::InvalidInput, "empty distribution");
    double total = 0.0;
    for (const auto& [atom, p] : probs_) {
        validate_atom(atom);
        if (!(p >= 0.0 && p <= 1.0))
            throw Error(ErrorCode::InvalidInput, "probability of '" + atom + "' outside [0,1]");
        total += p;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance)
        throw Error(ErrorCode::InvalidInput, "probabilities sum to " + std::to_string(total));
}

double AtomDistribution::probability(const Atom& atom) const {
    auto it = probs_.find(atom);
    if (it == probs_.end()) throw Error(ErrorCode::GroundSetMismatch, "no probability for atom '" + atom + "'");
    return it->second;
}

double AtomDistribution::mass(const std::vector<Atom>& block) const {
    double m = 0.0;
    for (const auto& a : block) m += probability(a);
    return m;
}

std::vector<Atom> AtomDistribution::ground_set() const {
    std::vector<Atom> out;
    for (const auto& [atom, p] : probs_) out.push_back(atom);
    return out;
}

double partition_entropy(const Partition& part, const AtomDistribution& dist) {
    if (part.ground_set() != dist.ground_set())
        throw Error(ErrorCode::GroundSetMismatch, "partition '" + part.to_string() + "' and distribution differ in atoms");
    double h = 0.0;
    for (const auto& block : part.blocks()) {
        const double p = dist.mass(block);
        if (p > 0.0) h -= p * std::log2(p);
    }
    // Rounding can leave -0.0 or a tiny negative for single-block partitions.
    return std::max(h, 0.0);
}

Partition common_refinement(const Partition& a, const Partition& b) {
    if (a.ground_set() != b.ground_set())
        throw Error(ErrorCode::GroundSetMismatch, "'" + a.to_string() + "' and '" + b.to_string() + "'");
    std::vector<std::vector<Atom>> blocks;
    for (const auto& x : a.blocks()) {
        for (const auto& y : b.blocks()) {
            std::vector<Atom> both;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
            if (!both.empty()) blocks.push_back(std::move(both));
        }
    }
    return Partition::from_blocks(std::move(blocks));
}

RelevanceReport mutual_information(const Partition& a, const Partition& b, const AtomDistribution& dist) {
    RelevanceReport r;
    r.h_a = partition_entropy(a, dist);
    r.h_b = partition_entropy(b, dist);
    r.h_joint = partition_entropy(common_refinement(a, b), dist);
    r.mutual = r.h_a + r.h_b - r.h_joint;
    return r;
}

}  // namespace ordinal
