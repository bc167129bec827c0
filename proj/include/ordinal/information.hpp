#pragma once

#include <map>

#include "ordinal/partition.hpp"

namespace ordinal {

// Probability over atoms; non-negative and normalized to within 1e-12.
class AtomDistribution {
public:
    static constexpr double kNormalizationTolerance = 1e-12;

    explicit AtomDistribution(std::map<Atom, double> probs);

    const std::map<Atom, double>& probs() const noexcept { return probs_; }
    double probability(const Atom& atom) const;
    double mass(const std::vector<Atom>& block) const;
    std::vector<Atom> ground_set() const;

private:
    std::map<Atom, double> probs_;
};

// Entropies and mutual information of two questions, in bits.
struct RelevanceReport {
    double h_a = 0.0;
    double h_b = 0.0;
    double h_joint = 0.0;
    double mutual = 0.0;
};

// -sum P(block) log2 P(block), with 0 log 0 = 0. Throws GroundSetMismatch.
double partition_entropy(const Partition& part, const AtomDistribution& dist);

// Blocks are the non-empty pairwise intersections. Under finest-at-bottom
// orientation this is the meet of the partition lattice.
Partition common_refinement(const Partition& a, const Partition& b);

// I(A;B) = H(A) + H(B) - H(A,B), with the joint entropy taken over the
// common refinement.
RelevanceReport mutual_information(const Partition& a, const Partition& b, const AtomDistribution& dist);

}  // namespace ordinal
