#include "ordinal/partition.hpp"

#include <algorithm>
#include <set>

#include "ordinal/error.hpp"

namespace ordinal {

void validate_atom(const Atom& atom) {
    if (atom.empty()) throw Error(ErrorCode::InvalidInput, "empty atom");
    constexpr std::string_view reserved = "|[](){},: \t\r\n\"";
    if (atom.find_first_of(reserved) != Atom::npos)
        throw Error(ErrorCode::InvalidInput, "atom '" + atom + "' contains a reserved character");
}

Partition Partition::from_blocks(std::vector<std::vector<Atom>> blocks) {
    std::set<Atom> seen;
    for (auto& block : blocks) {
        if (block.empty()) throw Error(ErrorCode::InvalidInput, "partition has an empty block");
        for (const auto& atom : block) {
            validate_atom(atom);
            if (!seen.insert(atom).second)
                throw Error(ErrorCode::InvalidInput, "atom '" + atom + "' appears in more than one block");
        }
        std::sort(block.begin(), block.end());
    }
    if (blocks.empty()) throw Error(ErrorCode::InvalidInput, "partition has no blocks");
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    Partition p;
    p.blocks_ = std::move(blocks);
    return p;
}

Partition Partition::parse(std::string_view literal) {
    std::vector<std::vector<Atom>> blocks;
    std::size_t pos = 0;
    while (pos <= literal.size()) {
        std::size_t bar = literal.find('|', pos);
        if (bar == std::string_view::npos) bar = literal.size();
        std::string_view text = literal.substr(pos, bar - pos);
        std::vector<Atom> block;
        if (!text.empty() && text.front() == '[') {
            if (text.back() != ']') throw Error(ErrorCode::InvalidInput, "unterminated '[' in '" + std::string(literal) + "'");
            text = text.substr(1, text.size() - 2);
            std::size_t start = 0;
            while (start <= text.size()) {
                std::size_t comma = text.find(',', start);
                if (comma == std::string_view::npos) comma = text.size();
                block.emplace_back(text.substr(start, comma - start));
                start = comma + 1;
            }
        } else {
            for (char c : text) block.emplace_back(1, c);
        }
        blocks.push_back(std::move(block));
        pos = bar + 1;
    }
    return from_blocks(std::move(blocks));
}

std::vector<Atom> Partition::ground_set() const {
    std::vector<Atom> out;
    for (const auto& block : blocks_) out.insert(out.end(), block.begin(), block.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += '|';
        const auto& block = blocks_[b];
        const bool short_atoms = std::all_of(block.begin(), block.end(), [](const Atom& a) { return a.size() == 1; });
        if (short_atoms) {
            for (const auto& a : block) out += a;
        } else {
            out += '[';
            for (std::size_t i = 0; i < block.size(); ++i) {
                if (i) out += ',';
                out += block[i];
            }
            out += ']';
        }
    }
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (ground_set() != coarser.ground_set()) return false;
    for (const auto& block : blocks_) {
        const bool contained = std::any_of(coarser.blocks_.begin(), coarser.blocks_.end(), [&](const auto& big) {
            return std::includes(big.begin(), big.end(), block.begin(), block.end());
        });
        if (!contained) return false;
    }
    return true;
}

}  // namespace ordinal
