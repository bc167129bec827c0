#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ordinal {

using Atom = std::string;

// A set partition of a finite ground set of atom tokens.
//
// Canonical form: atoms sorted inside each block; blocks ordered by size and
// then lexicographically. The literal form joins blocks with '|'. A block of
// single-character atoms is written by concatenation ("bc"); a block holding
// any longer atom is bracketed with commas ("[00,01]").
class Partition {
public:
    static Partition from_blocks(std::vector<std::vector<Atom>> blocks);
    static Partition parse(std::string_view literal);

    const std::vector<std::vector<Atom>>& blocks() const noexcept { return blocks_; }
    std::vector<Atom> ground_set() const;
    std::string to_string() const;

    // True when every block of *this lies inside a block of `coarser`.
    bool refines(const Partition& coarser) const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::vector<Atom>> blocks_;
};

// Atoms may not contain separators used by the literal and id syntaxes.
void validate_atom(const Atom& atom);

}  // namespace ordinal
