#pragma once

#include "substratum/column_map.hpp"
#include "substratum/digits.hpp"

namespace substratum {

/// A finite piece u_lo … u_hi of a two-sided sequence.
struct Window {
    Index lo = 0;
    Index hi = -1;
    Word letters;

    std::size_t size() const noexcept { return letters.size(); }
    bool contains(Index n) const noexcept { return n >= lo && n <= hi; }
    /// Throws IndexOutOfWindow.
    Letter at(Index n) const;
    Letter operator[](Index n) const { return letters[static_cast<std::size_t>(n - lo)]; }
    /// Sub-window [from, to]; both ends must lie inside.
    Window slice(Index from, Index to) const;
};

} // namespace substratum
