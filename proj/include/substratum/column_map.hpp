#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace substratum {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Ordered set of symbols, interned to ordinals 0..d.
class Alphabet {
public:
    Alphabet() = default;
    /// Throws InvalidInput on an empty list, duplicates or more than 256 symbols.
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& symbol(Letter a) const { return symbols_.at(a); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    std::optional<Letter> find(std::string_view symbol) const;
    /// Throws UnknownLetter.
    Letter letter(std::string_view symbol) const;

    /// Greedy longest-match split of a string into symbols. Throws UnknownLetter.
    Word tokenize(std::string_view text) const;
    std::string spell(std::span<const Letter> word) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, Letter> index_;
};

/// A total function 𝒜 → 𝒜 stored as its table of image ordinals.
class ColumnMap {
public:
    ColumnMap() = default;
    explicit ColumnMap(std::vector<Letter> table) : table_(std::move(table)) {}

    static ColumnMap identity(std::size_t n);
    static ColumnMap constant(std::size_t n, Letter a);

    Letter operator()(Letter a) const { return table_[a]; }
    std::size_t size() const noexcept { return table_.size(); }
    std::span<const Letter> table() const noexcept { return table_; }

    /// Number of distinct image letters.
    std::size_t rank() const;
    bool is_idempotent() const;
    bool is_identity() const;
    /// The letter a when this map is the projection π_a.
    std::optional<Letter> constant_value() const;
    /// True when the map agrees with other on every letter in `on`.
    bool agrees_on(const ColumnMap& other, std::span<const Letter> on) const;

    auto operator<=>(const ColumnMap&) const = default;

private:
    std::vector<Letter> table_;
};

/// (outer ∘ inner)(a) = outer(inner(a)).
ColumnMap compose(const ColumnMap& outer, const ColumnMap& inner);

/// Vector notation, e.g. "(a,b,b)^T".
std::string render(const ColumnMap& m, const Alphabet& alphabet);

} // namespace substratum

template <>
struct std::hash<substratum::ColumnMap> {
    std::size_t operator()(const substratum::ColumnMap& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto v : m.table()) h = (h ^ v) * 1099511628211ull;
        return h;
    }
};
