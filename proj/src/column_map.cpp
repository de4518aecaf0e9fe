#include "substratum/column_map.hpp"

#include <algorithm>
#include <set>

#include "substratum/error.hpp"

namespace substratum {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw Error(ErrorCode::InvalidInput, "alphabet is empty");
    if (symbols_.size() > 256) throw Error(ErrorCode::InvalidInput, "alphabet has more than 256 letters");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].empty()) throw Error(ErrorCode::InvalidInput, "empty alphabet symbol");
        if (!index_.emplace(symbols_[i], static_cast<Letter>(i)).second)
            throw Error(ErrorCode::InvalidInput, "duplicate alphabet symbol '" + symbols_[i] + "'");
    }
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
    auto it = index_.find(std::string(symbol));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Letter Alphabet::letter(std::string_view symbol) const {
    if (auto a = find(symbol)) return *a;
    throw Error(ErrorCode::UnknownLetter, "'" + std::string(symbol) + "' is not in the alphabet");
}

Word Alphabet::tokenize(std::string_view text) const {
    Word out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::optional<Letter> best;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            const auto& s = symbols_[i];
            if (s.size() > best_len && text.substr(pos, s.size()) == s) {
                best = static_cast<Letter>(i);
                best_len = s.size();
            }
        }
        if (!best)
            throw Error(ErrorCode::UnknownLetter, "cannot read a letter at offset " + std::to_string(pos) + " of '" + std::string(text) + "'");
        out.push_back(*best);
        pos += best_len;
    }
    return out;
}

std::string Alphabet::spell(std::span<const Letter> word) const {
    std::string s;
    for (Letter a : word) s += symbols_.at(a);
    return s;
}

ColumnMap ColumnMap::identity(std::size_t n) {
    std::vector<Letter> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<Letter>(i);
    return ColumnMap(std::move(t));
}

ColumnMap ColumnMap::constant(std::size_t n, Letter a) { return ColumnMap(std::vector<Letter>(n, a)); }

std::size_t ColumnMap::rank() const {
    std::vector<bool> seen(table_.size(), false);
    std::size_t r = 0;
    for (Letter v : table_)
        if (!seen[v]) {
            seen[v] = true;
            ++r;
        }
    return r;
}

bool ColumnMap::is_idempotent() const {
    for (Letter v : table_)
        if (table_[v] != v) return false;
    return true;
}

bool ColumnMap::is_identity() const {
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i] != i) return false;
    return true;
}

std::optional<Letter> ColumnMap::constant_value() const {
    if (table_.empty() || rank() != 1) return std::nullopt;
    return table_.front();
}

bool ColumnMap::agrees_on(const ColumnMap& other, std::span<const Letter> on) const {
    return std::all_of(on.begin(), on.end(), [&](Letter a) { return table_[a] == other.table_[a]; });
}

ColumnMap compose(const ColumnMap& outer, const ColumnMap& inner) {
    std::vector<Letter> t(inner.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = outer(inner(static_cast<Letter>(i)));
    return ColumnMap(std::move(t));
}

std::string render(const ColumnMap& m, const Alphabet& alphabet) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) s += ',';
        s += alphabet.symbol(m(static_cast<Letter>(i)));
    }
    return s + ")^T";
}

} // namespace substratum
