#include "substratum/digits.hpp"

#include <algorithm>

#include "substratum/error.hpp"

namespace substratum {

namespace {

void require_base(unsigned base) {
    if (base < 2) throw Error(ErrorCode::BadBase, "base must be at least 2, got " + std::to_string(base));
}

Index mul_add(Index acc, unsigned base, Index digit) {
    Index out = 0;
    if (__builtin_mul_overflow(acc, static_cast<Index>(base), &out) ||
        __builtin_add_overflow(out, digit, &out))
        throw Error(ErrorCode::Overflow, "digit string value does not fit in 64 bits");
    return out;
}

Index block_value(const std::vector<Digit>& digits, std::size_t from, unsigned base) {
    Index acc = 0;
    for (std::size_t i = from; i < digits.size(); ++i) {
        if (digits[i] >= base)
            throw Error(ErrorCode::DigitOutOfRange, "digit " + std::to_string(digits[i]) + " in base " + std::to_string(base));
        acc = mul_add(acc, base, digits[i]);
    }
    return acc;
}

} // namespace

Index floor_mod(Index n, Index m) {
    Index r = n % m;
    return r < 0 ? r + m : r;
}

Index checked_pow(unsigned base, std::size_t k) {
    Index out = 1;
    for (std::size_t i = 0; i < k; ++i)
        if (__builtin_mul_overflow(out, static_cast<Index>(base), &out))
            throw Error(ErrorCode::Overflow, std::to_string(base) + "^" + std::to_string(k) + " does not fit in 64 bits");
    return out;
}

DigitString to_digits(Index n, unsigned base) {
    require_base(base);
    DigitString ds;
    const Index b = base;
    if (n >= 0) {
        for (Index m = n; m > 0; m /= b) ds.digits.push_back(static_cast<Digit>(m % b));
    } else {
        ds.sign = Sign::neg;
        // Peel digits until only the (ℓ−1)^∞ tail, i.e. −1, remains.
        for (Index m = n; m != -1;) {
            Index d = floor_mod(m, b);
            ds.digits.push_back(static_cast<Digit>(d));
            m = (m - d) / b;
        }
        ds.digits.push_back(base - 1);
    }
    std::reverse(ds.digits.begin(), ds.digits.end());
    return ds;
}

bool is_canonical(const DigitString& ds, unsigned base) {
    if (base < 2) return false;
    for (Digit d : ds.digits)
        if (d >= base) return false;
    if (ds.sign == Sign::nonneg) return ds.digits.empty() || ds.digits.front() != 0;
    if (ds.digits.empty() || ds.digits.front() != base - 1) return false;
    return ds.digits.size() == 1 || ds.digits[1] != base - 1;
}

Index padded_value(const DigitString& ds, unsigned base) {
    require_base(base);
    if (ds.sign == Sign::nonneg) return block_value(ds.digits, 0, base);
    // Strip every leading ℓ−1; the rest is the block b of length j, value b − ℓ^j.
    std::size_t first = 0;
    while (first < ds.digits.size() && ds.digits[first] == base - 1) ++first;
    if (first == 0) throw Error(ErrorCode::NonCanonical, "negative digit string without an ℓ−1 marker");
    Index block = block_value(ds.digits, first, base);
    return block - checked_pow(base, ds.digits.size() - first);
}

Index to_int(const DigitString& ds, unsigned base) {
    require_base(base);
    for (Digit d : ds.digits)
        if (d >= base)
            throw Error(ErrorCode::DigitOutOfRange, "digit " + std::to_string(d) + " in base " + std::to_string(base));
    if (!is_canonical(ds, base)) throw Error(ErrorCode::NonCanonical, "digit string '" + render(ds, base) + "' is not canonical");
    return padded_value(ds, base);
}

DigitString pad(const DigitString& ds, std::size_t k, unsigned base) {
    require_base(base);
    if (k < ds.digits.size())
        throw Error(ErrorCode::InvalidInput, "pad length " + std::to_string(k) + " shorter than the string");
    DigitString out;
    out.sign = ds.sign;
    out.digits.assign(k - ds.digits.size(), ds.sign == Sign::nonneg ? 0 : base - 1);
    out.digits.insert(out.digits.end(), ds.digits.begin(), ds.digits.end());
    return out;
}

std::size_t digit_length(Index n, unsigned base) {
    auto ds = to_digits(n, base);
    return n >= 0 ? ds.digits.size() : ds.digits.size() - 1;
}

std::string render(const DigitString& ds, unsigned base) {
    const bool wide = base > 10;
    auto join = [&](std::size_t from) {
        std::string s;
        for (std::size_t i = from; i < ds.digits.size(); ++i) {
            if (wide && i > from) s += ',';
            s += std::to_string(ds.digits[i]);
        }
        return s;
    };
    if (ds.sign == Sign::nonneg) return join(0);
    if (ds.digits.empty()) return "~";
    return "~" + std::to_string(ds.digits.front()) + "·" + join(1);
}

} // namespace substratum
