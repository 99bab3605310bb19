#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace altiset {

/// An exact real number used as an ordering key.
///
/// Keys are stored as normalized decimals (sign, significant digits, decimal
/// exponent), so integers of any magnitude, decimal strings and doubles all
/// compare exactly against each other. Doubles enter through their shortest
/// round-trip decimal form, which preserves their order.
class Key {
public:
    Key() = default;
    Key(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Key(int value) : Key(static_cast<std::int64_t>(value)) {}  // NOLINT

    /// Rejects NaN and infinities with ArgumentError.
    static Key from_double(double value);
    /// Accepts `[+-]digits[.digits][(e|E)[+-]digits]`; throws ArgumentError otherwise.
    static Key parse(std::string_view text);

    /// Canonical decimal text; `Key::parse(k.to_string()) == k`.
    std::string to_string() const;
    std::optional<std::int64_t> to_int64() const;
    double to_double() const;

    std::strong_ordering operator<=>(const Key& other) const;
    bool operator==(const Key& other) const = default;

private:
    int sign_ = 0;             // -1, 0, +1
    std::string digits_;       // no leading or trailing zeros; empty iff sign_ == 0
    std::int64_t exponent_ = 0; // value = 0.digits_ * 10^exponent_
};

/// Dense ranks 0..k-1 of the keys, equal keys sharing a rank.
std::vector<std::uint32_t> dense_ranks(std::span<const Key> keys);

} // namespace altiset
