#include "altiset/key.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "altiset/errors.hpp"

namespace altiset {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

} // namespace

Key::Key(std::int64_t value) { *this = parse(std::to_string(value)); }

Key Key::from_double(double value) {
    if (!std::isfinite(value)) throw ArgumentError("key must be a finite number");
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return parse(std::string_view(buf.data(), static_cast<std::size_t>(res.ptr - buf.data())));
}

Key Key::parse(std::string_view text) {
    auto fail = [&]() -> Key {
        throw ArgumentError("not a decimal number: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    std::string mantissa;
    std::int64_t point = 0;  // number of mantissa digits before the decimal point
    bool seen_digit = false;
    while (pos < text.size() && is_digit(text[pos])) {
        mantissa.push_back(text[pos++]);
        seen_digit = true;
    }
    point = static_cast<std::int64_t>(mantissa.size());
    if (!seen_digit) return fail();
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        // Digits are required on both sides of the point.
        if (pos == text.size() || !is_digit(text[pos])) return fail();
        while (pos < text.size() && is_digit(text[pos])) mantissa.push_back(text[pos++]);
    }
    std::int64_t exp10 = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        auto [ptr, ec] = std::from_chars(text.data() + pos + (pos < text.size() && text[pos] == '+'),
                                         text.data() + text.size(), exp10);
        if (ec != std::errc{} || std::abs(exp10) > (std::int64_t{1} << 40)) return fail();
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    if (pos != text.size()) return fail();

    Key k;
    auto first = mantissa.find_first_not_of('0');
    if (first == std::string::npos) return k;  // zero
    auto last = mantissa.find_last_not_of('0');
    k.sign_ = sign;
    k.digits_ = mantissa.substr(first, last - first + 1);
    k.exponent_ = point - static_cast<std::int64_t>(first) + exp10;
    return k;
}

std::string Key::to_string() const {
    if (sign_ == 0) return "0";
    std::string out = sign_ < 0 ? "-" : "";
    const auto n = static_cast<std::int64_t>(digits_.size());
    if (exponent_ > 40 || exponent_ < -20) {
        out += digits_.substr(0, 1);
        if (n > 1) out += "." + digits_.substr(1);
        out += "e" + std::to_string(exponent_ - 1);
    } else if (exponent_ <= 0) {
        out += "0." + std::string(static_cast<std::size_t>(-exponent_), '0') + digits_;
    } else if (exponent_ >= n) {
        out += digits_ + std::string(static_cast<std::size_t>(exponent_ - n), '0');
    } else {
        out += digits_.substr(0, static_cast<std::size_t>(exponent_)) + "." +
               digits_.substr(static_cast<std::size_t>(exponent_));
    }
    return out;
}

std::optional<std::int64_t> Key::to_int64() const {
    if (sign_ == 0) return std::int64_t{0};
    if (exponent_ < static_cast<std::int64_t>(digits_.size()) || exponent_ > 19) return std::nullopt;
    auto s = to_string();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

double Key::to_double() const {
    auto s = to_string();
    double v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

std::strong_ordering Key::operator<=>(const Key& other) const {
    if (sign_ != other.sign_) return sign_ <=> other.sign_;
    if (sign_ == 0) return std::strong_ordering::equal;
    // Compare magnitudes, then flip for negatives.
    std::strong_ordering mag = exponent_ <=> other.exponent_;
    if (mag == std::strong_ordering::equal) mag = digits_.compare(other.digits_) <=> 0;
    if (sign_ > 0) return mag;
    return 0 <=> mag;
}

std::vector<std::uint32_t> dense_ranks(std::span<const Key> keys) {
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<std::uint32_t> ranks(keys.size(), 0);
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && keys[order[i - 1]] < keys[order[i]]) ++r;
        ranks[order[i]] = r;
    }
    return ranks;
}

} // namespace altiset
