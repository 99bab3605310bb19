#include "altiset/element_set.hpp"

#include <algorithm>
#include <string>

#include "altiset/errors.hpp"

namespace altiset {

ElementSet ElementSet::full(std::size_t universe_size) {
    ElementSet s(universe_size);
    std::fill(s.words_.begin(), s.words_.end(), ~word_type{0});
    s.clear_padding();
    return s;
}

ElementSet ElementSet::from_indices(std::size_t universe_size, std::span<const std::size_t> indices) {
    ElementSet s(universe_size);
    for (auto i : indices) {
        if (i >= universe_size)
            throw IndexError("element index " + std::to_string(i) + " outside universe of size " +
                             std::to_string(universe_size));
        s.insert(i);
    }
    return s;
}

void ElementSet::clear_padding() noexcept {
    if (size_ % word_bits != 0 && !words_.empty())
        words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
}

std::size_t ElementSet::count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool ElementSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

ElementSet& ElementSet::subtract(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

ElementSet ElementSet::complement() const {
    ElementSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.clear_padding();
    return s;
}

std::vector<std::size_t> ElementSet::indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

} // namespace altiset
