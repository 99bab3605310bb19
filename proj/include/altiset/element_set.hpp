#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace altiset {

// A subset of the index universe {0, ..., size-1}, packed 64 elements per word.
// Also used as the row type of FiniteRelation (row a = successors of a).
class ElementSet {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    ElementSet() = default;
    explicit ElementSet(std::size_t universe_size)
        : size_(universe_size), words_((universe_size + word_bits - 1) / word_bits, 0) {}

    static ElementSet full(std::size_t universe_size);
    // Throws IndexError when an index is outside the universe.
    static ElementSet from_indices(std::size_t universe_size, std::span<const std::size_t> indices);

    std::size_t universe_size() const noexcept { return size_; }

    bool contains(std::size_t i) const noexcept {
        return (words_[i / word_bits] >> (i % word_bits)) & 1U;
    }
    void insert(std::size_t i) noexcept { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
    void erase(std::size_t i) noexcept { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }

    std::size_t count() const noexcept;
    bool empty() const noexcept;
    bool intersects(const ElementSet& other) const noexcept;
    bool is_subset_of(const ElementSet& other) const noexcept;

    ElementSet& operator|=(const ElementSet& other) noexcept;
    ElementSet& operator&=(const ElementSet& other) noexcept;
    // this := this \ other
    ElementSet& subtract(const ElementSet& other) noexcept;
    ElementSet complement() const;

    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a.subtract(b); }

    bool operator==(const ElementSet&) const = default;

    // Ascending member indices.
    std::vector<std::size_t> indices() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_type bits = words_[w];
            while (bits) {
                f(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::span<const word_type> words() const noexcept { return words_; }

private:
    void clear_padding() noexcept;

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

} // namespace altiset
