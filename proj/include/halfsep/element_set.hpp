#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace halfsep {

/**
 * @brief Finite universe of elements 0..size-1 with optional display names.
 */
class GroundSet {
public:
    explicit GroundSet(std::size_t size) : size_(size) {
        if (size == 0) throw std::invalid_argument("ground set must be non-empty");
    }

    explicit GroundSet(std::vector<std::string> labels)
        : size_(labels.size()), labels_(std::move(labels)) {
        if (size_ == 0) throw std::invalid_argument("ground set must be non-empty");
    }

    std::size_t size() const noexcept { return size_; }
    bool has_labels() const noexcept { return !labels_.empty(); }

    std::string label(std::size_t e) const {
        if (e >= size_) throw std::out_of_range("element id out of range");
        return labels_.empty() ? std::to_string(e) : labels_[e];
    }

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = std::find(labels_.begin(), labels_.end(), name);
        if (it == labels_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - labels_.begin());
    }

private:
    std::size_t size_;
    std::vector<std::string> labels_;
};

/**
 * @brief Subset of a finite universe, stored as 64-bit blocks.
 *
 * Binary operations require both operands to have the same universe size.
 * Equality is extensional.
 */
class ElementSet {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

    ElementSet(std::size_t universe, std::initializer_list<std::size_t> members) : ElementSet(universe) {
        for (auto e : members) insert(e);
    }

    static ElementSet from_members(std::size_t universe, std::span<const std::size_t> members) {
        ElementSet s(universe);
        for (auto e : members) s.insert(e);
        return s;
    }

    static ElementSet full(std::size_t universe) {
        ElementSet s(universe);
        std::fill(s.words_.begin(), s.words_.end(), ~word_type{0});
        s.trim();
        return s;
    }

    /// Bit i of `mask` is element i. Requires universe <= 64.
    static ElementSet from_mask(std::size_t universe, std::uint64_t mask) {
        if (universe > word_bits) throw std::invalid_argument("from_mask needs universe <= 64");
        ElementSet s(universe);
        if (universe > 0) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::uint64_t to_mask() const {
        if (universe_ > word_bits) throw std::invalid_argument("to_mask needs universe <= 64");
        return words_.empty() ? 0 : words_[0];
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(std::size_t e) const noexcept {
        return e < universe_ && ((words_[e / word_bits] >> (e % word_bits)) & 1u);
    }

    void insert(std::size_t e) {
        check_index(e);
        words_[e / word_bits] |= word_type{1} << (e % word_bits);
    }

    void erase(std::size_t e) {
        check_index(e);
        words_[e / word_bits] &= ~(word_type{1} << (e % word_bits));
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
    }

    bool is_full() const noexcept { return count() == universe_; }

    ElementSet& operator|=(const ElementSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    ElementSet& operator&=(const ElementSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    /// Set difference.
    ElementSet& operator-=(const ElementSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    ElementSet complement() const {
        ElementSet c(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
        c.trim();
        return c;
    }

    ElementSet with(std::size_t e) const {
        ElementSet c = *this;
        c.insert(e);
        return c;
    }

    bool intersects(const ElementSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const ElementSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool is_proper_subset_of(const ElementSet& o) const { return is_subset_of(o) && *this != o; }

    /// Smallest member, if any.
    std::optional<std::size_t> first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * word_bits + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return std::nullopt;
    }

    std::optional<std::size_t> last() const noexcept {
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i]) return i * word_bits + (word_bits - 1 - static_cast<std::size_t>(std::countl_zero(words_[i])));
        return std::nullopt;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            word_type w = words_[i];
            while (w) {
                auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(i * word_bits + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t e) { out.push_back(e); });
        return out;
    }

    bool operator==(const ElementSet& o) const = default;

    /// Total order used only for canonical sorting and deduplication.
    std::strong_ordering operator<=>(const ElementSet& o) const {
        if (auto c = universe_ <=> o.universe_; c != 0) return c;
        for (std::size_t i = words_.size(); i-- > 0;)
            if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    /// "{0,3,5}"
    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for_each([&](std::size_t e) {
            if (sep) s += ',';
            s += std::to_string(e);
            sep = true;
        });
        return s + "}";
    }

    std::string to_string(const GroundSet& ground) const {
        std::string s = "{";
        bool sep = false;
        for_each([&](std::size_t e) {
            if (sep) s += ',';
            s += ground.label(e);
            sep = true;
        });
        return s + "}";
    }

private:
    static std::size_t word_count(std::size_t n) { return (n + word_bits - 1) / word_bits; }

    void trim() {
        if (universe_ % word_bits != 0 && !words_.empty())
            words_.back() &= (word_type{1} << (universe_ % word_bits)) - 1;
    }

    void check_index(std::size_t e) const {
        if (e >= universe_) throw std::out_of_range("element " + std::to_string(e) + " outside universe of size " + std::to_string(universe_));
    }

    void check_same(const ElementSet& o) const {
        if (universe_ != o.universe_) throw std::invalid_argument("element sets over different universes");
    }

    std::size_t universe_ = 0;
    std::vector<word_type> words_;
};

/// Canonical order for lists of sets: by cardinality, then by content.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.members() < b.members();
}

}  // namespace halfsep
