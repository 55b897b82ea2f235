#ifndef SPARSAT_BITVEC_HPP
#define SPARSAT_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sparsat {

// Bit-packed vector over F2. Bits beyond width-1 are kept zero, so
// equality of representations is equality of vectors.
class BitVec {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVec() = default;

    explicit BitVec(std::size_t width)
        : width_(width), words_((width + kWordBits - 1) / kWordBits, 0) {}

    static BitVec unit(std::size_t width, std::size_t pos) {
        BitVec v(width);
        v.set(pos, true);
        return v;
    }

    // Parses "0101..." with character j giving bit j.
    static BitVec parse(std::string_view s) {
        BitVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i, true);
            else if (s[i] != '0')
                throw std::invalid_argument("BitVec::parse: bad character");
        }
        return v;
    }

    std::size_t width() const { return width_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }

    void set(std::size_t i, bool b) {
        check_index(i);
        Word mask = Word(1) << (i % kWordBits);
        if (b)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }

    void flip(std::size_t i) { set(i, !get(i)); }

    BitVec& operator^=(const BitVec& o) {
        if (o.width_ != width_)
            throw std::invalid_argument("BitVec: width mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    bool none() const {
        for (Word w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (Word w : words_) c += std::size_t(std::popcount(w));
        return c;
    }

    // Index of the lowest set bit, or npos if zero.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * kWordBits + std::size_t(std::countr_zero(words_[w]));
        return npos;
    }

    // Dot product mod 2.
    friend bool dot(const BitVec& a, const BitVec& b) {
        if (a.width_ != b.width_)
            throw std::invalid_argument("BitVec: width mismatch");
        Word acc = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            acc ^= a.words_[w] & b.words_[w];
        return std::popcount(acc) & 1u;
    }

    bool operator==(const BitVec& o) const = default;

    std::string to_string() const {
        std::string s(width_, '0');
        for (std::size_t i = 0; i < width_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    // Hex form used by the family file format: nibble 0 holds bits 0..3,
    // printed most-significant nibble first, ceil(width/4) digits.
    std::string to_hex() const {
        std::size_t nibbles = (width_ + 3) / 4;
        if (nibbles == 0) nibbles = 1;
        std::string s(nibbles, '0');
        for (std::size_t k = 0; k < nibbles; ++k) {
            unsigned v = 0;
            for (unsigned j = 0; j < 4; ++j) {
                std::size_t bit = 4 * k + j;
                if (bit < width_ && get(bit)) v |= 1u << j;
            }
            s[nibbles - 1 - k] = "0123456789abcdef"[v];
        }
        return s;
    }

    static BitVec from_hex(std::string_view s, std::size_t width) {
        BitVec v(width);
        std::size_t nibbles = s.size();
        for (std::size_t k = 0; k < nibbles; ++k) {
            char c = s[nibbles - 1 - k];
            unsigned d;
            if (c >= '0' && c <= '9') d = unsigned(c - '0');
            else if (c >= 'a' && c <= 'f') d = unsigned(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') d = unsigned(c - 'A' + 10);
            else throw std::invalid_argument("BitVec::from_hex: bad digit");
            for (unsigned j = 0; j < 4; ++j) {
                if (!(d & (1u << j))) continue;
                std::size_t bit = 4 * k + j;
                if (bit >= width)
                    throw std::invalid_argument("BitVec::from_hex: bit out of range");
                v.set(bit, true);
            }
        }
        return v;
    }

    std::size_t hash() const {
        std::size_t h = width_;
        for (Word w : words_)
            h = h * 0x9e3779b97f4a7c15ULL + std::size_t(w);
        return h;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= width_) throw std::out_of_range("BitVec: index out of range");
    }

    std::size_t width_ = 0;
    std::vector<Word> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

} // namespace sparsat

template <>
struct std::hash<sparsat::BitVec> {
    std::size_t operator()(const sparsat::BitVec& v) const { return v.hash(); }
};

#endif
