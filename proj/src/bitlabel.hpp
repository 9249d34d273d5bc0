#ifndef BIPLANAR_BITLABEL_HPP
#define BIPLANAR_BITLABEL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "errors.hpp"

namespace biplanar {

// A fixed-width bit string naming a vertex. The string itself is the vertex
// identity; the packed integer is an internal detail and never leaks into
// interfaces. Bit 1 of the string is the leftmost character.
class VertexLabel {
public:
    static constexpr int max_width = 32;

    VertexLabel() : width_(0), bits_(0) {}

    VertexLabel(int width, std::uint32_t bits) : width_(width), bits_(bits) {
        if (width < 1 || width > max_width)
            throw domain_error("label width out of range: " + std::to_string(width));
        if (width < max_width && (bits >> width) != 0)
            throw domain_error("label bits exceed width");
    }

    static VertexLabel parse(const std::string& s) {
        if (s.empty() || s.size() > max_width)
            throw domain_error("label must have 1.." + std::to_string(max_width) + " digits: '" + s + "'");
        std::uint32_t bits = 0;
        for (char c : s) {
            if (c != '0' && c != '1')
                throw domain_error("label digit must be 0 or 1: '" + s + "'");
            bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
        }
        return VertexLabel(static_cast<int>(s.size()), bits);
    }

    std::string str() const {
        std::string s(static_cast<std::size_t>(width_), '0');
        for (int i = 0; i < width_; ++i)
            if (bits_ & (1u << (width_ - 1 - i))) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    int width() const { return width_; }
    std::uint32_t bits() const { return bits_; }

    // 1-based, counted from the left as written.
    bool bit(int pos) const {
        if (pos < 1 || pos > width_) throw domain_error("bit position out of range");
        return (bits_ >> (width_ - pos)) & 1u;
    }

    bool operator==(const VertexLabel&) const = default;
    // Container order: width first, then numeric value. For equal widths this
    // is exactly the lexicographic order of the bit strings.
    auto operator<=>(const VertexLabel& o) const {
        if (auto c = width_ <=> o.width_; c != 0) return c;
        return bits_ <=> o.bits_;
    }

private:
    int width_;
    std::uint32_t bits_;
};

inline int hamming_distance(const VertexLabel& u, const VertexLabel& v) {
    if (u.width() != v.width())
        throw domain_error("hamming distance of labels with widths " +
                           std::to_string(u.width()) + " and " + std::to_string(v.width()));
    return __builtin_popcount(u.bits() ^ v.bits());
}

} // namespace biplanar

template <>
struct std::hash<biplanar::VertexLabel> {
    std::size_t operator()(const biplanar::VertexLabel& l) const noexcept {
        return std::hash<std::uint64_t>()((static_cast<std::uint64_t>(l.width()) << 32) | l.bits());
    }
};

#endif
