#pragma once

// Arithmetic over F_2^n and the bijection between nonzero vectors and
// nonempty subsets of the color set X = {x_1, ..., x_n}.
//
// Bit i-1 (least significant first) is the indicator of color x_i.

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "ssc/errors.hpp"

namespace ssc {

/// Number of colors |X|; the universe of labels has 2^n - 1 elements.
class Dimension {
public:
    static constexpr unsigned kMax = 30;

    explicit Dimension(unsigned n) : n_(n) {
        if (n < 1 || n > kMax)
            throw InputError("dimension must be in 1.." + std::to_string(kMax) + ", got " +
                             std::to_string(n));
    }

    unsigned value() const noexcept { return n_; }
    /// 2^n - 1, the number of nonzero vectors.
    std::uint32_t universe() const noexcept { return (std::uint32_t{1} << n_) - 1; }

    /// Returns the n with 2^n - 1 == count, if any.
    static std::optional<Dimension> for_universe(std::uint64_t count);

    friend bool operator==(Dimension, Dimension) = default;

private:
    unsigned n_;
};

/// A nonzero vector of F_2^n. Doubles as a point of PG(n-1,2) and as a
/// nonempty subset of X through its support.
class ColorVector {
public:
    ColorVector(std::uint32_t bits, Dimension n);

    std::uint32_t bits() const noexcept { return bits_; }
    Dimension dimension() const noexcept { return Dimension(n_); }

    friend bool operator==(const ColorVector&, const ColorVector&) = default;
    friend std::strong_ordering operator<=>(const ColorVector& a, const ColorVector& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint32_t bits_;
    unsigned n_;
};

/// a + b in F_2^n. Absent when a == b, since the zero vector is not a label.
std::optional<ColorVector> xor_add(ColorVector a, ColorVector b);

/// Color indices are 1-based: index i names x_i.
using ColorSet = std::set<unsigned>;

ColorVector subset_to_vector(const ColorSet& colors, Dimension n);
ColorSet vector_to_subset(ColorVector v);

/// Lowercase hex without prefix or leading zeros.
std::string to_hex(std::uint32_t bits);
inline std::string to_hex(ColorVector v) { return to_hex(v.bits()); }

/// Parses hex digits (either case, no prefix). Throws InputError on bad text.
std::uint32_t parse_hex(std::string_view text, int line = 0);

}  // namespace ssc
