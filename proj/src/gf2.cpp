#include "ssc/gf2.hpp"

#include <bit>
#include <charconv>

namespace ssc {

std::optional<Dimension> Dimension::for_universe(std::uint64_t count) {
    const std::uint64_t size = count + 1;
    if (count == 0 || !std::has_single_bit(size)) return std::nullopt;
    const auto n = static_cast<unsigned>(std::countr_zero(size));
    if (n > kMax) return std::nullopt;
    return Dimension(n);
}

ColorVector::ColorVector(std::uint32_t bits, Dimension n) : bits_(bits), n_(n.value()) {
    if (bits == 0) throw InputError("zero vector is not a color vector");
    if (bits > n.universe())
        throw InputError("vector " + to_hex(bits) + " has more than " + std::to_string(n_) +
                         " bits");
}

std::optional<ColorVector> xor_add(ColorVector a, ColorVector b) {
    if (a.dimension() != b.dimension()) throw InputError("dimension mismatch in xor_add");
    const std::uint32_t sum = a.bits() ^ b.bits();
    if (sum == 0) return std::nullopt;
    return ColorVector(sum, a.dimension());
}

ColorVector subset_to_vector(const ColorSet& colors, Dimension n) {
    if (colors.empty()) throw InputError("empty color set has no vector");
    std::uint32_t bits = 0;
    for (unsigned i : colors) {
        if (i < 1 || i > n.value())
            throw InputError("color index " + std::to_string(i) + " outside 1.." +
                             std::to_string(n.value()));
        bits |= std::uint32_t{1} << (i - 1);
    }
    return ColorVector(bits, n);
}

ColorSet vector_to_subset(ColorVector v) {
    ColorSet out;
    for (std::uint32_t rest = v.bits(); rest != 0; rest &= rest - 1)
        out.insert(static_cast<unsigned>(std::countr_zero(rest)) + 1);
    return out;
}

std::string to_hex(std::uint32_t bits) {
    char buf[16];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, bits, 16);
    return std::string(buf, end);
}

std::uint32_t parse_hex(std::string_view text, int line) {
    std::uint32_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (text.empty() || text.front() == '-' || text.front() == '+')
        throw InputError("bad hex value '" + std::string(text) + "'", line);
    auto [ptr, ec] = std::from_chars(first, last, value, 16);
    if (ec != std::errc{} || ptr != last)
        throw InputError("bad hex value '" + std::string(text) + "'", line);
    return value;
}

}  // namespace ssc
