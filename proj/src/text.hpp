#pragma once

// Line tokenizing shared by the text file parsers.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ssc/errors.hpp"

namespace ssc::detail {

inline std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && blank(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !blank(line[j])) ++j;
        if (j > i) words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

inline std::uint64_t to_index(std::string_view word, int line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size())
        throw InputError("expected a nonnegative integer, got '" + std::string(word) + "'", line);
    return value;
}

inline bool skippable(const std::vector<std::string_view>& words) {
    return words.empty() || words[0].front() == '#';
}

}  // namespace ssc::detail
