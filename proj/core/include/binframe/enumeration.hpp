#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binframe/equivalence.hpp"
#include "binframe/frame.hpp"
#include "binframe/grammian.hpp"

namespace binframe {

// Largest dimension the exhaustive search accepts.
inline constexpr int kMaxEnumerationDim = 6;

struct SearchConfig {
    // Worker threads; the search space is split by the first vector chosen.
    // Results never depend on this value.
    int workers = 1;
    // Rows with k > 2^(n-1) - 1 are built by complementing the (2^n - 1 - k)
    // row instead of searching directly. Only applies for n >= 3.
    bool use_complement_shortcut = true;
};

// Every k-subset of the nonzero vectors of Z_2^n whose frame operator is the
// identity. Vectors within a frame ascend, frames arrive in lexicographic
// order, and the order is the same for every worker count. Requires
// 1 <= n <= kMaxEnumerationDim and n <= k <= 2^n - 1 (Error(OutOfRange)).
void enumerate_parseval(int n, int k, const std::function<void(const Frame&)>& sink, int workers = 1);
std::vector<Frame> enumerate_parseval(int n, int k, int workers = 1);

// Parseval k-subsets grouped into switching classes. Each representative is
// the lexicographically least member; classes are sorted by representative.
std::vector<SwitchingClass> classify(int n, int k, const SearchConfig& config = {});

struct CatalogRow {
    int n;
    int k;
    std::vector<SwitchingClass> classes;
};

// One row for every k in [n, min(k_max, 2^n - 1)] that has at least one class.
std::vector<CatalogRow> catalog(int n, std::optional<int> k_max = std::nullopt, const SearchConfig& config = {});

// `n<TAB>k<TAB>v1,...,vk<TAB>key<TAB>member_count`, no trailing newline.
std::string format_catalog_line(const SwitchingClass& c);
// All lines of all rows, each terminated by LF.
std::string format_catalog(const std::vector<CatalogRow>& rows);

struct CatalogLine {
    int n;
    int k;
    Frame representative;
    CanonicalKey key;
    std::size_t member_count;
};

// Throws Error(Parse) on malformed lines or when k disagrees with the vector
// count.
CatalogLine parse_catalog_line(std::string_view line);

} // namespace binframe
