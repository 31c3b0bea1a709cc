#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binframe/frame.hpp"
#include "binframe/gf2.hpp"

namespace binframe {

// Symmetric k x k matrix over GF(2), 1 <= k <= 64.
class Grammian {
public:
    explicit Grammian(BinMatrix m);

    static Grammian of(const Frame& f) { return Grammian(grammian_matrix(f)); }

    int size() const noexcept { return matrix_.rows(); }
    const BinMatrix& matrix() const noexcept { return matrix_; }

    // Entry (i, j) of the result is entry (perm[i], perm[j]) of this matrix,
    // i.e. M G M* for the permutation matrix with M_{i, perm[i]} = 1.
    Grammian conjugated(std::span<const std::size_t> perm) const;

    friend bool operator==(const Grammian&, const Grammian&) = default;

private:
    BinMatrix matrix_;
};

// Upper triangle (diagonal included) of a symmetric matrix, read row-major
// and packed MSB-first into bytes. Trailing pad bits are zero, so byte-wise
// comparison of equal-size keys is lexicographic comparison of the entries.
class CanonicalKey {
public:
    CanonicalKey(int size, std::vector<std::uint8_t> bytes);

    static CanonicalKey pack(const BinMatrix& symmetric);
    // Inverse of to_string(). Throws Error(Parse) on malformed input.
    static CanonicalKey parse(std::string_view text);

    int size() const noexcept { return size_; }
    std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

    // `k<size>:<lowercase hex>`, e.g. `k3:d0`.
    std::string to_string() const;

    BinMatrix matrix() const;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

private:
    int size_;
    std::vector<std::uint8_t> bytes_;
};

struct CanonicalForm {
    CanonicalKey key;
    // Position i of the canonical matrix holds original index labeling[i]:
    // key.matrix() == g.conjugated(labeling).matrix().
    std::vector<std::size_t> labeling;
};

// Lexicographically least upper triangle over all k! simultaneous row and
// column permutations, found by exact branch and bound.
CanonicalForm canonical_form(const Grammian& g);

inline CanonicalKey canonical_key(const Grammian& g) { return canonical_form(g).key; }

} // namespace binframe
