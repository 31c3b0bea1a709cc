#pragma once

// Bit-packed linear algebra over the two-element field.
//
// Coordinates are 1-indexed in the public encoding: coordinate i of a vector
// lives in bit i-1 of its integer encoding, so (1,0,1,1) encodes as 13.
// Matrix entries are 0-indexed: entry (i, j) is bit j of row word i, which
// makes every row a BinVector of dimension cols().

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace binframe {

using Word = std::uint64_t;

inline constexpr int kMaxDim = 64;

constexpr Word low_mask(int bits) noexcept {
    return bits >= 64 ? ~Word{0} : (Word{1} << bits) - 1;
}

constexpr int parity(Word w) noexcept { return std::popcount(w) & 1; }

class BinVector {
public:
    BinVector(int dim, Word encoding);

    static BinVector zero(int dim) { return BinVector(dim, 0); }
    // e_i, 1-indexed.
    static BinVector unit(int dim, int coordinate);

    int dim() const noexcept { return dim_; }
    Word encoding() const noexcept { return bits_; }

    // 1-indexed coordinate access, matching the integer encoding.
    int coordinate(int i) const;

    int weight() const noexcept { return std::popcount(bits_); }
    bool is_zero() const noexcept { return bits_ == 0; }

    BinVector operator+(const BinVector& other) const;
    BinVector& operator+=(const BinVector& other);

    friend bool operator==(const BinVector&, const BinVector&) = default;
    friend auto operator<=>(const BinVector&, const BinVector&) = default;

private:
    int dim_;
    Word bits_;
};

// Sum of a_i * b_i mod 2.
int dot(const BinVector& x, const BinVector& y);

class BinMatrix {
public:
    // rows x cols zero matrix; cols must lie in [1, 64], rows may be 0.
    BinMatrix(int rows, int cols);

    static BinMatrix identity(int n);
    static BinMatrix from_rows(int cols, std::span<const Word> rows);
    // Vectors become rows; all must share a dimension. An empty span needs
    // the explicit column count.
    static BinMatrix from_vectors(std::span<const BinVector> rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    int at(int i, int j) const;
    void set(int i, int j, int value);

    Word row_word(int i) const { return data_.at(static_cast<std::size_t>(i)); }
    std::span<const Word> row_words() const noexcept { return data_; }
    BinVector row(int i) const { return BinVector(cols_, row_word(i)); }
    // Requires rows() <= 64.
    BinVector column(int j) const;

    // Requires rows() >= 1 and rows() <= 64.
    BinMatrix transpose() const;

    // A * x for x of dimension cols(); result has dimension rows().
    BinVector apply(const BinVector& x) const;

    bool is_symmetric() const;

    friend bool operator==(const BinMatrix&, const BinMatrix&) = default;

private:
    int rows_;
    int cols_;
    std::vector<Word> data_;
};

BinMatrix operator*(const BinMatrix& a, const BinMatrix& b);

// Row rank by elimination; pivots taken at the lowest row, lowest column.
int rank(const BinMatrix& a);

// std::nullopt when the square matrix is singular. Throws on non-square input.
std::optional<BinMatrix> inverse(const BinMatrix& a);

// U*U = I. Throws on non-square input.
bool is_unitary(const BinMatrix& u);

// Greedy, lowest-index-first maximal independent subset. Returns the
// 0-based indices of the chosen basis when the family spans Z_2^dim,
// std::nullopt otherwise.
std::optional<std::vector<std::size_t>> select_basis(std::span<const BinVector> vectors, int dim);

} // namespace binframe
