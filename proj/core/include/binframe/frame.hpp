#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "binframe/gf2.hpp"

namespace binframe {

// Ordered family f_1..f_k in Z_2^n. Zero vectors, repeats and k < n are all
// admitted; whether the family spans is a property, not an invariant.
class Frame {
public:
    explicit Frame(int dim, std::vector<BinVector> vectors = {});

    static Frame from_encodings(int dim, std::span<const Word> encodings);
    static Frame from_encodings(int dim, std::initializer_list<Word> encodings) {
        return from_encodings(dim, std::span<const Word>(encodings.begin(), encodings.size()));
    }

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    bool empty() const noexcept { return vectors_.empty(); }

    const BinVector& operator[](std::size_t j) const { return vectors_[j]; }
    std::span<const BinVector> vectors() const noexcept { return vectors_; }
    std::vector<Word> encodings() const;

    // Same vectors, ascending integer encoding.
    Frame sorted() const;
    // Vector j of the result is vector order[j] of this frame.
    Frame reordered(std::span<const std::size_t> order) const;

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    int dim_;
    std::vector<BinVector> vectors_;
};

struct FrameOperators {
    BinMatrix analysis;  // k x n, row j is f_j
    BinMatrix synthesis; // n x k, column j is f_j
    BinMatrix frame_op;  // n x n, synthesis * analysis
    BinMatrix grammian;  // k x k, entry (i, j) = (f_j, f_i)
};

BinMatrix analysis_operator(const Frame& f);
BinMatrix synthesis_operator(const Frame& f);
BinMatrix frame_operator(const Frame& f);
BinMatrix grammian_matrix(const Frame& f);
// Requires 1 <= k <= 64 so that every operator is representable.
FrameOperators operators(const Frame& f);

bool is_frame(const Frame& f);

// Frame operator equals the identity.
bool is_parseval(const Frame& f);

// x = sum_j (x, f_j) f_j checked for every x in Z_2^n. Exponential in n;
// kept as an independent route for cross-checking is_parseval.
bool is_parseval_by_sweep(const Frame& f);

// A dual family g_1..g_k with y = sum_j (y, g_j) f_j for all y. Vectors off
// the lowest-index basis subset are zero; on the subset they form the dual
// basis. std::nullopt when f does not span.
std::optional<std::vector<BinVector>> compute_dual(const Frame& f);

// Checks y = sum_j (y, d_j) f_j on the standard basis, which suffices by
// linearity. Throws on size or dimension mismatch.
bool verify_reconstruction(const Frame& f, std::span<const BinVector> dual);

// Same identity, swept over all 2^n vectors.
bool verify_reconstruction_by_sweep(const Frame& f, std::span<const BinVector> dual);

// sum_j (x, f_j)^2 = (x, x) for every x in Z_2^n.
bool parseval_identity_holds(const Frame& f);

// All weight-two vectors for even n; for odd n, e_1 followed by the weight-two
// vectors supported on coordinates 2..n. Satisfies the Parseval identity but
// never spans. Throws for n < 2.
Frame weight_two_family(int n);

// A_{i,j} = 1 iff i = j = 1 or j - i = 1 (1-indexed). Preserves (x, x) for
// every x, yet has rank n - 1. Throws for n < 2.
BinMatrix shift_matrix(int n);

} // namespace binframe
