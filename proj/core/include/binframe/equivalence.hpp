#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "binframe/frame.hpp"
#include "binframe/gf2.hpp"
#include "binframe/grammian.hpp"

namespace binframe {

// Contains the zero vector or some vector twice.
bool is_trivially_redundant(const Frame& f);

// Unitary U with U f_i = h_i for every i, or std::nullopt when the Grammians
// differ. Both frames must be Parseval with equal n and k; otherwise throws
// Error(NotParseval) or Error(ShapeMismatch).
std::optional<BinMatrix> unitary_equivalent(const Frame& f, const Frame& h);

// f_j = unitary * h_{permutation[j]} for every j (0-based indices).
struct SwitchingWitness {
    BinMatrix unitary;
    std::vector<std::size_t> permutation;
};

// Same preconditions as unitary_equivalent. When the Grammians are already
// equal the identity permutation is returned; otherwise both Grammians are
// aligned through their canonical labelings. The witness is verified before
// it is returned.
std::optional<SwitchingWitness> switching_equivalent(const Frame& f, const Frame& h);

// Z_2^n minus the vectors of f, ascending by encoding; drop_zero also removes
// the zero vector. Requires n >= 3 (Error(DimensionTooSmall)) and no repeated
// vectors (Error(RepeatsPresent)).
Frame complement(const Frame& f, bool drop_zero);

struct SwitchingClass {
    CanonicalKey key;
    Frame representative;
    std::size_t member_count;
};

} // namespace binframe
