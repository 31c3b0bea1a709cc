#include "binframe/frame.hpp"

#include <algorithm>
#include <string>

#include "binframe/error.hpp"

namespace binframe {

namespace {

constexpr int kMaxSweepDim = 24;

void check_sweepable(int dim) {
    if (dim > kMaxSweepDim) {
        throw Error(ErrorKind::OutOfRange, "exhaustive sweep over Z_2^" + std::to_string(dim) + " refused");
    }
}

// sum_j c_j f_j where c_j = (y, d_j).
Word reconstruct(const Frame& f, std::span<const BinVector> dual, Word y) {
    Word acc = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (parity(y & dual[j].encoding())) {
            acc ^= f[j].encoding();
        }
    }
    return acc;
}

void check_dual_shape(const Frame& f, std::span<const BinVector> dual) {
    if (dual.size() != f.size()) {
        throw Error(ErrorKind::SizeMismatch, "frame has " + std::to_string(f.size()) + " vectors, dual has " +
                                                 std::to_string(dual.size()));
    }
    for (const auto& d : dual) {
        if (d.dim() != f.dim()) {
            throw Error(ErrorKind::DimensionMismatch, "dual vector of dimension " + std::to_string(d.dim()));
        }
    }
}

} // namespace

Frame::Frame(int dim, std::vector<BinVector> vectors) : dim_(dim), vectors_(std::move(vectors)) {
    if (dim < 1 || dim > kMaxDim) {
        throw Error(ErrorKind::OutOfRange, "dimension " + std::to_string(dim) + " outside [1, 64]");
    }
    for (std::size_t j = 0; j < vectors_.size(); ++j) {
        if (vectors_[j].dim() != dim) {
            throw Error(ErrorKind::DimensionMismatch, "vector " + std::to_string(j + 1) + " has dimension " +
                                                          std::to_string(vectors_[j].dim()) + ", expected " +
                                                          std::to_string(dim));
        }
    }
}

Frame Frame::from_encodings(int dim, std::span<const Word> encodings) {
    std::vector<BinVector> vs;
    vs.reserve(encodings.size());
    for (Word e : encodings) {
        vs.emplace_back(dim, e);
    }
    return Frame(dim, std::move(vs));
}

std::vector<Word> Frame::encodings() const {
    std::vector<Word> out;
    out.reserve(vectors_.size());
    for (const auto& v : vectors_) {
        out.push_back(v.encoding());
    }
    return out;
}

Frame Frame::sorted() const {
    auto vs = vectors_;
    std::ranges::sort(vs);
    return Frame(dim_, std::move(vs));
}

Frame Frame::reordered(std::span<const std::size_t> order) const {
    if (order.size() != vectors_.size()) {
        throw Error(ErrorKind::SizeMismatch, "reordering of wrong length");
    }
    std::vector<BinVector> vs;
    vs.reserve(order.size());
    for (std::size_t idx : order) {
        vs.push_back(vectors_.at(idx));
    }
    return Frame(dim_, std::move(vs));
}

// ---------------------------------------------------------------------------

BinMatrix analysis_operator(const Frame& f) {
    return BinMatrix::from_vectors(f.vectors(), f.dim());
}

BinMatrix synthesis_operator(const Frame& f) {
    if (f.empty() || f.size() > static_cast<std::size_t>(kMaxDim)) {
        throw Error(ErrorKind::OutOfRange, "synthesis operator needs 1..64 vectors");
    }
    return analysis_operator(f).transpose();
}

BinMatrix frame_operator(const Frame& f) {
    // S = sum_j f_j f_j^T, accumulated row by row.
    std::vector<Word> rows(static_cast<std::size_t>(f.dim()), 0);
    for (const auto& v : f.vectors()) {
        Word w = v.encoding();
        while (w != 0) {
            rows[static_cast<std::size_t>(std::countr_zero(w))] ^= v.encoding();
            w &= w - 1;
        }
    }
    return BinMatrix::from_rows(f.dim(), rows);
}

BinMatrix grammian_matrix(const Frame& f) {
    const auto k = static_cast<int>(f.size());
    if (k < 1 || k > kMaxDim) {
        throw Error(ErrorKind::OutOfRange, "Grammian needs 1..64 vectors");
    }
    std::vector<Word> rows(f.size(), 0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            rows[static_cast<std::size_t>(i)] |=
                static_cast<Word>(dot(f[static_cast<std::size_t>(j)], f[static_cast<std::size_t>(i)])) << j;
        }
    }
    return BinMatrix::from_rows(k, rows);
}

FrameOperators operators(const Frame& f) {
    return FrameOperators{analysis_operator(f), synthesis_operator(f), frame_operator(f), grammian_matrix(f)};
}

bool is_frame(const Frame& f) {
    return rank(analysis_operator(f)) == f.dim();
}

bool is_parseval(const Frame& f) {
    return frame_operator(f) == BinMatrix::identity(f.dim());
}

bool is_parseval_by_sweep(const Frame& f) {
    check_sweepable(f.dim());
    const Word end = Word{1} << f.dim();
    for (Word x = 0; x < end; ++x) {
        Word acc = 0;
        for (const auto& v : f.vectors()) {
            if (parity(x & v.encoding())) {
                acc ^= v.encoding();
            }
        }
        if (acc != x) {
            return false;
        }
    }
    return true;
}

std::optional<std::vector<BinVector>> compute_dual(const Frame& f) {
    const auto basis = select_basis(f.vectors(), f.dim());
    if (!basis) {
        return std::nullopt;
    }
    // Rows of T are the chosen basis vectors. With c_b = (y, g_b) we need
    // T^T c = y for all y, so the g_b are the rows of (T^T)^{-1}.
    std::vector<Word> rows;
    rows.reserve(basis->size());
    for (std::size_t idx : *basis) {
        rows.push_back(f[idx].encoding());
    }
    const auto inv = inverse(BinMatrix::from_rows(f.dim(), rows).transpose());
    if (!inv) {
        throw std::logic_error("selected basis is singular");
    }
    std::vector<BinVector> dual(f.size(), BinVector::zero(f.dim()));
    for (std::size_t b = 0; b < basis->size(); ++b) {
        dual[(*basis)[b]] = inv->row(static_cast<int>(b));
    }
    return dual;
}

bool verify_reconstruction(const Frame& f, std::span<const BinVector> dual) {
    check_dual_shape(f, dual);
    for (int i = 0; i < f.dim(); ++i) {
        const Word e = Word{1} << i;
        if (reconstruct(f, dual, e) != e) {
            return false;
        }
    }
    return true;
}

bool verify_reconstruction_by_sweep(const Frame& f, std::span<const BinVector> dual) {
    check_dual_shape(f, dual);
    check_sweepable(f.dim());
    const Word end = Word{1} << f.dim();
    for (Word y = 0; y < end; ++y) {
        if (reconstruct(f, dual, y) != y) {
            return false;
        }
    }
    return true;
}

bool parseval_identity_holds(const Frame& f) {
    // Both sides are linear in x over GF(2): the left is (x, sum_j f_j) and
    // the right is (x, 1...1). They agree everywhere iff the vectors sum to
    // the all-ones vector.
    Word sum = 0;
    for (const auto& v : f.vectors()) {
        sum ^= v.encoding();
    }
    return sum == low_mask(f.dim());
}

Frame weight_two_family(int n) {
    if (n < 2) {
        throw Error(ErrorKind::DimensionTooSmall, "weight-two family needs n >= 2");
    }
    if (n > kMaxDim) {
        throw Error(ErrorKind::OutOfRange, "dimension " + std::to_string(n) + " outside [2, 64]");
    }
    std::vector<BinVector> vs;
    int first = 0;
    if (n % 2 == 1) {
        vs.push_back(BinVector::unit(n, 1));
        first = 1;
    }
    for (int i = first; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            vs.emplace_back(n, (Word{1} << i) | (Word{1} << j));
        }
    }
    return Frame(n, std::move(vs));
}

BinMatrix shift_matrix(int n) {
    if (n < 2) {
        throw Error(ErrorKind::DimensionTooSmall, "shift matrix needs n >= 2");
    }
    BinMatrix a(n, n);
    a.set(0, 0, 1);
    for (int i = 0; i + 1 < n; ++i) {
        a.set(i, i + 1, 1);
    }
    return a;
}

} // namespace binframe
