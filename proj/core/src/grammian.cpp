#include "binframe/grammian.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <string>

#include "binframe/error.hpp"

namespace binframe {

namespace {

std::size_t triangle_bits(int k) {
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1) / 2;
}

std::size_t triangle_bytes(int k) { return (triangle_bits(k) + 7) / 8; }

class BitWriter {
public:
    explicit BitWriter(std::size_t bytes) : out_(bytes, 0) {}

    void push(int bit) {
        if (bit) {
            out_[pos_ / 8] |= static_cast<std::uint8_t>(0x80U >> (pos_ % 8));
        }
        ++pos_;
    }

    // The low `len` bits of `value`, most significant first.
    void push_word(Word value, int len) {
        for (int t = len - 1; t >= 0; --t) {
            push(static_cast<int>((value >> t) & 1U));
        }
    }

    std::vector<std::uint8_t> take() { return std::move(out_); }

private:
    std::vector<std::uint8_t> out_;
    std::size_t pos_ = 0;
};

// Branch and bound over simultaneous permutations. Positions are filled left
// to right; the unfilled positions carry an ordered partition of the unplaced
// indices into cells (bit masks). Placing index v at position d fixes row d
// of the upper triangle up to the order inside each cell, and the least such
// row puts the non-neighbours of v ahead of its neighbours in every cell. So
// row d is a function of v and the partition alone, the children refine each
// cell by adjacency to v, and only candidates whose row is minimal can lead
// to the minimum. Two candidates that are twins (the transposition swapping
// them is an automorphism) yield mirror-image subtrees; only one is explored.
class MinLexSearch {
public:
    explicit MinLexSearch(const BinMatrix& g)
        : k_(g.rows()),
          adj_(g.row_words().begin(), g.row_words().end()),
          twins_(static_cast<std::size_t>(k_), 0),
          cur_rows_(static_cast<std::size_t>(k_), 0),
          best_rows_(static_cast<std::size_t>(k_), 0),
          cur_label_(static_cast<std::size_t>(k_), 0) {
        for (int u = 0; u < k_; ++u) {
            for (int v = 0; v < k_; ++v) {
                if (u != v && diag(u) == diag(v)) {
                    const Word outside = ~((Word{1} << u) | (Word{1} << v));
                    if (((adj_[idx(u)] ^ adj_[idx(v)]) & outside) == 0) {
                        twins_[idx(u)] |= Word{1} << v;
                    }
                }
            }
        }
    }

    CanonicalForm run() {
        search(0, {low_mask(k_)});
        BitWriter w(triangle_bytes(k_));
        for (int d = 0; d < k_; ++d) {
            w.push_word(best_rows_[idx(d)], k_ - d);
        }
        return CanonicalForm{CanonicalKey(k_, w.take()), best_label_};
    }

private:
    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

    int diag(int v) const { return static_cast<int>((adj_[idx(v)] >> v) & 1U); }

    Word row_for(int v, const std::vector<Word>& cells) const {
        Word row = static_cast<Word>(diag(v));
        const Word without_v = ~(Word{1} << v);
        for (Word cell : cells) {
            cell &= without_v;
            const int ones = std::popcount(cell & adj_[idx(v)]);
            const int zeros = std::popcount(cell) - ones;
            row <<= zeros;
            row = (row << ones) | low_mask(ones);
        }
        return row;
    }

    // -1, 0, +1 comparing current rows [0, depth) against the best so far.
    int compare_prefix(int depth) const {
        if (!have_best_) {
            return -1;
        }
        for (int d = 0; d < depth; ++d) {
            if (cur_rows_[idx(d)] != best_rows_[idx(d)]) {
                return cur_rows_[idx(d)] < best_rows_[idx(d)] ? -1 : 1;
            }
        }
        return 0;
    }

    void search(int depth, const std::vector<Word>& cells) {
        if (depth == k_) {
            if (compare_prefix(k_) < 0) {
                best_rows_ = cur_rows_;
                best_label_ = cur_label_;
                have_best_ = true;
            }
            return;
        }

        const Word first = cells.front();
        Word min_row = ~Word{0};
        Word minimal = 0;
        for (Word c = first; c != 0; c &= c - 1) {
            const int v = std::countr_zero(c);
            const Word row = row_for(v, cells);
            if (row < min_row) {
                min_row = row;
                minimal = Word{1} << v;
            } else if (row == min_row) {
                minimal |= Word{1} << v;
            }
        }

        Word explored = 0;
        for (Word c = minimal; c != 0; c &= c - 1) {
            const int v = std::countr_zero(c);
            if (twins_[idx(v)] & explored) {
                continue;
            }
            explored |= Word{1} << v;

            const int prefix = compare_prefix(depth);
            if (prefix > 0 || (prefix == 0 && min_row > best_rows_[idx(depth)])) {
                return;
            }

            cur_rows_[idx(depth)] = min_row;
            cur_label_[idx(depth)] = static_cast<std::size_t>(v);

            std::vector<Word> next;
            next.reserve(cells.size() * 2);
            const Word without_v = ~(Word{1} << v);
            for (Word cell : cells) {
                cell &= without_v;
                const Word non_adjacent = cell & ~adj_[idx(v)];
                const Word adjacent = cell & adj_[idx(v)];
                if (non_adjacent != 0) {
                    next.push_back(non_adjacent);
                }
                if (adjacent != 0) {
                    next.push_back(adjacent);
                }
            }
            search(depth + 1, next);
        }
    }

    int k_;
    std::vector<Word> adj_;
    std::vector<Word> twins_;
    std::vector<Word> cur_rows_;
    std::vector<Word> best_rows_;
    std::vector<std::size_t> cur_label_;
    std::vector<std::size_t> best_label_;
    bool have_best_ = false;
};

} // namespace

Grammian::Grammian(BinMatrix m) : matrix_(std::move(m)) {
    if (!matrix_.is_square()) {
        throw Error(ErrorKind::NotSquare, "Grammian must be square");
    }
    if (!matrix_.is_symmetric()) {
        throw Error(ErrorKind::NotSymmetric, "Grammian must be symmetric");
    }
}

Grammian Grammian::conjugated(std::span<const std::size_t> perm) const {
    const int k = size();
    if (perm.size() != static_cast<std::size_t>(k)) {
        throw Error(ErrorKind::SizeMismatch, "permutation of wrong length");
    }
    Word seen = 0;
    for (std::size_t p : perm) {
        if (p >= perm.size() || (seen >> p) & 1U) {
            throw Error(ErrorKind::OutOfRange, "not a permutation");
        }
        seen |= Word{1} << p;
    }
    BinMatrix out(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            out.set(i, j, matrix_.at(static_cast<int>(perm[static_cast<std::size_t>(i)]),
                                     static_cast<int>(perm[static_cast<std::size_t>(j)])));
        }
    }
    return Grammian(std::move(out));
}

// ---------------------------------------------------------------------------

CanonicalKey::CanonicalKey(int size, std::vector<std::uint8_t> bytes) : size_(size), bytes_(std::move(bytes)) {
    if (size < 1 || size > kMaxDim) {
        throw Error(ErrorKind::OutOfRange, "key size " + std::to_string(size) + " outside [1, 64]");
    }
    if (bytes_.size() != triangle_bytes(size)) {
        throw Error(ErrorKind::SizeMismatch, "key of size " + std::to_string(size) + " needs " +
                                                 std::to_string(triangle_bytes(size)) + " bytes");
    }
    const std::size_t pad = bytes_.size() * 8 - triangle_bits(size);
    if (pad != 0 && (bytes_.back() & ((1U << pad) - 1)) != 0) {
        throw Error(ErrorKind::OutOfRange, "nonzero padding bits in key");
    }
}

CanonicalKey CanonicalKey::pack(const BinMatrix& symmetric) {
    if (!symmetric.is_symmetric()) {
        throw Error(ErrorKind::NotSymmetric, "key of non-symmetric matrix");
    }
    const int k = symmetric.rows();
    BitWriter w(triangle_bytes(k));
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            w.push(symmetric.at(i, j));
        }
    }
    return CanonicalKey(k, w.take());
}

CanonicalKey CanonicalKey::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (text.size() < 3 || text.front() != 'k' || colon == std::string_view::npos) {
        throw Error(ErrorKind::Parse, "key must look like 'k<size>:<hex>'");
    }
    int size = 0;
    const auto size_text = text.substr(1, colon - 1);
    const auto [ptr, ec] = std::from_chars(size_text.data(), size_text.data() + size_text.size(), size);
    if (ec != std::errc{} || ptr != size_text.data() + size_text.size()) {
        throw Error(ErrorKind::Parse, "malformed key size '" + std::string(size_text) + "'");
    }
    const auto hex = text.substr(colon + 1);
    if (hex.size() % 2 != 0) {
        throw Error(ErrorKind::Parse, "odd number of hex digits in key");
    }
    std::vector<std::uint8_t> bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        unsigned value = 0;
        const auto [p, e] = std::from_chars(hex.data() + i, hex.data() + i + 2, value, 16);
        if (e != std::errc{} || p != hex.data() + i + 2 || std::isupper(static_cast<unsigned char>(hex[i])) ||
            std::isupper(static_cast<unsigned char>(hex[i + 1]))) {
            throw Error(ErrorKind::Parse, "malformed hex in key");
        }
        bytes.push_back(static_cast<std::uint8_t>(value));
    }
    try {
        return CanonicalKey(size, std::move(bytes));
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

std::string CanonicalKey::to_string() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out = "k" + std::to_string(size_) + ":";
    for (std::uint8_t b : bytes_) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0xF]);
    }
    return out;
}

BinMatrix CanonicalKey::matrix() const {
    BinMatrix m(size_, size_);
    std::size_t pos = 0;
    for (int i = 0; i < size_; ++i) {
        for (int j = i; j < size_; ++j, ++pos) {
            const int bit = (bytes_[pos / 8] >> (7 - pos % 8)) & 1;
            m.set(i, j, bit);
            m.set(j, i, bit);
        }
    }
    return m;
}

CanonicalForm canonical_form(const Grammian& g) {
    return MinLexSearch(g.matrix()).run();
}

} // namespace binframe
