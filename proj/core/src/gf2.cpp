#include "binframe/gf2.hpp"

#include <string>
#include <utility>

#include "binframe/error.hpp"

namespace binframe {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim) {
        throw Error(ErrorKind::OutOfRange, "dimension " + std::to_string(dim) + " outside [1, 64]");
    }
}

void check_same_dim(const BinVector& x, const BinVector& y) {
    if (x.dim() != y.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vectors of dimension " + std::to_string(x.dim()) + " and " + std::to_string(y.dim()));
    }
}

} // namespace

BinVector::BinVector(int dim, Word encoding) : dim_(dim), bits_(encoding) {
    check_dim(dim);
    if ((encoding & ~low_mask(dim)) != 0) {
        throw Error(ErrorKind::OutOfRange,
                    "encoding " + std::to_string(encoding) + " does not fit in dimension " + std::to_string(dim));
    }
}

BinVector BinVector::unit(int dim, int coordinate) {
    check_dim(dim);
    if (coordinate < 1 || coordinate > dim) {
        throw Error(ErrorKind::OutOfRange, "coordinate " + std::to_string(coordinate) + " outside [1, dim]");
    }
    return BinVector(dim, Word{1} << (coordinate - 1));
}

int BinVector::coordinate(int i) const {
    if (i < 1 || i > dim_) {
        throw Error(ErrorKind::OutOfRange, "coordinate " + std::to_string(i) + " outside [1, dim]");
    }
    return static_cast<int>((bits_ >> (i - 1)) & 1U);
}

BinVector BinVector::operator+(const BinVector& other) const {
    check_same_dim(*this, other);
    return BinVector(dim_, bits_ ^ other.bits_);
}

BinVector& BinVector::operator+=(const BinVector& other) {
    check_same_dim(*this, other);
    bits_ ^= other.bits_;
    return *this;
}

int dot(const BinVector& x, const BinVector& y) {
    check_same_dim(x, y);
    return parity(x.encoding() & y.encoding());
}

// ---------------------------------------------------------------------------

BinMatrix::BinMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dim(cols);
    if (rows < 0) {
        throw Error(ErrorKind::OutOfRange, "negative row count");
    }
    data_.assign(static_cast<std::size_t>(rows), 0);
}

BinMatrix BinMatrix::identity(int n) {
    BinMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.data_[static_cast<std::size_t>(i)] = Word{1} << i;
    }
    return m;
}

BinMatrix BinMatrix::from_rows(int cols, std::span<const Word> rows) {
    BinMatrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if ((rows[i] & ~low_mask(cols)) != 0) {
            throw Error(ErrorKind::OutOfRange, "row " + std::to_string(i) + " has bits beyond column " +
                                                   std::to_string(cols));
        }
        m.data_[i] = rows[i];
    }
    return m;
}

BinMatrix BinMatrix::from_vectors(std::span<const BinVector> rows, int cols) {
    BinMatrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].dim() != cols) {
            throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i) + " has dimension " +
                                                          std::to_string(rows[i].dim()));
        }
        m.data_[i] = rows[i].encoding();
    }
    return m;
}

int BinMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw Error(ErrorKind::OutOfRange, "matrix index out of range");
    }
    return static_cast<int>((data_[static_cast<std::size_t>(i)] >> j) & 1U);
}

void BinMatrix::set(int i, int j, int value) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw Error(ErrorKind::OutOfRange, "matrix index out of range");
    }
    Word& w = data_[static_cast<std::size_t>(i)];
    const Word bit = Word{1} << j;
    w = (value & 1) ? (w | bit) : (w & ~bit);
}

BinVector BinMatrix::column(int j) const {
    if (j < 0 || j >= cols_) {
        throw Error(ErrorKind::OutOfRange, "column index out of range");
    }
    Word bits = 0;
    for (int i = 0; i < rows_; ++i) {
        bits |= ((data_[static_cast<std::size_t>(i)] >> j) & 1U) << i;
    }
    return BinVector(rows_, bits);
}

BinMatrix BinMatrix::transpose() const {
    BinMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        Word w = data_[static_cast<std::size_t>(i)];
        while (w != 0) {
            const int j = std::countr_zero(w);
            t.data_[static_cast<std::size_t>(j)] |= Word{1} << i;
            w &= w - 1;
        }
    }
    return t;
}

BinVector BinMatrix::apply(const BinVector& x) const {
    if (x.dim() != cols_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix with " + std::to_string(cols_) +
                                                      " columns applied to vector of dimension " +
                                                      std::to_string(x.dim()));
    }
    Word out = 0;
    for (int i = 0; i < rows_; ++i) {
        out |= static_cast<Word>(parity(data_[static_cast<std::size_t>(i)] & x.encoding())) << i;
    }
    return BinVector(rows_, out);
}

bool BinMatrix::is_symmetric() const {
    return is_square() && transpose() == *this;
}

BinMatrix operator*(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::ShapeMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                                  " times " + std::to_string(b.rows()) + "x" +
                                                  std::to_string(b.cols()));
    }
    std::vector<Word> out(static_cast<std::size_t>(a.rows()), 0);
    for (int i = 0; i < a.rows(); ++i) {
        Word w = a.row_word(i);
        Word acc = 0;
        while (w != 0) {
            acc ^= b.row_word(std::countr_zero(w));
            w &= w - 1;
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return BinMatrix::from_rows(b.cols(), out);
}

int rank(const BinMatrix& a) {
    std::vector<Word> rows(a.row_words().begin(), a.row_words().end());
    int r = 0;
    for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
        const Word bit = Word{1} << col;
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (rows[static_cast<std::size_t>(i)] & bit) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(pivot)]);
        const Word p = rows[static_cast<std::size_t>(r)];
        for (int i = r + 1; i < a.rows(); ++i) {
            if (rows[static_cast<std::size_t>(i)] & bit) {
                rows[static_cast<std::size_t>(i)] ^= p;
            }
        }
        ++r;
    }
    return r;
}

std::optional<BinMatrix> inverse(const BinMatrix& a) {
    if (!a.is_square()) {
        throw Error(ErrorKind::NotSquare, "inverse of non-square matrix");
    }
    const int n = a.rows();
    std::vector<Word> left(a.row_words().begin(), a.row_words().end());
    std::vector<Word> right(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        right[static_cast<std::size_t>(i)] = Word{1} << i;
    }
    for (int col = 0; col < n; ++col) {
        const Word bit = Word{1} << col;
        int pivot = -1;
        for (int i = col; i < n; ++i) {
            if (left[static_cast<std::size_t>(i)] & bit) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            return std::nullopt;
        }
        std::swap(left[static_cast<std::size_t>(col)], left[static_cast<std::size_t>(pivot)]);
        std::swap(right[static_cast<std::size_t>(col)], right[static_cast<std::size_t>(pivot)]);
        for (int i = 0; i < n; ++i) {
            if (i != col && (left[static_cast<std::size_t>(i)] & bit)) {
                left[static_cast<std::size_t>(i)] ^= left[static_cast<std::size_t>(col)];
                right[static_cast<std::size_t>(i)] ^= right[static_cast<std::size_t>(col)];
            }
        }
    }
    return BinMatrix::from_rows(n, right);
}

bool is_unitary(const BinMatrix& u) {
    if (!u.is_square()) {
        throw Error(ErrorKind::NotSquare, "unitarity of non-square matrix");
    }
    return u.transpose() * u == BinMatrix::identity(u.rows());
}

std::optional<std::vector<std::size_t>> select_basis(std::span<const BinVector> vectors, int dim) {
    if (dim < 1 || dim > kMaxDim) {
        throw Error(ErrorKind::OutOfRange, "dimension " + std::to_string(dim) + " outside [1, 64]");
    }
    // reduced[b] holds a basis vector whose highest set bit is b.
    std::vector<Word> reduced(static_cast<std::size_t>(dim), 0);
    for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
        if (vectors[idx].dim() != dim) {
            throw Error(ErrorKind::DimensionMismatch, "vector " + std::to_string(idx) + " has dimension " +
                                                          std::to_string(vectors[idx].dim()));
        }
    }
    std::vector<std::size_t> chosen;
    for (std::size_t idx = 0; idx < vectors.size() && static_cast<int>(chosen.size()) < dim; ++idx) {
        Word v = vectors[idx].encoding();
        while (v != 0) {
            const int top = std::bit_width(v) - 1;
            Word& slot = reduced[static_cast<std::size_t>(top)];
            if (slot == 0) {
                slot = v;
                chosen.push_back(idx);
                break;
            }
            v ^= slot;
        }
    }
    if (static_cast<int>(chosen.size()) < dim) {
        return std::nullopt;
    }
    return chosen;
}

} // namespace binframe
