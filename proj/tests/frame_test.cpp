#include <gtest/gtest.h>

#include <random>

#include "binframe/enumeration.hpp"
#include "binframe/error.hpp"
#include "binframe/frame.hpp"
#include "test_support.hpp"

using namespace binframe;
using testing_support::frame;
using testing_support::to_oracle;

namespace {

std::vector<std::uint64_t> encodings_of(const std::vector<BinVector>& vs) {
    std::vector<std::uint64_t> out;
    for (const auto& v : vs) {
        out.push_back(v.encoding());
    }
    return out;
}

// Every ordered family of length k in Z_2^n, zero and repeats included.
template <class Fn>
void for_each_family(int n, int k, Fn&& fn) {
    const std::uint64_t base = std::uint64_t{1} << n;
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= base;
    }
    std::vector<std::uint64_t> enc(static_cast<std::size_t>(k));
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (auto& e : enc) {
            e = c % base;
            c /= base;
        }
        fn(enc);
    }
}

} // namespace

TEST(Frame, ConstructionChecksDimensions) {
    EXPECT_THROW(Frame(3, {BinVector(3, 1), BinVector(4, 1)}), Error);
    EXPECT_THROW(Frame::from_encodings(2, {4}), Error);
    const Frame f = frame(3, {4, 1, 2});
    EXPECT_EQ(f.sorted().encodings(), (std::vector<Word>{1, 2, 4}));
    const std::size_t order[] = {2, 0, 1};
    EXPECT_EQ(f.reordered(order).encodings(), (std::vector<Word>{2, 4, 1}));
}

TEST(FrameOperators, RolesAndSymmetry) {
    const Frame f = frame(4, {1, 6, 10, 12, 14});
    const FrameOperators ops = operators(f);
    EXPECT_EQ(ops.analysis.rows(), 5);
    EXPECT_EQ(ops.analysis.cols(), 4);
    for (int j = 0; j < 5; ++j) {
        EXPECT_EQ(ops.analysis.row(j), f[static_cast<std::size_t>(j)]);
        EXPECT_EQ(ops.synthesis.column(j), f[static_cast<std::size_t>(j)]);
    }
    EXPECT_EQ(ops.frame_op, ops.synthesis * ops.analysis);
    EXPECT_EQ(ops.grammian, ops.analysis * ops.synthesis);
    EXPECT_TRUE(ops.frame_op.is_symmetric());
    EXPECT_TRUE(ops.grammian.is_symmetric());
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            EXPECT_EQ(ops.grammian.at(i, j), dot(f[static_cast<std::size_t>(j)], f[static_cast<std::size_t>(i)]));
        }
    }
}

TEST(IsFrame, Examples) {
    EXPECT_TRUE(is_frame(frame(3, {1, 2, 4})));
    EXPECT_FALSE(is_frame(frame(2, {3})));
    EXPECT_FALSE(is_frame(frame(3, {3, 5, 6})));
    EXPECT_FALSE(is_frame(Frame(3)));
}

TEST(IsParseval, Examples) {
    for (int n = 1; n <= 8; ++n) {
        std::vector<std::uint64_t> basis;
        for (int i = 0; i < n; ++i) {
            basis.push_back(std::uint64_t{1} << i);
        }
        EXPECT_TRUE(is_parseval(frame(n, basis)));
    }
    EXPECT_TRUE(is_parseval(frame(3, {3, 5, 6, 7})));
    // x -> x + x = 0.
    EXPECT_FALSE(is_parseval(frame(1, {1, 1})));
}

TEST(IsParseval, MatrixRouteAgreesWithSweepRoute) {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 4; ++k) {
            for_each_family(n, k, [&](const std::vector<std::uint64_t>& enc) {
                const Frame f = frame(n, enc);
                ASSERT_EQ(is_parseval(f), is_parseval_by_sweep(f));
                ASSERT_EQ(is_parseval(f), oracle::frame_operator_is_identity(enc, n));
            });
        }
    }
}

TEST(ComputeDual, Examples) {
    const auto std_dual = compute_dual(frame(3, {1, 2, 4}));
    ASSERT_TRUE(std_dual.has_value());
    EXPECT_EQ(encodings_of(*std_dual), (std::vector<std::uint64_t>{1, 2, 4}));

    const auto dual = compute_dual(frame(2, {1, 2, 3}));
    ASSERT_TRUE(dual.has_value());
    EXPECT_EQ(encodings_of(*dual), (std::vector<std::uint64_t>{1, 2, 0}));
    EXPECT_TRUE(oracle::reconstructs_everything({1, 2, 3}, {1, 2, 0}, 2));

    EXPECT_FALSE(compute_dual(frame(2, {3})).has_value());
}

TEST(ComputeDual, ZeroOffTheChosenBasis) {
    const Frame f = frame(3, {3, 5, 6, 7, 1});
    const auto dual = compute_dual(f);
    ASSERT_TRUE(dual.has_value());
    // Basis indices are 0, 1, 3 (6 = 3 + 5 is skipped).
    EXPECT_TRUE((*dual)[2].is_zero());
    EXPECT_TRUE((*dual)[4].is_zero());
    EXPECT_TRUE(verify_reconstruction(f, *dual));
}

TEST(ComputeDual, ExistsExactlyForFramesExhaustive) {
    // A dual exists iff the family spans. The oracle decides existence by
    // searching every candidate dual family for n <= 2, and by the rank of the
    // analysis operator otherwise.
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 5; ++k) {
            for_each_family(n, k, [&](const std::vector<std::uint64_t>& enc) {
                const Frame f = frame(n, enc);
                const auto dual = compute_dual(f);
                ASSERT_EQ(dual.has_value(), is_frame(f));
                ASSERT_EQ(is_frame(f), oracle::spans(enc, n));
                if (dual) {
                    ASSERT_TRUE(oracle::reconstructs_everything(enc, encodings_of(*dual), n));
                } else if (n <= 2 && k <= 3) {
                    bool any = false;
                    for_each_family(n, k, [&](const std::vector<std::uint64_t>& g) {
                        any = any || oracle::reconstructs_everything(enc, g, n);
                    });
                    ASSERT_FALSE(any);
                }
            });
        }
    }
}

TEST(VerifyReconstruction, Examples) {
    const auto std3 = frame(3, {1, 2, 4});
    EXPECT_TRUE(verify_reconstruction(std3, std3.vectors()));

    const auto f = frame(2, {1, 2, 3});
    const auto good = frame(2, {1, 2, 0});
    const auto bad = frame(2, {1, 2, 3});
    EXPECT_TRUE(verify_reconstruction(f, good.vectors()));
    EXPECT_FALSE(verify_reconstruction(f, bad.vectors()));
    EXPECT_FALSE(oracle::reconstructs_everything({1, 2, 3}, {1, 2, 3}, 2));

    EXPECT_THROW(verify_reconstruction(f, frame(2, {1, 2}).vectors()), Error);
    EXPECT_THROW(verify_reconstruction(f, frame(3, {1, 2, 3}).vectors()), Error);
}

TEST(VerifyReconstruction, BasisCheckAgreesWithFullSweep) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> size(1, 6);
    int positives = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = dim(rng);
        const int k = size(rng);
        std::uniform_int_distribution<std::uint64_t> enc(0, (std::uint64_t{1} << n) - 1);
        std::vector<std::uint64_t> fe, de;
        for (int j = 0; j < k; ++j) {
            fe.push_back(enc(rng));
            de.push_back(enc(rng));
        }
        // Half the trials use the constructed dual so both verdicts occur.
        const Frame f = frame(n, fe);
        if (trial % 2 == 0) {
            if (auto d = compute_dual(f)) {
                de = encodings_of(*d);
            }
        }
        const Frame d = frame(n, de);
        const bool basis = verify_reconstruction(f, d.vectors());
        ASSERT_EQ(basis, verify_reconstruction_by_sweep(f, d.vectors()));
        ASSERT_EQ(basis, oracle::reconstructs_everything(fe, de, n));
        positives += basis ? 1 : 0;
    }
    EXPECT_GT(positives, 50);
}

TEST(ParsevalIdentity, Examples) {
    EXPECT_TRUE(parseval_identity_holds(frame(3, {3, 5, 6, 7})));
    EXPECT_TRUE(parseval_identity_holds(frame(2, {3})));
    EXPECT_FALSE(parseval_identity_holds(frame(2, {1})));
    EXPECT_FALSE(oracle::parseval_identity_by_sweep({1}, 2));
}

TEST(ParsevalIdentity, ClosedFormAgreesWithSweep) {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 4; ++k) {
            for_each_family(n, k, [&](const std::vector<std::uint64_t>& enc) {
                ASSERT_EQ(parseval_identity_holds(frame(n, enc)), oracle::parseval_identity_by_sweep(enc, n));
            });
        }
    }
}

TEST(ParsevalProperties, HoldAcrossSmallCatalogs) {
    for (int n = 1; n <= 4; ++n) {
        for (int k = n; k < (1 << n); ++k) {
            for (const Frame& f : enumerate_parseval(n, k)) {
                ASSERT_TRUE(is_frame(f));
                ASSERT_GE(f.size(), static_cast<std::size_t>(n));
                ASSERT_TRUE(verify_reconstruction(f, f.vectors()));
                ASSERT_TRUE(parseval_identity_holds(f));
                const BinMatrix g = grammian_matrix(f);
                ASSERT_EQ(g * g, g);
                ASSERT_EQ(g.transpose(), g);
                ASSERT_EQ(rank(g), n);
            }
        }
    }
}

TEST(WeightTwoFamily, Examples) {
    EXPECT_EQ(weight_two_family(2).encodings(), (std::vector<Word>{3}));
    EXPECT_EQ(weight_two_family(4).encodings(), (std::vector<Word>{3, 5, 9, 6, 10, 12}));
    EXPECT_EQ(weight_two_family(3).encodings(), (std::vector<Word>{1, 6}));
    EXPECT_THROW(weight_two_family(1), Error);
}

TEST(WeightTwoFamily, IdentityWithoutSpanning) {
    for (int n = 2; n <= 10; ++n) {
        const Frame f = weight_two_family(n);
        const auto enc = f.encodings();
        EXPECT_TRUE(oracle::parseval_identity_by_sweep(enc, n)) << n;
        EXPECT_TRUE(parseval_identity_holds(f));
        EXPECT_FALSE(is_frame(f));
        EXPECT_FALSE(is_parseval(f));
        EXPECT_LT(oracle::rank(oracle::analysis(enc, n)), n);
    }
}

TEST(WeightTwoFamily, EachCoordinateAppearsNMinusOneTimesForEvenN) {
    for (int n = 2; n <= 12; n += 2) {
        const Frame f = weight_two_family(n);
        EXPECT_EQ(f.size(), static_cast<std::size_t>(n * (n - 1) / 2));
        for (int i = 1; i <= n; ++i) {
            int count = 0;
            for (const auto& v : f.vectors()) {
                count += v.coordinate(i);
            }
            EXPECT_EQ(count, n - 1);
        }
    }
}
