#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "binframe/enumeration.hpp"
#include "binframe/error.hpp"
#include "binframe/text_format.hpp"
#include "test_support.hpp"

using namespace binframe;
using testing_support::frame;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    EXPECT_TRUE(in.good()) << path;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string data_path(const std::string& name) {
    return std::string(BINFRAME_DATA_DIR) + "/" + name;
}

std::vector<std::vector<std::uint64_t>> as_sets(const std::vector<Frame>& frames) {
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& f : frames) {
        const auto enc = f.encodings();
        out.emplace_back(enc.begin(), enc.end());
    }
    return out;
}

std::vector<Frame> table1_rows() {
    std::vector<Frame> out;
    std::istringstream in(read_file(data_path("table1.txt")));
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            out.push_back(parse_frame(line));
        }
    }
    return out;
}

} // namespace

TEST(EnumerateParseval, MatchesNaiveFilterUpToDimensionFour) {
    for (int n = 1; n <= 4; ++n) {
        for (int k = n; k < (1 << n); ++k) {
            ASSERT_EQ(as_sets(enumerate_parseval(n, k)), oracle::parseval_subsets(n, k)) << n << " " << k;
        }
    }
}

TEST(EnumerateParseval, SmallExamples) {
    EXPECT_TRUE(enumerate_parseval(3, 5).empty());
    EXPECT_EQ(oracle::parseval_subsets(3, 5).size(), 0U);
    EXPECT_EQ(as_sets(enumerate_parseval(2, 2)), (std::vector<std::vector<std::uint64_t>>{{1, 2}}));
    const auto n3k3 = as_sets(enumerate_parseval(3, 3));
    EXPECT_NE(std::find(n3k3.begin(), n3k3.end(), std::vector<std::uint64_t>{1, 2, 4}), n3k3.end());
}

TEST(EnumerateParseval, RangeErrors) {
    EXPECT_THROW(enumerate_parseval(3, 2), Error);
    EXPECT_THROW(enumerate_parseval(3, 8), Error);
    EXPECT_THROW(enumerate_parseval(0, 1), Error);
    EXPECT_THROW(enumerate_parseval(kMaxEnumerationDim + 1, 8), Error);
}

TEST(EnumerateParseval, WorkerCountDoesNotChangeOrder) {
    for (int k = 4; k <= 11; ++k) {
        const auto one = as_sets(enumerate_parseval(4, k, 1));
        EXPECT_EQ(as_sets(enumerate_parseval(4, k, 3)), one);
        EXPECT_EQ(as_sets(enumerate_parseval(4, k, 8)), one);
    }
    EXPECT_EQ(as_sets(enumerate_parseval(5, 6, 8)), as_sets(enumerate_parseval(5, 6, 1)));
}

TEST(Classify, Examples) {
    const auto n3 = classify(3, 3);
    ASSERT_EQ(n3.size(), 1U);
    EXPECT_EQ(n3[0].representative.encodings(), (std::vector<Word>{1, 2, 4}));

    const auto n4k6 = classify(4, 6);
    ASSERT_EQ(n4k6.size(), 1U);
    EXPECT_TRUE(switching_equivalent(n4k6[0].representative, frame(4, {1, 3, 5, 9, 14, 15})).has_value());

    for (int k = 12; k <= 15; ++k) {
        EXPECT_TRUE(classify(4, k).empty());
        EXPECT_TRUE(classify(4, k, {1, false}).empty());
    }
}

TEST(Classify, MemberCountsSumToTotal) {
    for (int n = 2; n <= 4; ++n) {
        for (int k = n; k < (1 << n); ++k) {
            std::size_t total = 0;
            for (const auto& c : classify(n, k, {1, false})) {
                total += c.member_count;
                EXPECT_EQ(c.key, canonical_key(Grammian::of(c.representative)));
            }
            EXPECT_EQ(total, oracle::parseval_subsets(n, k).size());
        }
    }
    std::size_t total = 0;
    for (const auto& c : classify(5, 6)) {
        total += c.member_count;
    }
    EXPECT_EQ(total, enumerate_parseval(5, 6).size());
}

TEST(Classify, RepresentativeIsLeastMember) {
    for (int k = 4; k <= 11; ++k) {
        const auto members = enumerate_parseval(4, k);
        const auto classes = classify(4, k, {1, false});
        ASSERT_EQ(classes.size(), 1U);
        EXPECT_EQ(classes[0].representative, members.front());
    }
}

TEST(Classify, ComplementBijectionPreservesCounts) {
    for (int n = 3; n <= 4; ++n) {
        const int top = (1 << n) - 1;
        for (int k = n; k <= top - n; ++k) {
            std::map<CanonicalKey, std::size_t> partner;
            for (const auto& c : classify(n, top - k, {1, false})) {
                partner[c.key] = c.member_count;
            }
            for (const auto& c : classify(n, k, {1, false})) {
                const auto key = canonical_key(Grammian::of(complement(c.representative, true)));
                ASSERT_EQ(partner.count(key), 1U);
                EXPECT_EQ(partner[key], c.member_count);
            }
        }
    }
}

TEST(Catalog, ShortcutAgreesWithDirectSearch) {
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(format_catalog(catalog(n, std::nullopt, {1, true})),
                  format_catalog(catalog(n, std::nullopt, {1, false})));
    }
}

TEST(Catalog, RowsForTableDimensions) {
    const auto c3 = catalog(3);
    ASSERT_EQ(c3.size(), 2U);
    EXPECT_EQ(c3[0].k, 3);
    EXPECT_EQ(c3[1].k, 4);
    const auto c4 = catalog(4);
    ASSERT_EQ(c4.size(), 8U);
    for (std::size_t i = 0; i < c4.size(); ++i) {
        EXPECT_EQ(c4[i].k, static_cast<int>(i) + 4);
        EXPECT_EQ(c4[i].classes.size(), 1U);
    }
    const auto limited = catalog(5, 6);
    ASSERT_EQ(limited.size(), 2U);
    EXPECT_EQ(limited[0].classes.size(), 1U);
    EXPECT_EQ(limited[1].classes.size(), 2U);
}

TEST(Catalog, PublishedRepresentativesMatchEnumeration) {
    const auto rows = table1_rows();
    ASSERT_EQ(rows.size(), 10U);
    std::map<std::pair<int, int>, Frame> enumerated;
    for (int n = 3; n <= 4; ++n) {
        for (const auto& row : catalog(n)) {
            ASSERT_EQ(row.classes.size(), 1U);
            enumerated.emplace(std::pair{n, row.k}, row.classes[0].representative);
        }
    }
    EXPECT_EQ(enumerated.size(), rows.size());
    for (const Frame& f : rows) {
        EXPECT_TRUE(is_parseval(f)) << format_frame(f);
        EXPECT_FALSE(is_trivially_redundant(f)) << format_frame(f);
        const auto it = enumerated.find({f.dim(), static_cast<int>(f.size())});
        ASSERT_NE(it, enumerated.end()) << format_frame(f);
        EXPECT_TRUE(switching_equivalent(f, it->second).has_value()) << format_frame(f);
    }
}

TEST(Catalog, MatchesGoldenFiles) {
    EXPECT_EQ(format_catalog(catalog(3)), read_file(data_path("catalog_n3.tsv")));
    EXPECT_EQ(format_catalog(catalog(4)), read_file(data_path("catalog_n4.tsv")));
    EXPECT_EQ(format_catalog(catalog(5, 6)), read_file(data_path("catalog_n5_k6.tsv")));
}

TEST(Catalog, WorkerCountsGiveIdenticalBytes) {
    for (int n = 3; n <= 4; ++n) {
        EXPECT_EQ(format_catalog(catalog(n, std::nullopt, {8, true})), format_catalog(catalog(n, std::nullopt, {1, true})));
    }
}

TEST(CatalogLine, FormatAndParseRoundTrip) {
    for (int n = 3; n <= 4; ++n) {
        for (const auto& row : catalog(n)) {
            for (const auto& c : row.classes) {
                const std::string text = format_catalog_line(c);
                const CatalogLine parsed = parse_catalog_line(text);
                EXPECT_EQ(parsed.n, n);
                EXPECT_EQ(parsed.k, row.k);
                EXPECT_EQ(parsed.representative, c.representative);
                EXPECT_EQ(parsed.key, c.key);
                EXPECT_EQ(parsed.member_count, c.member_count);
                EXPECT_EQ(format_catalog_line({parsed.key, parsed.representative, parsed.member_count}), text);
            }
        }
    }
    EXPECT_EQ(format_catalog_line(classify(3, 3)[0]), "3\t3\t1,2,4\tk3:94\t1");
}

TEST(CatalogLine, ParseErrors) {
    for (const char* bad : {"", "3\t3\t1,2,4\tk3:94", "3\t4\t1,2,4\tk3:94\t1", "3\t3\t1,2,4\tk3:94\tx",
                            "3 3 1,2,4 k3:94 1", "3\t3\t1,2,9\tk3:94\t1"}) {
        EXPECT_THROW(parse_catalog_line(bad), Error) << bad;
    }
}
