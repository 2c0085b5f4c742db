#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "lexisent/error.hpp"
#include "lexisent/ingest.hpp"
#include "lexisent/text.hpp"
#include "support/fixtures.hpp"

namespace lexisent {
namespace {

using testing::TempDir;
using testing::write_file;

Timestamp at(std::string_view iso) { return parse_timestamp(iso).value(); }

Tweet make(std::string id, std::string_view when, std::string text,
           std::optional<GeoPoint> loc = std::nullopt) {
    return Tweet{std::move(id), at(when), "user", std::move(text), loc};
}

std::vector<std::string> ids(const std::vector<Tweet>& tweets) {
    std::vector<std::string> out;
    for (const auto& t : tweets) out.push_back(t.id);
    return out;
}

const BoundingBox kLondon{51.28, -0.51, 51.70, 0.33};

TEST(TimestampTest, ParsesAcceptedForms) {
    EXPECT_EQ(format_timestamp(at("2022-03-01T10:00:00Z")), "2022-03-01T10:00:00Z");
    EXPECT_EQ(format_timestamp(at("2021-01-01T00:00Z")), "2021-01-01T00:00:00Z");
    EXPECT_EQ(format_timestamp(at("2021-01-01")), "2021-01-01T00:00:00Z");
    EXPECT_EQ(format_timestamp(at("2022-03-01 10:00:00.250Z")), "2022-03-01T10:00:00Z");
    EXPECT_EQ(format_timestamp(at("2022-03-01T12:30:00+02:00")), "2022-03-01T10:30:00Z");
    EXPECT_EQ(format_timestamp(at("2022-03-01T00:30:00-0100")), "2022-03-01T01:30:00Z");
    EXPECT_EQ(format_timestamp(at("2020-02-29T23:59:59")), "2020-02-29T23:59:59Z");
}

TEST(TimestampTest, RejectsGarbage) {
    for (auto bad : {"", "2022", "2022-13-01", "2021-02-29", "2022-03-01T24:00:00Z", "2022-03-01T10",
                     "2022-03-01T10:00:00Zjunk", "22-03-01", "2022-03-01T10:00:00+2", "yesterday"}) {
        EXPECT_FALSE(parse_timestamp(bad).has_value()) << bad;
    }
}

TEST(TimestampTest, DateAndTimeColumns) {
    const Timestamp t = at("1999-12-31T23:05:09Z");
    EXPECT_EQ(format_date(t), "1999-12-31");
    EXPECT_EQ(format_time(t), "23:05:09");
}

TEST(ParseRecordTest, FullAndMinimalRecords) {
    auto t = parse_tweet_record(
        R"({"id":"7","created_at":"2022-03-01T10:00:00Z","username":"a","text":"hi","lat":1.5,"lon":-2})");
    ASSERT_TRUE(t);
    EXPECT_EQ(t->id, "7");
    ASSERT_TRUE(t->location);
    EXPECT_DOUBLE_EQ(t->location->longitude, -2.0);

    t = parse_tweet_record(R"({"id":42,"created_at":"2022-03-01T10:00:00Z","username":"","text":""})");
    ASSERT_TRUE(t);
    EXPECT_EQ(t->id, "42");
    EXPECT_FALSE(t->location);
}

TEST(ParseRecordTest, Malformed) {
    for (auto bad : {
             R"(not json)",
             R"([1,2])",
             R"({"created_at":"2022-03-01T10:00:00Z","username":"a","text":"x"})",
             R"({"id":"","created_at":"2022-03-01T10:00:00Z","username":"a","text":"x"})",
             R"({"id":"1","created_at":"03/01/2022","username":"a","text":"x"})",
             R"({"id":"1","created_at":"2022-03-01T10:00:00Z","text":"x"})",
             R"({"id":"1","created_at":"2022-03-01T10:00:00Z","username":"a","text":5})",
             R"({"id":"1","created_at":"2022-03-01T10:00:00Z","username":"a","text":"x","lat":1})",
             R"({"id":"1","created_at":"2022-03-01T10:00:00Z","username":"a","text":"x","lat":91,"lon":0})",
             R"({"id":"1","created_at":"2022-03-01T10:00:00Z","username":"a","text":"x","lat":0,"lon":"w"})",
             R"({"id":1.5,"created_at":"2022-03-01T10:00:00Z","username":"a","text":"x"})",
         }) {
        EXPECT_FALSE(parse_tweet_record(bad).has_value()) << bad;
    }
}

constexpr std::string_view kRec1 = R"({"id":"1","created_at":"2022-01-01T00:00:00Z","username":"a","text":"one"})";
constexpr std::string_view kRec2 = R"({"id":"2","created_at":"2022-01-02T00:00:00Z","username":"b","text":"two"})";
constexpr std::string_view kRec3 = R"({"id":"3","created_at":"2022-01-03T00:00:00Z","username":"c","text":"three"})";

TEST(ReadCorpusTest, KeepsFileOrder) {
    std::istringstream in(std::string(kRec1) + "\n" + std::string(kRec2) + "\n" + std::string(kRec3) + "\n");
    const auto r = read_corpus(in, "mem");
    EXPECT_EQ(ids(r.tweets), (std::vector<std::string>{"1", "2", "3"}));
    EXPECT_EQ(r.skipped, 0u);
}

TEST(ReadCorpusTest, SkipsAndCountsMalformedLines) {
    std::istringstream in(std::string(kRec1) + "\n{oops\n\n" + std::string(kRec2) + "\r\n");
    const auto r = read_corpus(in, "mem");
    EXPECT_EQ(ids(r.tweets), (std::vector<std::string>{"1", "2"}));
    EXPECT_EQ(r.skipped, 1u);
}

TEST(ReadCorpusTest, AllMalformedIsCorpusEmpty) {
    std::istringstream in("{oops\nnope\n");
    try {
        read_corpus(in, "mem");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CorpusEmpty);
    }
}

TEST(ReadCorpusTest, NoRecordsIsAnEmptyCorpus) {
    std::istringstream in("\n   \n");
    const auto r = read_corpus(in, "mem");
    EXPECT_TRUE(r.tweets.empty());
    EXPECT_EQ(r.skipped, 0u);
}

TEST(ReadCorpusTest, MissingFile) {
    TempDir tmp;
    try {
        read_corpus(tmp / "missing.jsonl");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FileUnreadable);
        EXPECT_NE(std::string(e.what()).find("missing.jsonl"), std::string::npos);
    }
}

TEST(ReadCorpusTest, BundledFixture) {
    const auto r = read_corpus(testing::fixture_corpus());
    EXPECT_EQ(r.tweets.size(), 50u);
    EXPECT_EQ(r.skipped, 0u);
    EXPECT_EQ(r.tweets.front().id, "1001");
    EXPECT_EQ(r.tweets.back().id, "1050");
}

TEST(BoundingBoxTest, Parse) {
    const auto b = BoundingBox::parse("51.28,-0.51, 51.70,+0.33");
    EXPECT_DOUBLE_EQ(b.min_lat, 51.28);
    EXPECT_DOUBLE_EQ(b.max_lon, 0.33);
    EXPECT_TRUE(b.contains({51.28, 0.33}));
    EXPECT_FALSE(b.contains({51.27, 0.0}));
    for (auto bad : {"", "1,2,3", "1,2,3,4,5", "a,b,c,d", "10,0,5,1", "0,10,1,5", "0,0,91,1", "1,2,3,4x"}) {
        EXPECT_THROW(BoundingBox::parse(bad), Error) << bad;
    }
}

TEST(QueryFilterTest, Validate) {
    QueryFilter f{"flu", {}, {}, {}};
    EXPECT_NO_THROW(f.validate());
    f.keyword.clear();
    EXPECT_THROW(f.validate(), Error);
    f = QueryFilter{"flu", at("2022-01-01"), at("2022-01-01"), {}};
    EXPECT_THROW(f.validate(), Error);
    f = QueryFilter{"flu", {}, {}, BoundingBox{1, 1, 0, 0}};
    EXPECT_THROW(f.validate(), Error);
}

TEST(FilterTweetsTest, CaseInsensitiveKeyword) {
    const std::vector<Tweet> in{make("1", "2022-01-01", "the vaccine works")};
    EXPECT_EQ(filter_tweets(in, {"Vaccine", {}, {}, {}}).size(), 1u);
}

TEST(FilterTweetsTest, HashtagIsLiteral) {
    const std::vector<Tweet> in{make("1", "2022-01-01", "get the #Vaccine"), make("2", "2022-01-01", "vaccine")};
    EXPECT_EQ(ids(filter_tweets(in, {"#vaccine", {}, {}, {}})), (std::vector<std::string>{"1"}));
}

TEST(FilterTweetsTest, MultiWordPhrase) {
    const std::vector<Tweet> in{make("1", "2022-01-01", "Long Covid is real"), make("2", "2022-01-01", "long, covid")};
    EXPECT_EQ(ids(filter_tweets(in, {"long covid", {}, {}, {}})), (std::vector<std::string>{"1"}));
}

TEST(FilterTweetsTest, SinceInclusiveUntilExclusive) {
    const std::vector<Tweet> in{
        make("a", "2020-12-31T23:59:00Z", "flu"),
        make("b", "2021-01-01T00:00:00Z", "flu"),
        make("c", "2021-06-30T23:59:59Z", "flu"),
        make("d", "2021-07-01T00:00:00Z", "flu"),
    };
    QueryFilter f{"flu", at("2021-01-01T00:00Z"), at("2021-07-01"), {}};
    EXPECT_EQ(ids(filter_tweets(in, f)), (std::vector<std::string>{"b", "c"}));
}

TEST(FilterTweetsTest, BoxExcludesUnlocated) {
    const std::vector<Tweet> in{
        make("in", "2022-01-01", "flu", GeoPoint{51.5, -0.1}),
        make("out", "2022-01-01", "flu", GeoPoint{53.5, -2.2}),
        make("none", "2022-01-01", "flu"),
    };
    EXPECT_EQ(ids(filter_tweets(in, {"flu", {}, {}, kLondon})), (std::vector<std::string>{"in"}));
}

TEST(FilterTweetsTest, FixtureHospitalInLondon) {
    // Frozen from tests/oracle/fixture_oracle.py
    const auto corpus = read_corpus(testing::fixture_corpus());
    EXPECT_EQ(ids(filter_tweets(corpus.tweets, {"hospital", {}, {}, kLondon})),
              (std::vector<std::string>{"1004", "1009", "1017", "1020", "1026", "1033", "1035", "1042",
                                        "1043", "1045", "1047"}));
}

TEST(FilterTweetsTest, FixtureCovidDuring2021) {
    const auto corpus = read_corpus(testing::fixture_corpus());
    const QueryFilter f{"covid", at("2021-01-01T00:00:00Z"), at("2022-01-01T00:00:00Z"), {}};
    EXPECT_EQ(ids(filter_tweets(corpus.tweets, f)),
              (std::vector<std::string>{"1015", "1016", "1019", "1021", "1024", "1025", "1030"}));
}

// Property checks over random filters on the fixture corpus.
class FilterProperty : public ::testing::Test {
protected:
    QueryFilter random_filter(std::mt19937& rng) {
        static const std::vector<std::string> words{"covid", "flu", "hospital", "vaccine", "the", "#",
                                                    "a", "NOT", "care", "zzz"};
        QueryFilter f;
        f.keyword = words[rng() % words.size()];
        const int y0 = 2019 + static_cast<int>(rng() % 4);
        if (rng() % 2) f.since = at(std::to_string(y0) + "-06-01");
        if (rng() % 2) f.until = at(std::to_string(y0 + 1 + static_cast<int>(rng() % 2)) + "-03-01");
        if (rng() % 2) {
            std::uniform_real_distribution<double> lat(-60, 60), lon(-150, 150), span(0.5, 40);
            const double la = lat(rng), lo = lon(rng);
            f.bbox = BoundingBox{la, lo, la + span(rng), lo + span(rng)};
        }
        return f;
    }
    std::vector<Tweet> corpus_ = read_corpus(testing::fixture_corpus()).tweets;
};

TEST_F(FilterProperty, IdempotentSubsequenceAndKeywordContained) {
    std::mt19937 rng(99);
    for (int i = 0; i < 500; ++i) {
        const QueryFilter f = random_filter(rng);
        const auto once = filter_tweets(corpus_, f);
        ASSERT_EQ(filter_tweets(once, f), once);
        // strictly increasing positions in the input
        std::size_t pos = 0;
        for (const auto& t : once) {
            auto it = std::find(corpus_.begin() + static_cast<std::ptrdiff_t>(pos), corpus_.end(), t);
            ASSERT_NE(it, corpus_.end());
            pos = static_cast<std::size_t>(it - corpus_.begin()) + 1;
            ASSERT_NE(fold_case(t.text).find(fold_case(f.keyword)), std::string::npos);
        }
    }
}

TEST(SourceTest, MockHonoursLimitAndOrder) {
    std::vector<Tweet> ten;
    for (int i = 0; i < 10; ++i) ten.push_back(make(std::to_string(i), "2022-01-01", "covid news"));
    MockSource mock(ten);
    EXPECT_EQ(ids(source_fetch(mock, {"covid", {}, {}, {}}, 5)), (std::vector<std::string>{"0", "1", "2", "3", "4"}));
    EXPECT_EQ(source_fetch(mock, {"covid", {}, {}, {}}, 100).size(), 10u);
}

TEST(SourceTest, MockUnavailable) {
    MockSource mock({}, /*available=*/false);
    try {
        source_fetch(mock, {"x", {}, {}, {}}, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SourceUnavailable);
    }
}

TEST(SourceTest, RejectsBadArguments) {
    MockSource mock({});
    EXPECT_THROW(source_fetch(mock, {"", {}, {}, {}}, 1), Error);
    EXPECT_THROW(source_fetch(mock, {"x", {}, {}, {}}, 0), Error);
}

TEST(SourceTest, CorpusNoMatches) {
    CorpusSource src(testing::fixture_corpus());
    EXPECT_TRUE(source_fetch(src, {"no-such-keyword", {}, {}, {}}, 10).empty());
    EXPECT_EQ(src.skipped(), 0u);
}

TEST(SourceTest, CorpusCovidSubset) {
    CorpusSource src(testing::fixture_corpus());
    EXPECT_EQ(ids(source_fetch(src, {"covid", {}, {}, {}}, 100)),
              (std::vector<std::string>{"1001", "1002", "1003", "1005", "1008", "1011", "1015", "1016",
                                        "1019", "1021", "1024", "1025", "1030", "1034", "1038", "1039",
                                        "1044", "1046", "1048"}));
    EXPECT_EQ(source_fetch(src, {"covid", {}, {}, {}}, 3).size(), 3u);
}

TEST(SourceTest, CorpusSurfacesSkipped) {
    TempDir tmp;
    write_file(tmp / "c.jsonl", std::string(kRec1) + "\nbroken\n");
    CorpusSource src(tmp / "c.jsonl");
    EXPECT_EQ(source_fetch(src, {"one", {}, {}, {}}, 10).size(), 1u);
    EXPECT_EQ(src.skipped(), 1u);
}

}  // namespace
}  // namespace lexisent
