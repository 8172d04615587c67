#include <doctest.h>

#include <random>

#include "conlleval_oracle.hpp"
#include "helpers.hpp"

using namespace coalas;

TEST_CASE("encode_spans basics") {
    CHECK(encode_spans(4, {{1, 3, BorrowingType::ENG}}) ==
          std::vector<Tag>{Tag::O, Tag::B_ENG, Tag::I_ENG, Tag::O});
    CHECK(encode_spans(2, {}) == std::vector<Tag>{Tag::O, Tag::O});
    CHECK(encode_spans(3, {{0, 1, BorrowingType::ENG},
                           {1, 3, BorrowingType::OTHER}}) ==
          std::vector<Tag>{Tag::B_ENG, Tag::B_OTHER, Tag::I_OTHER});
}

TEST_CASE("encode_spans rejects bad spans") {
    CHECK_THROWS(encode_spans(2, {{0, 3, BorrowingType::ENG}}));
    CHECK_THROWS(encode_spans(3, {{1, 1, BorrowingType::ENG}}));
    CHECK_THROWS(encode_spans(4, {{0, 2, BorrowingType::ENG},
                                  {1, 3, BorrowingType::ENG}}));
}

TEST_CASE("decode_tags conlleval repair") {
    std::vector<Tag> dangling{Tag::O, Tag::I_ENG, Tag::I_ENG, Tag::O};
    CHECK(decode_tags(dangling, RepairMode::Conlleval) ==
          std::vector<Span>{{1, 3, BorrowingType::ENG}});
    CHECK(decode_tags(dangling, RepairMode::Discard).empty());

    // Type change breaks the chunk.
    CHECK(decode_tags({Tag::B_ENG, Tag::I_OTHER}, RepairMode::Conlleval) ==
          std::vector<Span>{{0, 1, BorrowingType::ENG},
                            {1, 2, BorrowingType::OTHER}});
}

TEST_CASE("repair fixes dangling I tags and is stable on valid input") {
    CHECK(repair({Tag::O, Tag::I_ENG}) == std::vector<Tag>{Tag::O, Tag::B_ENG});
    CHECK(repair({Tag::B_ENG, Tag::I_ENG}) ==
          std::vector<Tag>{Tag::B_ENG, Tag::I_ENG});
    CHECK(repair({Tag::I_OTHER, Tag::I_ENG}) ==
          std::vector<Tag>{Tag::B_OTHER, Tag::B_ENG});
}

TEST_CASE("round trip: decode(encode(spans)) == spans") {
    std::mt19937 rng(7);
    for (int it = 0; it < 500; ++it) {
        std::size_t len = 1 + rng() % 20;
        auto spans = testutil::random_spans(rng, len);
        auto tags = encode_spans(len, spans);
        CHECK(decode_tags(tags, RepairMode::Conlleval) == spans);
        CHECK(decode_tags(tags, RepairMode::Discard) == spans);
    }
}

TEST_CASE("repair properties on random sequences") {
    std::mt19937 rng(11);
    for (int it = 0; it < 500; ++it) {
        auto tags = testutil::random_tags(rng, 1 + rng() % 20);
        auto r = repair(tags);
        CHECK(repair(r) == r);  // idempotent
        CHECK(decode_tags(tags, RepairMode::Conlleval) ==
              decode_tags(r, RepairMode::Conlleval));
        // repair == encode(decode(tags))
        CHECK(encode_spans(tags.size(),
                           decode_tags(tags, RepairMode::Conlleval)) == r);
    }
}

TEST_CASE("conlleval oracle agreement on 1000 random sequences") {
    std::mt19937 rng(13);
    for (int it = 0; it < 1000; ++it) {
        auto tags = testutil::random_tags(rng, 1 + rng() % 20);
        std::vector<std::string> strs;
        for (Tag t : tags) strs.emplace_back(to_string(t));
        auto expected = conlleval_oracle::chunks(strs);
        auto actual = decode_tags(tags, RepairMode::Conlleval);
        REQUIRE(actual.size() == expected.size());
        for (std::size_t i = 0; i < actual.size(); ++i) {
            CHECK(actual[i].start == expected[i].start);
            CHECK(actual[i].end == expected[i].end);
            CHECK(std::string(to_string(actual[i].type)) == expected[i].type);
        }
    }
}
