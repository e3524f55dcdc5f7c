#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "lpbc/harness.hpp"

using namespace lpbc;

namespace {
std::map<std::string, bool> verdicts(const std::vector<PostulateReport>& reports) {
    std::map<std::string, bool> out;
    for (const auto& r : reports) out[r.postulate] = r.holds;
    return out;
}

// a deliberately small corpus keeps these tests quick; the acceptance suite
// runs the full standard corpus
Corpus small_corpus() {
    Corpus c = Corpus::standard();
    c.pool.resize(6);
    c.max_rules = 3;
    return c;
}
}  // namespace

TEST_CASE("standard corpus shape") {
    Corpus c = Corpus::standard();
    CHECK(c.vocab.size() == 2);
    CHECK(c.pool.size() == 11);
    CHECK(c.max_rules == 4);
}

TEST_CASE("full meet revision postulates on a small corpus") {
    auto v = verdicts(check_revision_postulates(HarnessOp::PmFullMeet, small_corpus()));
    for (const char* id : {"r1", "r2", "r3", "r4", "r5", "r6", "rb1", "rb2", "rb3",
                           "rb4", "rb5"})
        CHECK_MESSAGE(v.at(id), id);
}

TEST_CASE("full meet contraction postulates on a small corpus") {
    auto v =
        verdicts(check_contraction_postulates(HarnessOp::PmFullMeet, small_corpus()));
    for (const char* id : {"c1", "c2", "c3", "c4", "c6", "cb1", "cb2", "cb3", "cb4",
                           "cb5", "cb6", "cb8"})
        CHECK_MESSAGE(v.at(id), id);
    CHECK_FALSE(v.at("c5"));  // recovery fails
}

TEST_CASE("failed postulates carry replayable witnesses") {
    auto reports = check_revision_postulates(HarnessOp::PmFullMeet, small_corpus());
    for (const auto& r : reports)
        if (!r.holds) {
            bool has_witness = !r.witness.p.empty() || !r.witness.q.empty();
            CHECK(has_witness);
        }
}

TEST_CASE("distance has no contraction") {
    CHECK_THROWS_AS(check_contraction_postulates(HarnessOp::Distance, small_corpus()),
                    DomainError);
}

TEST_CASE("identity bridges on a small corpus") {
    for (const auto& r : check_identity_bridges(small_corpus()))
        CHECK_MESSAGE(r.holds, r.op);
}

TEST_CASE("operator names are stable") {
    CHECK(harness_op_name(HarnessOp::PmFullMeet) == "pm:full-meet");
    CHECK(harness_op_name(HarnessOp::Ensconcement) == "ens");
    CHECK(harness_op_name(HarnessOp::Distance) == "distance");
}

TEST_CASE("corpus caps are enforced") {
    Corpus c = Corpus::standard();
    c.vocab = Vocabulary({"a", "b", "c", "d", "e"});
    CHECK_THROWS_AS(check_revision_postulates(HarnessOp::PmFullMeet, c), DomainError);
}
