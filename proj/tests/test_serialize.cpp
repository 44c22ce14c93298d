#include <gtest/gtest.h>

#include "kgraph/serialize.hpp"
#include "test_util.hpp"

using namespace kgraph;

TEST(JsonTest, IntegersExactAtAnySize) {
  const Json j = parse_json_exact(R"([12, -7, 123456789012345678901234567890, "-99999999999999999999"])");
  EXPECT_EQ(integer_from_json(j[0]), 12);
  EXPECT_EQ(integer_from_json(j[1]), -7);
  EXPECT_EQ(integer_from_json(j[2]), Integer("123456789012345678901234567890", 10));
  EXPECT_EQ(integer_from_json(j[3]), Integer("-99999999999999999999", 10));
}

TEST(JsonTest, NonIntegersRejected) {
  const Json j = parse_json_exact(R"([1.5, "abc", true])");
  for (const auto& e : j) EXPECT_THROW(integer_from_json(e), Error);
  EXPECT_THROW(parse_json_exact("{\"k\": "), Error);
}

TEST(JsonTest, IntegerWriting) {
  EXPECT_TRUE(to_json(Integer(5)).is_number_integer());
  const Integer big("-123456789012345678901234567890", 10);
  EXPECT_EQ(to_json(big), Json("-123456789012345678901234567890"));
  EXPECT_EQ(integer_from_json(to_json(big)), big);
}

TEST(JsonTest, RationalRoundTrip) {
  for (const Rational& q : {Rational(3, 7), Rational(-5), Rational(0), Rational(Integer("100000000000000000000007", 10), 9)}) {
    const Json j = to_json(q);
    EXPECT_TRUE(j.is_string());
    EXPECT_EQ(rational_from_json(j), q);
  }
  EXPECT_EQ(to_json(Rational(3, 7)), Json("3/7"));
}

TEST(GraphJsonTest, RoundTrip) {
  const KGraph g = make_kgraph({IntMatrix::from_rows({{0, 1}, {1, 0}}), IntMatrix::identity(2)}, {"a", "b"});
  const KGraph h = validate(parse_graph(graph_to_jsonl(g)));
  EXPECT_EQ(h.vertices(), g.vertices());
  EXPECT_EQ(h.matrices(), g.matrices());
  EXPECT_EQ(graph_to_jsonl(g).find('\n'), std::string::npos);
}

TEST(GraphJsonTest, BigEntryFixture) {
  const KGraph g = validate(parse_graph(read_text_file(testutil::fixture("big_entry"))));
  EXPECT_EQ(g.matrix(0)(0, 0), Integer("123456789012345678901234567890", 10));
  EXPECT_EQ(validate(parse_graph(graph_to_jsonl(g))).matrices(), g.matrices());
}

TEST(GraphJsonTest, VerticesAreRequired) {
  try {
    parse_graph(R"({"k": 1, "matrices": [[[1, 0], [0, 1]]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
}

TEST(GraphJsonTest, MissingFileIsIoError) {
  try {
    read_text_file("/nonexistent/graph.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
  }
}

TEST(CertificateJsonTest, RoundTrip) {
  const Certificate trace = FaithfulTrace{{1, Rational(3, 2), Integer("99999999999999999999999", 10)}};
  const Certificate back = certificate_from_json(certificate_to_json(trace));
  ASSERT_TRUE(std::holds_alternative<FaithfulTrace>(back));
  EXPECT_EQ(std::get<FaithfulTrace>(back).g, std::get<FaithfulTrace>(trace).g);

  const Certificate wit = PositiveWitness{{{-1, 0}, {0, 0}}, {0, 1}};
  const Json wj = certificate_to_json(wit);
  EXPECT_EQ(wj["type"], "witness");
  const Certificate wback = certificate_from_json(wj);
  ASSERT_TRUE(std::holds_alternative<PositiveWitness>(wback));
  EXPECT_EQ(std::get<PositiveWitness>(wback).x, std::get<PositiveWitness>(wit).x);
  EXPECT_EQ(std::get<PositiveWitness>(wback).c, std::get<PositiveWitness>(wit).c);

  EXPECT_THROW(certificate_from_json(Json{{"type", "other"}}), Error);
}

TEST(VerdictJsonTest, CarriesAnswersAndCitations) {
  const KGraph g = make_kgraph({IntMatrix::from_rows({{2}}), IntMatrix::identity(1)});
  const Classification c = classify(g);
  const Json j = verdict_to_json(g, c.verdict);
  EXPECT_EQ(j["stably_finite"]["answer"], "no");
  EXPECT_EQ(j["stably_finite"]["citation"], citation::kWitnessNotStablyFinite);
  EXPECT_FALSE(j["structural"]["infinite_projection"].is_null());
}

TEST(HashTest, KnownValues) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}
