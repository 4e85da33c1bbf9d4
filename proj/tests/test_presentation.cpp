#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "homog/presentation.hpp"
#include "test_util.hpp"

using namespace homog;

TEST_CASE("parse the running example") {
  auto p = parse_presentation("gens: x y; rels: xy = 0, xx = 0");
  REQUIRE(p.alphabet()->size() == 2);
  CHECK(p.alphabet()->name(0) == "x");
  CHECK(p.alphabet()->name(1) == "y");
  REQUIRE(p.relations().size() == 2);
  CHECK(p.relations()[0].is_zero());
  CHECK(p.relations()[0].lhs.str() == "xy");
  CHECK(p.relations()[1].lhs.str() == "xx");
  CHECK(p.has_zero());
}

TEST_CASE("parse free monogenic") {
  auto p = parse_presentation("gens: x; rels:");
  CHECK(p.alphabet()->size() == 1);
  CHECK(p.relations().empty());
  CHECK_FALSE(p.has_zero());
}

TEST_CASE("parse round trip") {
  auto p = parse_presentation("gens: x y; rels: xy = yx");
  auto q = parse_presentation(p.echo());
  REQUIRE(q.relations().size() == 1);
  CHECK(q.relations()[0].lhs.str() == p.relations()[0].lhs.str());
  CHECK(q.relations()[0].rhs->str() == p.relations()[0].rhs->str());
  CHECK(q.alphabet()->names() == p.alphabet()->names());
}

TEST_CASE("parse multi-letter generators with dots") {
  auto p = parse_presentation("gens: ab c; rels: ab.c = c.ab");
  REQUIRE(p.relations().size() == 1);
  CHECK(p.relations()[0].lhs.length() == 2);
  CHECK(p.relations()[0].lhs.str() == "ab.c");
}

TEST_CASE("parse comments and weights") {
  auto p = parse_presentation(
      "# weighted example\ngens: x:2 y  # inline note\nrels: x = yy\n");
  CHECK(p.alphabet()->letter_weight(0) == 2);
  CHECK(p.declared()[0]);
  CHECK_FALSE(p.declared()[1]);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_presentation("gens: x y; rels: xq = yx"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x:0; rels:"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x x; rels:"), ParseError);
  CHECK_THROWS_AS(parse_presentation("rels: x = y"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x; rels: x == x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x; rels: x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x; bogus: 1"), ParseError);
  try {
    parse_presentation("gens: x y\nrels: xy = yq");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("weight inference examples") {
  auto symmetric = infer_weights(parse_presentation("gens: x y; rels: xy = yx"));
  REQUIRE(symmetric.ok());
  CHECK(*symmetric.weights == std::vector<unsigned>{1, 1});

  auto doubled = infer_weights(parse_presentation("gens: x y; rels: x = yy"));
  REQUIRE(doubled.ok());
  CHECK(*doubled.weights == std::vector<unsigned>{2, 1});

  auto collapsing = infer_weights(parse_presentation("gens: x; rels: x = xx"));
  CHECK_FALSE(collapsing.ok());

  auto absorbing = infer_weights(parse_presentation("gens: x y; rels: xy = y"));
  CHECK_FALSE(absorbing.ok());

  // The unit on one side forces a weight-zero word.
  auto unit_side = infer_weights(parse_presentation("gens: x y; rels: xy = 1"));
  CHECK_FALSE(unit_side.ok());
}

TEST_CASE("declared weights are honored or refuted") {
  auto ok = infer_weights(parse_presentation("gens: x:2 y; rels: x = yy"));
  REQUIRE(ok.ok());
  CHECK(*ok.weights == std::vector<unsigned>{2, 1});

  auto conflict = infer_weights(parse_presentation("gens: x:3 y; rels: x = yy"));
  CHECK_FALSE(conflict.ok());

  // Declared weights pin the scale: no gcd normalization.
  auto scaled = infer_weights(parse_presentation("gens: x:4 y; rels: x = yy"));
  REQUIRE(scaled.ok());
  CHECK(*scaled.weights == std::vector<unsigned>{4, 2});
}

TEST_CASE("zero relations impose no weight constraint") {
  auto inf = infer_weights(parse_presentation("gens: x y; rels: xy = 0, xx = 0"));
  REQUIRE(inf.ok());
  CHECK(*inf.weights == std::vector<unsigned>{1, 1});
}

TEST_CASE("validate_homogeneous") {
  auto m = parse_presentation("gens: x y; rels: xy = 0, xx = 0");
  CHECK(validate_homogeneous(m, {1, 1}).ok);

  auto bad = parse_presentation("gens: x y; rels: xy = y");
  auto report = validate_homogeneous(bad, {1, 1});
  CHECK_FALSE(report.ok);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0] == 0);

  auto weighted = parse_presentation("gens: x y; rels: x = yy");
  CHECK(validate_homogeneous(weighted, {2, 1}).ok);
}

TEST_CASE("inferred weights always validate") {
  for (const auto& name : homog_test::corpus()) {
    auto p = homog_test::parse_fixture(name);
    auto inf = infer_weights(p);
    REQUIRE(inf.ok());
    CHECK(validate_homogeneous(p, *inf.weights).ok);
  }
  // random small presentations
  std::mt19937 gen(20240817);
  auto random_word = [&](const AlphabetPtr& alpha, std::size_t maxlen) {
    std::size_t len = 1 + gen() % maxlen;
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < len; ++i) {
      ls.push_back(static_cast<Letter>(gen() % alpha->size()));
    }
    return Word(alpha, std::move(ls));
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t ngens = 1 + gen() % 3;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ngens; ++i) names.push_back({char('a' + i)});
    auto alpha = make_alphabet(names, std::vector<unsigned>(ngens, 1));
    std::vector<Relation> rels;
    std::size_t nrels = 1 + gen() % 3;
    for (std::size_t i = 0; i < nrels; ++i) {
      Word lhs = random_word(alpha, 4);
      if (gen() % 4 == 0) {
        rels.push_back({lhs, std::nullopt});
      } else {
        rels.push_back({lhs, random_word(alpha, 4)});
      }
    }
    Presentation p(alpha, rels, false, std::vector<bool>(ngens, false), false);
    auto inf = infer_weights(p);
    if (inf.ok()) {
      CHECK(validate_homogeneous(p, *inf.weights).ok);
    }
  }
}

TEST_CASE("inference handles minimal solutions outside the search box") {
  // y = x^65 forces d(y) = 65 d(x); the free coordinate exceeds every
  // search cap, so the exact feasibility fallback must produce it.
  std::string rel = "gens: x y; rels: y = ";
  for (int i = 0; i < 65; ++i) rel += "x";
  auto inf = infer_weights(parse_presentation(rel));
  REQUIRE(inf.ok());
  CHECK(*inf.weights == std::vector<unsigned>{1, 65});
}

TEST_CASE("inference is invariant under relation order and side swaps") {
  auto base = infer_weights(
      parse_presentation("gens: x y z; rels: x = yy, z = xy"));
  REQUIRE(base.ok());
  auto permuted = infer_weights(
      parse_presentation("gens: x y z; rels: z = xy, x = yy"));
  REQUIRE(permuted.ok());
  CHECK(*base.weights == *permuted.weights);
  auto swapped = infer_weights(
      parse_presentation("gens: x y z; rels: yy = x, xy = z"));
  REQUIRE(swapped.ok());
  CHECK(*base.weights == *swapped.weights);
}
