#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "quotsing/error.hpp"
#include "quotsing/parse.hpp"
#include "support.hpp"

using namespace quotsing;
using testing_support::cyclic;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Validation;
}

}  // namespace

TEST_CASE("shorthand") {
  CHECK(parse_shorthand("1/6(1,2,3)") == cyclic(6, {1, 2, 3}));
  CHECK(parse_shorthand(" 1/2 ( 1, 1 ,1 ) ") == cyclic(2, {1, 1, 1}));
  CHECK(parse_shorthand("1/5(-1,1)") == cyclic(5, {4, 1}));

  const auto two = parse_shorthand("1/2(1,1,0)+1/2(0,1,1)");
  CHECK(two.generator_count() == 2);
  CHECK(two.label() == "1/2(1,1,0) + 1/2(0,1,1)");

  CHECK(code_of([] { parse_shorthand("1/6(1,2"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_shorthand("2/6(1,2)"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_shorthand("1/x(1)"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_shorthand("1/0(1,1)"); }) == ErrorCode::Validation);
  CHECK(code_of([] { parse_shorthand("1/4(0,0)"); }) == ErrorCode::Validation);
  CHECK(code_of([] { parse_shorthand("1/2(1,1)+1/2(1)"); }) == ErrorCode::Syntax);
}

TEST_CASE("documents") {
  const char* yaml =
      "n: 3\n"
      "generators:\n"
      "  - {order: 2, exponents: [1, 1, 1]}\n";
  CHECK(parse_document(yaml) == cyclic(2, {1, 1, 1}));
  CHECK(parse_document(R"({"n": 3, "generators": [{"order": 6, "exponents": [1, 2, 3]}]})") ==
        cyclic(6, {1, 2, 3}));
  CHECK(parse_document("{n:3, generators:[{order:2, exponents:[1,1,1]}]}") == cyclic(2, {1, 1, 1}));
  CHECK(parse_action("{n:2, generators:[{order:3, exponents:[1,2]}]}") == cyclic(3, {1, 2}));
  CHECK(parse_action("1/3(1,2)") == cyclic(3, {1, 2}));
}

TEST_CASE("document errors") {
  CHECK(code_of([] { parse_document("n: 3\ngenerators: []\n"); }) == ErrorCode::Validation);
  CHECK(code_of([] { parse_document("n: 3\n"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_document("n: 3\ngenerators: [{order: 2}]\n"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_document("n: 2\ngenerators: [{order: 2, exponents: [1, 1]}]\nextra: 1\n"); }) ==
        ErrorCode::Syntax);
  CHECK(code_of([] { parse_document("n: 2\ngenerators: [{order: 2, exponents: [1]}]\n"); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of([] { parse_document("n: 2\ngenerators: [{order: two, exponents: [1, 1]}]\n"); }) ==
        ErrorCode::Syntax);

  try {
    parse_document("n: 2\ngenerators:\n  - {order: 2, exponents: [1, 1]\n");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Syntax);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  try {
    parse_document("n: 2\ngenerators:\n  - {order: 2, exponents: [1, 1], weight: 3}\n");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("weight") != std::string::npos);
  }
}

TEST_CASE("load_action reads files") {
  const std::string path = "quotsing_test_action.yaml";
  {
    std::ofstream out(path);
    out << "n: 4\ngenerators:\n  - order: 4\n    exponents: [1, 1, 1, 3]\n";
  }
  CHECK(load_action(path) == cyclic(4, {1, 1, 1, 3}));
  std::remove(path.c_str());
  CHECK(load_action("1/4(1,1,1,3)") == cyclic(4, {1, 1, 1, 3}));
}

TEST_CASE("characters") {
  const auto action = cyclic(4, {1, 1, 1, 3});
  CHECK(parse_character("det", action) == det_character(action));
  CHECK(parse_character("delta", action) == det_character(action));
  CHECK(parse_character("2", action) == Character({2}, {4}));
  CHECK(parse_character("(6)", action) == Character({2}, {4}));

  const auto two = parse_shorthand("1/2(1,1,0)+1/3(0,1,2)");
  CHECK(parse_character("(1, 2)", two) == Character({1, 2}, {2, 3}));
  CHECK(parse_character("1,-1", two) == Character({1, 2}, {2, 3}));
  CHECK(code_of([&] { parse_character("1", two); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { parse_character("(1,2", two); }) == ErrorCode::Syntax);
  CHECK(code_of([&] { parse_character("abc", two); }) == ErrorCode::Syntax);
}
