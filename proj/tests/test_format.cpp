#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rdg/format.hpp"
#include "rdg/generators.hpp"

using namespace rdg;

namespace {

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

template <class F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("serialize E1") {
  const auto text = serialize(gen_unknot_rect());
  CHECK(text == "rdg v1\nn 2\nrow 1 1 2 +\nrow 2 2 1 -\n");
  CHECK(lines(text) == 4);
}

TEST_CASE("roundtrip on 1000 random diagrams") {
  for (const auto& d : oracle::corpus(21, 1000)) {
    const auto text = serialize(d);
    const auto back = parse(text);
    CHECK(back == d);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("rows may appear out of order but serialize ascending") {
  const auto d = parse("rdg v1\nn 2\nrow 2 2 1 -\nrow 1 1 2 +\n");
  CHECK(d == gen_unknot_rect());
}

TEST_CASE("final newline is optional") { CHECK(parse("rdg v1\nn 2\nrow 1 1 2 +\nrow 2 2 1 -") == gen_unknot_rect()); }

TEST_CASE("duplicate z rank is an axiom 4 error") {
  try {
    parse("rdg v1\nn 2\nrow 1 1 2 +\nrow 1 2 1 -\n");
    FAIL("accepted duplicate z rank");
  } catch (const ParseError&) {
    FAIL("grammar error instead of a validation error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("axiom (4)") != std::string::npos);
  }
  CHECK(validate(parse_unchecked("rdg v1\nn 2\nrow 1 1 2 +\nrow 1 2 1 -\n")).violates(4));
}

TEST_CASE("grammar errors carry line and column") {
  auto e = parse_error([] { parse("rdg v2\nn 2\n"); });
  CHECK(e.line() == 1);

  e = parse_error([] { parse("rdg v1\nn 2\nrow 1 1 2 +\nrow 2 2 1 x\n"); });
  CHECK(e.line() == 4);
  CHECK(e.column() == 11);

  e = parse_error([] { parse("rdg v1\nn 2\nrow 1 1 2 + \nrow 2 2 1 -\n"); });
  CHECK(e.line() == 3);

  e = parse_error([] { parse("rdg v1\r\nn 2\nrow 1 1 2 +\nrow 2 2 1 -\n"); });
  CHECK(e.line() == 1);

  e = parse_error([] { parse("rdg v1\nn 2\nrow 1 1 2 +\n"); });
  CHECK(e.line() >= 3);

  e = parse_error([] { parse("rdg v1\nn 2\nrow 1 1 2 +\nrow 2 2 1 -\nrow 3 1 1 +\n"); });
  CHECK(e.line() == 5);

  e = parse_error([] { parse("rdg v1\nn 2\nrow 1  1 2 +\nrow 2 2 1 -\n"); });
  CHECK(e.line() == 3);
  CHECK_THROWS_AS(parse(""), ParseError);
}
