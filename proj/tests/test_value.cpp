#include "graev/value.hpp"

#include "doctest.h"

using graev::Value;

TEST_SUITE_BEGIN("value");

TEST_CASE("canonical form") {
  CHECK(Value(2, 4) == Value(1, 2));
  CHECK(Value(2, 4).num() == 1);
  CHECK(Value(2, 4).den() == 2);
  CHECK(Value(0, 7) == Value(0));
  CHECK(Value(0, 7).den() == 1);
  CHECK(Value(3, -6) == Value(-1, 2));
  CHECK(Value(3, -6).negative());
  CHECK_THROWS_AS(Value(1, 0), graev::argument_error);
}

TEST_CASE("parse and print") {
  CHECK(Value::parse("1/4") == Value(1, 4));
  CHECK(Value::parse("7/10") == Value(7, 10));
  CHECK(Value::parse("0") == Value(0));
  CHECK(Value::parse("2") == Value(2));
  CHECK(Value::parse("-1/2") == Value(-1, 2));
  CHECK(Value::parse("6/8") == Value(3, 4));
  CHECK(Value(1, 4).str() == "1/4");
  CHECK(Value(5).str() == "5");
  CHECK(Value::parse(Value(7, 10).str()) == Value(7, 10));
  CHECK_THROWS_AS(Value::parse(""), graev::argument_error);
  CHECK_THROWS_AS(Value::parse("x"), graev::argument_error);
  CHECK_THROWS_AS(Value::parse("1/0"), graev::argument_error);
  CHECK_THROWS_AS(Value::parse("1.5"), graev::argument_error);
}

TEST_CASE("ordering") {
  CHECK(Value(1, 4) < Value(1, 2));
  CHECK(Value(7, 10) > Value(3, 5));
  CHECK(Value(1, 2) <= Value(2, 4));
  CHECK(graev::max(Value(3, 5), Value(1, 10)) == Value(3, 5));
  CHECK(graev::min(Value(3, 5), Value(1, 10)) == Value(1, 10));
}

TEST_CASE("midpoint is exact") {
  CHECK(graev::midpoint(Value(1, 4), Value(1, 2)) == Value(3, 8));
  CHECK(graev::midpoint(Value(0), Value(1)) == Value(1, 2));
  CHECK(graev::midpoint(Value(1, 3), Value(1, 3)) == Value(1, 3));
}

TEST_SUITE_END();
