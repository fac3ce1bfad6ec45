#include <doctest.h>

#include "mcent/table_io.hpp"

using namespace mcent;

TEST_CASE("table json round trip")
{
  const auto t = build_table(2, 3);
  const auto text = table_to_json(t);
  CHECK(text.back() == '\n');
  CHECK(text.find("\"format\": 1") != std::string::npos);
  const auto back = table_from_json(text);
  CHECK(back == t);
  CHECK(table_to_json(back) == text);
  CHECK(table_to_json(build_table(2, 3, 3)) == text);
}

TEST_CASE("small table text")
{
  const auto t = build_table(0, 2);
  const auto text = table_to_json(t);
  CHECK(text.find("\"lambda\": \"(*,*)\",\n      \"delta\": \"(*,*)\",\n      \"rho\": \"(*)(*)\",\n"
                  "      \"k\": \"1\"") != std::string::npos);
  const auto csv = table_to_csv(t);
  CHECK(csv.rfind("lambda,delta,rho,k\n", 0) == 0);
  CHECK(csv.find("\"(*,*)\",\"(*,*)\",\"(*)(*)\",1\n") != std::string::npos);
}

TEST_CASE("table json validation")
{
  CHECK_THROWS_AS(table_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(table_from_json(R"j({"meta":{"m":0,"max_size":1,"format":2},"entries":[]})j"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      table_from_json(
          R"j({"meta":{"m":0,"max_size":2,"format":1},"entries":[{"lambda":"(*,*)","delta":"(*,*)","rho":"(*)(*)","k":"0"}]})j"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      table_from_json(
          R"j({"meta":{"m":0,"max_size":2,"format":1},"entries":[{"lambda":"(*)","delta":"(*)","rho":"(*,*,*)","k":"1"}]})j"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      table_from_json(
          R"j({"meta":{"m":0,"max_size":2,"format":1},"entries":[{"lambda":"(1)","delta":"(*)","rho":"(*)","k":"1"}]})j"),
      std::invalid_argument);
  const auto empty =
      table_from_json(R"j({"meta":{"m":1,"max_size":1,"format":1},"entries":[]})j");
  CHECK(empty.m == 1);
  CHECK(empty.entries.empty());
}

TEST_CASE("polynomial json")
{
  const BinomialPoly p(6, {{0, 2}, {1, BigInt("123456789012345678901234567890")}});
  const auto text = poly_to_json(p);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(poly_from_json(text) == p);
  CHECK(poly_from_json(R"j({"offset":2,"coeffs":{"2":"1"}})j") == BinomialPoly(2, {{2, 1}}));
  CHECK(poly_from_json(poly_to_json(BinomialPoly(3))) == BinomialPoly(3));
  CHECK_THROWS_AS(poly_from_json(R"j({"offset":-1,"coeffs":{}})j"), std::invalid_argument);
  CHECK_THROWS_AS(poly_from_json(R"j({"offset":1,"coeffs":{"x":"1"}})j"), std::invalid_argument);
}
