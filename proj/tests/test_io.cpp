#include <doctest.h>

#include "dgk/fixtures.hpp"
#include "dgk/io.hpp"

using namespace dgk;

namespace {

std::string format_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("double groupoid files are byte-stable") {
  for (const auto& [name, d] : standard_fixtures()) {
    CAPTURE(name);
    const std::string once = emit(to_json(d));
    const DoubleGroupoid back = double_from_json(parse_json(once));
    CHECK(back == d);
    CHECK(emit(to_json(back)) == once);
    CHECK(once.back() == '\n');
    CHECK(once.find('\n') == once.size() - 1);
  }
}

TEST_CASE("keys are emitted in sorted order") {
  const std::string s = emit(to_json(fixture_a2()));
  CHECK(s.find("\"H\"") < s.find("\"V\""));
  CHECK(s.find("\"V\"") < s.find("\"b\""));
  CHECK(s.find("\"boxes\"") < s.find("\"hcompose\""));
}

TEST_CASE("extension, diagram and groupoid files are byte-stable") {
  for (const ExtensionData& e : {ext1_data(), ext3_data()}) {
    const std::string once = emit(to_json(e));
    const ExtensionData back = extension_from_json(parse_json(once));
    CHECK(emit(to_json(back)) == once);
    CHECK(back.cocycles == e.cocycles);
  }
  for (const auto& [name, dg] : standard_diagrams()) {
    CAPTURE(name);
    const std::string once = emit(to_json(dg));
    CHECK(emit(to_json(diagram_from_json(parse_json(once)))) == once);
  }
  const std::string g = emit(to_json(cyclic_group(4)));
  CHECK(emit(to_json(groupoid_from_json(parse_json(g)))) == g);
  const std::string k = emit(to_json(constant_cyclic_bundle(3, 2)));
  CHECK(emit(to_json(bundle_from_json(parse_json(k)))) == k);
}

TEST_CASE("compose triple with mismatched endpoints") {
  Json j = to_json(pair_groupoid(2));
  j["compose"].push_back({1, 1, 1});
  const std::string what = format_error([&] { groupoid_from_json(j); });
  CHECK_FALSE(what.empty());
}

TEST_CASE("missing and mistyped fields name the field") {
  Json j = to_json(fixture_a2());
  j["H"].erase("arrows");
  CHECK(format_error([&] { double_from_json(j); }).find("H.arrows") != std::string::npos);

  j = to_json(fixture_a2());
  j["hinv"][1] = -3;
  CHECK(format_error([&] { double_from_json(j); }).find("hinv[1]") != std::string::npos);

  j = to_json(fixture_a2());
  j["vcompose"][0] = {0, 1};
  CHECK(format_error([&] { double_from_json(j); }).find("vcompose[0]") != std::string::npos);
}

TEST_CASE("parse errors carry line and column") {
  const std::string what = format_error([] { parse_json("{\n  \"a\": ,\n}", "f.json"); });
  CHECK(what.find("f.json") != std::string::npos);
  CHECK(what.find("line 2") != std::string::npos);
}

TEST_CASE("diagram maps must fit their groupoids") {
  Json j = to_json(s3_diagram());
  j["i"].push_back(0);
  CHECK(format_error([&] { diagram_from_json(j); }).find("i") != std::string::npos);
  j = to_json(s3_diagram());
  j["j"][0] = 40;
  CHECK_FALSE(format_error([&] { diagram_from_json(j); }).empty());
}

TEST_CASE("unreadable file") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/dir/x.json"), FormatError);
}
