#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dgk/fixtures.hpp"
#include "dgk/io.hpp"

namespace fs = std::filesystem;
using namespace dgk;

namespace {

struct Run {
  int status;
  std::string out;
};

Run dgk_cli(const std::string& args) {
  static int counter = 0;
  const fs::path log = fs::temp_directory_path() / ("dgk_cli_" + std::to_string(::getpid()) + "_" +
                                                    std::to_string(counter++) + ".txt");
  const std::string cmd = std::string(DGK_CLI) + " " + args + " > " + log.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  fs::remove(log);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, ss.str()};
}

struct Workdir {
  fs::path path = fs::temp_directory_path() / ("dgk_cli_work_" + std::to_string(::getpid()));
  Workdir() { fs::create_directories(path); }
  ~Workdir() { fs::remove_all(path); }
  std::string operator/(const std::string& f) const { return (path / f).string(); }
};

}  // namespace

TEST_CASE("fixtures, round trips and reports") {
  Workdir w;
  const Run f = dgk_cli("fixtures --emit-all -o " + w.path.string());
  REQUIRE(f.status == 0);
  for (const char* n : {"A2", "CPAIR2", "CPAIR3", "S3F", "EXT1"}) CHECK(fs::exists(w / (std::string(n) + ".json")));

  CHECK(dgk_cli("validate " + (w / "CPAIR2.json")).status == 0);
  CHECK(dgk_cli("roundtrip " + (w / "A2.json")).status == 0);
  CHECK(dgk_cli("roundtrip-slim " + (w / "S3F.json")).status == 0);
  CHECK(dgk_cli("analyze " + (w / "EXT1.json")).status == 0);
  CHECK(dgk_cli("corners " + (w / "CPAIR3.json")).status == 0);
  CHECK(dgk_cli("classify --json " + (w / "S3F.json")).out.find("\"fusion\":true") != std::string::npos);
}

TEST_CASE("output is byte-for-byte reproducible") {
  Workdir w;
  REQUIRE(dgk_cli("fixtures --emit-all -o " + w.path.string()).status == 0);
  const Run a = dgk_cli("analyze --json " + (w / "CPAIR2.json"));
  const Run b = dgk_cli("analyze --json " + (w / "CPAIR2.json"));
  CHECK(a.out == b.out);
  CHECK(dgk_cli("frame " + (w / "EXT1.json")).out == dgk_cli("frame " + (w / "EXT1.json")).out);
}

TEST_CASE("decompose and rebuild through files") {
  Workdir w;
  REQUIRE(dgk_cli("fixtures --emit-all -o " + w.path.string()).status == 0);
  REQUIRE(dgk_cli("decompose " + (w / "EXT1.json") + " -o " + (w / "ext.json")).status == 0);
  CHECK(dgk_cli("validate " + (w / "ext.json")).status == 0);
  REQUIRE(dgk_cli("rebuild " + (w / "ext.json") + " -o " + (w / "back.json")).status == 0);
  CHECK(dgk_cli("validate " + (w / "back.json")).status == 0);
  CHECK(read_json_file(w / "back.json")["boxes"] == 32);
}

TEST_CASE("diagonal and square through files") {
  Workdir w;
  REQUIRE(dgk_cli("fixtures --emit-all -o " + w.path.string()).status == 0);
  REQUIRE(dgk_cli("diagonal " + (w / "S3F.json") + " -o " + (w / "d.json")).status == 0);
  CHECK(dgk_cli("validate " + (w / "d.json")).status == 0);
  REQUIRE(dgk_cli("square " + (w / "d.json") + " -o " + (w / "sq.json")).status == 0);
  CHECK(read_json_file(w / "sq.json")["boxes"] == 6);
  const Run r = dgk_cli("reduce --word \"V:1 V:1\" " + (w / "S3F.json"));
  CHECK(r.status == 0);
  CHECK(r.out.find("V:2") != std::string::npos);
}

TEST_CASE("exit status distinguishes failed checks from bad input") {
  Workdir w;
  const Mutation m = mutations(fixture_cpair(2), 1, 3).front();
  write_text_file(w / "corrupted.json", emit(to_json(DoubleGroupoid(m.tables))));
  const Run v = dgk_cli("validate " + (w / "corrupted.json"));
  CHECK(v.status == 1);
  CHECK(v.out.find("witness") != std::string::npos);
  // Other verbs refuse invalid input unless told not to validate.
  CHECK(dgk_cli("analyze " + (w / "corrupted.json")).status == 2);

  write_text_file(w / "broken.json", "{\"base\": 1,\n \"H\": [\n");
  const Run b = dgk_cli("validate " + (w / "broken.json"));
  CHECK(b.status == 2);
  CHECK(b.out.find("line") != std::string::npos);

  CHECK(dgk_cli("frobnicate x").status == 2);
  CHECK(dgk_cli("validate --bogus x").status == 2);
  CHECK(dgk_cli("validate " + (w / "missing.json")).status == 2);

  write_text_file(w / "a2.json", emit(to_json(fixture_a2())));
  CHECK(dgk_cli("diagonal " + (w / "a2.json")).status == 1);
  CHECK(dgk_cli("reduce --word \"H:7\" " + (w / "a2.json")).status == 2);
}

TEST_CASE("no-validate defers checks") {
  Workdir w;
  const Mutation m = mutations(fixture_cpair(2), 1, 3).front();
  write_text_file(w / "corrupted.json", emit(to_json(DoubleGroupoid(m.tables))));
  const int s = dgk_cli("classify --no-validate " + (w / "corrupted.json")).status;
  CHECK((s == 0 || s == 1));
}
