#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "orthopack/constructions.hpp"
#include "orthopack/json_io.hpp"

using namespace orthopack;
namespace fs = std::filesystem;

namespace {

const std::string kCli = ORTHOPACK_CLI_PATH;

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("orthopack-cli-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string art(const std::string& name) { return (scratch_dir() / name).string(); }

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string run_capture(const std::string& args, int* code = nullptr) {
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = ::pclose(pipe);
  if (code != nullptr) *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("construct then verify maximal exits zero") {
  CHECK(run("construct thin3d --out " + art("thin.json")) == 0);
  CHECK(run("verify --set " + art("thin.json") + " --check maximal --out " + art("cert.json")) ==
        0);
  const json cert = read_json_file(art("cert.json"));
  CHECK(cert.at("check") == "maximal");
  CHECK(cert.at("verdict") == "pass");
}

TEST_CASE("finite maximality reports the 45 point set") {
  CHECK(run("finite --verify maximal --report " + art("finite-report.json")) == 0);
  const json rep = read_json_file(art("finite-report.json"));
  CHECK(rep.at("schema") == kReportSchema);
  REQUIRE(rep.at("certificates").size() == 1);
  const json& cert = rep.at("certificates").at(0);
  CHECK(cert.at("verdict") == "pass");
  CHECK(cert.at("details").at("set_size").get<int>() == 45);
  CHECK(cert.at("details").at("group_order").get<int>() == 11025);

  int code = -1;
  const std::string text = run_capture("report --in " + art("finite-report.json"), &code);
  CHECK(code == 0);
  CHECK(text.find("[PASS] maximal") != std::string::npos);
}

TEST_CASE("the empty set is not maximal") {
  CHECK(run("construct empty --out " + art("empty.json")) == 0);
  CHECK(run("verify --set " + art("empty.json") + " --check maximal --out " + art("ecert.json")) ==
        1);
  const json cert = read_json_file(art("ecert.json"));
  CHECK(cert.at("verdict") == "fail");
  CHECK(!cert.at("witness").is_null());
}

TEST_CASE("identical invocations produce byte-identical artifacts") {
  CHECK(run("construct thick3d --out " + art("c1.json")) == 0);
  CHECK(run("construct thick3d --out " + art("c2.json")) == 0);
  CHECK(slurp(art("c1.json")) == slurp(art("c2.json")));

  CHECK(run("finite --emit lambda0 --out " + art("l1.json")) == 0);
  CHECK(run("finite --emit lambda0 --out " + art("l2.json")) == 0);
  CHECK(slurp(art("l1.json")) == slurp(art("l2.json")));

  const std::string verify_cmd =
      "verify --set " + art("c1.json") + " --check orthogonal --report " + art("rep.json");
  CHECK(run(verify_cmd) == 0);
  const std::string first = slurp(art("rep.json"));
  CHECK(run(verify_cmd) == 0);
  CHECK(first == slurp(art("rep.json")));
}

TEST_CASE("stored family sets truncate exactly like in-memory ones") {
  CHECK(run("construct thin3d-lift1 --out " + art("lift.json")) == 0);
  const FamilySet loaded = familyset_from_json(read_json_file(art("lift.json")));
  const FamilySet built = lift(thin3d(), 1);
  CHECK(loaded == built);
  CHECK(truncate(loaded, 2, 2) == truncate(built, 2, 2));
}

TEST_CASE("construct writes the artifact to stdout when --out is omitted") {
  int code = -1;
  const std::string out = run_capture("construct singleton --dimension 2", &code);
  CHECK(code == 0);
  const FamilySet fs = familyset_from_json(json::parse(out));
  CHECK(fs == singleton_origin(2));
}

TEST_CASE("point set artifacts feed the coordinate checks") {
  const auto pts = truncate(thin3d(), 4, 4);
  write_json_file(art("points.json"), pointset_to_json(pts, 3));
  CHECK(run("verify --set " + art("points.json") + " --check orthogonal") == 0);
  CHECK(run("verify --set " + art("points.json") +
            " --check packing --witness alpha=sqrt2/2 --witness beta=sqrt3/3") == 0);
  // family-structure checks cannot run on a bare point list
  CHECK(run("verify --set " + art("points.json") + " --check maximal") == 64);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run("construct hypercube") == 64);
  CHECK(run("verify --set " + art("thin.json")) == 64);
  CHECK(run("verify --set " + art("thin.json") + " --check sideways") == 64);
  CHECK(run("verify --set " + art("thin.json") + " --check slab --witness alpha") == 64);
  CHECK(run("finite") == 64);
  CHECK(run("finite --p 4 --verify maximal") == 64);
  CHECK(run("finite --emit everything") == 64);
  CHECK(run("") == 64);
}

TEST_CASE("io errors exit 74") {
  CHECK(run("verify --set " + art("no-such-file.json") + " --check maximal") == 74);
  std::ofstream(art("garbage.json")) << "not json at all";
  CHECK(run("verify --set " + art("garbage.json") + " --check maximal") == 74);
  std::ofstream(art("schema.json")) << "{\"schema\": \"orthopack.mystery/9\"}";
  CHECK(run("verify --set " + art("schema.json") + " --check orthogonal") == 74);
  CHECK(run("report --in " + art("no-such-file.json")) == 74);
}

TEST_CASE("budget overruns surface as undecidable") {
  CHECK(run("finite --p 5 --q 7 --r 11 --verify maximal") == 2);
}

TEST_CASE("csv rendering carries one row per certificate") {
  CHECK(run("finite --verify tiling --report " + art("tiling.json")) == 0);
  CHECK(run("report --in " + art("tiling.json") + " --csv " + art("tiling.csv")) == 0);
  const std::string csv = slurp(art("tiling.csv"));
  CHECK(csv.rfind("check,verdict,evidence_only\n", 0) == 0);
  CHECK(csv.find("tiling,PASS,0\n") != std::string::npos);
}
