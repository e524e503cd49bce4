#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "closed_port.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = ONTOSEG_CLI;
const std::string kTopical = std::string(ONTOSEG_REPO_DATA) + "/topical";
const std::string kData = ONTOSEG_TEST_DATA;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + kCli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("ontoseg_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit 1, help exits 0") {
  CHECK(run("").code == 1);
  CHECK(run("--help").code == 0);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("segment --input x").code == 1);
  CHECK(run("segment --input x --taxonomy y --window 9").code == 1);
}

TEST_CASE("end-to-end: generate, segment, evaluate") {
  const auto dir = scratch("pipeline");
  const auto ref = dir / "ref";
  const auto hyp = dir / "hyp";
  const auto trees = dir / "trees";
  fs::create_directories(hyp);
  fs::create_directories(trees);
  REQUIRE(run("gen-dataset --corpus " + kTopical + "/corpus -o " + ref.string() +
              " --n-range 6-8 --samples 3 --seed 5")
              .code == 0);
  std::vector<fs::path> refs;
  for (const auto& e : fs::directory_iterator(ref)) refs.push_back(e.path());
  REQUIRE(refs.size() == 3);
  for (const auto& r : refs) {
    const auto out = hyp / (r.stem().string() + ".hyp");
    REQUIRE(run("segment --input " + r.string() + " --taxonomy " + kTopical + "/taxonomy.json --gazetteer " +
                kTopical + "/gazetteer.json --alpha 0 --window 1 -k 10 --format choi -o " + out.string() +
                " --tree-output " + (trees / (r.stem().string() + ".json")).string())
                .code == 0);
    CHECK(fs::exists(trees / (r.stem().string() + ".json")));
  }
  const auto self = run("eval --ref " + ref.string() + " --hyp " + ref.string());
  CHECK(self.code == 0);
  CHECK(self.out.find("mean\t0.000000\t0.000000\t") != std::string::npos);
  const auto report = run("eval --ref " + ref.string() + " --hyp " + hyp.string());
  CHECK(report.code == 0);
  CHECK(report.out.find("mean\t0.000000\t0.000000\t") != std::string::npos);

  const auto linear = run("segment --input " + refs[0].string() + " --taxonomy " + kTopical +
                          "/taxonomy.json --gazetteer " + kTopical + "/gazetteer.json -k 10");
  CHECK(linear.code == 0);
  std::size_t markers = 0;
  for (std::size_t at = linear.out.find("=========="); at != std::string::npos;
       at = linear.out.find("==========", at + 1))
    ++markers;
  CHECK(markers == 9);

  fs::copy_file(trees / (refs[1].stem().string() + ".json"), hyp / (refs[1].stem().string() + ".json"));
  CHECK(run("eval --ref " + ref.string() + " --hyp " + hyp.string()).code == 2);
  fs::remove(hyp / (refs[1].stem().string() + ".json"));
  fs::remove(hyp / (refs[0].stem().string() + ".hyp"));
  CHECK(run("eval --ref " + ref.string() + " --hyp " + hyp.string()).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("annotate writes a sidecar that segment accepts") {
  const auto dir = scratch("annotate");
  std::ofstream(dir / "doc.txt") << "Barack Obama spoke.\nGeorge Bush spoke.\nMichael Jackson sang.\n";
  REQUIRE(run("annotate --input " + (dir / "doc.txt").string() + " --gazetteer " + kTopical +
              "/gazetteer.json -o " + (dir / "doc.jsonl").string())
              .code == 0);
  const auto seg = run("segment --input " + (dir / "doc.txt").string() + " --taxonomy " + kTopical +
                       "/taxonomy.json --annotations " + (dir / "doc.jsonl").string() + " -k 2");
  CHECK(seg.code == 0);
  CHECK(seg.out == "Barack Obama spoke.\nGeorge Bush spoke.\n==========\nMichael Jackson sang.\n");
  CHECK(run("segment --input " + (dir / "doc.txt").string() + " --taxonomy " + kTopical +
            "/taxonomy.json --annotations " + (dir / "doc.jsonl").string() + " -k 4")
            .code == 1);
  fs::remove_all(dir);
}

TEST_CASE("bad inputs exit 2, missing files exit 1") {
  const auto dir = scratch("bad");
  std::ofstream(dir / "doc.txt") << "One.\nTwo.\n";
  std::ofstream(dir / "tax.json") << "{\"root\": \"A\", \"nodes\": []}";
  const std::string doc = (dir / "doc.txt").string();
  CHECK(run("segment --input " + doc + " --taxonomy " + (dir / "tax.json").string() + " --gazetteer " + kTopical +
            "/gazetteer.json -k 1")
            .code == 2);
  CHECK(run("segment --input " + doc + " --taxonomy " + (dir / "nope.json").string() + " --gazetteer " + kTopical +
            "/gazetteer.json -k 1")
            .code == 1);
  CHECK(run("segment --input " + doc + " --taxonomy " + kTopical + "/taxonomy.json -k 1", "ONTOSEG_ANNOTATOR_URL=")
            .code == 1);
  CHECK(run("segment --input " + doc + " --taxonomy " + kTopical + "/taxonomy.json --alpha 1.5 --gazetteer " +
            kTopical + "/gazetteer.json")
            .code == 1);
  fs::remove_all(dir);
}

TEST_CASE("unreachable annotator exits 3") {
  const auto dir = scratch("remote");
  std::ofstream(dir / "doc.txt") << "Barack Obama spoke.\n";
  const std::string url = "http://127.0.0.1:" + std::to_string(closed_port()) + "/annotate";
  CHECK(run("annotate --input " + (dir / "doc.txt").string() + " --endpoint " + url).code == 3);
  CHECK(run("annotate --input " + (dir / "doc.txt").string(), "ONTOSEG_ANNOTATOR_URL=" + url).code == 3);
  fs::remove_all(dir);
}

TEST_CASE("bench prints the grid") {
  const auto r = run("bench --corpus " + kTopical + "/corpus --taxonomy " + kTopical + "/taxonomy.json --gazetteer " +
                     kTopical + "/gazetteer.json --subsets 6-8:2 --alphas 0,0.5 --windows 1,3");
  CHECK(r.code == 0);
  CHECK(r.out.find("WindowDiff error rates") == 0);
  CHECK(r.out.find("alpha = 0.5") != std::string::npos);
  CHECK(r.out.find("W = 3") != std::string::npos);
  CHECK(run("bench --corpus " + kTopical + "/corpus --taxonomy " + kTopical + "/taxonomy.json --gazetteer " +
            kTopical + "/gazetteer.json --subsets 6-8")
            .code == 1);
}
