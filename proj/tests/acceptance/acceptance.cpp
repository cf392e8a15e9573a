// Acceptance suite: one line per criterion, "PASS <n> <tag>: <detail>" or FAIL.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include "atgeo/reproduce.hpp"

int main(int argc, char** argv) {
  atgeo::ReproduceConfig config;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--k" && i + 1 < argc) {
      config.k = std::atof(argv[++i]);
    } else if (a == "--J" && i + 1 < argc) {
      config.J = std::atoi(argv[++i]);
    } else {
      const int id = std::atoi(a.c_str());
      if (id < 1 || id > atgeo::kCriterionCount) {
        std::fprintf(stderr, "usage: atgeo_acceptance [--k K] [--J J] [criterion...]\n");
        return 1;
      }
      ids.push_back(id);
    }
  }
  if (ids.empty()) {
    for (int i = 1; i <= atgeo::kCriterionCount; ++i) ids.push_back(i);
  }
  int failed = 0;
  for (int id : ids) {
    const auto start = std::chrono::steady_clock::now();
    atgeo::CheckResult r;
    try {
      r = atgeo::run_criterion(id, config);
    } catch (const std::exception& e) {
      r.criterion = id;
      r.tag = "error";
      r.detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s: %s [%.2fs]\n", r.pass ? "PASS" : "FAIL", id, r.tag.c_str(),
                r.detail.c_str(), secs);
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
