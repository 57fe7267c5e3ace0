// Runs every verification suite and prints one line per criterion.
// Exit status is the number of failing criteria.

#include <cstdio>
#include <exception>

#include "actkit/suites.hpp"

int main() {
  int failed = 0;
  auto ids = actkit::suite_ids();
  for (size_t i = 0; i < ids.size(); ++i) {
    bool pass = false;
    std::string detail;
    try {
      auto report = actkit::run_suite(ids[i]);
      pass = report.pass;
      if (!pass)
        for (auto& p : report.properties)
          if (!p.pass) {
            detail = "  [" + p.name + "] " + p.detail;
            break;
          }
    } catch (const std::exception& e) {
      detail = std::string("  exception: ") + e.what();
    }
    std::printf("criterion %zu (%s): %s\n", i + 1, ids[i].c_str(),
                pass ? "PASS" : "FAIL");
    if (!pass) {
      if (!detail.empty()) std::printf("%s\n", detail.c_str());
      ++failed;
    }
  }
  return failed;
}
