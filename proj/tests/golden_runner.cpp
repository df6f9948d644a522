// Compares the command line tool against the golden corpus.
// Usage: golden_runner <cli> <corpus-dir>; set ARCALG_REGEN_GOLDEN=1 to
// rewrite the expected outputs.

#include <cstdlib>
#include <iostream>

#include "golden.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: golden_runner <cli> <corpus-dir>\n";
    return 2;
  }
  const char* regen = std::getenv("ARCALG_REGEN_GOLDEN");
  bool regenerate = regen != nullptr && std::string(regen) == "1";
  auto results = golden::check_all(argv[1], argv[2], regenerate);
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "ok   " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
    if (!r.pass) ++failures;
  }
  std::cout << results.size() << " commands, " << failures << " failures\n";
  if (results.empty()) return 1;
  return failures == 0 ? 0 : 1;
}
