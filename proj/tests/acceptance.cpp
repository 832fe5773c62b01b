// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Pass --extended to run the vertex identity up to four boxes per leg.

#include <cstring>
#include <iostream>
#include <thread>

#include "vertexcalc/acceptance.hpp"

int main(int argc, char** argv) {
  vertexcalc::acceptance::Options opt;
  opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--extended") == 0) opt.extended = true;
  bool all = true;
  vertexcalc::acceptance::run_all(opt, [&](const vertexcalc::acceptance::Result& r) {
    std::cout << vertexcalc::acceptance::format(r) << std::endl;
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
