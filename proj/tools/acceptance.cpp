// Acceptance suite as a test: one line per criterion, exit 0 unless a
// criterion outside the known-red list fails.

#include <iostream>

#include "planar_arena/acceptance.hpp"

int main(int argc, char** argv) {
  parena::AcceptanceOptions o;
  for (int i = 1; i < argc; ++i) o.only.insert(std::atoi(argv[i]));
  o.progress = &std::cerr;
  return parena::acceptance_exit_code(parena::run_acceptance(o, std::cout));
}
