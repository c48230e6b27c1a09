// Runs the full scenario bank; one pass/fail line per criterion, exit
// status is the number of failing criteria.

#include <cstring>
#include <iostream>

#include "minl2/bank.hpp"

int main(int argc, char** argv) {
  bool smoke = argc > 1 && std::strcmp(argv[1], "--smoke") == 0;
  return minl2::run_acceptance(std::cout, smoke);
}
