#include <cstdio>
#include <string>

#include "combinach/acceptance.hpp"

int main() {
  std::string out;
  const bool ok = combinach::run_acceptance(out);
  std::fputs(out.c_str(), stdout);
  return ok ? 0 : 1;
}
