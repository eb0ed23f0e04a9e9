#include <iostream>

#include "dplf/acceptance.hpp"

int main() {
  const bool ok = dplf::run_acceptance(std::cout, dplf::ExecPolicy::Parallel);
  return ok ? 0 : 1;
}
