// One line per acceptance criterion; exits nonzero when any fails.
#include <cstdio>
#include <exception>

#include "walg/acceptance.hpp"

int main() {
  // gl_4 covers the optional N = 4 subregular coproduct fixture.
  constexpr int kMaxN = 4;
  int failed = 0;
  for (int id = 1; id <= walg::kCriteria; ++id) {
    bool ok = false;
    try {
      ok = walg::acceptance_criterion(id, kMaxN).passed();
    } catch (const std::exception& e) {
      std::printf("criterion %d error: %s\n", id, e.what());
    }
    std::printf("criterion %d [%s]: %s\n", id, walg::criterion_title(id), ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    failed += !ok;
  }
  std::printf("%d of %d criteria passed\n", walg::kCriteria - failed, walg::kCriteria);
  return failed == 0 ? 0 : 1;
}
