#include "qschur/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qschur {

int thread_count() {
  if (const char* env = std::getenv("QSCHUR_THREADS")) {
    try {
      const int k = std::stoi(env);
      if (k > 0) return k;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace qschur
