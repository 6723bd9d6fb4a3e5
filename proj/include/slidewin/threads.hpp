#pragma once
#include <cstdlib>
#include <thread>

namespace slidewin {

// Worker cap from SLIDEWIN_THREADS; 0 or unset means hardware concurrency.
inline int thread_budget() {
  if (const char* env = std::getenv("SLIDEWIN_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace slidewin
