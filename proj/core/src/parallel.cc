#include "fb/parallel.h"

#include <cstdlib>
#include <string>

namespace fb {

unsigned default_threads() {
  if (const char* env = std::getenv("FB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return 1;
}

}  // namespace fb
