#include "tribq/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace tribq {

unsigned thread_count() {
  if (const char* env = std::getenv("TRIBQ_THREADS")) {
    const std::string_view s(env);
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) {
      return v;
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace tribq
