#include "rectcarto/parallel.hpp"

#include <cstdlib>
#include <string>

namespace rectcarto {

std::size_t default_thread_count() {
    if (const char* env = std::getenv("RECTCARTO_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) {
                return static_cast<std::size_t>(v);
            }
        } catch (const std::exception&) {
            // fall through to the hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace rectcarto
