#include "nel/core/parallel.hpp"

#include <cstdlib>
#include <string>

namespace nel {

std::size_t worker_count() {
    if (const char* env = std::getenv("NEL_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace nel
