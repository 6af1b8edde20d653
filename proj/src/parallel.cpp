#include "folnerlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace folnerlab {

std::size_t max_threads()
{
    if (const char* env = std::getenv("FOLNERLAB_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0)
                return static_cast<std::size_t>(v);
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace folnerlab
