#include "genbeam/parallel.hpp"

#include <cstdlib>
#include <string>

namespace genbeam {

std::size_t worker_count()
{
    if (const char* env = std::getenv(workers_env_var)) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<std::size_t>(v);
        } catch (...) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace genbeam
