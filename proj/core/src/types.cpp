#include "degseq/types.hpp"

#include <thread>

namespace degseq {

int default_workers() noexcept {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace degseq
