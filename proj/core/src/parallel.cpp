#include "chessboard/detail/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace chessboard::detail {

int thread_budget() {
    if (const char* env = std::getenv("CHESSBOARD_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(std::min(v, 256L));
        return 1;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_chunks(std::size_t total,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
    if (total == 0) return;
    const auto workers = static_cast<std::size_t>(thread_budget());
    if (workers <= 1 || total < 2 * workers) {
        fn(0, total);
        return;
    }
    const std::size_t chunk = (total + workers - 1) / workers;
    std::vector<std::future<void>> jobs;
    for (std::size_t begin = 0; begin < total; begin += chunk) {
        const std::size_t end = std::min(begin + chunk, total);
        jobs.push_back(std::async(std::launch::async, [&fn, begin, end] { fn(begin, end); }));
    }
    for (auto& j : jobs) j.get();  // rethrows worker exceptions
}

}  // namespace chessboard::detail
