#include "gausssum/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace gausssum {

int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

SweepSummary run_sweep(const std::string& description, std::int64_t total, int workers,
                       const std::function<std::optional<VerificationReport>(std::int64_t)>& check) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepSummary summary;
    summary.description = description;
    summary.total = total;
    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<std::int64_t>(workers, std::max<std::int64_t>(total, 1)));

    std::atomic<std::int64_t> next{0};
    const std::int64_t block = std::max<std::int64_t>(1, total / (workers * 64));
    std::vector<std::pair<std::int64_t, VerificationReport>> failures;
    std::int64_t passes = 0;
    std::mutex merge_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        std::vector<std::pair<std::int64_t, VerificationReport>> local_failures;
        std::int64_t local_passes = 0;
        try {
            for (;;) {
                const std::int64_t begin = next.fetch_add(block);
                if (begin >= total) break;
                const std::int64_t end = std::min(begin + block, total);
                for (std::int64_t i = begin; i < end; ++i) {
                    if (auto failure = check(i))
                        local_failures.emplace_back(i, std::move(*failure));
                    else
                        ++local_passes;
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(merge_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        passes += local_passes;
        failures.insert(failures.end(), std::make_move_iterator(local_failures.begin()),
                        std::make_move_iterator(local_failures.end()));
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::sort(failures.begin(), failures.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    summary.passes = passes;
    summary.failures.reserve(failures.size());
    for (auto& [idx, rep] : failures) summary.failures.push_back(std::move(rep));
    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

}  // namespace gausssum
