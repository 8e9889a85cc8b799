#include "padiceis/util.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>
#include <vector>

namespace padiceis {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

unsigned resolve_thread_count(int requested) {
    if (requested >= 1) return static_cast<unsigned>(requested);
    if (const char* env = std::getenv("PADIC_EISENSTEIN_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    return 1;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    if (threads <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned nw = threads < count ? threads : static_cast<unsigned>(count);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errs(nw);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (unsigned w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= count) break;
                    fn(i);
                }
            } catch (...) {
                errs[w] = std::current_exception();
                next.store(count); // stop handing out work
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

} // namespace padiceis
