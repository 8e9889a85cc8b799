#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

namespace padiceis {

// Deterministic RNG for property tests and verify suites.  Raw mt19937_64
// draws only; std distributions are not portable across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // uniform-ish in [0, n); modulo bias is irrelevant for test data
    std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }

    // inclusive range
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::mt19937_64 eng_;
};

std::uint64_t fnv1a64(const std::string& s);
std::string to_hex(std::uint64_t v);

// Resolves a requested thread count: values >= 1 are used as-is; 0 or
// negative means "consult PADIC_EISENSTEIN_THREADS, default 1".
unsigned resolve_thread_count(int requested);

// Runs fn(0..count-1), possibly on several threads.  Callers store results
// into pre-sized slots indexed by i, so output is schedule-independent.
// Exceptions from fn are captured and rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

} // namespace padiceis
