#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace picrank {

// Error taxonomy shared by all modules. The `code` string is stable and is
// what tests and the CLI match on.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define PICRANK_DEFINE_ERROR(NAME)                                            \
    class NAME : public Error {                                               \
    public:                                                                    \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}         \
    }

PICRANK_DEFINE_ERROR(DegenerateSurface);
PICRANK_DEFINE_ERROR(NotAPerfectSquare);
PICRANK_DEFINE_ERROR(NodeNotRational);
PICRANK_DEFINE_ERROR(DegenerateTangentCone);
PICRANK_DEFINE_ERROR(NoExteriorPoint);
PICRANK_DEFINE_ERROR(NewtonNonIntegral);
PICRANK_DEFINE_ERROR(NoCandidateSurvives);
PICRANK_DEFINE_ERROR(BothRejected);
PICRANK_DEFINE_ERROR(NonzeroRemainder);
PICRANK_DEFINE_ERROR(NonPositiveLimit);
PICRANK_DEFINE_ERROR(MultiplicityUnsupported);
PICRANK_DEFINE_ERROR(SingularSpan);
PICRANK_DEFINE_ERROR(ParityViolation);

#undef PICRANK_DEFINE_ERROR

// Deterministic RNG for sample generation. mt19937_64 is bit-exact across
// platforms; the bounded draw avoids std::uniform_int_distribution, whose
// output differs between standard libraries.
class SampleRng {
public:
    explicit SampleRng(uint64_t seed) : eng_(seed) {}

    uint64_t bounded(uint64_t n) {
        if (n == 0) throw std::domain_error("bounded(0)");
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    int64_t uniform_int(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(bounded(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

// Splits [begin, end) into contiguous chunks, one worker thread per chunk
// batch. fn(chunk_begin, chunk_end, thread_index) must be pure or own its
// accumulator; the caller merges results.
inline void parallel_chunks(int64_t begin, int64_t end, unsigned threads,
                            const std::function<void(int64_t, int64_t, unsigned)>& fn) {
    if (threads == 0) threads = 1;
    int64_t n = end - begin;
    if (n <= 0) return;
    if (threads == 1 || n < 1024) {
        fn(begin, end, 0);
        return;
    }
    std::vector<std::thread> pool;
    int64_t per = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        int64_t lo = begin + per * t;
        int64_t hi = lo + per < end ? lo + per : end;
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi, t] { fn(lo, hi, t); });
    }
    for (auto& th : pool) th.join();
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline unsigned default_thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace picrank
