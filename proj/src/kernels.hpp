#pragma once

// Outer-loop drivers shared by the parameter solvers. Each has a serial
// reference path and an OpenMP path that must agree on value and witness.

#include "critset/error.hpp"
#include "critset/exec.hpp"

#include <omp.h>

#include <atomic>
#include <climits>
#include <cstddef>
#include <exception>
#include <limits>
#include <optional>
#include <vector>

namespace critset::detail {

/// Lowest index in [0, count) for which `pred(i)` holds, or -1. Under the
/// parallel policy an index above an already found one is skipped.
template <class Pred>
long first_success(std::size_t count, Exec exec, Pred&& pred) {
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < count; ++i)
            if (pred(i))
                return static_cast<long>(i);
        return -1;
    }
    std::atomic<long> found{LONG_MAX};
    std::exception_ptr error;
    const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        if (i > found.load(std::memory_order_relaxed) || error)
            continue;
        try {
            if (pred(static_cast<std::size_t>(i))) {
                long cur = found.load();
                while (i < cur && !found.compare_exchange_weak(cur, i)) {
                }
            }
        } catch (...) {
#pragma omp critical(critset_first_success_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    long f = found.load();
    return f == LONG_MAX ? -1 : f;
}

/// Result of evaluating one candidate: exact value, or nothing when the
/// evaluation proved the candidate strictly worse than the bound it was given.
template <class Payload>
struct Evaluated {
    int value;
    Payload payload;
};

template <class Payload>
struct Best {
    long index = -1;
    int value = 0;
    Payload payload{};
};

/// Optimises over candidates [0, count). `eval(i, bound)` returns the exact
/// value of candidate i, or nullopt only if that value is strictly worse than
/// `bound` (bound is the best value seen so far, or the initial sentinel).
/// Once a candidate reaches `ceiling` (the best possible value), candidates
/// with larger index are skipped. Ties go to the lowest index, so the result is
/// schedule-independent.
template <class Payload, class Eval>
Best<Payload> optimise(std::size_t count, bool maximise, std::optional<int> ceiling, Exec exec, Eval&& eval) {
    const int sentinel = maximise ? std::numeric_limits<int>::min() : std::numeric_limits<int>::max();
    auto better = [maximise](int a, int b) { return maximise ? a > b : a < b; };
    Best<Payload> best;
    best.value = sentinel;

    auto offer = [&](long i, Evaluated<Payload>&& r) {
        if (best.index < 0 || better(r.value, best.value) || (r.value == best.value && i < best.index)) {
            best.index = i;
            best.value = r.value;
            best.payload = std::move(r.payload);
        }
    };

    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < count; ++i) {
            auto r = eval(i, best.value);
            if (!r)
                continue;
            bool done = ceiling && r->value == *ceiling;
            offer(static_cast<long>(i), std::move(*r));
            if (done)
                break;
        }
        return best;
    }

    std::atomic<int> bound{sentinel};
    std::atomic<long> stop{LONG_MAX};
    std::exception_ptr error;
    const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        if (i > stop.load(std::memory_order_relaxed) || error)
            continue;
        try {
            auto r = eval(static_cast<std::size_t>(i), bound.load(std::memory_order_relaxed));
            if (r) {
                int cur = bound.load();
                while (better(r->value, cur) && !bound.compare_exchange_weak(cur, r->value)) {
                }
                if (ceiling && r->value == *ceiling) {
                    long s = stop.load();
                    while (i < s && !stop.compare_exchange_weak(s, i)) {
                    }
                }
#pragma omp critical(critset_optimise_offer)
                offer(i, std::move(*r));
            }
        } catch (...) {
#pragma omp critical(critset_optimise_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    return best;
}

}  // namespace critset::detail
