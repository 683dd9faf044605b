#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace photon_ledger {

/// Worker count used by parallel loops; 0 means the OpenMP default.
void set_thread_count(int threads);
int thread_count();

namespace detail {
void parallel_for_impl(std::size_t count, void* ctx, void (*body)(void*, std::size_t));
}

/// Runs body(i) for i in [0, count) across the configured workers. The first
/// exception thrown by any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
    struct Ctx {
        Body* body;
        std::exception_ptr error;
        std::mutex mutex;
    } ctx{&body, nullptr, {}};
    detail::parallel_for_impl(count, &ctx, [](void* raw, std::size_t i) {
        auto* c = static_cast<Ctx*>(raw);
        try {
            (*c->body)(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(c->mutex);
            if (!c->error) c->error = std::current_exception();
        }
    });
    if (ctx.error) std::rethrow_exception(ctx.error);
}

}  // namespace photon_ledger
