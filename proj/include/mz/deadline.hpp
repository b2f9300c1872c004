#pragma once

// Cooperative per-task deadline. Long-running constructions check the active
// deadline between coarse steps (polynomial products, pipeline stages) and
// throw Timeout; the sweep driver turns that into a skipped grid point.

#include "mz/errors.hpp"

#include <chrono>
#include <optional>

namespace mz {

class Deadline {
public:
    Deadline() = default;

    static Deadline after(double seconds) {
        Deadline d;
        d.at_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(seconds));
        return d;
    }

    bool armed() const { return at_.has_value(); }
    bool expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

    void check() const {
        if (expired()) throw Timeout("deadline exceeded");
    }

    /// Checks the deadline installed on this thread, if any.
    static void check_active() {
        if (active_ && active_->expired()) throw Timeout("deadline exceeded");
    }

    /// RAII installer for the thread-local active deadline.
    class Scope {
    public:
        explicit Scope(const Deadline& d) : prev_(active_) { active_ = d.armed() ? &d : nullptr; }
        ~Scope() { active_ = prev_; }
        Scope(const Scope&) = delete;
        Scope& operator=(const Scope&) = delete;

    private:
        const Deadline* prev_;
    };

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
    inline static thread_local const Deadline* active_ = nullptr;
};

} // namespace mz
