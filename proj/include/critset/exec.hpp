#pragma once

#include <chrono>
#include <optional>

namespace critset {

/// Which kernel variant a solver runs. `serial` is the reference
/// implementation; `parallel` distributes the outer enumeration with OpenMP and
/// must return identical values and witnesses.
enum class Exec { serial, parallel };

/// Wall-clock deadline. A default-constructed budget never expires.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    Budget() = default;
    static Budget seconds(double s) {
        Budget b;
        b.deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(s));
        return b;
    }

    bool limited() const { return deadline_.has_value(); }
    bool expired() const { return deadline_ && Clock::now() >= *deadline_; }
    /// Throws BudgetExhausted once the deadline has passed.
    void check() const;

private:
    std::optional<Clock::time_point> deadline_;
};

struct SolveOptions {
    Exec exec = Exec::parallel;
    Budget budget;
    /// Solve connected components separately and add up (sn, oscs, ulcs, olcs
    /// are additive over disjoint unions).
    bool split_components = true;
};

}  // namespace critset
