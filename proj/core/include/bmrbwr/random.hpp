#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace bmrbwr {

class stream_exhausted_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Source of uniform draws in [0, 1). Identical seeds must yield identical
/// sequences; all derived quantities (partner index, T, branch choice) are
/// computed from these draws so that a scripted stream can replay any decision.
class random_stream {
public:
    virtual ~random_stream() = default;
    virtual double next_uniform() = 0;
};

/// mt19937_64-backed stream. The mapping (x >> 11) * 2^-53 keeps the sequence
/// identical across standard libraries.
class seeded_stream final : public random_stream {
public:
    explicit seeded_stream(std::uint64_t seed) : gen_(seed) {}
    double next_uniform() override { return (gen_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

/// Replays a fixed sequence; throws stream_exhausted_error past the end.
class scripted_stream final : public random_stream {
public:
    explicit scripted_stream(std::vector<double> values) : values_(std::move(values)) {}

    double next_uniform() override {
        if (index_ >= values_.size())
            throw stream_exhausted_error("scripted stream exhausted after " +
                                         std::to_string(values_.size()) + " draws");
        return values_[index_++];
    }

    std::size_t consumed() const { return index_; }
    std::size_t remaining() const { return values_.size() - index_; }

private:
    std::vector<double> values_;
    std::size_t index_ = 0;
};

}  // namespace bmrbwr
