#pragma once

// Deterministic access-sequence generators and the text trace format.
//
// Randomness comes from SplitMix64 so traces are reproducible bit for bit on
// any platform or language:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// with the state initialised to the seed. Derived draws:
//
//   below(k)   = high 64 bits of (uint128) next() * k       (uniform in [0, k))
//   unit()     = (next() >> 11) * 2^-53                      (uniform in [0, 1))
//
// Trace file: first line "n m", then m lines holding one key each.
// Weights file: n lines holding one positive decimal each.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "wdf/core.hpp"

namespace wdf {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) noexcept
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

enum class WorkloadKind { Sequential, Uniform, Walk, ZipfFinger, BitReversal, Trace };

WorkloadKind parse_workload_kind(std::string_view name);
std::string_view to_string(WorkloadKind kind);

/// Generator parameters. `max_step` is used by Walk, `theta` by ZipfFinger
/// and `trace_path` by Trace.
struct WorkloadSpec {
    WorkloadKind kind = WorkloadKind::Uniform;
    Key n = 1;
    std::size_t m = 1;
    std::uint64_t seed = 0;
    Key max_step = 1;
    double theta = 2.0;
    std::filesystem::path trace_path;
};

/// sequential: 1..n cycled. uniform: 1 + below(n).
/// walk: starts at ceil(n/2); each step r = below(2d) moves by r - d when
///   r < d and by r - d + 1 otherwise, clamped to [1, n].
/// zipf_finger: starts at ceil(n/2); step length k in 1..max(n-1,1) drawn by
///   inverting the cumulative table of k^-theta with unit(), then the sign
///   from the top bit of next() (set = negative), clamped to [1, n].
/// bit_reversal: key i+1 at position whose index is the bit reversal of i;
///   needs n a power of two and m == n.
/// Throws BadSpec on invalid parameters.
AccessSequence generate(const WorkloadSpec& spec);

AccessSequence parse_trace(std::string_view text);
std::string format_trace(const AccessSequence& seq);

/// Throws IoError, ParseError (with line) or KeyOutOfRange (with line).
AccessSequence read_trace(const std::filesystem::path& path);
void write_trace(const AccessSequence& seq, const std::filesystem::path& path);

WeightAssignment parse_weights(std::string_view text);
WeightAssignment read_weights(const std::filesystem::path& path);
void write_weights(const WeightAssignment& w, const std::filesystem::path& path);

} // namespace wdf
