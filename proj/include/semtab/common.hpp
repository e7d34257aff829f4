#pragma once

#include <stdexcept>
#include <string>

namespace semtab {

// Error categories map to CLI exit codes: SchemaError/PipelineError -> 2,
// InvariantError (and LatticeError) -> 3. See tools/semtab_main.cpp.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PipelineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LatticeError : public InvariantError {
public:
    using InvariantError::InvariantError;
};

struct ImageSize {
    int width = 0;
    int height = 0;
    bool operator==(const ImageSize&) const = default;
};

enum class TableStyle { wired, wireless };

inline std::string style_name(TableStyle s) {
    return s == TableStyle::wired ? "wired" : "wireless";
}

// splitmix64: cheap deterministic seed mixing for per-sample sub-seeds.
inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace semtab
