// Deterministic work splitting. Chunk boundaries depend only on the problem
// size, never on the worker count, so per-chunk partial results can be
// combined in index order and reproduce bit-identically on any machine.
#pragma once

#include <cstddef>
#include <functional>

namespace ck {

// Worker cap: min(hardware threads, CONSENSUS_KINETICS_THREADS if set, any
// programmatic override). Always at least 1.
int max_threads();
void set_max_threads(int n);  // n < 1 restores the default

inline constexpr std::size_t kDefaultChunk = 4096;

// Calls fn(chunk_index, begin, end) for every fixed-size chunk of [0, n).
// Chunks may run on any thread in any order; fn must only write state owned
// by its chunk index.
void parallel_chunks(std::size_t n, std::size_t chunk_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace ck
