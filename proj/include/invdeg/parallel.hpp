#pragma once

#include <cstddef>
#include <functional>

namespace invdeg {

/// Resolves a requested worker count; 0 means "use hardware concurrency".
unsigned resolve_threads(unsigned requested) noexcept;

/// Splits [begin, end) into `chunks` contiguous pieces whose boundaries
/// depend only on the range and chunk count, then runs
/// body(chunk_index, chunk_begin, chunk_end) on up to `threads` workers.
/// Callers that reduce per-chunk results in chunk order get output that
/// does not depend on the worker count.
void parallel_chunks(std::size_t begin, std::size_t end, std::size_t chunks, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

} // namespace invdeg
