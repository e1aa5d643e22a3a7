#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace fibtree {

// Exact, unbounded integer used for every closed-form value in the library.
using Integer = boost::multiprecision::cpp_int;

// Fibonacci sequence with the two-sided unit seed: f(0) = f(1) = 1,
// f(n+2) = f(n+1) + f(n), giving 1, 1, 2, 3, 5, 8, 13, ...
Integer fib(std::size_t n);

// Weights of the golden numeration: w(1) = 1, w(2) = 3,
// w(n+2) = 3*w(n+1) - w(n), giving 1, 3, 8, 21, 55, ...
// Satisfies w(n) = fib(2n - 1).  n = 0 is rejected.
Integer golden_weight(std::size_t n);

namespace detail {

// Grow-only per-thread caches.  The returned reference is valid until the
// same thread requests a larger prefix; callers must not retain it across
// further calls.  cache[i] holds f(i) (resp. w(i); index 0 is unused there).
const std::vector<Integer>& fib_cache(std::size_t max_index);
const std::vector<Integer>& golden_cache(std::size_t max_index);

// Ensure the cache covers every value <= bound and return it.
const std::vector<Integer>& fib_cache_covering(const Integer& bound);
const std::vector<Integer>& golden_cache_covering(const Integer& bound);

} // namespace detail

} // namespace fibtree
