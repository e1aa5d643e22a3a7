#include "fibtree/integer.hpp"

#include "fibtree/errors.hpp"

namespace fibtree {

namespace {

std::vector<Integer>& fib_store() {
    thread_local std::vector<Integer> cache{Integer(1), Integer(1)};
    return cache;
}

std::vector<Integer>& golden_store() {
    // Index 0 is a placeholder; weights are 1-indexed.
    thread_local std::vector<Integer> cache{Integer(0), Integer(1), Integer(3)};
    return cache;
}

void grow_fib(std::vector<Integer>& cache) {
    cache.push_back(cache[cache.size() - 1] + cache[cache.size() - 2]);
}

void grow_golden(std::vector<Integer>& cache) {
    cache.push_back(3 * cache[cache.size() - 1] - cache[cache.size() - 2]);
}

} // namespace

namespace detail {

const std::vector<Integer>& fib_cache(std::size_t max_index) {
    auto& cache = fib_store();
    while (cache.size() <= max_index) grow_fib(cache);
    return cache;
}

const std::vector<Integer>& fib_cache_covering(const Integer& bound) {
    auto& cache = fib_store();
    while (cache.back() < bound) grow_fib(cache);
    return cache;
}

const std::vector<Integer>& golden_cache(std::size_t max_index) {
    auto& cache = golden_store();
    while (cache.size() <= max_index) grow_golden(cache);
    return cache;
}

const std::vector<Integer>& golden_cache_covering(const Integer& bound) {
    auto& cache = golden_store();
    while (cache.back() < bound) grow_golden(cache);
    return cache;
}

} // namespace detail

Integer fib(std::size_t n) {
    return detail::fib_cache(n)[n];
}

Integer golden_weight(std::size_t n) {
    if (n == 0)
        throw validation_error("golden weights are indexed from 1");
    return detail::golden_cache(n)[n];
}

} // namespace fibtree
