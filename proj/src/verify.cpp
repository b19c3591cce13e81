#include "resolvekit/verify.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace resolvekit {

void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

namespace detail {

std::vector<std::uint8_t> signature_keys_serial(const std::vector<Mask>& columns,
                                                const std::vector<Mask>& omegas) {
    const std::size_t stride = columns.size();
    std::vector<std::uint8_t> keys(omegas.size() * stride);
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        std::uint8_t* row = keys.data() + i * stride;
        for (std::size_t c = 0; c < stride; ++c)
            row[c] = static_cast<std::uint8_t>(omegas[i].intersect_count(columns[c]));
    }
    return keys;
}

std::vector<std::uint8_t> signature_keys_parallel(const std::vector<Mask>& columns,
                                                  const std::vector<Mask>& omegas) {
    const std::size_t stride = columns.size();
    std::vector<std::uint8_t> keys(omegas.size() * stride);
    const std::int64_t n = static_cast<std::int64_t>(omegas.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        std::uint8_t* row = keys.data() + i * stride;
        for (std::size_t c = 0; c < stride; ++c)
            row[c] = static_cast<std::uint8_t>(omegas[i].intersect_count(columns[c]));
    }
    return keys;
}

bool has_duplicate_key(const std::vector<std::uint8_t>& keys, std::size_t stride) {
    if (stride == 0) return keys.size() > 0;  // zero columns: all signatures empty
    const std::size_t n = keys.size() / stride;
    if (n < 2) return false;
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto cmp = [&](std::uint32_t a, std::uint32_t b) {
        return std::memcmp(keys.data() + a * stride, keys.data() + b * stride, stride) < 0;
    };
    std::sort(order.begin(), order.end(), cmp);
    for (std::size_t i = 1; i < n; ++i)
        if (std::memcmp(keys.data() + order[i - 1] * stride,
                        keys.data() + order[i] * stride, stride) == 0)
            return true;
    return false;
}

}  // namespace detail

namespace {

// Masks of all subsets of [m] of the given size; size 0 is the empty mask.
std::vector<Mask> subset_masks(int m, int size) {
    if (size == 0) return {Mask{}};
    return enumerate_ksubset_masks(m, size);
}

bool distinct_signatures(const Certificate& cert, const std::vector<Mask>& omegas) {
    auto columns = cert.masks();
    auto keys = detail::signature_keys_parallel(columns, omegas);
    if (cert.size() == 0) return omegas.size() < 2;
    return !detail::has_duplicate_key(keys, columns.size());
}

}  // namespace

bool is_separating(const Certificate& cert) {
    if (cert.m < cert.k) throw invalid_parameters("is_separating: need m >= k");
    return distinct_signatures(cert, enumerate_ksubset_masks(cert.m, cert.k));
}

bool is_separating_rows(const Certificate& cert) {
    if (cert.m < 2 * cert.k - 1)
        throw hypothesis_violated("is_separating_rows: requires m >= 2k-1");
    for (int i = 0; i <= cert.k; ++i)
        if (!distinct_signatures(cert, subset_masks(cert.m, i))) return false;
    return true;
}

bool is_robust(const Certificate& cert) {
    if (!is_separating(cert)) return false;
    // All subsets of size < k, compared across size classes.
    std::vector<Mask> low;
    for (int i = 0; i < cert.k; ++i) {
        auto ms = subset_masks(cert.m, i);
        low.insert(low.end(), ms.begin(), ms.end());
    }
    return distinct_signatures(cert, low);
}

namespace {

std::vector<int> mask_to_members(const Mask& mk, int m) {
    std::vector<int> out;
    for (int p = 1; p <= m; ++p)
        if (mk.test(p)) out.push_back(p);
    return out;
}

// Lexicographically first colliding pair among the given omegas, which
// must already be listed in the desired order.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
first_collision(const Certificate& cert, const std::vector<Mask>& omegas) {
    auto columns = cert.masks();
    auto keys = detail::signature_keys_parallel(columns, omegas);
    const std::size_t stride = columns.size();
    const std::size_t n = omegas.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto cmp = [&](std::uint32_t a, std::uint32_t b) {
        int c = stride ? std::memcmp(keys.data() + a * stride, keys.data() + b * stride, stride) : 0;
        return c != 0 ? c < 0 : a < b;
    };
    std::sort(order.begin(), order.end(), cmp);
    std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
    for (std::size_t i = 1; i < n; ++i) {
        std::uint32_t a = order[i - 1], b = order[i];
        bool equal = stride == 0 ||
                     std::memcmp(keys.data() + a * stride, keys.data() + b * stride, stride) == 0;
        if (!equal) continue;
        auto pr = std::make_pair(std::min(a, b), std::max(a, b));
        if (!best || pr < *best) best = pr;
    }
    if (!best) return std::nullopt;
    return std::make_pair(mask_to_members(omegas[best->first], cert.m),
                          mask_to_members(omegas[best->second], cert.m));
}

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>>
witness_unseparated(const Certificate& cert, bool robust_mode) {
    if (!robust_mode) {
        if (is_separating(cert)) return std::nullopt;
        if (cert.m >= 2 * cert.k - 1) {
            // Lemma-style scan: smallest size class with a same-size collision.
            for (int i = 0; i <= cert.k; ++i)
                if (auto w = first_collision(cert, subset_masks(cert.m, i))) return w;
        }
        return first_collision(cert, subset_masks(cert.m, cert.k));
    }
    if (is_robust(cert)) return std::nullopt;
    // Smallest s such that subsets of size <= s already collide (cross-size
    // comparison below k), then the k-class.
    std::vector<Mask> low;
    for (int s = 0; s < cert.k; ++s) {
        auto ms = subset_masks(cert.m, s);
        low.insert(low.end(), ms.begin(), ms.end());
        if (auto w = first_collision(cert, low)) return w;
    }
    return first_collision(cert, subset_masks(cert.m, cert.k));
}

}  // namespace resolvekit
