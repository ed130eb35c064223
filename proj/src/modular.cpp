#include <mutex>
#include <stdexcept>

#include "kernels_detail.hpp"

namespace hyponorm::kernels::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Montgomery arithmetic for an odd modulus below 2^63, R = 2^64.
struct Montgomery {
    u64 p;
    u64 neg_inv;  // -p^{-1} mod 2^64
    u64 r2;       // R^2 mod p

    explicit Montgomery(u64 modulus) : p(modulus) {
        u64 inv = p;
        for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
        neg_inv = ~inv + 1;
        const u64 r = static_cast<u64>((static_cast<u128>(1) << 64) % p);
        r2 = static_cast<u64>(static_cast<u128>(r) * r % p);
    }

    u64 reduce(u128 t) const {
        const u64 m = static_cast<u64>(t) * neg_inv;
        u64 out = static_cast<u64>((t + static_cast<u128>(m) * p) >> 64);
        return out >= p ? out - p : out;
    }
    u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
    u64 to(u64 a) const { return mul(a, r2); }
    u64 from(u64 a) const { return reduce(a); }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
};

u64 inverse_mod(u64 a, u64 p) {
    // extended Euclid on signed 128-bit to avoid overflow
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a;
    while (new_r != 0) {
        const __int128 q = r / new_r;
        const __int128 tt = t - q * new_t;
        t = new_t;
        new_t = tt;
        const __int128 rr = r - q * new_r;
        r = new_r;
        new_r = rr;
    }
    if (r != 1) throw std::logic_error("modulus is not prime");
    if (t < 0) t += p;
    return static_cast<u64>(t);
}

}  // namespace

std::vector<std::size_t> hadamard_bits(const ScaledIntegerMatrix& m) {
    std::vector<std::size_t> bits(m.n);
    std::size_t total = 0;
    Integer norm2;
    for (std::size_t i = 0; i < m.n; ++i) {
        norm2 = 0;
        for (std::size_t j = 0; j < m.n; ++j) norm2 += m.entries[i * m.n + j] * m.entries[i * m.n + j];
        // ceil(log2 ||row||) <= ceil(bits(norm2) / 2)
        total += (mpz_sizeinbase(norm2.get_mpz_t(), 2) + 1) / 2;
        bits[i] = total;
    }
    return bits;
}

std::vector<std::uint64_t> crt_primes(std::size_t first, std::size_t count) {
    static std::mutex mutex;
    static std::vector<std::uint64_t> cache;
    std::lock_guard lock(mutex);
    Integer p = cache.empty() ? Integer(1) << 62 : Integer(static_cast<unsigned long>(cache.back()));
    while (cache.size() < first + count) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        cache.push_back(p.get_ui());
    }
    return {cache.begin() + static_cast<std::ptrdiff_t>(first),
            cache.begin() + static_cast<std::ptrdiff_t>(first + count)};
}

std::vector<std::uint64_t> minor_residues(const ScaledIntegerMatrix& m, std::uint64_t p) {
    const Montgomery mont(p);
    const std::size_t n = m.n;
    std::vector<u64> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = mont.to(mpz_fdiv_ui(m.entries[i].get_mpz_t(), p));

    std::vector<u64> out;
    out.reserve(n);
    u64 det = mont.to(1);
    for (std::size_t k = 0; k < n; ++k) {
        const u64 pivot = a[k * n + k];
        det = mont.mul(det, pivot);
        out.push_back(mont.from(det));
        if (pivot == 0) break;
        const u64 inv = mont.to(inverse_mod(mont.from(pivot), p));
        for (std::size_t i = k + 1; i < n; ++i) {
            const u64 f = mont.mul(a[i * n + k], inv);
            if (f == 0) continue;
            u64* row = &a[i * n];
            const u64* top = &a[k * n];
            for (std::size_t j = k + 1; j < n; ++j) row[j] = mont.sub(row[j], mont.mul(f, top[j]));
        }
    }
    return out;
}

std::vector<Rational> modular_minors(const ScaledIntegerMatrix& m, const ImageBatch& images_for) {
    const std::size_t n = m.n;
    std::vector<Rational> minors(n);
    if (n == 0) return minors;
    const auto bound = hadamard_bits(m);
    // value in (-M/2, M/2] needs M > 2^(bound + 1)
    const std::size_t per_prime = 62;
    std::size_t wanted = (bound.back() + 2) / per_prime + 1;

    std::vector<std::uint64_t> primes;
    std::vector<std::vector<std::uint64_t>> images;
    std::vector<Integer> value(n), modulus(n, Integer(1));
    std::vector<std::size_t> used(n, 0);  // primes folded into value[k]

    auto enough = [&](std::size_t k) { return mpz_sizeinbase(modulus[k].get_mpz_t(), 2) >= bound[k] + 3; };

    std::size_t settled = 0;  // minors[0..settled) are final
    while (settled < n) {
        const auto fresh = crt_primes(primes.size(), wanted);
        auto batch = images_for(m, fresh);
        primes.insert(primes.end(), fresh.begin(), fresh.end());
        for (auto& img : batch) images.push_back(std::move(img));

        for (std::size_t k = settled; k < n; ++k) {
            for (std::size_t t = used[k]; t < primes.size(); ++t) {
                if (enough(k)) break;
                used[k] = t + 1;
                if (images[t].size() <= k) continue;
                const u64 p = primes[t];
                const u64 x_mod = mpz_fdiv_ui(value[k].get_mpz_t(), p);
                const u64 m_mod = mpz_fdiv_ui(modulus[k].get_mpz_t(), p);
                if (m_mod == 0) continue;
                const u64 diff = images[t][k] >= x_mod ? images[t][k] - x_mod : images[t][k] + p - x_mod;
                const u64 lift = static_cast<u64>(static_cast<u128>(diff) * inverse_mod(m_mod, p) % p);
                value[k] += modulus[k] * Integer(static_cast<unsigned long>(lift));
                modulus[k] *= Integer(static_cast<unsigned long>(p));
            }
            if (!enough(k)) break;
            Integer half = modulus[k] / 2;
            if (value[k] > half) value[k] -= modulus[k];
            minors[k] = unscale_minor(m, value[k], k);
            settled = k + 1;
            if (value[k] == 0) {
                // every later image stops here; finish exactly instead
                finish_minors_with_pivoting(m, k + 1, minors);
                return minors;
            }
        }
        wanted = 4;
    }
    return minors;
}

}  // namespace hyponorm::kernels::detail
