#include "tamagawa/arith.hpp"

#include <algorithm>
#include <map>

namespace tamagawa {

namespace {

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t LIMIT = 1'000'000;
        std::vector<bool> sieve(LIMIT + 1, true);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i <= LIMIT; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= LIMIT; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

bool miller_rabin_witness(const Int& n, const Int& a) {
    // returns true if a proves n composite
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

// Brent-cycle Pollard rho; returns a nontrivial factor or 0 on failure.
Int pollard_brent(const Int& n, unsigned long seed, unsigned long max_iters) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 2) + 1;
        Int x = y, q = 1, g = 1, ys = y;
        unsigned long r = 1, iters = 0;
        const unsigned long m = 128;
        while (g == 1 && iters < max_iters) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                iters += lim;
            }
            r <<= 1;
        }
        if (g == n) {
            // backtrack
            do {
                ys = (ys * ys + c) % n;
                Int diff = x > ys ? x - ys : ys - x;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out, bool& complete, Int& cofactor) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Int f = pollard_brent(n, 0xfeedfaceUL + mpz_fdiv_ui(n.get_mpz_t(), 1000003), 2'000'000);
    if (f == 0 || f == 1 || f == n) {
        complete = false;
        cofactor *= n;
        return;
    }
    factor_rec(f, out, complete, cofactor);
    factor_rec(n / f, out, complete, cofactor);
}

}  // namespace

Int Factorization::reconstruct() const {
    Int prod = cofactor;
    for (const auto& [p, e] : factors) prod *= pow_int(p, e);
    return prod;
}

unsigned vp(const Int& n, const Int& p) {
    if (n == 0) throw domain_error("vp: n must be nonzero");
    if (!is_prime(p)) throw domain_error("vp: p must be prime");
    Int m = abs(n);
    unsigned v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

long vp(const Rat& q, const Int& p) {
    if (q == 0) throw domain_error("vp: q must be nonzero");
    Int num = q.get_num(), den = q.get_den();
    long v = 0;
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) { num /= p; ++v; }
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) { den /= p; --v; }
    return v;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    // deterministic Miller-Rabin below 3.317e24 with the 12 smallest prime bases
    static const Int kDeterministicBound("3317044064679887385961981");
    if (n < kDeterministicBound) {
        for (uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
            if (miller_rabin_witness(n, a)) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Factorization factorize(const Int& n) {
    if (n == 0) throw domain_error("factorize: n must be nonzero");
    Int m = abs(n);
    Factorization out;
    std::map<Int, unsigned> fac;
    for (uint32_t p : small_primes()) {
        if (m == 1) break;
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            fac[p] += 1;
            m /= p;
        }
    }
    if (m > 1) factor_rec(m, fac, out.complete, out.cofactor);
    out.factors.assign(fac.begin(), fac.end());
    return out;
}

std::optional<unsigned> big_omega(const Factorization& f) {
    if (!f.complete) return std::nullopt;
    unsigned total = 0;
    for (const auto& [p, e] : f.factors) total += e;
    return total;
}

std::optional<unsigned> big_omega(const Int& n) {
    if (n < 1) throw domain_error("big_omega: n must be positive");
    if (n == 1) return 0;
    return big_omega(factorize(n));
}

std::optional<bool> is_squarefree(const Factorization& f) {
    for (const auto& [p, e] : f.factors)
        if (e > 1) return false;
    if (!f.complete) {
        // a square cofactor cannot be ruled out
        if (mpz_perfect_square_p(f.cofactor.get_mpz_t())) return false;
        return std::nullopt;
    }
    return true;
}

std::optional<bool> is_squarefree(const Int& n) {
    if (n == 0) throw domain_error("is_squarefree: n must be nonzero");
    if (n == 1 || n == -1) return true;
    return is_squarefree(factorize(n));
}

std::optional<unsigned> num_distinct_primes(const Int& n) {
    if (n == 0) throw domain_error("num_distinct_primes: n must be nonzero");
    if (n == 1 || n == -1) return 0;
    Factorization f = factorize(n);
    if (!f.complete) return std::nullopt;
    return unsigned(f.factors.size());
}

int legendre(const Int& a, const Int& p) {
    if (p == 2 || !is_prime(p)) throw domain_error("legendre: p must be an odd prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Int invmod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw domain_error("invmod: not invertible");
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

unsigned log2_ceil(const Int& m) {
    if (m == 0) throw domain_error("log2_ceil: m must be nonzero");
    Int a = abs(m);
    size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
    if (mpz_popcount(a.get_mpz_t()) == 1) return unsigned(bits - 1);  // power of two
    return unsigned(bits);
}

}  // namespace tamagawa
