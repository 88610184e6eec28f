#include "quintic/arith.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace quintic::arith {

PrimeFactorization PrimeFactorization::from_factors(std::vector<PrimePower> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("factorization must contain at least one prime");
    }
    unsigned __int128 value = 1;
    std::uint64_t previous = 0;
    for (auto const& [prime, exponent] : factors) {
        if (prime <= previous) {
            throw std::invalid_argument("primes must be strictly increasing");
        }
        if (exponent < 1) {
            throw std::invalid_argument("exponents must be >= 1");
        }
        if (!is_prime(prime)) {
            throw std::invalid_argument(std::to_string(prime) + " is not prime");
        }
        for (int i = 0; i < exponent; ++i) {
            value *= prime;
            if (value > std::numeric_limits<std::uint64_t>::max()) {
                throw std::invalid_argument("factorization exceeds 64 bits");
            }
        }
        previous = prime;
    }
    return PrimeFactorization(static_cast<std::uint64_t>(value), std::move(factors));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t m) noexcept {
    static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (m < 2) return false;
    for (std::uint64_t p : kBases) {
        if (m % p == 0) return m == p;
    }
    std::uint64_t d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        std::uint64_t x = pow_mod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, m);
            if (x == m - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

PrimeFactorization factorize(std::uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("factorize requires n >= 2, got " + std::to_string(n));
    }
    std::vector<PrimePower> factors;
    auto take = [&](std::uint64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) factors.push_back({p, e});
    };
    take(2);
    take(3);
    take(5);
    // Gaps between consecutive integers coprime to 30, starting at 7.
    static constexpr std::array<std::uint64_t, 8> kWheel = {4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t p = 7;
    std::size_t w = 0;
    while (n > 1 && !is_prime(n)) {
        if (p > n / p) break;
        if (n % p == 0) take(p);
        p += kWheel[w];
        w = (w + 1) % kWheel.size();
    }
    if (n > 1) factors.push_back({n, 1});
    return PrimeFactorization::from_factors(std::move(factors));
}

int mult_order_mod5(std::uint64_t p) {
    if (p == 5 || !is_prime(p)) {
        throw std::invalid_argument("mult_order_mod5 requires a prime other than 5, got " + std::to_string(p));
    }
    std::uint64_t r = p % 5;
    std::uint64_t power = r;
    int f = 1;
    while (power != 1) {
        power = power * r % 5;
        ++f;
    }
    return f;
}

namespace {

// Dense polynomials over F_p, lowest coefficient first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(Poly const& a) { return static_cast<int>(a.size()) - 1; }

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

Poly poly_rem(Poly a, Poly const& b, std::uint64_t p) {
    std::uint64_t lead_inv = inverse(b.back(), p);
    while (degree(a) >= degree(b)) {
        std::uint64_t c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul_mod(Poly const& a, Poly const& b, Poly const& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    trim(prod);
    return poly_rem(std::move(prod), f, p);
}

Poly poly_pow_mod(Poly base, std::uint64_t exp, Poly const& f, std::uint64_t p) {
    Poly result{1};
    base = poly_rem(std::move(base), f, p);
    while (exp > 0) {
        if (exp & 1) result = poly_mul_mod(result, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        exp >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

Splitting cyclotomic_splitting_oracle(std::uint64_t p) {
    if (p == 5 || !is_prime(p) || p >= (std::uint64_t{1} << 32)) {
        throw std::invalid_argument("splitting oracle requires a prime p != 5 below 2^32, got " +
                                    std::to_string(p));
    }
    Poly const phi = {1 % p, 1 % p, 1 % p, 1 % p, 1 % p};

    // Squarefree: gcd(phi, phi') must be constant.
    Poly derivative = {1 % p, 2 % p, 3 % p, 4 % p};
    trim(derivative);
    if (degree(poly_gcd(phi, derivative, p)) > 0) {
        throw std::logic_error("x^4+x^3+x^2+x+1 has a repeated factor mod " + std::to_string(p));
    }

    int roots = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (int i = 0; i < 5; ++i) v = (v * x + 1) % p;
        if (v == 0) ++roots;
    }

    // gcd(x^(p^2) - x, phi) is the product of the linear and quadratic factors.
    Poly frob = poly_pow_mod({0, 1}, p, phi, p);
    frob = poly_pow_mod(frob, p, phi, p);
    frob.resize(std::max<std::size_t>(frob.size(), 2), 0);
    frob[1] = (frob[1] + p - 1) % p;
    trim(frob);
    int low_degree = frob.empty() ? 4 : degree(poly_gcd(phi, frob, p));
    int quadratics = (low_degree - roots) / 2;
    int rest = 4 - low_degree;

    std::vector<int> degrees(static_cast<std::size_t>(roots), 1);
    degrees.insert(degrees.end(), static_cast<std::size_t>(quadratics), 2);
    if (rest > 0) degrees.push_back(rest);

    if (std::adjacent_find(degrees.begin(), degrees.end(), std::not_equal_to<>()) != degrees.end()) {
        throw std::logic_error("irreducible factors of unequal degree mod " + std::to_string(p));
    }
    return {degrees.front(), static_cast<int>(degrees.size())};
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

void factor_range(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> primes,
                  RangeFactorSink const& sink) {
    // 15 distinct primes suffice below 2^64.
    constexpr std::size_t kMaxFactors = 15;
    constexpr std::uint64_t kSegment = std::uint64_t{1} << 15;

    lo = std::max<std::uint64_t>(lo, 2);
    std::vector<std::uint64_t> rest;
    std::vector<std::array<PrimePower, kMaxFactors>> found;
    std::vector<std::uint8_t> count;

    for (std::uint64_t start = lo; start < hi; start += std::min(kSegment, hi - start)) {
        std::uint64_t const stop = start + std::min(kSegment, hi - start);
        std::size_t const len = stop - start;
        rest.resize(len);
        found.resize(len);
        count.assign(len, 0);
        for (std::size_t i = 0; i < len; ++i) rest[i] = start + i;

        for (std::uint64_t p : primes) {
            if (p > (stop - 1) / p) break;
            std::uint64_t first = (start + p - 1) / p * p;
            for (std::uint64_t m = first; m < stop; m += p) {
                std::size_t i = m - start;
                int e = 0;
                do {
                    rest[i] /= p;
                    ++e;
                } while (rest[i] % p == 0);
                found[i][count[i]++] = {p, e};
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            if (rest[i] > 1) found[i][count[i]++] = {rest[i], 1};
            sink(start + i, std::span<const PrimePower>(found[i].data(), count[i]));
        }
    }
}

}  // namespace quintic::arith
