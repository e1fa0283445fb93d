#pragma once

// Coincidence scans over integer parameter pairs m < n. Each pair passes a
// modular prefilter before the exact classifier runs: f6_A reduced modulo a
// small prime p (p not dividing the denominator of A, image squarefree)
// factors into pieces no larger than the factors over Q, so one modular
// factor of degree > d rules out every decomposition type with parts <= d.

#include "sextic/family.hpp"
#include "sextic/resolvent.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace sextic::scan {

using resolvent::DecompositionType;
using resolvent::IntersectionResult;

enum class ScanKind { Cubic, Sextic };

inline const char* to_string(ScanKind k) { return k == ScanKind::Cubic ? "cubic" : "sextic"; }

struct ScanHit {
    long m = 0, n = 0;
    DecompositionType dt1, dt2; // in the classifier's (#G1 >= #G2) order
    int degree = 0;
    std::string compositum;

    friend bool operator<(const ScanHit& a, const ScanHit& b) { return a.m < b.m || (a.m == b.m && a.n < b.n); }
};

/// One finished row m: its hits and how many pairs it covered.
struct ScanRow {
    long m = 0;
    std::vector<ScanHit> hits;
    std::uint64_t pairs = 0, classified = 0;
};

struct ScanOptions {
    long lo = 0, hi = 0;   // pairs lo <= m < n <= hi
    unsigned jobs = 1;
    long start_row = 0;    // first m to process (resume); clamped to lo
    long stop_row = std::numeric_limits<long>::max(); // last m to process
    int prefilter_primes = 8;
    /// Largest factor degree a resolvent may have and still matter: 2 for the
    /// cubic scan (needs DT with parts <= 2), 1 for the sextic scan. 0 = default.
    int max_factor_degree = 0;
    /// Overrides the acceptance rule (mutation tests).
    std::function<bool(const IntersectionResult&)> accept;
    /// Called once per finished row, in ascending m, from a single thread.
    std::function<void(const ScanRow&)> on_row;
};

struct ScanResult {
    std::vector<ScanHit> hits; // sorted by (m, n)
    std::uint64_t pairs = 0;
    std::uint64_t classified = 0; // pairs that survived the prefilter
};

namespace detail {

inline constexpr std::array<std::uint32_t, 12> kPrimes{5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};

/// Residues mod a small prime p of degree < 6 polynomials modulo a monic sextic.
struct SexticRing {
    std::uint64_t p;
    std::array<std::uint64_t, 6> f; // f = X^6 + sum f_i X^i
    using Elem = std::array<std::uint64_t, 6>;

    Elem mul(const Elem& a, const Elem& b) const
    {
        std::array<std::uint64_t, 11> c{};
        for (int i = 0; i < 6; ++i) {
            if (!a[i])
                continue;
            for (int j = 0; j < 6; ++j)
                c[i + j] += a[i] * b[j];
        }
        for (int k = 10; k >= 6; --k) {
            const std::uint64_t t = c[k] % p;
            if (!t)
                continue;
            for (int i = 0; i < 6; ++i)
                c[k - 6 + i] += t * (p - f[i]);
        }
        Elem r;
        for (int i = 0; i < 6; ++i)
            r[i] = c[i] % p;
        return r;
    }

    Elem times_x(const Elem& a) const
    {
        Elem r;
        const std::uint64_t t = a[5];
        r[0] = (t * (p - f[0])) % p;
        for (int i = 1; i < 6; ++i)
            r[i] = (a[i - 1] + t * (p - f[i])) % p;
        return r;
    }

    /// a^e where a is given; e = p.
    Elem pow(const Elem& a, std::uint64_t e) const
    {
        Elem r{1, 0, 0, 0, 0, 0};
        Elem b = a;
        while (e) {
            if (e & 1)
                r = mul(r, b);
            e >>= 1;
            if (e)
                b = mul(b, b);
        }
        return r;
    }

    /// X^(p^k)
    Elem frobenius_x(int k) const
    {
        Elem x{0, 1, 0, 0, 0, 0};
        Elem h = x;
        for (int i = 0; i < k; ++i)
            h = pow(h, p);
        return h;
    }
};

inline std::uint64_t mod_u(std::int64_t v, std::uint64_t p)
{
    const std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

/// True when some prime proves that f6_{num/den} has an irreducible factor of
/// degree > max_degree over Q.
inline bool modular_rules_out(std::int64_t num, std::int64_t den, int max_degree, int primes)
{
    int used = 0;
    for (std::uint32_t p32 : kPrimes) {
        if (used >= primes)
            break;
        const std::uint64_t p = p32;
        const std::uint64_t d = mod_u(den, p);
        if (!d)
            continue;
        // A mod p by Fermat inverse
        std::uint64_t inv = 1, b = d, e = p - 2;
        while (e) {
            if (e & 1)
                inv = inv * b % p;
            b = b * b % p;
            e >>= 1;
        }
        const std::uint64_t A = mod_u(num, p) * inv % p;
        // disc f6_A = 6^6 (A^2 + 3A + 9)^5; p >= 5 so only the k-part matters
        if ((A * A + 3 * A + 9) % p == 0)
            continue;
        ++used;
        SexticRing R;
        R.p = p;
        // f6_A = X^6 - 2A X^5 - 5(A+3) X^4 - 20 X^3 + 5A X^2 + 2(A+3) X + 1
        const std::uint64_t A3 = (A + 3) % p;
        R.f = {1 % p, 2 * A3 % p, 5 * A % p, (p * 20 - 20) % p, (p - 5 * A3 % p) % p, (p - 2 * A % p) % p};
        const auto h = R.frobenius_x(max_degree);
        const SexticRing::Elem x{0, 1, 0, 0, 0, 0};
        if (h != x)
            return true;
    }
    return false;
}

/// Resolvent parameters of an integer pair as numerator/denominator.
struct IntParams {
    std::int64_t n1, d1, n2, d2;
};

inline IntParams int_params(std::int64_t m, std::int64_t n)
{
    return {-(m * n + 3 * m + 9), m - n, m * n - 9, m + n + 3};
}

} // namespace detail

/// Runs the scan; rows are dispatched to `jobs` workers and committed in
/// ascending order, so the result and the callback sequence do not depend on
/// the thread count.
inline ScanResult run_scan(ScanKind kind, const ScanOptions& opt)
{
    if (opt.hi < opt.lo)
        throw std::invalid_argument("scan: empty range");
    if (opt.lo < -1000000 || opt.hi > 1000000)
        throw std::invalid_argument("scan: range outside supported limits [-10^6, 10^6]");
    const int max_degree = opt.max_factor_degree ? opt.max_factor_degree : (kind == ScanKind::Cubic ? 2 : 1);
    std::function<bool(const IntersectionResult&)> accept = opt.accept;
    if (!accept) {
        if (kind == ScanKind::Cubic)
            accept = [](const IntersectionResult& r) { return resolvent::cubic_coincide(r); };
        else
            accept = [](const IntersectionResult& r) { return r.relation == resolvent::Relation::Equal; };
    }

    const long first = std::max(opt.lo, opt.start_row);
    const long last = std::min(opt.hi - 1, opt.stop_row); // last row with a partner
    ScanResult result;

    std::mutex mu;
    std::map<long, ScanRow> pending;
    long next_commit = first;
    std::atomic<long> next_row{first};
    std::atomic<std::uint64_t> pairs{0}, classified{0};
    std::exception_ptr failure;

    auto worker = [&] {
        std::map<long, family::GaloisTag> tags;
        auto tag = [&](long v) {
            auto it = tags.find(v);
            if (it == tags.end())
                it = tags.emplace(v, family::galois_group(Rat(v)).tag).first;
            return it->second;
        };
        for (;;) {
            const long m = next_row.fetch_add(1);
            if (m > last)
                return;
            ScanRow row;
            row.m = m;
            try {
                for (long n = m + 1; n <= opt.hi; ++n) {
                    if (m + n + 3 == 0)
                        continue; // same splitting field by the root inversion
                    ++row.pairs;
                    const auto ip = detail::int_params(m, n);
                    if (detail::modular_rules_out(ip.n1, ip.d1, max_degree, opt.prefilter_primes) &&
                        detail::modular_rules_out(ip.n2, ip.d2, max_degree, opt.prefilter_primes))
                        continue;
                    ++row.classified;
                    const auto r = resolvent::classify_intersection(Rat(m), Rat(n), tag(m), tag(n));
                    if (accept(r))
                        row.hits.push_back({m, n, r.dt1, r.dt2, r.degree, r.compositum});
                }
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure)
                    failure = std::current_exception();
                next_row = last + 1;
                return;
            }
            pairs += row.pairs;
            classified += row.classified;
            std::lock_guard lock(mu);
            pending.emplace(m, std::move(row));
            while (!pending.empty() && pending.begin()->first == next_commit) {
                auto node = pending.extract(pending.begin());
                if (opt.on_row && !failure)
                    opt.on_row(node.mapped());
                result.hits.insert(result.hits.end(), node.mapped().hits.begin(), node.mapped().hits.end());
                ++next_commit;
            }
        }
    };

    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    std::sort(result.hits.begin(), result.hits.end());
    result.pairs = pairs;
    result.classified = classified;
    return result;
}

inline ScanResult cubic_scan(long lo, long hi, unsigned jobs = 1)
{
    ScanOptions o;
    o.lo = lo;
    o.hi = hi;
    o.start_row = lo;
    o.jobs = jobs;
    return run_scan(ScanKind::Cubic, o);
}

inline ScanResult sextic_scan(long lo, long hi, unsigned jobs = 1)
{
    ScanOptions o;
    o.lo = lo;
    o.hi = hi;
    o.start_row = lo;
    o.jobs = jobs;
    return run_scan(ScanKind::Sextic, o);
}

} // namespace sextic::scan
