#include "cremona/cyclotomic.hpp"

#include "cremona/errors.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

namespace cremona {

namespace {

constexpr std::uint64_t kMemoLimit = 20'000;

// Phi_r for squarefree r > 1 as the truncated power series
// prod_{d | r} (1 - X^d)^{mu(r/d)} mod X^{phi(r)+1}. The product is a
// polynomial of degree phi(r) (the signs cancel since sum mu = 0), so the
// truncation is exact. Division by (1 - X^d) is a strided prefix sum.
IntegerPolynomial squarefree_cyclotomic(std::uint64_t r)
{
    if (r == 1)
        return IntegerPolynomial{-1, 1};
    const std::uint64_t degree = euler_phi(r);
    const std::size_t len = degree + 1;
    std::vector<mpz_class> series(len);
    series[0] = 1;

    std::vector<std::uint64_t> multiply, divide;
    for (std::uint64_t d : divisors(r)) {
        const int mu = moebius(r / d);
        if (mu > 0)
            multiply.push_back(d);
        else if (mu < 0)
            divide.push_back(d);
    }
    for (std::uint64_t d : multiply) {
        for (std::size_t i = len; i-- > d;)
            series[i] -= series[i - d];
    }
    for (std::uint64_t d : divide) {
        for (std::size_t i = d; i < len; ++i)
            series[i] += series[i - d];
    }

    IntegerPolynomial poly(std::move(series));
    if (poly.degree() != static_cast<int>(degree) || !poly.is_monic() || poly.coefficient(0) != 1)
        throw VerificationFailure("cyclotomic construction failed for n = " + std::to_string(r));
    const auto& c = poly.coefficients();
    if (!std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(len / 2), c.rbegin()))
        throw VerificationFailure("cyclotomic polynomial not palindromic for n = " + std::to_string(r));
    return poly;
}

std::shared_ptr<const IntegerPolynomial> memoized_squarefree(std::uint64_t r)
{
    static std::mutex mutex;
    static std::map<std::uint64_t, std::shared_ptr<const IntegerPolynomial>> cache;
    if (r <= kMemoLimit) {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(r); it != cache.end())
            return it->second;
    }
    auto poly = std::make_shared<const IntegerPolynomial>(squarefree_cyclotomic(r));
    if (r <= kMemoLimit) {
        std::lock_guard lock(mutex);
        cache.emplace(r, poly);
    }
    return poly;
}

std::uint64_t radical(std::uint64_t n)
{
    std::uint64_t r = 1;
    for (const auto& pp : factorize(n))
        r *= pp.prime;
    return r;
}

} // namespace

IntegerPolynomial cyclotomic_poly(std::uint64_t n)
{
    if (n == 0 || n > kMaxCyclotomicIndex)
        throw DomainError("cyclotomic index " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxCyclotomicIndex) + "]");
    // Phi_n(X) = Phi_rad(n)(X^{n / rad(n)})
    const std::uint64_t r = radical(n);
    const auto base = memoized_squarefree(r);
    return n == r ? *base : base->substitute_power(n / r);
}

std::uint64_t root_multiplicity(const ModularPolynomial& pbar, std::uint64_t eps)
{
    if (pbar.is_zero())
        throw DomainError("root multiplicity is undefined for the zero polynomial");
    std::uint64_t count = 0;
    ModularPolynomial current = pbar;
    while (current.degree() > 0) {
        std::uint64_t remainder = 0;
        ModularPolynomial quotient = current.divide_linear(eps, remainder);
        if (remainder != 0)
            break;
        current = std::move(quotient);
        ++count;
    }
    return count;
}

bool is_t_times_p_power(std::uint64_t n, std::uint64_t t, std::uint64_t p)
{
    if (t == 0 || n % t != 0)
        return false;
    std::uint64_t rest = n / t;
    while (rest % p == 0)
        rest /= p;
    return rest == 1;
}

std::uint64_t order_t_multiplicity(std::uint64_t n, const PrimeModulus& p, std::uint64_t t)
{
    const auto residues = residues_of_order(t, p);
    std::uint64_t core = n;
    std::uint64_t p_part = 1;
    while (core % p.value() == 0) {
        core /= p.value();
        p_part *= p.value();
    }
    const ModularPolynomial reduced = reduce_mod(cyclotomic_poly(core), p);
    const std::uint64_t scale = euler_phi(p_part);

    std::uint64_t common = root_multiplicity(reduced, residues.front());
    for (std::size_t i = 1; i < residues.size(); ++i) {
        const std::uint64_t m = root_multiplicity(reduced, residues[i]);
        if (m != common)
            throw VerificationFailure("order-" + std::to_string(t) + " residues " +
                                      std::to_string(residues.front()) + " and " +
                                      std::to_string(residues[i]) + " have multiplicities " +
                                      std::to_string(common) + " and " + std::to_string(m) +
                                      " in Phi_" + std::to_string(n) + " mod " +
                                      std::to_string(p.value()));
    }
    return common * scale;
}

namespace {

std::vector<LemmaCounterexample> sweep_prime(std::uint64_t n_max, const PrimeModulus& p,
                                             std::uint64_t& triples, std::uint64_t& identities,
                                             std::uint64_t& root_counts)
{
    std::vector<LemmaCounterexample> bad;
    const std::uint64_t pv = p.value();
    const auto orders = divisors(pv - 1);

    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const ModularPolynomial reduced = reduce_mod(cyclotomic_poly(n), p);
        std::uint64_t roots_with_multiplicity = 0;

        for (std::uint64_t t : orders) {
            ++triples;
            const auto residues = residues_of_order(t, p);
            std::vector<std::uint64_t> mults;
            mults.reserve(residues.size());
            for (std::uint64_t eps : residues)
                mults.push_back(root_multiplicity(reduced, eps));
            roots_with_multiplicity +=
                std::accumulate(mults.begin(), mults.end(), std::uint64_t{0});

            const bool uniform = std::all_of(mults.begin(), mults.end(),
                                             [&](std::uint64_t m) { return m == mults.front(); });
            if (!uniform)
                bad.push_back({n, pv, t, "uniformity",
                               "order-" + std::to_string(t) + " residues have differing multiplicities"});

            const bool positive = mults.front() > 0;
            const bool expected = is_t_times_p_power(n, t, pv);
            if (positive != expected)
                bad.push_back({n, pv, t, "positivity",
                               "multiplicity " + std::to_string(mults.front()) +
                                   (expected ? " but n = t p^f" : " but n != t p^f")});

            try {
                const std::uint64_t stripped = order_t_multiplicity(n, p, t);
                if (uniform && stripped != mults.front())
                    bad.push_back({n, pv, t, "stripping",
                                   "stripped " + std::to_string(stripped) + " vs direct " +
                                       std::to_string(mults.front())});
            } catch (const VerificationFailure& e) {
                bad.push_back({n, pv, t, "stripping", e.what()});
            }
        }

        if (n % pv == 0)
            continue;

        ++root_counts;
        const std::uint64_t expected_roots = (pv - 1) % n == 0 ? euler_phi(n) : 0;
        if (roots_with_multiplicity != expected_roots)
            bad.push_back({n, pv, 0, "root-count",
                           std::to_string(roots_with_multiplicity) + " roots, expected " +
                               std::to_string(expected_roots)});

        std::uint64_t q = 1;
        for (unsigned f = 1; f <= 2; ++f) {
            q *= pv;
            if (n * q > kMaxCyclotomicIndex)
                break;
            ++identities;
            const ModularPolynomial lifted = reduce_mod(cyclotomic_poly(n * q), p);
            if (lifted != pow(reduced, euler_phi(q)))
                bad.push_back({n, pv, 0, "identity",
                               "Phi_" + std::to_string(n * q) + " != Phi_" + std::to_string(n) +
                                   "^" + std::to_string(euler_phi(q)) + " mod " + std::to_string(pv)});
        }
    }
    return bad;
}

} // namespace

LemmaReport verify_lemma_range(std::uint64_t n_max, const std::vector<PrimeModulus>& primes)
{
    LemmaReport report;
    report.n_max = n_max;
    std::vector<PrimeModulus> sorted = primes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& p : sorted)
        report.primes.push_back(p.value());

    struct Partial {
        std::vector<LemmaCounterexample> bad;
        std::uint64_t triples = 0, identities = 0, root_counts = 0;
    };
    std::vector<std::future<Partial>> jobs;
    jobs.reserve(sorted.size());
    for (const auto& p : sorted) {
        jobs.push_back(std::async(std::launch::async, [n_max, p] {
            Partial part;
            part.bad = sweep_prime(n_max, p, part.triples, part.identities, part.root_counts);
            return part;
        }));
    }
    for (auto& job : jobs) {
        Partial part = job.get();
        report.triples_checked += part.triples;
        report.identity_checks += part.identities;
        report.root_count_checks += part.root_counts;
        report.counterexamples.insert(report.counterexamples.end(), part.bad.begin(), part.bad.end());
    }
    std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(),
                     [](const LemmaCounterexample& a, const LemmaCounterexample& b) {
                         return std::tie(a.n, a.p, a.t) < std::tie(b.n, b.p, b.t);
                     });
    return report;
}

} // namespace cremona
