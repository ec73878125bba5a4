#include "divwin/window.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace divwin {

std::uint64_t count_in_hull(const std::vector<mpz_class>& divs,
                            const mpz_class& lo, const mpz_class& hi) {
    if (hi < lo) return 0;
    auto first = std::lower_bound(divs.begin(), divs.end(), lo);
    auto last = std::upper_bound(divs.begin(), divs.end(), hi);
    return static_cast<std::uint64_t>(last - first);
}

std::uint64_t count_window(const FactoredInteger& n, const ExponentWindow& w,
                           std::uint64_t budget) {
    IntegerWindow hull = exponent_window_hull(n, w.theta, w.eta);
    return count_in_hull(divisors(n, budget), hull.lo, hull.hi);
}

std::uint64_t count_window(const FactoredInteger& n, const AbsoluteWindow& w,
                           std::uint64_t budget) {
    if (w.Y < 0 || w.X <= 0)
        throw std::invalid_argument("absolute window requires X > 0, Y >= 0");
    mpq_class hi = w.X + w.Y;
    std::uint64_t count = 0;
    for (const auto& d : divisors(n, budget))
        if (d >= w.X && d <= hi) ++count;
    return count;
}

bool reflection_check(const FactoredInteger& n, const mpq_class& X,
                      const mpq_class& Y) {
    if (!(Y > 0 && Y <= X))
        throw std::invalid_argument("reflection_check requires 0 < Y <= X");
    mpq_class XY = X + Y;
    if (XY > n.value())
        throw std::invalid_argument("reflection_check requires X + Y <= n");
    AbsoluteWindow left{X, Y};
    mpq_class rX = n.value() / XY;
    mpq_class rY = Y * n.value() / (X * XY);
    AbsoluteWindow right{rX, rY};
    return count_window(n, left) == count_window(n, right);
}

bool gap_check(const FactoredInteger& n, std::uint64_t budget) {
    auto divs = divisors(n, budget);
    for (std::size_t i = 0; i + 1 < divs.size(); ++i) {
        const mpz_class& d = divs[i];
        if (d * d < n.value()) continue;  // bound is claimed for d >= sqrt(n)
        mpz_class h = divs[i + 1] - d;
        if (!(h * n.value() > d * d)) return false;
    }
    return true;
}

ScanResult conjecture_scan(std::uint64_t n_lo, std::uint64_t n_hi,
                           double theta, double epsilon, unsigned jobs) {
    if (!(epsilon > 0 && epsilon < theta && theta < 1))
        throw std::invalid_argument("conjecture_scan requires 0 < epsilon < theta < 1");
    if (n_lo < 1) n_lo = 1;
    if (jobs == 0) jobs = 1;
    const double eta = theta - epsilon;

    std::vector<std::uint64_t> counts(n_hi - n_lo + 1, 0);
    std::vector<std::pair<std::uint64_t, std::string>> errors;
    std::mutex err_mtx;

    SmallestFactorSieve sieve(
        n_hi <= 0xffffffffull ? static_cast<std::uint32_t>(n_hi) : 0xffffffffu);

    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t n = lo; n <= hi; ++n) {
            try {
                FactoredInteger f = sieve.factor(static_cast<std::uint32_t>(n));
                counts[n - n_lo] = count_window(f, ExponentWindow{theta, eta});
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> g(err_mtx);
                errors.emplace_back(n, e.what());
            }
        }
    };

    if (jobs == 1) {
        worker(n_lo, n_hi);
    } else {
        std::vector<std::thread> threads;
        std::uint64_t total = n_hi - n_lo + 1;
        std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            std::uint64_t lo = n_lo + j * chunk;
            if (lo > n_hi) break;
            std::uint64_t hi = std::min(n_hi, lo + chunk - 1);
            threads.emplace_back(worker, lo, hi);
        }
        for (auto& t : threads) t.join();
    }

    ScanResult result;
    std::uint64_t best = 0;
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        std::uint64_t c = counts[n - n_lo];
        if (result.maxima.empty() || c > best) {
            best = c;
            result.maxima.push_back({n, c});
        }
    }
    std::sort(errors.begin(), errors.end());
    result.errors = std::move(errors);
    return result;
}

}  // namespace divwin
