#include "divwin/sieve.hpp"

#include <stdexcept>
#include <vector>

namespace divwin {

int legendre(const mpz_class& a, const mpz_class& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw std::invalid_argument("legendre: p must be an odd prime");
    mpz_class e = (p - 1) / 2, r;
    mpz_powm(r.get_mpz_t(), mpz_class(a % p).get_mpz_t(), e.get_mpz_t(),
             p.get_mpz_t());
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

mpz_class count_unsolvable(unsigned long p, unsigned v, const mpz_class& u) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("count_unsolvable: p must be an odd prime >= 3");
    if (mpz_divisible_ui_p(u.get_mpz_t(), p))
        throw std::invalid_argument("count_unsolvable: u must be coprime to p");
    mpz_class pz(static_cast<unsigned long>(p));
    if (v % 2 == 0) {
        mpz_class s0 = (pz - legendre(-u, pz)) / 2;
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), pz.get_mpz_t(), v / 2);
        return scale * s0;
    }
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), pz.get_mpz_t(), (v + 1) / 2);
    return scale;
}

std::uint64_t count_unsolvable_bruteforce(unsigned long p, unsigned v,
                                          const mpz_class& u,
                                          std::uint64_t budget) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("bruteforce: p must be an odd prime >= 3");
    if (mpz_divisible_ui_p(u.get_mpz_t(), p))
        throw std::invalid_argument("bruteforce: u must be coprime to p");
    mpz_class mz;
    mpz_ui_pow_ui(mz.get_mpz_t(), p, v + 1);
    if (mz > budget)
        throw ResourceError("bruteforce: p^{v+1} = " + mz.get_str() +
                            " exceeds enumeration budget");
    std::uint64_t m = mz.get_ui();
    std::vector<bool> is_square(m, false);
    for (std::uint64_t y = 0; y < m; ++y) is_square[(y * y) % m] = true;

    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), p, v);
    mpz_class shift_z = (pv * u) % mz;
    if (shift_z < 0) shift_z += mz;
    std::uint64_t shift = shift_z.get_ui();

    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < m; ++x)
        if (!is_square[(x * x + shift) % m]) ++count;
    return count;
}

SieveSpec build_sieve_spec(const FactoredInteger& n, const mpz_class& a,
                           const mpz_class& b, std::uint64_t Q) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) throw std::invalid_argument("build_sieve_spec: gcd(a,b) must be 1");
    if (Q < 1) throw std::invalid_argument("build_sieve_spec: Q must be >= 1");

    SieveSpec spec;
    spec.Q = Q;
    mpz_class K = 4 * a * b * n.value();

    mpz_class p = 2;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p > Q) break;
        unsigned long pu = p.get_ui();
        mpz_class rest;
        unsigned v = static_cast<unsigned>(
            mpz_remove(rest.get_mpz_t(), K.get_mpz_t(), p.get_mpz_t()));
        mpz_class mod;
        mpz_ui_pow_ui(mod.get_mpz_t(), pu, v + 1);
        if (mod > Q) continue;
        // Lemma-4 parameter for x^2 - K == y^2: u = -(K / p^v) mod p
        mpz_class u = (-rest) % p;
        if (u <= 0) u += p;
        SieveModulus sm;
        sm.p = pu;
        sm.v = v;
        sm.modulus = mod.get_ui();
        sm.excluded = count_unsolvable(pu, v, u);
        spec.moduli.push_back(std::move(sm));
    }

    spec.H = 0;
    for (std::uint64_t q = 1; q <= Q; ++q) spec.H += weight_h(spec, q);
    return spec;
}

mpq_class weight_h(const SieveSpec& spec, std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("weight_h: q must be >= 1");
    mpq_class w = 1;
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        std::uint64_t comp = 1;
        while (q % p == 0) {
            q /= p;
            comp *= p;
        }
        bool found = false;
        for (const auto& sm : spec.moduli)
            if (sm.p == p && sm.modulus == comp) {
                w *= mpq_class(sm.excluded, sm.modulus - sm.excluded);
                found = true;
                break;
            }
        if (!found) return 0;
    }
    if (q > 1) {  // remaining prime to the first power
        bool found = false;
        for (const auto& sm : spec.moduli)
            if (sm.p == q && sm.modulus == q) {
                w *= mpq_class(sm.excluded, sm.modulus - sm.excluded);
                found = true;
                break;
            }
        if (!found) return 0;
    }
    w.canonicalize();
    return w;
}

mpq_class large_sieve_bound(const SieveSpec& spec, const mpq_class& N,
                            bool* vacuous) {
    if (vacuous) *vacuous = false;
    if (spec.H == 0) {
        if (vacuous) *vacuous = true;
        return 0;
    }
    mpq_class q2(spec.Q);
    return (N + q2 * q2) / spec.H;
}

FValues f_values(const FactoredInteger& n, const mpz_class& a,
                 const mpz_class& b, const mpz_class& d) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) throw std::invalid_argument("f_values: gcd(a,b) must be 1");
    if (d < 1 || !mpz_divisible_p(n.value().get_mpz_t(), d.get_mpz_t()))
        throw std::invalid_argument("f_values: d must divide n");
    mpz_class q = n.value() / d;
    return {a * q + b * d, a * q - b * d};
}

SieveWindowReport sieve_window_check(const FactoredInteger& n,
                                     const mpz_class& a, const mpz_class& b,
                                     std::uint64_t i, std::uint64_t Q,
                                     std::uint64_t budget) {
    SieveWindowReport rep;
    rep.Q = Q;
    rep.cap_elementary = i + 1;

    SieveSpec spec = build_sieve_spec(n, a, b, Q);
    rep.H = spec.H;
    rep.moduli = spec.moduli;
    rep.cap_sieve = large_sieve_bound(spec, mpq_class(i + 1), &rep.sieve_vacuous);

    // unsolvable residue sets, directly from x^2 - K mod p^{v+1}
    mpz_class K = 4 * a * b * n.value();
    std::vector<std::vector<bool>> excluded_sets;
    for (const auto& sm : spec.moduli) {
        std::uint64_t m = sm.modulus;
        std::vector<bool> is_square(m, false);
        for (std::uint64_t y = 0; y < m; ++y) is_square[(y * y) % m] = true;
        mpz_class negK = (-K) % m;
        if (negK < 0) negK += m;
        std::uint64_t shift = negK.get_ui();
        std::vector<bool> excl(m, false);
        for (std::uint64_t x = 0; x < m; ++x)
            if (!is_square[(x * x + shift) % m]) excl[x] = true;
        excluded_sets.push_back(std::move(excl));
    }

    const mpz_class an = a * n.value();
    for (const auto& d : divisors(n, budget)) {
        // d >= x0 = sqrt(an/b)  <=>  b d^2 >= a n
        mpz_class bd2 = b * d * d;
        if (bd2 < an) continue;

        // window membership: d - x0 <= sqrt(i x0 / b)
        //   <=>  b (b d^2 + a n)^2 <= a n (2 d b + i)^2
        mpz_class lhs = b * (bd2 + an) * (bd2 + an);
        mpz_class t = 2 * d * b + i;
        mpz_class rhs = an * t * t;
        if (lhs <= rhs) ++rep.count;

        FValues fv = f_values(n, a, b, d);
        for (std::size_t k = 0; k < spec.moduli.size(); ++k) {
            mpz_class r = fv.f % static_cast<unsigned long>(spec.moduli[k].modulus);
            if (r < 0) r += spec.moduli[k].modulus;
            if (excluded_sets[k][r.get_ui()]) rep.classes_avoided = false;
        }
    }
    return rep;
}

}  // namespace divwin
