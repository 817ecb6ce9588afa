#include "paircorr/energy.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace paircorr {

EnergyReport additive_energy(const std::vector<mpz_class>& a) {
    if (a.empty()) throw InvalidSetError("additive energy of an empty set");
    {
        std::vector<mpz_class> sorted(a);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                throw InvalidSetError("additive energy requires distinct elements");
    }
    const std::size_t n = a.size();
    std::map<mpz_class, std::uint64_t> sums;
    mpz_class s;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            s = a[i] + a[j];
            ++sums[s];
        }
    mpz_class energy = 0;
    for (const auto& [sum, r] : sums) energy += mpz_class(r) * static_cast<unsigned long>(r);

    EnergyReport rep;
    rep.n = n;
    rep.energy = energy;
    mpz_class n3 = mpz_class(static_cast<unsigned long>(n));
    n3 = n3 * n3 * n3;
    rep.ratio = mpq_class(energy, n3);
    rep.ratio.canonicalize();
    return rep;
}

std::vector<mpz_class> energy_family_set(EnergyFamily family, std::uint64_t n,
                                         const EnergyFamilyParams& params) {
    if (n == 0) throw InvalidParamsError("family size must be positive");
    std::vector<mpz_class> a;
    a.reserve(n);
    switch (family) {
        case EnergyFamily::range:
            for (std::uint64_t i = 1; i <= n; ++i)
                a.emplace_back(static_cast<unsigned long>(i));
            break;
        case EnergyFamily::powers_of_b: {
            if (params.base < 2) throw InvalidParamsError("power base must be >= 2");
            mpz_class p = 1;
            for (std::uint64_t i = 0; i < n; ++i) {
                a.push_back(p);
                p *= static_cast<unsigned long>(params.base);
            }
            break;
        }
        case EnergyFamily::random_subset: {
            // N distinct uniform draws from {1..N^3}
            mpz_class hi = mpz_class(static_cast<unsigned long>(n));
            hi = hi * hi * hi;
            std::set<mpz_class> seen;
            gmp_randclass rng(gmp_randinit_default);
            rng.seed(static_cast<unsigned long>(params.seed));
            while (seen.size() < n) {
                mpz_class v = rng.get_z_range(hi) + 1;
                seen.insert(v);
            }
            a.assign(seen.begin(), seen.end());
            break;
        }
    }
    return a;
}

std::vector<EnergyReport> energy_profile(EnergyFamily family,
                                         const std::vector<std::uint64_t>& n_list,
                                         const EnergyFamilyParams& params) {
    std::vector<EnergyReport> out;
    out.reserve(n_list.size());
    for (std::uint64_t n : n_list)
        out.push_back(additive_energy(energy_family_set(family, n, params)));
    return out;
}

}  // namespace paircorr
