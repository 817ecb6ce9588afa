#pragma once

#include <cstdint>
#include <vector>

#include "paircorr/fixed_point.hpp"

namespace paircorr {

// Additive energy E(A) = #{(a,b,c,d) in A^4 : a + b = c + d} of a set of
// N distinct integers, with the normalized ratio E / N^3.
struct EnergyReport {
    std::uint64_t n = 0;
    mpz_class energy;
    mpq_class ratio;
};

// E = sum over attained pair sums s of r(s)^2 where r(s) counts ordered
// pairs; O(N^2) time via an exact sum table. Duplicates are rejected.
EnergyReport additive_energy(const std::vector<mpz_class>& a);

enum class EnergyFamily { range, powers_of_b, random_subset };

struct EnergyFamilyParams {
    std::uint64_t base = 2;   // powers_of_b
    std::uint64_t seed = 1;   // random_subset (N distinct draws from 1..N^3)
};

std::vector<EnergyReport> energy_profile(EnergyFamily family,
                                         const std::vector<std::uint64_t>& n_list,
                                         const EnergyFamilyParams& params = {});

// The set an energy_profile entry is computed from (exposed for tests/CLI).
std::vector<mpz_class> energy_family_set(EnergyFamily family, std::uint64_t n,
                                         const EnergyFamilyParams& params = {});

}  // namespace paircorr
