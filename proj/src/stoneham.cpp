#include "paircorr/stoneham.hpp"

#include <map>
#include <utility>

namespace paircorr {

StonehamBits stoneham_bits(unsigned bits) {
    if (bits < 8) throw InvalidParamsError("stoneham_bits needs at least 8 bits");
    const unsigned long work = static_cast<unsigned long>(bits) + 64;
    mpz_class acc = 0;
    mpz_class term, three_m = 3;
    for (unsigned long pw3 = 3; pw3 <= work; pw3 *= 3, three_m *= 3) {
        term = pow2(work - pw3) / three_m;
        acc += term;
    }
    // round to the target width; per-term floors and the dropped tail are
    // far below the 64 guard bits
    acc += pow2(63);
    acc >>= 64;
    StonehamBits out;
    out.numerator = std::move(acc);
    out.bits = bits;
    out.error_ulps = 2;
    return out;
}

std::vector<TernaryRational> z_sequence(std::uint64_t n_max) {
    std::vector<TernaryRational> zs;
    zs.reserve(n_max + 1);
    zs.push_back(TernaryRational{});  // z_0 = 0
    mpz_class c = 0;
    unsigned q = 0;
    mpz_class pow3_q = 1;
    std::uint64_t next_pow3 = 1;  // 3^0
    unsigned next_pow3_exp = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        c *= 2;
        if (n == next_pow3) {
            // r_n = 1/3^k: raise to the common denominator 3^max(q,k)
            const unsigned k = next_pow3_exp;
            if (k > q) {
                mpz_class scale;
                mpz_ui_pow_ui(scale.get_mpz_t(), 3, k - q);
                c *= scale;
                pow3_q *= scale;
                q = k;
                c += 1;
            } else {
                mpz_class add;
                mpz_ui_pow_ui(add.get_mpz_t(), 3, q - k);
                c += add;
            }
            next_pow3 *= 3;
            ++next_pow3_exp;
        }
        c %= pow3_q;  // fractional part
        // reduce: strip factors of 3
        while (q > 0 && mpz_divisible_ui_p(c.get_mpz_t(), 3)) {
            c /= 3;
            pow3_q /= 3;
            --q;
        }
        if (c == 0 && q != 0) {
            q = 0;
            pow3_q = 1;
        }
        zs.push_back(TernaryRational{c, q});
    }
    return zs;
}

ZStructureReport verify_z_structure(unsigned q) {
    if (q > 12) throw ResourceLimitError("z-structure verification capped at q = 12");
    std::uint64_t count = 1;
    for (unsigned i = 0; i <= q; ++i) count *= 3;  // 3^(q+1)

    ZStructureReport rep;
    rep.q = q;
    rep.checked = count;
    const std::vector<TernaryRational> zs = z_sequence(count - 1);

    std::map<std::pair<unsigned, mpz_class>, std::uint64_t> occur;
    for (std::uint64_t n = 0; n < count; ++n) {
        const TernaryRational& z = zs[n];
        if (z.q > q && rep.multiples_ok) {
            rep.multiples_ok = false;
            if (!rep.counterexample) rep.counterexample = n;
        }
        if (z.c != 0 && mpz_divisible_ui_p(z.c.get_mpz_t(), 3) && rep.coprime_ok) {
            rep.coprime_ok = false;
            if (!rep.counterexample) rep.counterexample = n;
        }
        ++occur[{z.q, z.c}];
    }
    rep.distinct_values = occur.size();
    for (std::uint64_t n = 0; n < count && rep.triples_ok; ++n) {
        if (occur[{zs[n].q, zs[n].c}] != 3) {
            rep.triples_ok = false;
            if (!rep.counterexample) rep.counterexample = n;
        }
    }
    return rep;
}

mpz_class extract_bits(const mpz_class& value, unsigned long low_bit, unsigned width) {
    const std::size_t limbs = mpz_size(value.get_mpz_t());
    const unsigned long base_limb = low_bit / GMP_NUMB_BITS;
    const unsigned shift = static_cast<unsigned>(low_bit % GMP_NUMB_BITS);
    const unsigned words = (width + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

    std::vector<mp_limb_t> out(words, 0);
    for (unsigned i = 0; i < words; ++i) {
        const unsigned long idx = base_limb + i;
        const mp_limb_t lo =
            idx < limbs ? mpz_getlimbn(value.get_mpz_t(), idx) : 0;
        const mp_limb_t hi =
            idx + 1 < limbs ? mpz_getlimbn(value.get_mpz_t(), idx + 1) : 0;
        mp_limb_t v = lo >> shift;
        if (shift != 0) v |= hi << (GMP_NUMB_BITS - shift);
        out[i] = v;
    }
    mpz_class r;
    mpz_import(r.get_mpz_t(), words, -1, sizeof(mp_limb_t), 0, 0, out.data());
    mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), width);
    return r;
}

PointSet stoneham_points(unsigned w, unsigned long alpha_bits, unsigned scale_bits) {
    if (w == 0 || w > 24) throw InvalidParamsError("w must lie in 1..24");
    const std::uint64_t n = 1ull << w;
    const unsigned long needed = n + scale_bits;  // shift by n-1 keeps scale_bits + 1 true bits
    if (alpha_bits == 0) alpha_bits = n + 128;
    if (alpha_bits < needed)
        throw InsufficientPrecisionError(
            "alpha_bits = " + std::to_string(alpha_bits) + " cannot give every point " +
            std::to_string(scale_bits) + " exact bits; need >= " + std::to_string(needed));

    const StonehamBits alpha = stoneham_bits(static_cast<unsigned>(alpha_bits));
    std::vector<mpz_class> pts;
    pts.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        // bits i+1 .. i+scale_bits of alpha's expansion
        pts.push_back(extract_bits(alpha.numerator, alpha_bits - i - scale_bits, scale_bits));
    }
    return PointSet(std::move(pts), scale_bits, "stoneham:w=" + std::to_string(w));
}

}  // namespace paircorr
