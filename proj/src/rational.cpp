#include "vcausal/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace vcausal {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal literal: shift the point out
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        mpz_class num(digits, 10);
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_approximate(double x, std::uint64_t max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
    bool neg = x < 0;
    double v = neg ? -x : x;
    // continued fraction convergents p/q with q <= max_den
    std::uint64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e18) break;
        auto a = static_cast<std::uint64_t>(fl);
        if (q1 != 0 && a > (max_den - q0) / q1) break;
        std::uint64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    Rat best(static_cast<unsigned long>(p1), static_cast<unsigned long>(q1 ? q1 : 1));
    best.canonicalize();
    // compare the last two convergents, keep the closer one
    if (q0 != 0) {
        Rat alt(static_cast<unsigned long>(p0), static_cast<unsigned long>(q0));
        alt.canonicalize();
        if (std::abs(alt.get_d() - v) < std::abs(best.get_d() - v)) best = alt;
    }
    return neg ? Rat(-best) : best;
}

namespace {

mpz_class row_scale(const RatVec& row, mpz_class& gcd_num) {
    mpz_class lcm_den = 1;
    gcd_num = 0;
    for (const Rat& v : row) {
        if (v == 0) continue;
        mpz_class den = v.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    for (const Rat& v : row) {
        if (v == 0) continue;
        mpz_class scaled = v.get_num() * (lcm_den / v.get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
    return lcm_den;
}

}  // namespace

void normalize_row(RatVec& row) {
    mpz_class gcd_num;
    mpz_class lcm_den = row_scale(row, gcd_num);
    if (gcd_num == 0) return;
    Rat factor(lcm_den, gcd_num);
    factor.canonicalize();
    for (Rat& v : row) {
        v *= factor;
        v.canonicalize();
    }
}

void normalize_row_with_rhs(RatVec& row, Rat& rhs, bool canonical_sign) {
    RatVec all = row;
    all.push_back(rhs);
    mpz_class gcd_num;
    mpz_class lcm_den = row_scale(all, gcd_num);
    if (gcd_num == 0) return;
    Rat factor(lcm_den, gcd_num);
    factor.canonicalize();
    if (canonical_sign) {
        for (const Rat& v : row) {
            if (v == 0) continue;
            if (v * factor < 0) factor = -factor;
            break;
        }
    }
    for (Rat& v : row) {
        v *= factor;
        v.canonicalize();
    }
    rhs *= factor;
    rhs.canonicalize();
}

}  // namespace vcausal
