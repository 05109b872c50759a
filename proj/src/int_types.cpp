#include "nctori/int_types.hpp"

#include <stdexcept>

namespace nctori {

Int div_round(const Int &a, const Int &b) {
    if (b == 0) throw std::invalid_argument("div_round: division by zero");
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // r has the sign of b; shift q by one when |r| > |b|/2
    Int two_r = 2 * r;
    if (abs(two_r) > abs(Int(b))) q += 1;
    return q;
}

Int div_floor(const Int &a, const Int &b) {
    if (b == 0) throw std::invalid_argument("div_floor: division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Rat make_rat(const Int &num, const Int &den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat mod2(const Rat &r) {
    // r - 2*floor(r/2)
    Rat half = r / 2;
    Int fl = div_floor(half.get_num(), half.get_den());
    Rat out = r - Rat(2) * Rat(fl);
    out.canonicalize();
    return out;
}

std::string to_string(const Int &a) { return a.get_str(); }

std::string to_string(const Rat &r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int parse_int(const std::string &s) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_int: bad integer literal '" + s + "'");
    return v;
}

Rat parse_rat(const std::string &s) {
    Rat v;
    if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational literal '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    v.canonicalize();
    return v;
}

} // namespace nctori
