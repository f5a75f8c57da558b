#ifndef FG_FIELD_HPP
#define FG_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient field: the rationals, or Z/p for a prime p < 2^31.
enum class FieldKind { rationals, prime };

struct Field {
    FieldKind kind = FieldKind::rationals;
    long p = 0;

    static Field Q() { return Field{FieldKind::rationals, 0}; }
    static Field Fp(long p) {
        if (p < 2 || p >= (1L << 31)) throw error("field characteristic out of range");
        return Field{FieldKind::prime, p};
    }
    bool operator==(const Field&) const = default;
};

// A single exact scalar.  For F_p the value is kept as an integer residue in
// [0, p) with denominator 1; for Q it is a reduced fraction with positive
// denominator (mpq_class canonicalization guarantees both).
struct Coeff {
    mpq_class v;

    Coeff() : v(0) {}
    explicit Coeff(mpq_class x) : v(std::move(x)) { v.canonicalize(); }
    explicit Coeff(long n) : v(n) {}

    bool is_zero() const { return v == 0; }
    bool operator==(const Coeff& o) const { return v == o.v; }
};

inline Coeff fld_normalize(const Field& f, Coeff a) {
    if (f.kind == FieldKind::prime) {
        if (a.v.get_den() != 1) throw error("non-integral residue in prime field");
        mpz_class r = a.v.get_num() % f.p;
        if (r < 0) r += f.p;
        return Coeff(mpq_class(r));
    }
    return a;
}

inline Coeff fld_add(const Field& f, const Coeff& a, const Coeff& b) {
    return fld_normalize(f, Coeff(a.v + b.v));
}
inline Coeff fld_sub(const Field& f, const Coeff& a, const Coeff& b) {
    return fld_normalize(f, Coeff(a.v - b.v));
}
inline Coeff fld_mul(const Field& f, const Coeff& a, const Coeff& b) {
    return fld_normalize(f, Coeff(a.v * b.v));
}
inline Coeff fld_neg(const Field& f, const Coeff& a) {
    return fld_normalize(f, Coeff(-a.v));
}

inline Coeff fld_inv(const Field& f, const Coeff& a) {
    if (a.is_zero()) throw error("division by zero");
    if (f.kind == FieldKind::rationals) return Coeff(1 / a.v);
    mpz_class inv;
    mpz_class p(f.p);
    if (mpz_invert(inv.get_mpz_t(), a.v.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
        throw error("residue not invertible (characteristic not prime?)");
    return fld_normalize(f, Coeff(mpq_class(inv)));
}

inline Coeff fld_div(const Field& f, const Coeff& a, const Coeff& b) {
    return fld_mul(f, a, fld_inv(f, b));
}

inline Coeff fld_from_string(const Field& f, const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return fld_normalize(f, Coeff(q));
}

inline std::string coeff_str(const Coeff& a) { return a.v.get_str(); }

}  // namespace fg

#endif
