#include "hopfinv/scalar.hpp"

namespace hopfinv {

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

BaseScalar BaseScalar::mod(const Int& n) {
    if (n < 2) throw BadInput("IntMod modulus must be >= 2, got " + n.get_str());
    return BaseScalar(ScalarTag::IntMod, n);
}

BaseScalar BaseScalar::prime_field(const Int& p) {
    if (!is_prime(p)) throw BadInput("Fp modulus must be prime, got " + p.get_str());
    return BaseScalar(ScalarTag::Fp, p);
}

Int BaseScalar::reduce(const Int& x) const {
    if (!has_modulus()) return x;
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t());
    return r;
}

std::string BaseScalar::to_string() const {
    switch (tag_) {
    case ScalarTag::Int: return "int";
    case ScalarTag::Rat: return "q";
    case ScalarTag::Fp: return "f" + modulus_.get_str();
    case ScalarTag::IntMod: return "z" + modulus_.get_str();
    }
    return "?";
}

BaseScalar BaseScalar::parse(const std::string& s) {
    if (s == "int" || s == "z" || s == "Z") return integers();
    if (s == "q" || s == "Q" || s == "rat") return rationals();
    if (s.size() >= 2 && (s[0] == 'f' || s[0] == 'F')) {
        try {
            return prime_field(Int(s.substr(1)));
        } catch (const std::invalid_argument&) {
            throw BadInput("cannot parse scalar '" + s + "'");
        }
    }
    if (s.size() >= 2 && (s[0] == 'z' || s[0] == 'Z')) {
        try {
            return mod(Int(s.substr(1)));
        } catch (const std::invalid_argument&) {
            throw BadInput("cannot parse scalar '" + s + "'");
        }
    }
    throw BadInput("cannot parse scalar '" + s + "' (expected int, q, f<p> or z<n>)");
}

} // namespace hopfinv
