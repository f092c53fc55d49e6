#ifndef HOPFINV_SCALAR_HPP
#define HOPFINV_SCALAR_HPP

#include <gmpxx.h>
#include <string>

#include "hopfinv/errors.hpp"

namespace hopfinv {

using Int = mpz_class;
using Rat = mpq_class;

enum class ScalarTag { Int, Rat, IntMod, Fp };

/// Base ring of a computation: Z, Q, Z/n, or F_p.
/// Fp(p) requires p prime; IntMod(n) requires n >= 2.
class BaseScalar {
public:
    static BaseScalar integers() { return BaseScalar(ScalarTag::Int, 0); }
    static BaseScalar rationals() { return BaseScalar(ScalarTag::Rat, 0); }
    static BaseScalar mod(const Int& n);
    static BaseScalar prime_field(const Int& p);

    ScalarTag tag() const { return tag_; }
    /// The modulus; only meaningful for IntMod and Fp.
    const Int& modulus() const { return modulus_; }

    bool is_field() const { return tag_ == ScalarTag::Rat || tag_ == ScalarTag::Fp; }
    bool has_modulus() const { return tag_ == ScalarTag::IntMod || tag_ == ScalarTag::Fp; }

    /// Canonical representative of x in the ring: in [0, n) for modular
    /// rings, x itself otherwise.
    Int reduce(const Int& x) const;

    bool operator==(const BaseScalar& o) const = default;

    std::string to_string() const;
    /// Parses the CLI spelling: "int", "q", "f<p>", "z<n>".
    static BaseScalar parse(const std::string& s);

private:
    BaseScalar(ScalarTag tag, Int modulus) : tag_(tag), modulus_(std::move(modulus)) {}
    ScalarTag tag_;
    Int modulus_;
};

bool is_prime(const Int& n);

} // namespace hopfinv

#endif
