#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hs {

using Int = mpz_class;
using Rat = mpq_class;

// Coefficient ring k: the integers, the rationals, or Z/n.
// Scalars are carried as normalized rationals: integral for Z, in [0,n) for Z/n.
class BaseRing {
public:
    enum class Kind { Integers, Rationals, IntegersMod };

    static BaseRing integers() { return BaseRing(Kind::Integers, 0); }
    static BaseRing rationals() { return BaseRing(Kind::Rationals, 0); }
    static BaseRing integers_mod(const Int& n);

    Kind kind() const { return kind_; }
    const Int& modulus() const { return modulus_; }
    bool is_field() const;
    bool is_finite() const { return kind_ == Kind::IntegersMod; }
    Int characteristic() const { return kind_ == Kind::IntegersMod ? modulus_ : Int(0); }

    // Canonical representative; throws DomainError when a denominator is not a unit.
    Rat normalize(const Rat& a) const;
    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }
    bool is_unit(const Rat& a) const;
    Rat inverse(const Rat& a) const;
    Rat div(const Rat& a, const Rat& b) const { return mul(a, inverse(b)); }

    // Every element, for finite rings only.
    std::vector<Rat> elements() const;
    std::string name() const;

    friend bool operator==(const BaseRing& a, const BaseRing& b) {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }

private:
    BaseRing(Kind k, const Int& n) : kind_(k), modulus_(n) {}
    Kind kind_;
    Int modulus_;
};

std::string to_string(const Rat& q);
Int binomial(long n, long k);

} // namespace hs
