#include "hs/base_ring.hpp"

#include "hs/error.hpp"

namespace hs {

BaseRing BaseRing::integers_mod(const Int& n) {
    if (n < 2)
        throw DomainError("modulus must be at least 2");
    return BaseRing(Kind::IntegersMod, n);
}

bool BaseRing::is_field() const {
    if (kind_ == Kind::Rationals)
        return true;
    if (kind_ == Kind::IntegersMod)
        return mpz_probab_prime_p(modulus_.get_mpz_t(), 30) > 0;
    return false;
}

Rat BaseRing::normalize(const Rat& a) const {
    switch (kind_) {
    case Kind::Rationals:
        return a;
    case Kind::Integers:
        if (a.get_den() != 1)
            throw DomainError("non-integral value " + to_string(a) + " over Z");
        return a;
    case Kind::IntegersMod: {
        Int num = a.get_num() % modulus_;
        if (num < 0)
            num += modulus_;
        if (a.get_den() == 1)
            return Rat(num);
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), a.get_den().get_mpz_t(), modulus_.get_mpz_t()) == 0)
            throw DomainError("denominator " + a.get_den().get_str() + " is not a unit in " + name());
        Int r = (num * inv) % modulus_;
        return Rat(r);
    }
    }
    return a;
}

bool BaseRing::is_unit(const Rat& a) const {
    switch (kind_) {
    case Kind::Rationals:
        return a != 0;
    case Kind::Integers:
        return a == 1 || a == -1;
    case Kind::IntegersMod: {
        Int g;
        Int n = normalize(a).get_num();
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), modulus_.get_mpz_t());
        return g == 1;
    }
    }
    return false;
}

Rat BaseRing::inverse(const Rat& a) const {
    if (!is_unit(a))
        throw DomainError("division by non-unit " + to_string(a) + " in " + name());
    if (kind_ == Kind::IntegersMod) {
        Int inv;
        Int n = normalize(a).get_num();
        mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), modulus_.get_mpz_t());
        return Rat(inv);
    }
    return Rat(1) / a;
}

std::vector<Rat> BaseRing::elements() const {
    if (kind_ != Kind::IntegersMod)
        throw DomainError("element enumeration needs a finite base ring");
    std::vector<Rat> out;
    for (Int i = 0; i < modulus_; ++i)
        out.emplace_back(i);
    return out;
}

std::string BaseRing::name() const {
    switch (kind_) {
    case Kind::Integers:
        return "Z";
    case Kind::Rationals:
        return "Q";
    case Kind::IntegersMod:
        return is_field() ? "F" + modulus_.get_str() : "Z/" + modulus_.get_str();
    }
    return "?";
}

std::string to_string(const Rat& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace hs
