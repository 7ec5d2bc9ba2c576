#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace frobwitt {

class Fq;

/// The finite field F_{p^m}, realized as F_p[t]/(modulus) with a fixed monic
/// irreducible modulus of degree m.  Elements are encoded as integers in
/// [0, p^m): the base-p digits are the residue-polynomial coefficients,
/// little-endian in the residue class of t.
///
/// Construction validates primality of p and irreducibility of the modulus.
/// All arithmetic below runs off exp/log tables built once here, so fields
/// are meant to be created once and shared (FqField is immutable after
/// construction and safe to use from many threads).
class FqField {
  public:
    /// modulus: little-endian coefficients, length m+1, monic.  Empty means
    /// "use the deterministic default" (first irreducible in lex order).
    FqField(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus = {});

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fq zero() const;
    Fq one() const;
    Fq from_value(std::uint32_t v) const;
    /// Element from integer residue (reduces mod p, embeds via prime field).
    Fq from_int(long long n) const;
    /// Element from little-endian coefficient list (values reduced mod p).
    Fq from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    /// Residue class of t itself (only meaningful for m >= 2).
    Fq gen() const;

    std::uint32_t add_v(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_v(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_v(std::uint32_t a) const;
    std::uint32_t mul_v(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_v(std::uint32_t a) const;
    std::uint32_t pow_v(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t frob_v(std::uint32_t a) const { return frob_[a]; }

    /// "p^m" or "p^m:c0,c1,...,cm" when the modulus is non-default.
    std::string spec_string() const;
    /// Parse "p", "p^m" or "p^m:c0,...,cm".
    static std::shared_ptr<const FqField> parse_spec(const std::string& spec);

    bool same_field(const FqField& other) const;

  private:
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    bool is_irreducible(const std::vector<std::uint32_t>& poly) const;
    void build_tables();

    std::uint32_t p_, m_, q_;
    std::vector<std::uint32_t> modulus_;
    bool default_modulus_ = false;
    std::vector<std::uint32_t> exp_, log_, frob_;
};

/// An element of F_{p^m}.  Carries a pointer to its field; cross-field
/// arithmetic throws.
class Fq {
  public:
    Fq() : field_(nullptr), v_(0) {}
    Fq(const FqField* field, std::uint32_t v) : field_(field), v_(v) {}

    const FqField* field() const { return field_; }
    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator-() const;
    Fq operator*(const Fq& o) const;
    Fq inv() const;
    Fq pow(std::uint64_t e) const;
    /// x |-> x^p (the q-Frobenius generator on this field).
    Fq frob() const;
    /// x |-> x^{p^k}, k may be negative (uses x^{p^m} = x).
    Fq frob_pow(long long k) const;

    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }

    /// Little-endian coefficients of the residue polynomial.
    std::vector<std::uint32_t> coeffs() const;
    /// Comma-joined little-endian coefficients, e.g. "2" or "1,2".
    std::string to_string() const;
    static Fq from_string(const FqField* field, const std::string& s);

  private:
    const FqField* field_;
    std::uint32_t v_;
};

} // namespace frobwitt
