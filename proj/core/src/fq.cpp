#include "frobwitt/fq.hpp"

#include <sstream>
#include <stdexcept>

#include "frobwitt/errors.hpp"
#include "frobwitt/util.hpp"

namespace frobwitt {

FqField::FqField(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m) {
    if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = pow_u64(p, m);
    if (q > (1u << 24)) throw std::invalid_argument("field too large for table arithmetic");
    q_ = static_cast<std::uint32_t>(q);

    if (modulus.empty()) {
        default_modulus_ = true;
        if (m == 1) {
            modulus_ = {0, 1}; // t - 0; unused in arithmetic
        } else {
            // Deterministic search: first monic irreducible in value order.
            std::vector<std::uint32_t> cand(m + 1, 0);
            cand[m] = 1;
            bool found = false;
            for (std::uint64_t tail = 0; tail < q && !found; ++tail) {
                std::uint64_t t = tail;
                for (std::uint32_t i = 0; i < m; ++i) {
                    cand[i] = static_cast<std::uint32_t>(t % p);
                    t /= p;
                }
                if (is_irreducible(cand)) {
                    modulus_ = cand;
                    found = true;
                }
            }
            if (!found) throw invariant_error("no irreducible modulus found"); // unreachable
        }
    } else {
        if (modulus.size() != m + 1) throw std::invalid_argument("modulus must have degree m");
        for (auto& c : modulus) c %= p;
        if (modulus[m] != 1) throw std::invalid_argument("modulus must be monic");
        if (m >= 2 && !is_irreducible(modulus)) throw std::invalid_argument("modulus is reducible");
        modulus_ = modulus;
    }
    build_tables();
}

// Schoolbook multiply of residue polynomials followed by reduction by the
// monic modulus; used only to bootstrap the tables.
std::uint32_t FqField::mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (m_ == 1) return static_cast<std::uint32_t>((std::uint64_t)a * b % p_);
    std::vector<std::uint32_t> da(m_), db(m_), prod(2 * m_ - 1, 0);
    std::uint32_t ta = a, tb = b;
    for (std::uint32_t i = 0; i < m_; ++i, ta /= p_, tb /= p_) {
        da[i] = ta % p_;
        db[i] = tb % p_;
    }
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(m_); --d) {
        std::uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t sub = c * modulus_[i] % p_;
            prod[d - m_ + i] = (prod[d - m_ + i] + p_ - sub) % p_;
        }
    }
    std::uint32_t v = 0;
    for (int i = static_cast<int>(m_) - 1; i >= 0; --i) v = v * p_ + prod[i];
    return v;
}

bool FqField::is_irreducible(const std::vector<std::uint32_t>& poly) const {
    // Trial division by all monic polynomials of degree 1..m/2 over F_p.
    std::uint32_t deg = static_cast<std::uint32_t>(poly.size()) - 1;
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = pow_u64(p_, d);
        for (std::uint64_t tail = 0; tail < count; ++tail) {
            std::vector<std::uint32_t> div(d + 1, 0);
            div[d] = 1;
            std::uint64_t t = tail;
            for (std::uint32_t i = 0; i < d; ++i) {
                div[i] = static_cast<std::uint32_t>(t % p_);
                t /= p_;
            }
            // Polynomial remainder of poly by div.
            std::vector<std::uint32_t> rem(poly);
            for (int k = static_cast<int>(deg); k >= static_cast<int>(d); --k) {
                std::uint32_t c = rem[k];
                if (c == 0) continue;
                for (std::uint32_t i = 0; i <= d; ++i)
                    rem[k - d + i] = (rem[k - d + i] + p_ * p_ - c * div[i] % p_) % p_;
            }
            bool zero = true;
            for (std::uint32_t i = 0; i < d; ++i)
                if (rem[i] != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

void FqField::build_tables() {
    frob_.assign(q_, 0);
    if (q_ == 2) {
        exp_ = {1};
        log_.assign(2, 0);
        log_[1] = 0;
        frob_[0] = 0;
        frob_[1] = 1;
        return;
    }
    // Find a multiplicative generator by brute force.
    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        std::uint32_t x = cand;
        std::uint32_t order = 1;
        while (x != 1) {
            x = mul_slow(x, cand);
            ++order;
            if (order > q_) throw invariant_error("generator search overflow");
        }
        if (order == q_ - 1) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw invariant_error("no multiplicative generator found");
    exp_.assign(q_ - 1, 1);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_slow(x, g);
    }
    for (std::uint32_t v = 1; v < q_; ++v)
        frob_[v] = exp_[(std::uint64_t)log_[v] * p_ % (q_ - 1)];
}

Fq FqField::zero() const { return Fq(this, 0); }
Fq FqField::one() const { return Fq(this, 1); }

Fq FqField::from_value(std::uint32_t v) const {
    if (v >= q_) throw std::invalid_argument("field element value out of range");
    return Fq(this, v);
}

Fq FqField::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Fq(this, static_cast<std::uint32_t>(r));
}

Fq FqField::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() > m_) throw std::invalid_argument("too many coefficients for field");
    std::uint32_t v = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        v = v * p_ + coeffs[i] % p_;
    return Fq(this, v);
}

Fq FqField::gen() const {
    if (m_ < 2) throw std::invalid_argument("prime field has no extension generator");
    return Fq(this, p_);
}

std::uint32_t FqField::add_v(std::uint32_t a, std::uint32_t b) const {
    if (m_ == 1) {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t v = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        v += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return v;
}

std::uint32_t FqField::neg_v(std::uint32_t a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t v = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t d = a % p_;
        v += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        a /= p_;
    }
    return v;
}

std::uint32_t FqField::sub_v(std::uint32_t a, std::uint32_t b) const { return add_v(a, neg_v(b)); }

std::uint32_t FqField::mul_v(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = (std::uint64_t)log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

std::uint32_t FqField::inv_v(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("division by zero in finite field");
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t FqField::pow_v(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[(std::uint64_t)log_[a] % (q_ - 1) * (e % (q_ - 1)) % (q_ - 1)];
}

std::string FqField::spec_string() const {
    std::ostringstream os;
    os << p_;
    if (m_ > 1) os << "^" << m_;
    if (!default_modulus_ && m_ > 1) {
        os << ":";
        for (std::uint32_t i = 0; i <= m_; ++i) {
            if (i) os << ",";
            os << modulus_[i];
        }
    }
    return os.str();
}

std::shared_ptr<const FqField> FqField::parse_spec(const std::string& spec) {
    std::string base = spec, mods;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        base = spec.substr(0, colon);
        mods = spec.substr(colon + 1);
    }
    std::uint32_t p = 0, m = 1;
    auto caret = base.find('^');
    try {
        if (caret == std::string::npos) {
            p = static_cast<std::uint32_t>(std::stoul(base));
        } else {
            p = static_cast<std::uint32_t>(std::stoul(base.substr(0, caret)));
            m = static_cast<std::uint32_t>(std::stoul(base.substr(caret + 1)));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad field spec: " + spec);
    }
    std::vector<std::uint32_t> modulus;
    if (!mods.empty()) {
        std::istringstream is(mods);
        std::string tok;
        while (std::getline(is, tok, ','))
            modulus.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    return std::make_shared<FqField>(p, m, modulus);
}

bool FqField::same_field(const FqField& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

static void check_same(const Fq& a, const Fq& b) {
    if (a.field() == b.field()) return;
    if (!a.field() || !b.field() || !a.field()->same_field(*b.field()))
        throw std::invalid_argument("mixed-field arithmetic");
}

Fq Fq::operator+(const Fq& o) const {
    check_same(*this, o);
    return Fq(field_, field_->add_v(v_, o.v_));
}
Fq Fq::operator-(const Fq& o) const {
    check_same(*this, o);
    return Fq(field_, field_->sub_v(v_, o.v_));
}
Fq Fq::operator-() const { return Fq(field_, field_->neg_v(v_)); }
Fq Fq::operator*(const Fq& o) const {
    check_same(*this, o);
    return Fq(field_, field_->mul_v(v_, o.v_));
}
Fq Fq::inv() const { return Fq(field_, field_->inv_v(v_)); }
Fq Fq::pow(std::uint64_t e) const { return Fq(field_, field_->pow_v(v_, e)); }
Fq Fq::frob() const { return Fq(field_, field_->frob_v(v_)); }

Fq Fq::frob_pow(long long k) const {
    std::uint32_t m = field_->m();
    long long r = k % static_cast<long long>(m);
    if (r < 0) r += m;
    std::uint32_t v = v_;
    for (long long i = 0; i < r; ++i) v = field_->frob_v(v);
    return Fq(field_, v);
}

bool Fq::operator==(const Fq& o) const {
    check_same(*this, o);
    return v_ == o.v_;
}

std::vector<std::uint32_t> Fq::coeffs() const {
    std::vector<std::uint32_t> c(field_->m());
    std::uint32_t v = v_;
    for (std::uint32_t i = 0; i < field_->m(); ++i, v /= field_->p()) c[i] = v % field_->p();
    return c;
}

std::string Fq::to_string() const {
    auto c = coeffs();
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    return os.str();
}

Fq Fq::from_string(const FqField* field, const std::string& s) {
    std::vector<std::uint32_t> c;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) c.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    return field->from_coeffs(c);
}

} // namespace frobwitt
