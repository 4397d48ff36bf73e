#include "cat2vect/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cat2vect {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(long long p) {
    if (!is_prime(p)) throw Error("InvalidField", "not a prime: " + std::to_string(p));
    return FieldSpec(p);
}

FieldSpec FieldSpec::rationals() { return FieldSpec(0); }

std::string FieldSpec::str() const {
    return is_rationals() ? "Q" : "Fp:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q" || s == "q") return rationals();
    if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0) {
        try {
            return prime(std::stoll(s.substr(3)));
        } catch (const Error&) {
            throw;
        } catch (...) {
            throw Error("UsageError", "bad field spec: " + s);
        }
    }
    throw Error("UsageError", "bad field spec (want Fp:<p> or Q): " + s);
}

namespace {

long long mod_reduce(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

long long mod_mul(long long a, long long b, long long p) {
    return static_cast<long long>((__int128)a * b % p);
}

long long mod_inv(long long a, long long p) {
    // extended Euclid; a nonzero mod p
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    return mod_reduce(t, p);
}

long long checked_ll(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw Error("Overflow", std::string("rational arithmetic overflow in ") + what);
    return static_cast<long long>(v);
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f, 0, 1); }
Scalar Scalar::one(const FieldSpec& f) { return Scalar(f, 1, 1); }

Scalar Scalar::of_int(const FieldSpec& f, long long n) {
    if (f.is_prime_field()) return Scalar(f, mod_reduce(n, f.characteristic()), 1);
    return Scalar(f, n, 1);
}

Scalar Scalar::fraction(const FieldSpec& f, long long num, long long den) {
    if (den == 0) throw Error("DivisionByZero", "zero denominator");
    if (f.is_prime_field()) {
        long long p = f.characteristic();
        long long d = mod_reduce(den, p);
        if (d == 0) throw Error("DivisionByZero", "denominator divisible by " + std::to_string(p));
        return Scalar(f, mod_mul(mod_reduce(num, p), mod_inv(d, p), p), 1);
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(std::abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    return Scalar(f, num, den);
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_)
        throw Error("FieldMismatch", a.field_.str() + " vs " + b.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(*this, o);
    if (field_.is_prime_field())
        return Scalar(field_, mod_reduce(num_ + o.num_, field_.characteristic()), 1);
    __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    // reduce in wide arithmetic before the range check
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;
    return fraction(field_, checked_ll(n / a, "add"), checked_ll(d / a, "add"));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(*this, o);
    if (field_.is_prime_field())
        return Scalar(field_, mod_mul(num_, o.num_, field_.characteristic()), 1);
    __int128 n = (__int128)num_ * o.num_;
    __int128 d = (__int128)den_ * o.den_;
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;
    return fraction(field_, checked_ll(n / a, "mul"), checked_ll(d / a, "mul"));
}

Scalar Scalar::operator-() const {
    if (field_.is_prime_field())
        return Scalar(field_, mod_reduce(-num_, field_.characteristic()), 1);
    return Scalar(field_, -num_, den_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
    if (field_.is_prime_field())
        return Scalar(field_, mod_inv(num_, field_.characteristic()), 1);
    return fraction(field_, den_, num_);
}

bool Scalar::operator==(const Scalar& o) const {
    return field_ == o.field_ && num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return of_int(f, std::stoll(s));
        return fraction(f, std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const Error&) {
        throw;
    } catch (...) {
        throw Error("UsageError", "bad scalar literal: " + s);
    }
}

// ---------------------------------------------------------------------------
// polynomials

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r = a.size() >= b.size() ? a : b;
    const Poly& s = a.size() >= b.size() ? b : a;
    for (size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
    return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly nb = b;
    for (auto& x : nb) x = -x;
    return poly_add(a, nb);
}

Poly poly_scale(const Scalar& c, const Poly& f) {
    if (c.is_zero()) return {};
    Poly r = f;
    for (auto& x : r) x = x * c;
    return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Scalar::zero(a[0].field()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return poly_trim(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw Error("DivisionByZero", "polynomial division by zero");
    Poly rem = a;
    if (rem.size() < b.size()) return {Poly{}, rem};
    Poly quot(rem.size() - b.size() + 1, Scalar::zero(b[0].field()));
    Scalar lead_inv = b.back().inverse();
    for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        if (rem[i].is_zero()) continue;
        Scalar c = rem[i] * lead_inv;
        int shift = i - (static_cast<int>(b.size()) - 1);
        quot[shift] = c;
        for (size_t j = 0; j < b.size(); ++j)
            rem[shift + j] = rem[shift + j] - c * b[j];
    }
    return {poly_trim(std::move(quot)), poly_trim(std::move(rem))};
}

Poly poly_monic(const Poly& f) {
    if (f.empty()) return f;
    return poly_scale(f.back().inverse(), f);
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

Poly poly_derivative(const Poly& f) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1, Scalar::zero(f[0].field()));
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * Scalar::of_int(f[i].field(), (long long)i);
    return poly_trim(std::move(r));
}

Scalar poly_eval(const Poly& f, const Scalar& x) {
    Scalar acc = Scalar::zero(x.field());
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) acc = acc * x + f[i];
    return acc;
}

std::string poly_str(const Poly& f, const std::string& var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (f[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !f[i].is_one()) os << f[i].str();
        if (i > 0) {
            if (!f[i].is_one()) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

Poly poly_powmod(Poly base, long long e, const Poly& mod, const FieldSpec& f) {
    Poly result{Scalar::one(f)};
    base = poly_divmod(base, mod).second;
    while (e > 0) {
        if (e & 1) result = poly_divmod(poly_mul(result, base), mod).second;
        base = poly_divmod(poly_mul(base, base), mod).second;
        e >>= 1;
    }
    return result;
}

// Berlekamp split of a monic squarefree polynomial into monic irreducibles.
void berlekamp_squarefree(const Poly& w, std::vector<Poly>& out) {
    const FieldSpec f = w[0].field();
    const long long p = f.characteristic();
    const int n = poly_deg(w);
    if (n <= 1) {
        out.push_back(w);
        return;
    }
    // Q[i] = x^(i*p) mod w, as rows; nullspace of (Q - I) generates the
    // Berlekamp subalgebra {v : v^p = v mod w}.
    std::vector<Poly> xp_pow(n);
    Poly xp = poly_powmod(Poly{Scalar::zero(f), Scalar::one(f)}, p, w, f);
    xp_pow[0] = Poly{Scalar::one(f)};
    for (int i = 1; i < n; ++i) xp_pow[i] = poly_divmod(poly_mul(xp_pow[i - 1], xp), w).second;

    // Gaussian elimination on (Q - I)^T to get nullspace vectors.
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(f)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Scalar v = j < static_cast<int>(xp_pow[i].size()) ? xp_pow[i][j] : Scalar::zero(f);
            if (i == j) v = v - Scalar::one(f);
            m[j][i] = v;  // transpose: columns are basis images
        }
    }
    // row reduce, track pivots
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int sel = -1;
        for (int r = row; r < n; ++r)
            if (!m[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        Scalar inv = m[row][col].inverse();
        for (int c = 0; c < n; ++c) m[row][c] = m[row][c] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Scalar c0 = m[r][col];
            for (int c = 0; c < n; ++c) m[r][c] = m[r][c] - c0 * m[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<Poly> basis;  // nullspace vectors as polynomials
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Poly v(n, Scalar::zero(f));
        v[free_col] = Scalar::one(f);
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -m[r][free_col];
        basis.push_back(poly_trim(std::move(v)));
    }

    if (basis.size() <= 1) {  // irreducible (the constants are always present)
        out.push_back(w);
        return;
    }
    for (const Poly& v : basis) {
        if (poly_deg(v) < 1) continue;  // skip the constant vector
        // gcd(w, v - c) over all c splits w into at least two parts
        std::vector<Poly> parts;
        for (long long c = 0; c < p; ++c) {
            Poly shifted = poly_sub(v, Poly{Scalar::of_int(f, c)});
            Poly g = poly_gcd(w, shifted);
            if (poly_deg(g) >= 1 && poly_deg(g) < n) parts.push_back(g);
        }
        if (!parts.empty()) {
            Poly rest = w;
            for (const Poly& g : parts) {
                berlekamp_squarefree(g, out);
                rest = poly_divmod(rest, g).first;
            }
            if (poly_deg(rest) >= 1) berlekamp_squarefree(rest, out);
            return;
        }
    }
    out.push_back(w);  // unreachable for squarefree input
}

void factor_rec(Poly f, std::vector<PolyFactor>& out) {
    const FieldSpec field = f[0].field();
    const long long p = field.characteristic();
    if (poly_deg(f) < 1) return;
    Poly fp = poly_derivative(f);
    if (fp.empty()) {
        // f = h(x^p) = h(x)^p since Frobenius fixes F_p coefficients
        Poly h((poly_deg(f) / p) + 1, Scalar::zero(field));
        for (size_t i = 0; i < f.size(); ++i) {
            if (f[i].is_zero()) continue;
            h[i / p] = f[i];
        }
        std::vector<PolyFactor> sub;
        factor_rec(poly_trim(std::move(h)), sub);
        for (auto& pf : sub) {
            pf.multiplicity *= static_cast<int>(p);
            out.push_back(pf);
        }
        return;
    }
    Poly g = poly_gcd(f, fp);
    Poly w = poly_divmod(f, g).first;  // squarefree part
    std::vector<Poly> irr;
    berlekamp_squarefree(poly_monic(w), irr);
    for (const Poly& q : irr) {
        int mult = 0;
        while (true) {
            auto [quo, rem] = poly_divmod(f, q);
            if (!rem.empty()) break;
            f = quo;
            ++mult;
        }
        out.push_back({q, mult});
    }
    factor_rec(poly_monic(f), out);  // leftover p-th power part
}

}  // namespace

PolyFactorization poly_factor(const Poly& input) {
    Poly f = poly_trim(input);
    if (f.empty()) throw Error("ZeroPolynomial", "cannot factor the zero polynomial");
    if (!f[0].field().is_prime_field())
        throw Error("FieldMismatch", "polynomial factorization needs a prime field");
    PolyFactorization result{f.back(), {}};
    factor_rec(poly_monic(f), result.factors);
    std::sort(result.factors.begin(), result.factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.size() != b.factor.size()) return a.factor.size() < b.factor.size();
        for (size_t i = a.factor.size(); i-- > 0;) {
            if (a.factor[i].num() != b.factor[i].num()) return a.factor[i].num() < b.factor[i].num();
        }
        return a.multiplicity < b.multiplicity;
    });
    return result;
}

}  // namespace cat2vect
