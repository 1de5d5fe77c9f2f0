#include "polyauto/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polyauto {

namespace {

const mpz_class kZero = 0;

} // namespace

RingElem::RingElem(long n) {
    if (n != 0) c_.push_back(mpz_class(n));
}

RingElem::RingElem(const mpz_class& n) {
    if (n != 0) c_.push_back(n);
}

RingElem::RingElem(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    trim();
}

RingElem RingElem::t(unsigned k) {
    return term(1, k);
}

RingElem RingElem::term(const mpz_class& c, unsigned k) {
    RingElem r;
    if (c != 0) {
        r.c_.assign(k + 1, mpz_class(0));
        r.c_[k] = c;
    }
    return r;
}

void RingElem::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool RingElem::is_one() const {
    return c_.size() == 1 && c_[0] == 1;
}

bool RingElem::is_unit() const {
    return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1);
}

const mpz_class& RingElem::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const mpz_class& RingElem::lc() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero");
    return c_.back();
}

int RingElem::sign() const {
    if (c_.empty()) return 0;
    return sgn(c_.back());
}

RingElem RingElem::operator-() const {
    RingElem r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    if (a.is_zero() || b.is_zero()) return RingElem();
    RingElem r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

RingElem& RingElem::operator*=(const RingElem& o) {
    *this = *this * o;
    return *this;
}

RingElem RingElem::pow(unsigned k) const {
    RingElem r(1);
    RingElem base(*this);
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

mpz_class RingElem::int_content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

RingElem RingElem::primitive_part() const {
    if (is_zero()) return RingElem();
    mpz_class g = int_content();
    RingElem r(*this);
    for (auto& x : r.c_) x /= g;
    return r;
}

RingElem RingElem::normalized() const {
    if (sign() < 0) return -*this;
    return *this;
}

bool divides(const RingElem& d, const RingElem& x) {
    return try_exact_div(x, d).has_value();
}

std::optional<RingElem> try_exact_div(const RingElem& x, const RingElem& d) {
    if (d.is_zero()) throw DomainError("division by zero in Z[t]");
    if (x.is_zero()) return RingElem();
    if (x.degree() < d.degree()) return std::nullopt;
    // Long division; each leading-coefficient step is forced, so failure of
    // any integer division or a nonzero final remainder means non-divisible.
    std::vector<mpz_class> rem = x.coeffs();
    std::vector<mpz_class> q(x.degree() - d.degree() + 1, mpz_class(0));
    const auto& dc = d.coeffs();
    int dd = d.degree();
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        if (rem[k] == 0) continue;
        mpz_class qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem[k].get_mpz_t(),
                    dc[dd].get_mpz_t());
        if (r != 0) return std::nullopt;
        q[k - dd] = qc;
        for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= qc * dc[i];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return RingElem(std::move(q));
}

RingElem exact_div(const RingElem& x, const RingElem& d) {
    auto q = try_exact_div(x, d);
    if (!q) throw DivisionError("exact division failed in Z[t]");
    return *q;
}

namespace {

// A pseudo-remainder of a by b: an associate-up-to-content of prem(a, b).
// Only used inside the primitive PRS, which re-normalizes anyway.
RingElem pseudo_rem(const RingElem& a, const RingElem& b) {
    RingElem r = a;
    const RingElem lb(b.lc());
    int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        RingElem top = RingElem::term(r.lc(), static_cast<unsigned>(r.degree() - db));
        r = lb * r - top * b;
    }
    return r;
}

} // namespace

RingElem gcd(const RingElem& x, const RingElem& y) {
    if (x.is_zero() && y.is_zero()) throw DomainError("gcd(0,0) is undefined");
    if (x.is_zero()) return y.normalized();
    if (y.is_zero()) return x.normalized();
    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), x.int_content().get_mpz_t(),
            y.int_content().get_mpz_t());
    // Primitive PRS on the primitive parts.
    RingElem a = x.primitive_part().normalized();
    RingElem b = y.primitive_part().normalized();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        RingElem r = pseudo_rem(a, b);
        a = b;
        b = r.is_zero() ? RingElem() : r.primitive_part().normalized();
    }
    return RingElem(ic) * a;
}

// ---------------------------------------------------------------------------
// unit_bezout: explicit solution of u*x + v*y = 1 in Z[t].
//
// Z[t] is not a PID, so coprimality does not imply the ideal is the whole
// ring.  The route: extended Euclid over Q[t] gives lambda in (x, y) for some
// positive integer lambda; (x, y) = Z[t] iff x and y stay coprime mod every
// prime of lambda, and in that case per-prime Bezout identities lift and
// combine into an exact identity u*x + v*y = 1.
// ---------------------------------------------------------------------------

namespace {

using QPoly = std::vector<mpq_class>; // coefficient i of t^i

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_from(const RingElem& x) {
    QPoly p;
    for (const auto& c : x.coeffs()) p.emplace_back(c);
    qtrim(p);
    return p;
}

QPoly qp_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    // a - q*b
    QPoly r = a;
    if (!q.empty() && !b.empty()) {
        r.resize(std::max(r.size(), q.size() + b.size() - 1), mpq_class(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] -= q[i] * b[j];
    }
    qtrim(r);
    return r;
}

// Division with remainder over Q[t]: a = q*b + r.
std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
    QPoly r = a, q;
    if (b.empty()) throw DomainError("division by zero in Q[t]");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
    while (r.size() >= b.size() && !r.empty()) {
        mpq_class c = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        qtrim(r);
    }
    qtrim(q);
    return {q, r};
}

// Extended Euclid over Q[t]: returns (u, v, g) with u*a + v*b = g, g monic
// gcd (or the zero poly if both inputs are zero).
struct QExt {
    QPoly u, v, g;
};

QExt qp_ext_gcd(QPoly a, QPoly b) {
    QPoly u0{mpq_class(1)}, v0, u1, v1{mpq_class(1)};
    qtrim(u0);
    while (!b.empty()) {
        auto [q, r] = qp_divmod(a, b);
        QPoly u2 = qp_sub_mul(u0, q, u1);
        QPoly v2 = qp_sub_mul(v0, q, v1);
        a = b;
        b = r;
        u0 = u1;
        v0 = v1;
        u1 = u2;
        v1 = v2;
    }
    if (!a.empty()) {
        mpq_class l = a.back();
        for (auto& c : a) c /= l;
        for (auto& c : u0) c /= l;
        for (auto& c : v0) c /= l;
    }
    return {u0, v0, a};
}

// F_p[t] arithmetic on vectors of residues in [0, p).
using PPoly = std::vector<mpz_class>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pp_from(const RingElem& x, const mpz_class& p) {
    PPoly r;
    for (const auto& c : x.coeffs()) {
        mpz_class m;
        mpz_mod(m.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        r.push_back(m);
    }
    ptrim(r);
    return r;
}

std::pair<PPoly, PPoly> pp_divmod(const PPoly& a, const PPoly& b,
                                  const mpz_class& p) {
    PPoly r = a, q;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpz_class(0));
    while (r.size() >= b.size() && !r.empty()) {
        mpz_class c = (r.back() * inv) % p;
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[shift + j] -= c * b[j];
            mpz_mod(r[shift + j].get_mpz_t(), r[shift + j].get_mpz_t(),
                    p.get_mpz_t());
        }
        ptrim(r);
    }
    ptrim(q);
    return {q, r};
}

PPoly pp_sub_mul(const PPoly& a, const PPoly& q, const PPoly& b,
                 const mpz_class& p) {
    PPoly r = a;
    if (!q.empty() && !b.empty()) {
        r.resize(std::max(r.size(), q.size() + b.size() - 1), mpz_class(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                r[i + j] -= q[i] * b[j];
                mpz_mod(r[i + j].get_mpz_t(), r[i + j].get_mpz_t(),
                        p.get_mpz_t());
            }
    }
    ptrim(r);
    return r;
}

struct PExt {
    PPoly u, v, g;
};

PExt pp_ext_gcd(PPoly a, PPoly b, const mpz_class& p) {
    PPoly u0{mpz_class(1)}, v0, u1, v1{mpz_class(1)};
    ptrim(u0);
    while (!b.empty()) {
        auto [q, r] = pp_divmod(a, b, p);
        PPoly u2 = pp_sub_mul(u0, q, u1, p);
        PPoly v2 = pp_sub_mul(v0, q, v1, p);
        a = b;
        b = r;
        u0 = u1;
        v0 = v1;
        u1 = u2;
        v1 = v2;
    }
    if (!a.empty()) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), p.get_mpz_t());
        for (auto& c : a) c = (c * inv) % p;
        for (auto& c : u0) c = (c * inv) % p;
        for (auto& c : v0) c = (c * inv) % p;
    }
    return {u0, v0, a};
}

RingElem lift(const PPoly& a) {
    return RingElem(std::vector<mpz_class>(a.begin(), a.end()));
}

void factor_into(std::map<mpz_class, unsigned>& out, mpz_class n);

// Pollard rho with Brent cycling; n odd composite > 1.
mpz_class rho_factor(const mpz_class& n) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x9e3779b9UL);
    while (true) {
        mpz_class y = rng.get_z_range(n - 3) + 2;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class x = y, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(std::map<mpz_class, unsigned>& out, mpz_class n) {
    if (n < 0) n = -n;
    for (mpz_class p = 2; p * p <= n && p < 100000; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    mpz_class d = rho_factor(n);
    factor_into(out, d);
    factor_into(out, n / d);
}

} // namespace

std::optional<std::pair<RingElem, RingElem>> unit_bezout(const RingElem& x,
                                                         const RingElem& y) {
    if (x.is_zero() || y.is_zero()) {
        const RingElem& nz = x.is_zero() ? y : x;
        if (!nz.is_unit()) return std::nullopt;
        RingElem inv = nz; // self-inverse: units are +/-1
        if (x.is_zero()) return std::make_pair(RingElem(0), inv);
        return std::make_pair(inv, RingElem(0));
    }
    if (!gcd(x, y).is_unit()) return std::nullopt;

    // Both integers: plain extended gcd.
    if (x.degree() == 0 && y.degree() == 0) {
        mpz_class g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                   x.coeff(0).get_mpz_t(), y.coeff(0).get_mpz_t());
        if (g != 1) return std::nullopt;
        return std::make_pair(RingElem(u), RingElem(v));
    }

    // u0*x + v0*y = 1 over Q[t]; clear denominators to get lambda in (x, y).
    QExt e = qp_ext_gcd(qp_from(x), qp_from(y));
    mpz_class lambda = 1;
    for (const auto& c : e.u) mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : e.v) mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), c.get_den_mpz_t());
    auto scale = [&](const QPoly& q) {
        std::vector<mpz_class> c;
        for (const auto& r : q) {
            mpq_class s = r * lambda;
            c.push_back(mpz_class(s));
        }
        return RingElem(std::move(c));
    };
    RingElem U1 = scale(e.u), V1 = scale(e.v);
    if (lambda == 1) return std::make_pair(U1, V1);

    std::map<mpz_class, unsigned> primes;
    factor_into(primes, lambda);

    // Per prime p^k | lambda: a Bezout identity 1 - e_p with p^k | e_p.
    RingElem U(0), V(0), Pcur(1);
    bool first = true;
    for (const auto& [p, k] : primes) {
        PExt pe = pp_ext_gcd(pp_from(x, p), pp_from(y, p), p);
        if (pe.g.size() != 1) return std::nullopt; // not coprime mod p
        RingElem A = lift(pe.u), B = lift(pe.v);
        // Newton doubling: (A,B) <- (A(1+e), B(1+e)) squares the error.
        unsigned have = 1;
        RingElem err = RingElem(1) - (A * x + B * y);
        while (have < k) {
            RingElem one_plus = RingElem(1) + err;
            A *= one_plus;
            B *= one_plus;
            err *= err;
            have *= 2;
        }
        // Combine with previously processed primes:
        // 1 - Pcur*e_p = (1 - Pcur) + Pcur*s_p.
        if (first) {
            U = A;
            V = B;
            Pcur = err;
            first = false;
        } else {
            U += Pcur * A;
            V += Pcur * B;
            Pcur *= err;
        }
    }
    // Pcur is divisible by lambda coefficient-wise; fold back to exactly 1.
    RingElem W = exact_div(Pcur, RingElem(lambda));
    U += W * U1;
    V += W * V1;
    if (!(U * x + V * y).is_one())
        throw Error("internal: unit_bezout verification failed");
    return std::make_pair(U, V);
}

// ---------------------------------------------------------------------------
// RingFrac
// ---------------------------------------------------------------------------

RingFrac::RingFrac(RingElem num, RingElem den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("fraction with zero denominator");
    if (num_.is_zero()) {
        den_ = RingElem(1);
        return;
    }
    RingElem g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RingFrac RingFrac::operator-() const {
    RingFrac r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RingFrac operator+(const RingFrac& a, const RingFrac& b) {
    return RingFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RingFrac operator-(const RingFrac& a, const RingFrac& b) {
    return RingFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RingFrac operator*(const RingFrac& a, const RingFrac& b) {
    return RingFrac(a.num_ * b.num_, a.den_ * b.den_);
}

RingFrac operator/(const RingFrac& a, const RingFrac& b) {
    if (b.is_zero()) throw DomainError("division by zero fraction");
    return RingFrac(a.num_ * b.den_, a.den_ * b.num_);
}

RingFrac RingFrac::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return RingFrac(den_, num_);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string RingElem::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string RingFrac::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

} // namespace polyauto
