#include "schreier/ordinal.hpp"

#include <algorithm>
#include <cctype>

namespace schreier {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("ordinal coefficient overflow");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("ordinal coefficient overflow");
    return r;
}

Ordinal monomial(const Ordinal& e, std::uint64_t c) {
    return ord_mul(omega_pow(e), Ordinal::from_nat(c));
}

} // namespace

Ordinal Ordinal::from_nat(std::uint64_t n) {
    Ordinal o;
    if (n > 0) o.push_term(Ordinal(), n);
    return o;
}

Ordinal Ordinal::omega() {
    Ordinal o;
    o.push_term(from_nat(1), 1);
    return o;
}

Ordinal Ordinal::omega1() {
    Ordinal o;
    o.omega1_ = true;
    return o;
}

void Ordinal::require_cnf(const char* op) const {
    if (omega1_) throw DomainError(std::string("omega_1 sentinel is not valid in ") + op);
}

bool Ordinal::is_nat() const {
    if (omega1_) return false;
    return exps_.empty() || (exps_.size() == 1 && exps_[0].is_zero());
}

std::uint64_t Ordinal::as_nat() const {
    if (!is_nat()) throw DomainError("as_nat on infinite ordinal");
    return exps_.empty() ? 0 : coeffs_[0];
}

bool Ordinal::is_successor() const {
    if (omega1_ || exps_.empty()) return false;
    return exps_.back().is_zero();
}

bool Ordinal::is_limit() const { return !omega1_ && !exps_.empty() && !is_successor(); }

unsigned Ordinal::height() const {
    unsigned h = 0;
    for (const Ordinal& e : exps_) h = std::max(h, e.height() + 1);
    return h;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) == 0; }
bool operator<(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) < 0; }

int ord_cmp(const Ordinal& a, const Ordinal& b) {
    if (a.is_omega1() || b.is_omega1()) {
        if (a.is_omega1() && b.is_omega1()) return 0;
        return a.is_omega1() ? 1 : -1;
    }
    std::size_t n = std::min(a.term_count(), b.term_count());
    for (std::size_t i = 0; i < n; ++i) {
        int c = ord_cmp(a.exponent(i), b.exponent(i));
        if (c != 0) return c;
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i) ? -1 : 1;
    }
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count() ? -1 : 1;
    return 0;
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
    a.require_cnf("ord_add");
    b.require_cnf("ord_add");
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Ordinal& blead = b.exps_[0];
    Ordinal r;
    std::size_t keep = 0;
    while (keep < a.exps_.size() && ord_cmp(a.exps_[keep], blead) > 0) {
        r.push_term(a.exps_[keep], a.coeffs_[keep]);
        ++keep;
    }
    for (std::size_t j = 0; j < b.exps_.size(); ++j) r.push_term(b.exps_[j], b.coeffs_[j]);
    if (keep < a.exps_.size() && ord_cmp(a.exps_[keep], blead) == 0)
        r.coeffs_[keep] = checked_add(r.coeffs_[keep], a.coeffs_[keep]);
    return r;
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
    a.require_cnf("ord_mul");
    b.require_cnf("ord_mul");
    if (a.is_zero() || b.is_zero()) return Ordinal();
    Ordinal r;
    const Ordinal& alead = a.exps_[0];
    for (std::size_t j = 0; j < b.exps_.size(); ++j) {
        Ordinal part;
        if (b.exps_[j].is_zero()) {
            // a * d: multiply the leading coefficient, keep the tail of a
            part.push_term(alead, checked_mul(a.coeffs_[0], b.coeffs_[j]));
            for (std::size_t i = 1; i < a.exps_.size(); ++i)
                part.push_term(a.exps_[i], a.coeffs_[i]);
        } else {
            part.push_term(ord_add(alead, b.exps_[j]), b.coeffs_[j]);
        }
        r = ord_add(r, part);
    }
    return r;
}

Ordinal omega_pow(const Ordinal& a) {
    a.require_cnf("omega_pow");
    Ordinal r;
    r.push_term(a, 1);
    return r;
}

Ordinal lambda_of(const Ordinal& x) {
    if (x.is_omega1()) throw DomainError("lambda of omega_1 sentinel");
    if (x.is_zero()) return Ordinal();
    return omega_pow(x.exponent(0));
}

Ordinal left_subtract(const Ordinal& g, const Ordinal& x) {
    if (g.is_omega1() || x.is_omega1()) throw DomainError("left_subtract on omega_1 sentinel");
    if (g > x) throw DomainError("left_subtract: g > x, no difference exists");
    std::size_t i = 0;
    while (i < g.term_count() && i < x.term_count() &&
           ord_cmp(g.exponent(i), x.exponent(i)) == 0 && g.coeff(i) == x.coeff(i))
        ++i;
    Ordinal d;
    if (i < g.term_count() && i < x.term_count() &&
        ord_cmp(g.exponent(i), x.exponent(i)) == 0) {
        // equal exponent, smaller coefficient on the left
        d = ord_add(d, monomial(x.exponent(i), x.coeff(i) - g.coeff(i)));
        ++i;
    }
    // remaining terms of x; any smaller-exponent tail of g is absorbed
    for (std::size_t j = i; j < x.term_count(); ++j)
        d = ord_add(d, monomial(x.exponent(j), x.coeff(j)));
    return d;
}

Ordinal predecessor(const Ordinal& x) {
    if (!x.is_successor()) throw DomainError("predecessor of non-successor");
    Ordinal out;
    std::size_t last = x.term_count() - 1;
    for (std::size_t i = 0; i < last; ++i) out = ord_add(out, monomial(x.exponent(i), x.coeff(i)));
    if (x.coeff(last) > 1) out = ord_add(out, Ordinal::from_nat(x.coeff(last) - 1));
    return out;
}

Ordinal fundamental(const Ordinal& x, std::uint64_t n) {
    if (x.is_omega1()) throw DomainError("fundamental sequence of omega_1 sentinel");
    if (!x.is_limit()) throw DomainError("fundamental sequence requires a limit ordinal");
    if (n == 0) throw DomainError("fundamental sequence index must be >= 1");
    // x = mu + w^e, mu = x minus one copy of its last monomial
    Ordinal mu;
    std::size_t last = x.term_count() - 1;
    for (std::size_t i = 0; i < last; ++i) mu = ord_add(mu, monomial(x.exponent(i), x.coeff(i)));
    if (x.coeff(last) > 1) mu = ord_add(mu, monomial(x.exponent(last), x.coeff(last) - 1));
    const Ordinal& e = x.exponent(last);
    if (e.is_successor())
        return ord_add(mu, ord_mul(omega_pow(predecessor(e)), Ordinal::from_nat(n)));
    return ord_add(mu, omega_pow(fundamental(e, n)));
}

// ---------------------------------------------------------------------------
// text form

std::string format_ordinal(const Ordinal& x) {
    if (x.is_omega1()) return "w1";
    if (x.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < x.term_count(); ++i) {
        if (i) out += "+";
        const Ordinal& e = x.exponent(i);
        std::uint64_t c = x.coeff(i);
        if (e.is_zero()) {
            out += std::to_string(c);
            continue;
        }
        out += "w";
        if (!(e.is_nat() && e.as_nat() == 1)) {
            if (e.is_nat())
                out += "^" + std::to_string(e.as_nat());
            else
                out += "^{" + format_ordinal(e) + "}";
        }
        if (c != 1) out += "*" + std::to_string(c);
    }
    return out;
}

namespace {

struct OrdParser {
    const std::string& s;
    std::size_t i = 0;
    unsigned max_height;

    explicit OrdParser(const std::string& str, unsigned mh) : s(str), max_height(mh) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("ordinal parse error at position " + std::to_string(i) + ": " + what);
    }

    std::uint64_t parse_nat() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected number");
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(s[i] - '0');
            if (v > (UINT64_MAX - digit) / 10) fail("number too large");
            v = v * 10 + digit;
            ++i;
        }
        return v;
    }

    Ordinal parse_sum() {
        Ordinal acc = parse_term();
        while (eat('+')) acc = ord_add(acc, parse_term());
        return acc;
    }

    Ordinal parse_term() {
        skip_ws();
        if (i < s.size() && s[i] == 'w') {
            // "w1" sentinel, only standalone
            if (i + 1 < s.size() && s[i + 1] == '1' &&
                (i + 2 >= s.size() || (!std::isdigit(static_cast<unsigned char>(s[i + 2])) &&
                                       s[i + 2] != '^' && s[i + 2] != '*'))) {
                i += 2;
                return Ordinal::omega1();
            }
            ++i;
            Ordinal exp = Ordinal::from_nat(1);
            if (eat('^')) {
                if (eat('{')) {
                    exp = parse_sum();
                    if (!eat('}')) fail("expected '}'");
                } else {
                    exp = Ordinal::from_nat(parse_nat());
                }
            }
            std::uint64_t coeff = 1;
            if (eat('*')) coeff = parse_nat();
            if (coeff == 0) fail("zero coefficient");
            Ordinal t = ord_mul(omega_pow(exp), Ordinal::from_nat(coeff));
            if (t.height() > max_height) throw CapExceeded("ordinal height cap exceeded");
            return t;
        }
        return Ordinal::from_nat(parse_nat());
    }
};

} // namespace

Ordinal parse_ordinal(const std::string& text, unsigned max_height) {
    OrdParser p(text, max_height);
    Ordinal r = p.parse_sum();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    if (r.is_omega1() || r.height() <= max_height) return r;
    throw CapExceeded("ordinal height cap exceeded");
}

} // namespace schreier
