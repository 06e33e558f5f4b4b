#include "schreier/rational.hpp"

#include <cctype>

namespace schreier {

namespace {

bool is_int_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");

    // dyadic shorthand, e.g. "2^-40"
    if (auto caret = s.find('^'); caret != std::string::npos) {
        std::string base = s.substr(0, caret), exp = s.substr(caret + 1);
        if (base != "2" || !is_int_token(exp))
            throw ParseError("bad rational literal: " + text);
        long e = std::stol(exp);
        Int p = Int(1) << static_cast<unsigned>(e < 0 ? -e : e);
        return e < 0 ? Rat(1, p) : Rat(p, 1);
    }

    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int_token(s)) throw ParseError("bad rational literal: " + text);
        return Rat(Int(s));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!is_int_token(n) || !is_int_token(d))
        throw ParseError("bad rational literal: " + text);
    Int di(d);
    if (di == 0) throw ParseError("zero denominator: " + text);
    return Rat(Int(n), di);
}

Rat rat_pow(const Rat& q, unsigned e) {
    Rat r(1);
    Rat b = q;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

} // namespace schreier
