#include "lipeq/rational.hpp"

#include <cctype>

#include "lipeq/errors.hpp"

namespace lipeq {

namespace {

Int parse_int(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw ParseError("sign without digits: '" + s + "'");
    Int v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad integer: '" + s + "'");
        v = v * 10 + (s[i] - '0');
    }
    return neg ? Int(-v) : v;
}

}  // namespace

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num = parse_int(s.substr(0, slash));
        Int den = parse_int(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator: '" + s + "'");
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (tail.empty()) throw ParseError("bad decimal: '" + s + "'");
        bool neg = !head.empty() && head[0] == '-';
        Int ip = head.empty() || head == "-" || head == "+" ? Int(0) : parse_int(head);
        Int fp = parse_int(tail);
        if (fp < 0) throw ParseError("bad decimal: '" + s + "'");
        Int den = int_pow(10, tail.size());
        Rat r = Rat(abs(ip)) + Rat(fp, den);
        return neg ? Rat(-r) : r;
    }
    return Rat(parse_int(s));
}

std::string fraction_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string decimal_string(const Rat& r, int digits) {
    Int num = numerator(r), den = denominator(r);
    std::string out;
    if (num < 0) {
        out += "-";
        num = -num;
    }
    out += Int(num / den).str();
    num %= den;
    if (digits > 0) {
        out += ".";
        for (int i = 0; i < digits; ++i) {
            num *= 10;
            out += Int(num / den).str();
            num %= den;
        }
    }
    return out;
}

}  // namespace lipeq
