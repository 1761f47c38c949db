#include "torcount/rational.hpp"

#include <cctype>

namespace torcount {

Rat make_rat(long p, long q) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto is_plain_int = [](const std::string& s) {
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (text.find('.') != std::string::npos)
        throw std::invalid_argument("decimal rejected, use p/q: \"" + text + "\"");
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_plain_int(num) || !is_plain_int(den))
        throw std::invalid_argument("malformed rational: \"" + text + "\"");
    if (num[0] == '+') num.erase(0, 1); // mpz_set_str rejects a leading plus
    if (den[0] == '+') den.erase(0, 1);
    Int n(num), d(den);
    if (d == 0) throw std::invalid_argument("rational with zero denominator: \"" + text + "\"");
    Rat r;
    r.get_num() = n;
    r.get_den() = d;
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_d(const Rat& r) { return r.get_d(); }

Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int iroot_floor(const Int& v, unsigned long k) {
    if (v < 0) throw std::invalid_argument("iroot_floor of negative value");
    if (k == 0) throw std::invalid_argument("iroot_floor with k = 0");
    if (v == 0) return 0;
    std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    Int lo = 0, hi = Int(1) << (bits / k + 1);
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (ipow(mid, k) <= v)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

} // namespace torcount
