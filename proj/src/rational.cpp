#include "lensbound/rational.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lensbound {

namespace {

long long checked_abs(long long v) {
    if (v == std::numeric_limits<long long>::min())
        throw std::invalid_argument("integer magnitude out of range");
    return v < 0 ? -v : v;
}

}  // namespace

Slope::Slope(long long n, long long d) {
    if (n == 0 && d == 0) throw std::invalid_argument("slope 0/0 is undefined");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (d == 0) {
        num = 1;  // single point at infinity
        den = 0;
        return;
    }
    long long g = std::gcd(checked_abs(n), d);
    num = n / g;
    den = d / g;
}

std::string Slope::str() const {
    if (is_infinite()) return "inf";
    return std::to_string(num) + "/" + std::to_string(den);
}

Slope parse_slope(const std::string& token) {
    if (token == "inf" || token == "-inf") return Slope::infinity();
    auto slash = token.find('/');
    try {
        if (slash == std::string::npos) return Slope(std::stoll(token), 1);
        long long n = std::stoll(token.substr(0, slash));
        long long d = std::stoll(token.substr(slash + 1));
        return Slope(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed slope token '" + token + "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("slope token out of range '" + token + "'");
    }
}

bool slope_value_less(const Slope& a, const Slope& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::string LensSpace::str() const {
    return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::string LensSpace::token() const {
    return std::to_string(p) + "," + std::to_string(q);
}

std::string ConnectedSum::token() const {
    std::string out;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        if (i) out += '#';
        out += summands[i].token();
    }
    return out;
}

long long mod_inverse(long long x, long long m) {
    if (m < 1) throw std::invalid_argument("modulus must be positive");
    if (m == 1) return 0;
    long long a = ((x % m) + m) % m;
    // extended Euclid on (a, m)
    long long old_r = a, r = m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw std::invalid_argument("no modular inverse: gcd(" + std::to_string(x) + "," +
                                    std::to_string(m) + ") != 1");
    return ((old_s % m) + m) % m;
}

NegCF neg_cf(long long p, long long q) {
    if (p < 2 || q <= 0 || q >= p)
        throw std::invalid_argument("neg_cf requires 0 < q < p with p >= 2");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("neg_cf requires gcd(p,q) = 1");
    // Hirzebruch-Jung expansion of p/q (entries >= 2), negated entrywise.
    NegCF cf;
    while (q > 0) {
        long long a = (p + q - 1) / q;  // ceil(p/q)
        cf.coeffs.push_back(-a);
        long long next_p = q;
        long long next_q = a * q - p;
        p = next_p;
        q = next_q;
    }
    return cf;
}

std::pair<long long, long long> cf_eval(const NegCF& cf) {
    if (cf.coeffs.empty()) throw std::invalid_argument("empty continued fraction");
    for (long long a : cf.coeffs)
        if (a > -2)
            throw std::invalid_argument("continued-fraction entry " + std::to_string(a) +
                                        " exceeds -2");
    // Evaluate right to left as an exact fraction num/den, den kept > 0.
    __int128 num = cf.coeffs.back();
    __int128 den = 1;
    for (auto it = cf.coeffs.rbegin() + 1; it != cf.coeffs.rend(); ++it) {
        // a - 1/(num/den) = (a*num - den)/num
        __int128 new_num = static_cast<__int128>(*it) * num - den;
        den = num;
        num = new_num;
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }
    // Value is -p/q: num is negative, den positive.
    long long limit = std::numeric_limits<long long>::max();
    if (-num > limit || den > limit)
        throw std::invalid_argument("continued fraction value out of range");
    return {static_cast<long long>(-num), static_cast<long long>(den)};
}

LensSpace lens_normalize(long long p, long long q) {
    if (p < 1) throw std::invalid_argument("lens space requires p >= 1");
    long long r = ((q % p) + p) % p;
    if (std::gcd(p, r) != 1)
        throw std::invalid_argument("not a lens space: gcd(" + std::to_string(p) + "," +
                                    std::to_string(r) + ") != 1");
    LensSpace lens;
    lens.p = p;
    lens.q = (p == 1) ? 0 : r;
    return lens;
}

LensSpace lens_reverse(const LensSpace& lens) {
    if (lens.p == 1) return lens;
    return lens_normalize(lens.p, lens.p - lens.q);
}

bool lens_oriented_homeo(const LensSpace& a, const LensSpace& b) {
    if (a.p != b.p) return false;
    if (a.p == 1) return true;
    return b.q == a.q || b.q == mod_inverse(a.q, a.p);
}

long long oriented_class_rep(const LensSpace& lens) {
    if (lens.p == 1) return 0;
    return std::min(lens.q, mod_inverse(lens.q, lens.p));
}

ConnectedSum make_connected_sum(std::vector<LensSpace> summands) {
    std::erase_if(summands, [](const LensSpace& l) { return l.p == 1; });
    std::sort(summands.begin(), summands.end(), [](const LensSpace& a, const LensSpace& b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    });
    return ConnectedSum{std::move(summands)};
}

LensSpace parse_lens(const std::string& token) {
    auto comma = token.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("malformed lens token '" + token + "' (expected \"p,q\")");
    try {
        long long p = std::stoll(token.substr(0, comma));
        long long q = std::stoll(token.substr(comma + 1));
        return lens_normalize(p, q);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("lens token out of range '" + token + "'");
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        if (what.find("lens") != std::string::npos || what.find("gcd") != std::string::npos)
            throw;
        throw std::invalid_argument("malformed lens token '" + token + "'");
    }
}

ConnectedSum parse_connected_sum(const std::string& token) {
    std::vector<LensSpace> parts;
    if (!token.empty()) {
        std::size_t start = 0;
        while (true) {
            auto hash = token.find('#', start);
            parts.push_back(parse_lens(token.substr(start, hash - start)));
            if (hash == std::string::npos) break;
            start = hash + 1;
        }
    }
    return make_connected_sum(std::move(parts));
}

}  // namespace lensbound
