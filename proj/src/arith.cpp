#include "flk/arith.hpp"

#include "flk/errors.hpp"

#include <cctype>
#include <sstream>

namespace flk {

Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int isqrt(const Int& n) {
    if (n < 0) throw PreconditionError("isqrt of a negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool prime_power(const Int& n, Int& p, unsigned& e) {
    if (n < 2) return false;
    auto fac = factorize(n);
    if (fac.size() != 1) return false;
    p = fac[0].first;
    e = fac[0].second;
    return true;
}

int valuation(const Int& n, const Int& p) {
    if (n == 0) throw PreconditionError("valuation of zero");
    Int m = abs(n);
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

int valuation(const Rat& x, const Int& p) {
    return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    std::vector<std::pair<Int, unsigned>> out;
    Int m = abs(n);
    if (m < 2) return out;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(Int(2));
    for (Int p = 3; p * p <= m; p += 2) {
        if (is_prime(m)) break;
        strip(p);
    }
    if (m > 1) out.emplace_back(m, 1u);
    return out;
}

Int squarefree_part(const Rat& x) {
    if (x == 0) throw PreconditionError("square class of zero");
    // a/b and a*b share a square class.
    Int n = Int(x.get_num()) * Int(x.get_den());
    Int out = n < 0 ? Int(-1) : Int(1);
    for (const auto& [p, e] : factorize(n))
        if (e % 2) out *= p;
    return out;
}

bool same_square_class(const Rat& x, const Rat& y) {
    if (x == 0 || y == 0) throw PreconditionError("square class of zero");
    Int n = Int(x.get_num()) * Int(x.get_den()) * Int(y.get_num()) * Int(y.get_den());
    return is_perfect_square(n);
}

Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int totient(const Int& n) {
    if (n < 1) throw PreconditionError("totient of a non-positive integer");
    Int r = n;
    for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool valid_integer_text(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
    return parts;
}

}  // namespace

Int parse_integer(const std::string& raw) {
    std::string s = trim(raw);
    if (!valid_integer_text(s)) throw PreconditionError("not an integer: '" + raw + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Int(s);
}

Rat parse_rational(const std::string& raw) {
    std::string s = trim(raw);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_integer(s));
    Int num = parse_integer(s.substr(0, slash));
    Int den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator: '" + raw + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

IntVec parse_int_list(const std::string& s) {
    IntVec out;
    if (trim(s).empty()) return out;
    for (const auto& part : split(s, ',')) out.push_back(parse_integer(part));
    return out;
}

RatVec parse_rat_list(const std::string& s) {
    RatVec out;
    if (trim(s).empty()) return out;
    for (const auto& part : split(s, ',')) out.push_back(parse_rational(part));
    return out;
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) { return x.get_str(); }

std::string join(const IntVec& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

std::string join(const RatVec& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

std::string factorization_string(const Int& n) {
    std::string out;
    for (const auto& [p, e] : factorize(n)) {
        if (!out.empty()) out += "*";
        out += p.get_str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

}  // namespace flk
