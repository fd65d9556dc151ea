#include "flk/poly.hpp"

namespace flk {

RatPoly to_rational(const IntPoly& p) {
    std::vector<Rat> c;
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return RatPoly(c);
}

IntPoly to_integer(const RatPoly& p) {
    std::vector<Int> c;
    for (const auto& x : p.coeffs()) {
        if (x.get_den() != 1) throw PreconditionError("polynomial coefficient is not integral");
        c.emplace_back(x.get_num());
    }
    return IntPoly(c);
}

void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Rat> rem = a.coeffs();
    const int db = b.degree();
    const Rat lb = b.lead();
    std::vector<Rat> quo(std::max(0, a.degree() - db + 1), Rat(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Rat f = rem[k + db] / lb;
        quo[k] = f;
        if (f == 0) continue;
        for (int i = 0; i <= db; ++i) rem[k + i] -= f * b.coeffs()[i];
    }
    q = RatPoly(quo);
    r = RatPoly(rem);
}

RatPoly operator/(const RatPoly& a, const RatPoly& b) {
    RatPoly q, r;
    divmod(a, b, q, r);
    return q;
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) {
    RatPoly q, r;
    divmod(a, b, q, r);
    return r;
}

RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    Rat inv = 1 / p.lead();
    return p.scaled(inv);
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = x % y;
        x = y;
        y = r;
    }
    return monic(x);
}

RatPoly xgcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t) {
    // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
    RatPoly r0 = a, r1 = b, s0(Rat(1)), s1, t0, t1(Rat(1));
    if (r0.is_zero() && r1.is_zero()) {
        s = RatPoly();
        t = RatPoly();
        return RatPoly();
    }
    auto normalize = [](RatPoly& r, RatPoly& sx, RatPoly& tx) {
        if (r.is_zero()) return;
        Rat inv = 1 / r.lead();
        r = r.scaled(inv);
        sx = sx.scaled(inv);
        tx = tx.scaled(inv);
    };
    normalize(r0, s0, t0);
    normalize(r1, s1, t1);
    while (!r1.is_zero()) {
        RatPoly q, r;
        divmod(r0, r1, q, r);
        RatPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        normalize(r, s2, t2);
        r0 = r1;
        s0 = s1;
        t0 = t1;
        r1 = r;
        s1 = s2;
        t1 = t2;
    }
    s = s0;
    t = t0;
    return r0;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    RatPoly q, r;
    divmod(to_rational(a), to_rational(b), q, r);
    if (!r.is_zero()) throw InvariantError("polynomial does not divide exactly");
    return to_integer(q);
}

namespace {

int sign_changes(const std::vector<RatPoly>& seq, const Rat& x) {
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        int s = sgn(p(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int sturm_count(const RatPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw PreconditionError("Sturm count of the zero polynomial");
    if (p.degree() == 0) return 0;
    std::vector<RatPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        RatPoly r = seq[seq.size() - 2] % seq.back();
        seq.push_back(-r);
    }
    seq.pop_back();
    return sign_changes(seq, lo) - sign_changes(seq, hi);
}

RatPoly squarefree(const RatPoly& p) {
    if (p.degree() <= 0) return p;
    return p / gcd(p, p.derivative());
}

Int denominator_lcm(const RatPoly& p) {
    Int d = 1;
    for (const auto& x : p.coeffs()) d = lcm(d, Int(x.get_den()));
    return d;
}

namespace {

template <class T>
std::string render(const Poly<T>& p, const char* var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        T c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        T a = neg ? T(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = (a == 1);
        if (!unit || k == 0) out += a.get_str();
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace

std::string to_string(const IntPoly& p, const char* var) { return render(p, var); }
std::string to_string(const RatPoly& p, const char* var) { return render(p, var); }

std::string coeff_list(const IntPoly& p) {
    if (p.is_zero()) return "0";
    return join(p.coeffs());
}

}  // namespace flk
