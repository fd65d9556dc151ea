#include "CLI11.hpp"
#include "flk/cone.hpp"
#include "flk/eigenlattice.hpp"
#include "flk/galois.hpp"
#include "flk/io.hpp"
#include "flk/mukai.hpp"
#include "flk/padic.hpp"
#include "flk/pipeline.hpp"
#include "flk/weil.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>

using namespace flk;
using io::Report;

namespace {

enum Exit { kOk = 0, kFailure = 1, kInvalid = 2, kBudget = 3, kPrecision = 4 };

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t k = s.find(sep, start);
        out.push_back(s.substr(start, k == std::string::npos ? std::string::npos : k - start));
        if (k == std::string::npos) return out;
        start = k + 1;
    }
}

unsigned small(const std::string& text, const char* name, unsigned max = 1u << 20) {
    Int v = parse_integer(text);
    if (v < 0 || v > max)
        throw PreconditionError(std::string(name) + " must lie in [0, " + std::to_string(max) + "], got " + text);
    return static_cast<unsigned>(v.get_ui());
}

// Semicolon-separated integer vectors.
std::vector<IntVec> vectors(const std::string& s) {
    std::vector<IntVec> out;
    if (s.empty()) return out;
    for (const auto& part : split(s, ';')) out.push_back(parse_int_list(part));
    return out;
}

IntMatrix columns(const std::vector<IntVec>& cols, size_t rows) {
    for (const auto& c : cols)
        if (c.size() != rows)
            throw PreconditionError("vector has " + std::to_string(c.size()) + " coordinates, expected " +
                                    std::to_string(rows));
    return IntMatrix::from_columns(cols, rows);
}

std::vector<std::string> column_strings(const IntMatrix& m) {
    std::vector<std::string> out;
    for (size_t j = 0; j < m.cols(); ++j) out.push_back(join(m.col(j)));
    return out;
}

std::vector<std::string> row_strings(const IntMatrix& m) {
    std::vector<std::string> out;
    for (size_t i = 0; i < m.rows(); ++i) {
        IntVec row(m.cols());
        for (size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
        out.push_back(join(row));
    }
    return out;
}

std::string int_list(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// Mukai vector "a,d_1,...,d_k,t,c".
MukaiVector mukai_from_text(const MukaiSpace& s, const std::string& text) {
    RatVec x = parse_rat_list(text);
    if (x.size() != s.dim() + 2)
        throw PreconditionError("Mukai vector needs " + std::to_string(s.dim() + 2) + " components, got " +
                                std::to_string(x.size()));
    return MukaiVector{x.front(), RatVec(x.begin() + 1, x.end() - 1), x.back()};
}

std::string mukai_text(const MukaiVector& v) {
    RatVec x{v.a};
    x.insert(x.end(), v.b.begin(), v.b.end());
    x.push_back(v.c);
    return join(x);
}

struct Settings {
    unsigned precision = kDefaultPrecision;
    double budget = kDefaultBudget;
};

Settings environment() {
    Settings s;
    if (const char* p = std::getenv("FLK_PRECISION")) s.precision = small(p, "FLK_PRECISION", 4096);
    if (const char* b = std::getenv("FLK_BUDGET")) {
        Int v = parse_integer(b);
        if (v <= 0) throw PreconditionError("FLK_BUDGET must be positive");
        s.budget = v.get_d();
    }
    if (s.precision == 0) throw PreconditionError("FLK_PRECISION must be positive");
    return s;
}

using Action = std::function<Report()>;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice, p-adic and group computations"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit the report as a JSON object");

    Settings env;
    try {
        env = environment();
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }

    Action action;
    auto leaf = [&](CLI::App* group, const char* name, const char* help) {
        return group->add_subcommand(name, help);
    };
    auto bind = [&](CLI::App* cmd, Action a) { cmd->callback([&action, a] { action = a; }); };

    // Option storage shared by the subcommands; each leaf reads its own.
    std::string lattice_file, module_file, group_file, phi_file, bfield_file, add_file, ns_file, t_file;
    std::string x_text, y_text, a_text, d_text, ell_text, p_text, q_text, vectors_text, chern_text;
    std::string alpha_square_text = "0", bound_text, pair_bound_text, inner_text;
    std::string weight_text = "2", degree_text, rank_text, f_text, n_text;
    std::optional<unsigned> precision_opt;
    std::optional<std::string> budget_opt;

    auto precision = [&] { return precision_opt.value_or(env.precision); };
    auto budget = [&] {
        if (!budget_opt) return env.budget;
        Int v = parse_integer(*budget_opt);
        if (v <= 0) throw PreconditionError("budget must be positive");
        return v.get_d();
    };
    auto add_precision = [&](CLI::App* c) {
        c->add_option("--precision", precision_opt, "Working precision (default FLK_PRECISION or 32)")
            ->check(CLI::Range(1u, 4096u));
    };
    auto add_budget = [&](CLI::App* c) {
        c->add_option("--budget", budget_opt, "Enumeration node budget (default FLK_BUDGET)");
    };

    // lattice
    auto* lattice = app.add_subcommand("lattice", "Integral lattices")->require_subcommand(1);
    {
        auto* c = leaf(lattice, "disc", "Discriminant and signature");
        c->add_option("--lattice", lattice_file, "Lattice file")->required();
        bind(c, [&] {
            IntLattice l = io::parse_lattice(io::read_file(lattice_file));
            Signature s = signature(to_rational(l.gram));
            Report r;
            Int d = disc(l);
            r.add("rank", l.rank());
            r.add("disc", d);
            r.add("factorization", d == 0 ? std::string("0") : (d < 0 ? "-" : "") + factorization_string(Int(abs(d))));
            r.add("signature", std::to_string(s.positive) + "," + std::to_string(s.negative) + "," +
                                   std::to_string(s.zero));
            return r;
        });
    }
    {
        auto* c = leaf(lattice, "complement", "Orthogonal complement of vectors");
        c->add_option("--lattice", lattice_file, "Lattice file")->required();
        c->add_option("--vectors", vectors_text, "Vectors 'x1,x2;y1,y2'")->required();
        bind(c, [&] {
            IntLattice l = io::parse_lattice(io::read_file(lattice_file));
            auto v = vectors(vectors_text);
            columns(v, l.rank());
            SublatticeEmbedding e = orthogonal_complement(l, v);
            IntLattice ind = e.induced();
            Report r;
            r.add("rank", e.rank());
            r.add_list("basis", column_strings(e.basis));
            r.add_list("gram", row_strings(ind.gram));
            r.add("disc", disc(ind));
            return r;
        });
    }
    {
        auto* c = leaf(lattice, "saturate", "Saturation of a sublattice");
        c->add_option("--lattice", lattice_file, "Lattice file")->required();
        c->add_option("--basis", vectors_text, "Basis vectors 'x1,x2;y1,y2'")->required();
        bind(c, [&] {
            IntLattice l = io::parse_lattice(io::read_file(lattice_file));
            SublatticeEmbedding e{l, columns(vectors(vectors_text), l.rank())};
            if (rank(e.basis) != e.basis.cols()) throw PreconditionError("basis vectors are linearly dependent");
            SublatticeEmbedding s = saturate(e);
            Int index = 1;
            for (const auto& x : smith_invariants(e.basis)) index *= x;
            Report r;
            r.add("rank", s.rank());
            r.add("index", Int(abs(index)));
            r.add_list("basis", column_strings(s.basis));
            r.add("disc", disc(s.induced()));
            return r;
        });
    }

    // padic
    auto* padic = app.add_subcommand("padic", "Computations in Z_ell")->require_subcommand(1);
    {
        auto* c = leaf(padic, "sqrt", "Hensel square root");
        c->add_option("--d", d_text, "Integer")->required();
        c->add_option("--ell", ell_text, "Prime")->required();
        add_precision(c);
        bind(c, [&] {
            const Int ell = parse_integer(ell_text);
            if (!is_prime(ell)) throw PreconditionError("ell = " + ell_text + " is not prime");
            PadicInt d(ell, precision(), parse_integer(d_text));
            auto root = hensel_sqrt(d);
            Report r;
            r.add("ell", ell);
            r.add("precision", precision());
            r.add("d", d.residue);
            r.add("square", root.has_value());
            if (root) r.add("root", root->residue);
            return r;
        });
    }
    {
        auto* c = leaf(padic, "represent", "Represent d by a unimodular form");
        c->add_option("--lattice", lattice_file, "Lattice file")->required();
        c->add_option("--d", d_text, "Integer")->required();
        c->add_option("--ell", ell_text, "Odd prime")->required();
        add_precision(c);
        bind(c, [&] {
            IntLattice l = io::parse_lattice(io::read_file(lattice_file));
            const Int ell = parse_integer(ell_text);
            if (!is_prime(ell)) throw PreconditionError("ell = " + ell_text + " is not prime");
            PadicInt d(ell, precision(), parse_integer(d_text));
            auto g = quadratic_represent(l.gram, d);
            Report r;
            r.add("ell", ell);
            r.add("precision", precision());
            r.add("represented", g.has_value());
            if (g) {
                r.add("gamma", join(*g));
                PadicInt value(ell, precision(), l.pair(*g, *g));
                r.add("check", value == d);
            }
            return r;
        });
    }

    // weil
    auto* weil = app.add_subcommand("weil", "Weil polynomials")->require_subcommand(1);
    {
        auto* c = leaf(weil, "enumerate", "All monic Weil polynomials of a degree");
        c->add_option("--q", q_text, "Prime power")->required();
        c->add_option("--weight", weight_text, "Even weight");
        c->add_option("--degree", degree_text, "Degree")->required();
        add_budget(c);
        bind(c, [&] {
            const Int q = parse_integer(q_text);
            const unsigned w = small(weight_text, "weight", 64), d = small(degree_text, "degree", 64);
            auto polys = enumerate_weil_polys(q, w, d, budget());
            std::vector<std::string> lines;
            for (const auto& f : polys) lines.push_back(coeff_list(f));
            Report r;
            r.add("q", q);
            r.add("weight", w);
            r.add("degree", d);
            r.add("count", lines.size());
            r.add_list("polynomials", lines);
            return r;
        });
    }
    {
        auto* c = leaf(weil, "constants", "Bezout constants C and C'");
        c->add_option("--q", q_text, "Prime power")->required();
        c->add_option("--weight", weight_text, "Even weight");
        c->add_option("--rank", rank_text, "Rank")->required();
        add_budget(c);
        bind(c, [&] {
            const Int q = parse_integer(q_text);
            const unsigned w = small(weight_text, "weight", 64), rk = small(rank_text, "rank", 64);
            WeilConstants wc = weil_constants(q, w, rk, budget());
            std::vector<std::string> picks;
            for (const auto& [f, den] : wc.per_polynomial) {
                if (den == 1) continue;
                GHFactorization gh = factor_gh(f, q, w);
                picks.push_back(coeff_list(f) + " Q=" + den.get_str() + " a=" + to_string(gh.a) +
                                " b=" + to_string(gh.b));
            }
            Report r;
            r.add("q", q);
            r.add("weight", w);
            r.add("rank", rk);
            r.add("polynomials", wc.per_polynomial.size());
            r.add("denominator", wc.denominator);
            r.add("s", wc.s);
            r.add("C", wc.c);
            r.add("C_prime", wc.c_prime);
            r.add("bezout", "extended Euclid over Q with monic remainders");
            r.add_list("nontrivial_bezout", picks);
            return r;
        });
    }
    {
        auto* c = leaf(weil, "c4", "Integrality exponent of the (T - p) Bezout pair");
        c->add_option("--p", p_text, "Prime")->required();
        c->add_option("--f", f_text, "Degree")->required();
        bind(c, [&] {
            const Int p = parse_integer(p_text);
            const unsigned f = small(f_text, "f", 64);
            Report r;
            r.add("p", p);
            r.add("f", f);
            r.add("c4", c4_constant(p, f));
            return r;
        });
    }

    // eigen
    auto* eigen = app.add_subcommand("eigen", "Frobenius eigenlattices")->require_subcommand(1);
    {
        auto* c = leaf(eigen, "report", "Discriminant bounds for the q^{w/2}-eigenlattice");
        c->add_option("--module", module_file, "Module file")->required();
        c->add_option("--ell", ell_text, "Prime")->required();
        add_precision(c);
        add_budget(c);
        bind(c, [&] {
            FrobeniusModule m = io::parse_module(io::read_file(module_file));
            const Int ell = parse_integer(ell_text);
            if (!is_prime(ell)) throw PreconditionError("ell = " + ell_text + " is not prime");
            DiscBoundReport d = disc_bound_report(m, ell, precision(), budget());
            Report r;
            r.add("ell", d.ell);
            r.add("precision", precision());
            r.add("rank", m.rank());
            r.add("eigen_rank", d.eigen_rank);
            r.add("v0", d.v0);
            r.add("v", d.v);
            r.add("C", d.c);
            r.add("C_prime", d.c_prime);
            r.add("first_bound_applies", d.first_applies);
            r.add("first_bound_holds", d.first_holds);
            r.add("second_bound_holds", d.second_holds);
            r.add("pass", d.pass());
            return r;
        });
    }
    {
        auto* c = leaf(eigen, "semilinear", "Discriminant bound for a semilinear module");
        c->add_option("--module", module_file, "Semilinear module file")->required();
        add_precision(c);
        bind(c, [&] {
            SemilinearModule m = io::parse_semilinear(io::read_file(module_file), precision());
            SemilinearReport s = semilinear_pipeline(m);
            Report r;
            r.add("p", s.p);
            r.add("f", s.f);
            r.add("n", s.n);
            r.add("precision", precision());
            r.add("rank_nprime", s.rank_nprime);
            r.add("rank_n", s.rank_n);
            r.add("witt_disc_valuation", s.witt_disc_valuation);
            r.add("trace_disc_valuation", s.trace_disc_valuation);
            r.add("disc_valuation", s.disc_valuation);
            r.add("c4", s.c4);
            r.add("bound", s.bound);
            r.add("pass", s.pass());
            return r;
        });
    }

    // mukai
    auto* mukai = app.add_subcommand("mukai", "Mukai lattices and Brauer classes")->require_subcommand(1);
    {
        auto* c = leaf(mukai, "pair", "Mukai pairing of two vectors");
        c->add_option("--ns", ns_file, "NS lattice file")->required();
        c->add_option("--alpha-square", alpha_square_text, "Square of the formal alpha coordinate");
        c->add_option("--x", x_text, "Vector 'a,d...,t,c'")->required();
        c->add_option("--y", y_text, "Vector 'a,d...,t,c'")->required();
        bind(c, [&] {
            MukaiSpace s(io::parse_lattice(io::read_file(ns_file)), parse_rational(alpha_square_text));
            MukaiVector x = mukai_from_text(s, x_text), y = mukai_from_text(s, y_text);
            Report r;
            r.add("x", mukai_text(x));
            r.add("y", mukai_text(y));
            r.add("pairing", mukai_pairing(s, x, y));
            r.add("chi", riemann_roch_chi(s, x, y));
            return r;
        });
    }
    {
        auto* c = leaf(mukai, "vector", "Twisted Mukai vector of a sheaf");
        c->add_option("--ns", ns_file, "NS lattice file")->required();
        c->add_option("--chern", chern_text, "'r,c1...,chi'")->required();
        c->add_option("--bfield", bfield_file, "B-field file")->required();
        bind(c, [&] {
            IntLattice ns = io::parse_lattice(io::read_file(ns_file));
            BField bf = io::parse_bfield(io::read_file(bfield_file));
            MukaiSpace s(ns, bf.alpha_square());
            RatVec ch = parse_rat_list(chern_text);
            if (ch.size() != ns.rank() + 2)
                throw PreconditionError("--chern needs " + std::to_string(ns.rank() + 2) + " components, got " +
                                        std::to_string(ch.size()));
            TwistedVector t =
                twisted_mukai_vector(s, ch.front(), RatVec(ch.begin() + 1, ch.end() - 1), ch.back(), bf);
            Report r;
            r.add("order", bf.r());
            r.add("alpha_square", s.alpha_square);
            r.add("v", mukai_text(t.v));
            r.add("v_square", mukai_pairing(s, t.v, t.v));
            r.add("integral", t.integral ? std::string(*t.integral ? "true" : "false") : std::string("undefined"));
            return r;
        });
    }
    {
        auto* c = leaf(mukai, "construct", "Isotropic Mukai vector of a twisted moduli space");
        c->add_option("--ns", ns_file, "NS lattice file")->required();
        c->add_option("--D", d_text, "NS class 'd1,...'")->required();
        c->add_option("--T", t_file, "Transcendental lattice file")->required();
        c->add_option("--ell", ell_text, "Odd prime")->required();
        c->add_option("--n", n_text, "Level")->required();
        add_precision(c);
        bind(c, [&] {
            IntLattice ns = io::parse_lattice(io::read_file(ns_file));
            IntLattice t = io::parse_lattice(io::read_file(t_file));
            ModuliVector m = construct_moduli_vector(ns, parse_int_list(d_text), t.gram, parse_integer(ell_text),
                                                     small(n_text, "n", 4096), precision());
            const ModuliReport& rep = m.report;
            Report r;
            r.add("precision", precision());
            r.add("gamma", join(m.gamma));
            r.add("alpha_square", m.space.alpha_square);
            r.add("D_square", rep.d_square);
            r.add("v", mukai_text(m.v));
            r.add("u", mukai_text(m.u));
            r.add("v_square", rep.v_square);
            r.add("v_dot_u", rep.v_dot_u);
            r.add("brauer_order", rep.brauer);
            r.add("square_vanishes", rep.square_vanishes);
            r.add("pairing_matches", rep.pairing_matches);
            r.add("coprime", rep.coprime);
            r.add("order_matches", rep.order_matches);
            r.add("in_twisted_chow", rep.in_twisted_chow);
            r.add("pass", rep.pass());
            return r;
        });
    }
    {
        auto* c = leaf(mukai, "brauer", "Normalize, order and add Brauer classes");
        c->add_option("--bfield", bfield_file, "B-field file")->required();
        c->add_option("--add", add_file, "Second B-field file");
        bind(c, [&] {
            BField b = io::parse_bfield(io::read_file(bfield_file));
            Report r;
            r.add("alpha", join(b.alpha));
            r.add("level", b.level);
            r.add("order", brauer_order(b));
            if (!add_file.empty()) {
                BField s = brauer_add(b, io::parse_bfield(io::read_file(add_file)));
                r.add("sum_alpha", join(s.alpha));
                r.add("sum_level", s.level);
                r.add("sum_order", brauer_order(s));
            }
            return r;
        });
    }

    // cone
    auto* cone = app.add_subcommand("cone", "Positive cones and reflection chambers")->require_subcommand(1);
    {
        auto* c = leaf(cone, "walk", "Reflect x into the chamber of a");
        c->add_option("--lattice", lattice_file, "Hyperbolic lattice file")->required();
        c->add_option("--x", x_text, "Start vector")->required();
        c->add_option("--a", a_text, "Target vector")->required();
        bind(c, [&] {
            HyperbolicLattice l(io::parse_lattice(io::read_file(lattice_file)));
            IntVec x = parse_int_list(x_text), a = parse_int_list(a_text);
            ChamberWalk w = chamber_walk(l, x, a);
            std::vector<std::string> roots;
            for (const auto& d : w.word.roots) roots.push_back(join(d));
            Report r;
            r.add("flip", w.word.flip);
            r.add("length", w.word.roots.size());
            r.add_list("roots", roots);
            r.add("end", join(w.end));
            r.add("end_square", l.square(w.end));
            r.add("replay_matches", apply_word(l, w.word, x) == w.end);
            return r;
        });
    }
    {
        auto* c = leaf(cone, "min-degree", "Least degree in the closed chamber of a");
        c->add_option("--lattice", lattice_file, "Hyperbolic lattice file")->required();
        c->add_option("--a", a_text, "Vector in the chamber")->required();
        c->add_option("--bound", bound_text, "Largest x^2 considered")->required();
        c->add_option("--pair-bound", pair_bound_text, "Largest (x, a) considered (default: bound)");
        bind(c, [&] {
            HyperbolicLattice l(io::parse_lattice(io::read_file(lattice_file)));
            IntVec a = parse_int_list(a_text);
            std::optional<Int> h;
            if (!pair_bound_text.empty()) h = parse_integer(pair_bound_text);
            AmpleDegree m = min_ample_degree(l, a, parse_integer(bound_text), h);
            Report r;
            r.add("found", m.degree.has_value());
            if (m.degree) {
                r.add("degree", *m.degree);
                r.add("witness", join(m.witness));
            }
            return r;
        });
    }
    {
        auto* c = leaf(cone, "ss-disc", "Discriminant shape -p^a with a even in [2, 20]");
        c->add_option("--d", d_text, "Discriminant")->required();
        c->add_option("--p", p_text, "Prime")->required();
        bind(c, [&] {
            SupersingularCheck s = supersingular_disc_check(parse_integer(d_text), parse_integer(p_text));
            Report r;
            r.add("exponent", s.exponent);
            r.add("holds", s.holds);
            return r;
        });
    }

    // galois
    auto* galois = app.add_subcommand("galois", "Finite group cohomology")->require_subcommand(1);
    {
        auto* c = leaf(galois, "degree", "lcm of all m with totient at most the bound");
        c->add_option("--bound", bound_text, "Totient bound")->required();
        bind(c, [&] {
            DescentDegree d = descent_degree(small(bound_text, "bound", kMaxDescentBound));
            Report r;
            r.add("bound", bound_text);
            r.add("value", d.value);
            r.add("factorization", factorization_string(d.value));
            r.add("cutoff", d.cutoff);
            r.add("moduli", d.moduli.size());
            return r;
        });
    }
    {
        auto* c = leaf(galois, "h1", "Twisted conjugacy classes of an automorphism");
        c->add_option("--group", group_file, "Group file")->required();
        auto* phi = c->add_option("--phi", phi_file, "Automorphism file");
        c->add_option("--inner", inner_text, "Conjugating element")->excludes(phi);
        bind(c, [&] {
            FiniteGroup g = io::parse_group(io::read_file(group_file));
            H1Result h;
            if (!inner_text.empty()) {
                unsigned x = small(inner_text, "inner", kMaxGroupOrder);
                if (static_cast<int>(x) >= g.size()) throw PreconditionError("inner element out of range");
                h = h1_inner(g, static_cast<int>(x));
            } else {
                h = h1_bruteforce(g, phi_file.empty() ? identity_map(g) : io::parse_group_map(io::read_file(phi_file)));
            }
            Report r;
            r.add("order", g.size());
            r.add("exponent", h.exponent);
            r.add("cocycles", h.cocycles);
            r.add("classes", h.count);
            r.add("representatives", int_list(h.representatives));
            return r;
        });
    }

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "Composite constants")->require_subcommand(1);
    {
        auto* c = leaf(pipeline, "bounds", "Composite discriminant bound");
        c->add_option("--q", q_text, "Prime power")->required();
        c->add_option("--weight", weight_text, "Even weight");
        c->add_option("--rank", rank_text, "Rank")->required();
        add_precision(c);
        add_budget(c);
        bind(c, [&] {
            PipelineConfig cfg = make_pipeline_config(parse_integer(q_text), small(weight_text, "weight", 64),
                                                      small(rank_text, "rank", 64), precision(), budget());
            BoundReport b = bound_pipeline(cfg);
            std::vector<std::string> primes;
            for (const auto& l : b.primes) primes.push_back(l.get_str());
            Report r;
            r.add("q", cfg.q);
            r.add("p", cfg.p);
            r.add("f", cfg.f);
            r.add("weight", cfg.weight);
            r.add("rank", cfg.rank);
            r.add("denominator", b.denominator);
            r.add("C1", b.c1);
            r.add("C2", b.c2);
            r.add("C4", b.c4);
            r.add("C3", b.c3);
            r.add("primes", primes.empty() ? std::string("none") : [&] {
                std::string s;
                for (size_t i = 0; i < primes.size(); ++i) s += (i ? "," : "") + primes[i];
                return s;
            }());
            r.add("bound", b.bound);
            r.add("factorization", factorization_string(b.bound));
            return r;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        Report r = action();
        std::cout << (as_json ? r.json() : r.text());
        return kOk;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kBudget;
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return kPrecision;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFailure;
    }
}
