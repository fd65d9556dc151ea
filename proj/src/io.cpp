#include "flk/io.hpp"

#include "json.hpp"

#include <climits>
#include <fstream>
#include <sstream>

namespace flk::io {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void syntax(const std::string& where, const std::string& what) {
    throw InputError(InputErrorKind::syntax, "syntax error at " + where + ": " + what);
}

[[noreturn]] void dimension(const std::string& where, const std::string& what) {
    throw InputError(InputErrorKind::dimension, "dimension mismatch at " + where + ": " + what);
}

[[noreturn]] void invariant(const std::string& what) {
    throw InputError(InputErrorKind::invariant, "invariant violation: " + what);
}

json parse_document(const std::string& doc) {
    try {
        json j = json::parse(doc);
        if (!j.is_object()) syntax("line 1, column 1", "expected a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < doc.size(); ++i) {
            if (doc[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        auto pos = what.rfind(": ");
        syntax("line " + std::to_string(line) + ", column " + std::to_string(col),
               pos == std::string::npos ? what : what.substr(pos + 2));
    }
}

std::string child(const std::string& path, size_t i) { return path + "/" + std::to_string(i); }

const json& field(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) syntax("/" + key, "missing field");
    return *it;
}

Int read_int(const json& j, const std::string& path) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<unsigned long>()) : Int(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const PreconditionError&) {
        }
    }
    syntax(path, "expected an integer, found " + j.dump());
}

Rat read_rat(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rat(read_int(j, path));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const PreconditionError&) {
        }
    }
    syntax(path, "expected a rational, found " + j.dump());
}

unsigned read_small(const json& j, const std::string& path, unsigned max = 1u << 20) {
    Int v = read_int(j, path);
    if (v < 0 || v > max) syntax(path, "expected an integer in [0, " + std::to_string(max) + "]");
    return static_cast<unsigned>(v.get_ui());
}

const json& read_array(const json& j, const std::string& path) {
    if (!j.is_array()) syntax(path, "expected an array");
    return j;
}

template <class T, class F>
Matrix<T> read_matrix(const json& j, const std::string& path, F entry, std::optional<size_t> n = std::nullopt) {
    read_array(j, path);
    const size_t rows = j.size();
    if (n && rows != *n) dimension(path, "expected " + std::to_string(*n) + " rows, found " + std::to_string(rows));
    const size_t cols = rows ? read_array(j[0], child(path, 0)).size() : 0;
    Matrix<T> m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        const auto& row = read_array(j[i], child(path, i));
        if (row.size() != cols)
            dimension(child(path, i), "expected " + std::to_string(cols) + " entries, found " +
                                          std::to_string(row.size()));
        for (size_t k = 0; k < cols; ++k) m(i, k) = entry(row[k], child(child(path, i), k));
    }
    return m;
}

void require_square(size_t rows, size_t cols, const std::string& path) {
    if (rows != cols)
        dimension(path, "matrix is " + std::to_string(rows) + "x" + std::to_string(cols) + ", expected square");
}

json int_value(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

json rat_value(const Rat& x) {
    if (x.get_den() == 1) return int_value(x.get_num());
    return x.get_str();
}

template <class T, class F>
json matrix_value(const Matrix<T>& m, F value) {
    json out = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(value(m(i, k)));
        out.push_back(row);
    }
    return out;
}

json int_list(const IntVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(int_value(x));
    return out;
}

std::string emit(const json& j) { return j.dump(2) + "\n"; }

// Balanced residue so small negative inputs survive a round trip.
Int balanced(const Int& c, const Int& mod) { return 2 * c > mod ? Int(c - mod) : c; }

WittElement read_witt(const json& j, const std::string& path, const WittRing& ring) {
    if (!j.is_array()) return ring.from_int(read_int(j, path));
    if (j.size() != ring.degree())
        dimension(path, "expected " + std::to_string(ring.degree()) + " coefficients, found " +
                            std::to_string(j.size()));
    IntVec c;
    for (size_t i = 0; i < j.size(); ++i) c.push_back(read_int(j[i], child(path, i)));
    return ring.from_coeffs(c);
}

json witt_value(const WittElement& e, const WittRing& ring) {
    IntVec c = ring.lift(e).coeffs();
    bool constant = true;
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = balanced(c[i], ring.modulus());
        if (i > 0 && c[i] != 0) constant = false;
    }
    if (constant) return int_value(c.empty() ? Int(0) : c[0]);
    return int_list(c);
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

IntLattice parse_lattice(const std::string& doc) {
    json j = parse_document(doc);
    IntMatrix g = read_matrix<Int>(field(j, "gram"), "/gram", read_int);
    require_square(g.rows(), g.cols(), "/gram");
    std::vector<std::string> labels;
    if (auto it = j.find("labels"); it != j.end()) {
        read_array(*it, "/labels");
        if (it->size() != g.rows())
            dimension("/labels", "expected " + std::to_string(g.rows()) + " labels, found " +
                                     std::to_string(it->size()));
        for (size_t i = 0; i < it->size(); ++i) {
            if (!(*it)[i].is_string()) syntax(child("/labels", i), "expected a string");
            labels.push_back((*it)[i].get<std::string>());
        }
    }
    try {
        return IntLattice(std::move(g), std::move(labels));
    } catch (const PreconditionError& e) {
        invariant(e.what());
    }
}

std::string emit_lattice(const IntLattice& l) {
    json j;
    j["gram"] = matrix_value(l.gram, int_value);
    if (!l.labels.empty()) j["labels"] = l.labels;
    return emit(j);
}

FrobeniusModule parse_module(const std::string& doc) {
    json j = parse_document(doc);
    FrobeniusModule m;
    m.gram = read_matrix<Rat>(field(j, "gram"), "/gram", read_rat);
    require_square(m.gram.rows(), m.gram.cols(), "/gram");
    m.phi = read_matrix<Rat>(field(j, "phi"), "/phi", read_rat, m.gram.rows());
    require_square(m.phi.rows(), m.phi.cols(), "/phi");
    m.q = read_int(field(j, "q"), "/q");
    m.weight = read_small(field(j, "weight"), "/weight", 64);
    try {
        validate_module(m);
    } catch (const PreconditionError& e) {
        invariant(e.what());
    }
    return m;
}

std::string emit_module(const FrobeniusModule& m) {
    json j;
    j["gram"] = matrix_value(m.gram, rat_value);
    j["phi"] = matrix_value(m.phi, rat_value);
    j["q"] = int_value(m.q);
    j["weight"] = m.weight;
    return emit(j);
}

SemilinearModule parse_semilinear(const std::string& doc, unsigned precision) {
    json j = parse_document(doc);
    const Int p = read_int(field(j, "p"), "/p");
    const unsigned f = read_small(field(j, "f"), "/f", 64);
    if (!is_prime(p)) invariant("p = " + p.get_str() + " is not prime");
    if (f == 0) invariant("f must be positive");
    SemilinearModule m;
    m.ring = WittRing::create(p, f, precision);
    const WittRing& ring = *m.ring;
    auto entry = [&](const json& e, const std::string& path) { return read_witt(e, path, ring); };
    m.gram = read_matrix<WittElement>(field(j, "gram"), "/gram", entry);
    require_square(m.gram.rows(), m.gram.cols(), "/gram");
    m.a = read_matrix<WittElement>(field(j, "phi0"), "/phi0", entry, m.gram.rows());
    require_square(m.a.rows(), m.a.cols(), "/phi0");
    try {
        validate_semilinear(m);
    } catch (const PreconditionError& e) {
        invariant(e.what());
    }
    return m;
}

std::string emit_semilinear(const SemilinearModule& m) {
    const WittRing& ring = *m.ring;
    auto value = [&](const WittElement& e) { return witt_value(e, ring); };
    json j;
    j["p"] = int_value(ring.prime());
    j["f"] = ring.degree();
    j["gram"] = matrix_value(m.gram, value);
    j["phi0"] = matrix_value(m.a, value);
    return emit(j);
}

FiniteGroup parse_group(const std::string& doc) {
    json j = parse_document(doc);
    auto small = [](const json& e, const std::string& path) {
        return static_cast<int>(read_small(e, path, kMaxGroupOrder * 64));
    };
    auto to_rows = [](const Matrix<int>& m) {
        std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols()));
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t k = 0; k < m.cols(); ++k) rows[i][k] = m(i, k);
        return rows;
    };
    try {
        if (j.contains("table")) {
            auto t = read_matrix<int>(j["table"], "/table", small);
            require_square(t.rows(), t.cols(), "/table");
            return FiniteGroup(to_rows(t));
        }
        if (j.contains("permutations")) {
            auto t = read_matrix<int>(j["permutations"], "/permutations", small);
            return FiniteGroup::from_permutations(to_rows(t));
        }
    } catch (const InputError&) {
        throw;
    } catch (const PreconditionError& e) {
        invariant(e.what());
    }
    syntax("/", "expected a \"table\" or \"permutations\" field");
}

std::string emit_group(const FiniteGroup& g) {
    json j;
    j["table"] = g.table();
    return emit(j);
}

GroupMap parse_group_map(const std::string& doc) {
    json j = parse_document(doc);
    const json& m = read_array(field(j, "map"), "/map");
    GroupMap out;
    for (size_t i = 0; i < m.size(); ++i)
        out.push_back(static_cast<int>(read_small(m[i], child("/map", i), kMaxGroupOrder)));
    return out;
}

std::string emit_group_map(const GroupMap& m) {
    json j;
    j["map"] = m;
    return emit(j);
}

BField parse_bfield(const std::string& doc) {
    json j = parse_document(doc);
    IntMatrix t = read_matrix<Int>(field(j, "T"), "/T", read_int);
    require_square(t.rows(), t.cols(), "/T");
    const json& a = read_array(field(j, "alpha"), "/alpha");
    if (a.size() != t.rows())
        dimension("/alpha", "expected " + std::to_string(t.rows()) + " coordinates, found " +
                                std::to_string(a.size()));
    IntVec alpha;
    for (size_t i = 0; i < a.size(); ++i) alpha.push_back(read_int(a[i], child("/alpha", i)));
    const Int ell = read_int(field(j, "ell"), "/ell");
    const unsigned level = read_small(field(j, "level"), "/level", 4096);
    try {
        return make_bfield(std::move(t), std::move(alpha), ell, level);
    } catch (const PreconditionError& e) {
        invariant(e.what());
    }
}

std::string emit_bfield(const BField& b) {
    json j;
    j["T"] = matrix_value(b.t_gram, int_value);
    j["alpha"] = int_list(b.alpha);
    j["ell"] = int_value(b.ell);
    j["level"] = b.level;
    return emit(j);
}

void Report::add(const std::string& key, const std::string& value) { fields_.push_back({key, value, {}, false}); }

void Report::add_list(const std::string& key, std::vector<std::string> items) {
    fields_.push_back({key, "", std::move(items), true});
}

std::string Report::text() const {
    std::string out;
    for (const auto& f : fields_) {
        if (!f.is_list) {
            out += f.key + ": " + f.value + "\n";
            continue;
        }
        out += f.key + ":\n";
        for (const auto& item : f.items) out += "  " + item + "\n";
    }
    return out;
}

std::string Report::json() const {
    io::json j = io::json::object();
    for (const auto& f : fields_) {
        if (f.is_list)
            j[f.key] = f.items;
        else
            j[f.key] = f.value;
    }
    return emit(j);
}

}  // namespace flk::io
