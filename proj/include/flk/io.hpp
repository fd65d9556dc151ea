#pragma once

#include "flk/eigenlattice.hpp"
#include "flk/errors.hpp"
#include "flk/galois.hpp"
#include "flk/lattice.hpp"
#include "flk/mukai.hpp"

#include <string>
#include <utility>
#include <vector>

namespace flk::io {

// Input documents are JSON. Integers may be JSON numbers or decimal strings;
// rationals may also be strings "a/b". Emitters write numbers when they fit
// in 64 bits and strings otherwise, so emit(parse(doc)) reproduces a
// canonical document up to whitespace.

enum class InputErrorKind { syntax, dimension, invariant };

// Bad input file. All kinds map to CLI exit code 2.
class InputError : public PreconditionError {
  public:
    InputError(InputErrorKind kind, const std::string& what) : PreconditionError(what), kind_(kind) {}
    InputErrorKind kind() const { return kind_; }

  private:
    InputErrorKind kind_;
};

std::string read_file(const std::string& path);

// {"gram": [[...]], "labels": [...]}; labels optional.
IntLattice parse_lattice(const std::string& doc);
std::string emit_lattice(const IntLattice& l);

// {"gram", "phi", "q", "weight"}; gram and phi rational.
FrobeniusModule parse_module(const std::string& doc);
std::string emit_module(const FrobeniusModule& m);

// {"p", "f", "gram", "phi0"}; entries are integers or coefficient lists of
// length f on the basis 1, x, ..., x^{f-1} of W.
SemilinearModule parse_semilinear(const std::string& doc, unsigned precision);
std::string emit_semilinear(const SemilinearModule& m);

// {"table": [[...]]} or {"permutations": [[...], ...]}.
FiniteGroup parse_group(const std::string& doc);
std::string emit_group(const FiniteGroup& g);

// {"map": [...]}
GroupMap parse_group_map(const std::string& doc);
std::string emit_group_map(const GroupMap& m);

// {"T": [[...]], "alpha": [...], "ell", "level"}; returned normalized.
BField parse_bfield(const std::string& doc);
std::string emit_bfield(const BField& b);

// Plain-text key-value report with a fixed field order.
class Report {
  public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const Int& value) { add(key, value.get_str()); }
    void add(const std::string& key, const Rat& value) { add(key, value.get_str()); }
    void add(const std::string& key, long value) { add(key, std::to_string(value)); }
    void add(const std::string& key, unsigned long value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add(const std::string& key, unsigned value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add_list(const std::string& key, std::vector<std::string> items);

    // "key: value" lines; list items follow their key, one per line.
    std::string text() const;
    // The same fields as a JSON object, values as strings.
    std::string json() const;

  private:
    struct Field {
        std::string key;
        std::string value;
        std::vector<std::string> items;
        bool is_list = false;
    };
    std::vector<Field> fields_;
};

}  // namespace flk::io
