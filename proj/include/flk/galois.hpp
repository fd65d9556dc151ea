#pragma once

#include "flk/arith.hpp"

#include <optional>
#include <vector>

namespace flk {

// Finite group on elements 0..n-1 given by its multiplication table.
class FiniteGroup {
  public:
    FiniteGroup() = default;
    // Validates closure, associativity, identity and inverses.
    explicit FiniteGroup(std::vector<std::vector<int>> table);

    // Closure of permutations of {0..k-1}; element 0 is the identity.
    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators);
    static FiniteGroup cyclic(int n);

    int size() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int pow(int a, long k) const;
    int order(int a) const;
    const std::vector<std::vector<int>>& table() const { return table_; }

  private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

constexpr int kMaxGroupOrder = 512;

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Images of 0..n-1.
using GroupMap = std::vector<int>;

GroupMap identity_map(const FiniteGroup& g);
// x -> g^-1 x g.
GroupMap inner_automorphism(const FiniteGroup& grp, int g);
// Throws PreconditionError unless phi is a bijective homomorphism.
void validate_automorphism(const FiniteGroup& g, const GroupMap& phi);
bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, const GroupMap& f);
int map_order(const GroupMap& phi);
GroupMap compose(const GroupMap& outer, const GroupMap& inner);

// Greedy generating set, largest element orders first.
std::vector<int> generators(const FiniteGroup& g);

// The homomorphism sending gens[i] to images[i], if one exists.
std::optional<GroupMap> extend_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                            const std::vector<int>& gens, const std::vector<int>& images);

// All automorphisms, lexicographically sorted.
std::vector<GroupMap> automorphisms(const FiniteGroup& g);

std::optional<GroupMap> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);

// Conjugacy classes, each sorted, ordered by smallest element.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

struct H1Result {
    size_t count = 0;
    std::vector<int> representatives;  // smallest element of each class, ascending
    size_t cocycles = 0;
    long exponent = 0;                 // n used in the cocycle condition
};

// Cocycles x with x phi(x) ... phi^(n-1)(x) = 1 for n = |G| ord(phi), up to
// x ~ h^-1 x phi(h).
H1Result h1_bruteforce(const FiniteGroup& g, const GroupMap& phi);

// phi = conjugation x -> g^-1 x g: classes correspond to conjugacy classes via
// x -> x g^-1. Representatives are c g for class representatives c.
H1Result h1_inner(const FiniteGroup& grp, int g);

struct ReductionReport {
    size_t source_classes = 0;
    size_t target_classes = 0;
    size_t kernel = 0;
    size_t index = 0;
    std::vector<int> predicted;                 // y x_i phi(y)^-1, sorted
    std::vector<std::pair<int, int>> cover;     // source class rep -> predicted element
    bool passes = false;
};

// f: G -> H equivariant (f phi = psi f). Checks every cocycle class of G is
// carried into the finite set {y x_i psi(y)^-1} with x_i the H^1(H) classes
// and y over inverses of coset representatives of f(G).
ReductionReport h1_reduction_check(const FiniteGroup& g, const GroupMap& phi, const FiniteGroup& h,
                                   const GroupMap& psi, const GroupMap& f);

struct DescentDegree {
    Int value;               // lcm{m : phi(m) <= bound}
    unsigned long cutoff;    // every m with phi(m) <= bound satisfies m <= cutoff
    std::vector<unsigned long> moduli;
};

constexpr unsigned long kMaxDescentBound = 2000;

// phi(m) >= sqrt(m / 2) bounds the search by m <= 2 bound^2.
DescentDegree descent_degree(unsigned long bound);

}  // namespace flk
