#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordsym/factor_index.hpp"
#include "wordsym/generators.hpp"
#include "wordsym/symmetry.hpp"
#include "wordsym/word.hpp"

namespace wordsym {

// The directed graph of symmetries at level n: vertices are G-orbits of
// special (LS or RS) factors of length n; a directed edge is a factor whose
// length-n prefix and suffix windows are its only special windows. The
// undirected quotient groups directed edges by the G-orbit of their label.
struct SymmetryGraph {
    struct Vertex {
        Word canonical;             // lexicographic minimum of the orbit
        std::vector<Word> members;  // sorted
    };

    struct DirectedEdge {
        Word label;
        int from;  // vertex of the length-n prefix
        int to;    // vertex of the length-n suffix
    };

    struct EdgeClass {
        Word canonical;
        std::vector<Word> members;  // sorted orbit of the label
        int u, v;                   // endpoint vertices, u <= v
        bool loop;
    };

    int n = 0;
    std::vector<Vertex> vertices;       // sorted by canonical representative
    std::vector<DirectedEdge> directed; // sorted by label
    std::vector<EdgeClass> classes;     // sorted by canonical label
};

SymmetryGraph build_gamma(const FactorIndex& idx, const SymmetryGroup& g, int n);

struct GRichnessFlags {
    bool loops_ok;  // every loop class carries a Θ-palindrome for some Θ in G
    bool tree_ok;   // loop-free undirected quotient is a tree (empty counts)
};

GRichnessFlags check_grichness_at(const FactorIndex& idx, const SymmetryGroup& g,
                                  int n);
GRichnessFlags check_grichness_at(const SymmetryGraph& graph,
                                  const SymmetryGroup& g);

struct NThresholds {
    // Least n such that every factor of length n contains all letters.
    std::optional<int> all_letters;
    // Least n such that distinct antimorphisms (and distinct morphisms) of G
    // disagree on every factor of length >= n; the weaker hypothesis.
    std::optional<int> weak;
};

NThresholds compute_N(const FactorIndex& idx, const SymmetryGroup& g);

struct ThetaPairBound {
    long long lhs;  // ΔC(n) + 4
    long long rhs;  // P1(n)+P2(n)-P12(n) + P1(n+1)+P2(n+1)-P12(n+1)
    bool holds;
};

// The complexity lower bound for a language closed under two distinct
// commuting involutive antimorphisms; P12 counts simultaneous fixed points,
// which vanish from length 1 on when theta1∘theta2 moves every letter.
ThetaPairBound theta_pair_bound(const FactorIndex& idx, const Symmetry& theta1,
                                const Symmetry& theta2, int n);

enum class RichnessVerdict { rich_so_far, almost_rich_so_far, not_rich };

struct RichnessRow {
    int n = 0;
    long long delta_c = 0;
    std::vector<long long> p_theta;  // per Θ in G^(2), group order
    long long r = 0;                 // Σ (P_Θ(n) + P_Θ(n+1))
    bool equality = false;           // ΔC(n) + #G == R(n)
    std::optional<bool> loops_ok;    // filled for n below the threshold
    std::optional<bool> tree_ok;
    bool pass = false;
};

struct RichnessReport {
    SymmetryGroup group;
    std::vector<int> theta_indices;  // G^(2), order of the p_theta columns
    NThresholds thresholds;
    int n_used = 1;  // first level where the equality test alone decides
    TrustRange trust;
    std::vector<RichnessRow> rows;  // n = 1..n_max
    RichnessVerdict verdict = RichnessVerdict::rich_so_far;
    std::optional<int> n0;  // for almost: all failures lie below this level
};

// Stabilizes the word, checks closure under all of G, and evaluates
// G-richness per level: equality test for n >= threshold, explicit graph
// check below it.
RichnessReport g_richness_report(const WordSpec& spec, const SymmetryGroup& g,
                                 int n_max);

// Deterministic DOT rendering of the undirected quotient graph. Loop edges
// are annotated with a symmetry of G fixing their label, when one exists.
std::string export_dot(const SymmetryGraph& graph, const SymmetryGroup& g);

}  // namespace wordsym
