#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "evec/digraph.hpp"

namespace evec {

// Flat-file instance: an optional "# name: ..." comment, the vertex count,
// then one "u v" arc per line. '#' starts a comment anywhere on a line.
struct InstanceFile {
    Digraph graph;
    std::optional<std::string> name;
};

// Throws parse_error (with line number) on malformed text, self-loops,
// duplicate arcs, or out-of-range indices. Cyclic digraphs are accepted;
// acyclicity is a per-command precondition, not a file-format one.
InstanceFile parse_instance(std::string_view text);

std::string serialize_instance(const InstanceFile& inst);
std::string serialize_instance(const Digraph& d);

// Named instance families.
Digraph gen_path(int n);            // arcs (i, i+1)
Digraph gen_total_order(int n);     // arcs (i, j) for all i < j
Digraph gen_antichain(int n);       // no arcs
Digraph gen_standard_example(int k);  // a_i -> b_j iff i != j; 2k vertices
Digraph gen_figure1();              // built-in 4-vertex dimension-two example

// Reproducible random DAG: mt19937_64 seeded with `seed`; each pair (i,j)
// with i < j, scanned in lexicographic order, becomes an arc when
// (next_u64() >> 11) * 2^-53 < p; the vertex labels are then shuffled by a
// Fisher-Yates pass drawing j = next_u64() % (i+1) for i = n-1 .. 1 from
// the same stream. Identical (n, p, seed) gives an identical digraph on
// every platform.
Digraph gen_random_dag(int n, double p, std::uint64_t seed);

struct GenParams {
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 1;
};

// Dispatch by family name: path, total_order, antichain, standard_example,
// random_dag, figure1. Unknown family or invalid params -> input_error.
// The instance name records the family and parameters.
InstanceFile generate(const std::string& family, const GenParams& params);

}  // namespace evec
