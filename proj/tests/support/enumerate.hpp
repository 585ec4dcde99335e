// Test-side generators: small graph enumeration, random digraphs, and an
// exhaustive enumerator for 0/1 assignments of an ILP model.

#ifndef READABILITY_TESTS_ENUMERATE_HPP
#define READABILITY_TESTS_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "readability/graph.hpp"
#include "readability/ilp.hpp"

namespace readability::testing {

// One representative per isomorphism class (S and T permuted independently,
// parts never swapped) for every part size pair 0..max_s x 0..max_t.
std::vector<BipartiteGraph> nonisomorphic_bipartite(int max_s, int max_t);

// True iff some pair of part permutations maps a onto b.
bool isomorphic(const BipartiteGraph& a, const BipartiteGraph& b);

// Each ordered pair u != v becomes an arc with the given probability.
Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double density);

// Calls visit for every assignment (in the model's variable order) that
// satisfies all rows of m. Stops early when visit returns false. Returns
// the number of assignments visited.
std::uint64_t enumerate_solutions(
    const IlpModel& m,
    const std::function<bool(const std::vector<std::uint8_t>&)>& visit);

}  // namespace readability::testing

#endif  // READABILITY_TESTS_ENUMERATE_HPP
