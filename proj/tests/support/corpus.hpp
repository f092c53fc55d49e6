#ifndef HOPFINV_TESTS_CORPUS_HPP
#define HOPFINV_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "hopfinv/comodule.hpp"

namespace hopfinv::corpus {

/// One integer representation of a small finite group, listed in the order
/// of the group's elements.
struct RepInstance {
    std::string name;
    GroupTable group;
    std::vector<DenseInt> rep;
};

/// Deterministic corpus of integer representations of Z/2, Z/3 and
/// Z/2 x Z/2 in rank <= 3: block sums of the basic models conjugated by
/// random small unimodular matrices. The same (seed, count) always yields
/// the same instances.
std::vector<RepInstance> representation_corpus(unsigned seed = 2026, std::size_t count = 60);

} // namespace hopfinv::corpus

#endif
